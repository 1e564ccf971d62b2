#!/usr/bin/env python3
"""Run the whole desk-scale verification battery and print one line per check.

This is the scripted twin of `superchar verify --all` plus the Fock-side
checks that live in the test suite; it exits 0 only if everything passes.
Expected runtime: well under a minute on one core.
"""

import sys
import time

from superchar.cli import IDENTITY_GRID
from superchar.fock import Space, duality_decompose, gram_matrix, leading_principal_minors
from superchar.hwclassify import is_unitarizable, weight_from_partition
from superchar.partitions import bar_conjugate
from superchar.superschur import so_hook, sp_hook, verify_identity
from superchar.symring import weight_expansion


def main() -> int:
    t0 = time.time()
    failures = 0

    for tag, params in IDENTITY_GRID:
        report = verify_identity(tag, **params)
        ok = report["status"] == "pass"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {tag} {params}")
        if not ok:
            print(f"      {report.get('first_mismatch')}")

    for d in (1, 2):
        dec = duality_decompose(Space("A", d), "C", 4)
        ok = True
        for lam, wm in dec.items():
            expect = {k: int(v) for k, v in weight_expansion(sp_hook(lam, 4), 4).items() if v}
            ok = ok and expect == {k: v for k, v in wm.items() if v}
            ok = ok and is_unitarizable(weight_from_partition("C", lam)).ok
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  duality F_0^{d} vs HS^(sp,{d}) at cutoff 2")

    dec = duality_decompose(Space("Dodd", 1), "Dodd", 4)
    ok = all(
        {k: int(v) for k, v in weight_expansion(so_hook(lam, 3, 4), 4).items() if v}
        == {k: v for k, v in wm.items() if v}
        for lam, wm in dec.items()
    )
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'}  duality F^(3/2) vs HS^(so,3/2) at cutoff 2")

    dec = duality_decompose(Space("A", 1), "Deven", 4)
    ok = True
    for lam, wm in dec.items():
        bar = bar_conjugate(lam, 2)
        want = so_hook(lam, 2, 4)
        if bar.parts != lam.parts:
            want = want + so_hook(bar, 2, 4)
        ok = ok and {k: int(v) for k, v in weight_expansion(want, 4).items() if v} == {
            k: v for k, v in wm.items() if v
        }
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'}  duality F^1 vs bar-merged HS^(so,1) at cutoff 2")

    for d in (1, 2):
        sp = Space("gl", d)
        ok = True
        for e2 in (1, 2, 3, 4):
            _, mat = gram_matrix(sp, e2, "signed")
            ok = ok and all(m > 0 for m in leading_principal_minors(mat))
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  Gram positivity F^{d} up to energy 2")
    _, naive = gram_matrix(Space("gl", 1), 1, "naive")
    ok = any(m < 0 for m in leading_principal_minors(naive))
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'}  naive symplectic-boson rule indefinite")

    print(f"\n{'ALL CHECKS PASSED' if not failures else f'{failures} CHECKS FAILED'} "
          f"in {time.time()-t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
