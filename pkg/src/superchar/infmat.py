"""Finitely supported matrices over the half-integer index lattice.

Every index is stored doubled, so the half-integer r lives as the odd integer
2r and the integer i as the even integer 2i.  The basis element e(p,q) is odd
exactly when p and q have different doubled parities; its degree is q - p.

Implements the super-bracket, the supertrace, the central-extension cocycle
alpha(A,B) = Str([J,A]B) with J = sum_{r<=0} e(r,r), the spanning elements of
the two osp-type subalgebras, and the bilinear-form preservation test that
characterises them.
"""

from __future__ import annotations

from fractions import Fraction


def parity(p2: int) -> int:
    """1 for a half-integer (odd doubled) index, 0 for an integer one."""
    return p2 & 1


def fmt_half(p2: int) -> str:
    return str(p2 // 2) if p2 % 2 == 0 else f"{p2}/2"


def parse_half(text: str) -> int:
    """Parse "3/2" or "-2" into a doubled index."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        num, den = int(num), int(den)
        if den == 2:
            return num
        if den == 1:
            return 2 * num
        raise ValueError(f"index denominator must be 1 or 2: {text!r}")
    return 2 * int(text)


class SuperMatrix:
    """Sparse finitely-supported element of gl_{inf|inf}^f, exact coefficients."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[tuple[int, int], Fraction] | None = None):
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for key, val in entries.items():
                val = Fraction(val)
                if val:
                    self.entries[key] = val

    @staticmethod
    def unit(p2: int, q2: int, coeff=1) -> "SuperMatrix":
        return SuperMatrix({(p2, q2): Fraction(coeff)})

    @staticmethod
    def zero() -> "SuperMatrix":
        return SuperMatrix()

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        out = dict(self.entries)
        for key, val in other.entries.items():
            new = out.get(key, 0) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return SuperMatrix(out)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + (other * -1)

    def __mul__(self, scalar) -> "SuperMatrix":
        scalar = Fraction(scalar)
        if not scalar:
            return SuperMatrix()
        return SuperMatrix({k: v * scalar for k, v in self.entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        """Associative product e(p,q) e(q',s) = delta_{q,q'} e(p,s)."""
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (q2, s2), val in other.entries.items():
            by_row.setdefault(q2, []).append((s2, val))
        out: dict[tuple[int, int], Fraction] = {}
        for (p2, q2), a in self.entries.items():
            for s2, b in by_row.get(q2, ()):
                key = (p2, s2)
                new = out.get(key, 0) + a * b
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return SuperMatrix(out)

    def entry_parity(self) -> int | None:
        """Common Z2-parity of the support, or None if mixed."""
        parities = {(parity(p) + parity(q)) & 1 for p, q in self.entries}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def degree(self):
        """Common doubled degree q - p of the support, or None if mixed."""
        degs = {q - p for p, q in self.entries}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def homogeneous_components(self) -> list["SuperMatrix"]:
        even, odd = {}, {}
        for (p2, q2), val in self.entries.items():
            ((odd if (parity(p2) + parity(q2)) & 1 else even))[(p2, q2)] = val
        return [SuperMatrix(m) for m in (even, odd) if m]

    def support_indices(self) -> set[int]:
        out = set()
        for p2, q2 in self.entries:
            out.add(p2)
            out.add(q2)
        return out

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        bits = []
        for (p2, q2), val in sorted(self.entries.items()):
            coeff = "" if val == 1 else ("-" if val == -1 else f"{val}*")
            bits.append(f"{coeff}e({fmt_half(p2)},{fmt_half(q2)})")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [
            {"p": fmt_half(p2), "q": fmt_half(q2), "coeff": str(val)}
            for (p2, q2), val in sorted(self.entries.items())
        ]


def super_bracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """[A,B] = AB - (-1)^{|A||B|} BA, extended bilinearly over parities."""
    out = SuperMatrix()
    for ah in a.homogeneous_components() or [SuperMatrix()]:
        for bh in b.homogeneous_components() or [SuperMatrix()]:
            sign = -1 if (ah.entry_parity() and bh.entry_parity()) else 1
            out = out + (ah @ bh) - sign * (bh @ ah)
    return out


def supertrace(a: SuperMatrix) -> Fraction:
    """Str(A) = sum (-1)^{2r} A_rr; the sign is -1 on half-integer indices."""
    total = Fraction(0)
    for (p2, q2), val in a.entries.items():
        if p2 == q2:
            total += -val if parity(p2) else val
    return total


def cocycle_alpha(a: SuperMatrix, b: SuperMatrix) -> Fraction:
    """alpha(A,B) = Str([J,A]B) with J = sum_{r<=0} e(r,r), computed entrywise."""
    total = Fraction(0)
    for (p2, q2), av in a.entries.items():
        jfactor = (1 if p2 <= 0 else 0) - (1 if q2 <= 0 else 0)
        if not jfactor:
            continue
        bv = b.entries.get((q2, p2))
        if bv is None:
            continue
        sign = -1 if parity(p2) else 1
        total += sign * jfactor * av * bv
    return total


def _te_sign(family: str, p2: int, q2: int) -> int:
    """Sign s in te(p,q) = e(p,q) + s e(-q,-p) for the C- or D-type subalgebra."""
    pint, qint = parity(p2) == 0, parity(q2) == 0
    sgn = lambda v: 1 if v > 0 else -1
    if family == "C":
        if pint and qint:
            return -sgn(p2 * q2)
        if not pint and not qint:
            return -1
        if pint:
            return sgn(p2)
        return -sgn(q2)
    if family == "D":
        if pint and qint:
            return -1
        if not pint and not qint:
            return -sgn(p2 * q2)
        if pint:
            return sgn(q2)
        return -sgn(p2)
    raise ValueError(f"unknown family {family!r}")


def te_generator(family: str, p2: int, q2: int) -> SuperMatrix:
    """Spanning element te(p,q) of the C- or D-type subalgebra of A."""
    if p2 == 0 or q2 == 0:
        raise ValueError("indices of the osp-type subalgebras exclude 0")
    s = _te_sign(family, p2, q2)
    return SuperMatrix.unit(p2, q2) + s * SuperMatrix.unit(-q2, -p2)


def form_value(family: str, a2: int, b2: int) -> int:
    """Bilinear form (e_a | e_b): skew-supersymmetric for C, supersymmetric for D."""
    if a2 + b2 != 0 or a2 == 0:
        return 0
    if parity(a2) == 0:
        # even basis vectors
        return (1 if a2 > 0 else -1) if family == "C" else 1
    return 1 if family == "C" else (1 if a2 > 0 else -1)


def preserves_form(a: SuperMatrix, family: str) -> bool:
    """(Av|w) = -(-1)^{eps |v|} (v|Aw) over the support's index hull."""
    eps = a.entry_parity()
    if eps is None:
        raise ValueError("preserves_form needs a parity-homogeneous element")
    hull = set()
    for idx in a.support_indices():
        hull.add(idx)
        hull.add(-idx)
    if 0 in hull:
        return False  # index 0 is outside the subalgebra's space
    for v2 in hull:
        for w2 in hull:
            lhs = Fraction(0)
            rhs = Fraction(0)
            for (p2, q2), coeff in a.entries.items():
                if q2 == v2:
                    lhs += coeff * form_value(family, p2, w2)
                if q2 == w2:
                    rhs += coeff * form_value(family, v2, p2)
            sign = -1 if (eps and parity(v2)) else 1
            if lhs != -sign * rhs:
                return False
    return True
