"""Exact-rational multivariate polynomials over structured variable ids.

Variables are the projector coefficients p_{0,ij} and p_{k,st}, their
q-images q_{k,st}, and the ambient coordinates x_i.  The second-index pair
of every p/q variable is symmetric and normalized to s <= t at
construction.  Monomials are sorted tuples of VarId; the canonical variable
order is kind-major (p0 < p < q < x), then index-lexicographic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ExactEchelon, fraction_rows_to_int, sparse_modular_rank

KIND_P0, KIND_P, KIND_Q, KIND_X = 0, 1, 2, 3
KIND_NAMES = {KIND_P0: "p0", KIND_P: "p", KIND_Q: "q", KIND_X: "x"}
KIND_BY_NAME = {v: k for k, v in KIND_NAMES.items()}


@dataclass(frozen=True, order=True)
class VarId:
    kind: int
    index: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"kind": KIND_NAMES[self.kind], "index": list(self.index)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "VarId":
        return cls(KIND_BY_NAME[data["kind"]], tuple(data["index"]))

    def __repr__(self) -> str:
        name = KIND_NAMES[self.kind]
        return f"{name}[{','.join(map(str, self.index))}]"


def pzero(i: int, j: int) -> VarId:
    return VarId(KIND_P0, (min(i, j), max(i, j)))


def pvar(k: int, s: int, t: int) -> VarId:
    return VarId(KIND_P, (k, min(s, t), max(s, t)))


def qvar(k: int, s: int, t: int) -> VarId:
    return VarId(KIND_Q, (k, min(s, t), max(s, t)))


def xvar(i: int) -> VarId:
    return VarId(KIND_X, (i,))


Monomial = tuple[VarId, ...]


class MPoly:
    """Multivariate polynomial: map sorted VarId tuple -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mon, c in terms.items():
                c = Fraction(c)
                if c:
                    mon = tuple(sorted(mon))
                    nc = self.terms.get(mon, Fraction(0)) + c
                    if nc:
                        self.terms[mon] = nc
                    else:
                        self.terms.pop(mon, None)

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "MPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, v: VarId) -> "MPoly":
        return cls({(v,): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, Fraction(0)) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        res = MPoly.__new__(MPoly)
        res.terms = out
        return res

    def __neg__(self) -> "MPoly":
        return self.scale(-1)

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "MPoly":
        c = Fraction(c)
        res = MPoly.__new__(MPoly)
        res.terms = {} if not c else {m: v * c for m, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(sorted(m1 + m2))
                nc = out.get(mon, Fraction(0)) + c1 * c2
                if nc:
                    out[mon] = nc
                else:
                    out.pop(mon, None)
        res = MPoly.__new__(MPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((len(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self.terms}) <= 1

    def variables(self) -> set[VarId]:
        out: set[VarId] = set()
        for m in self.terms:
            out.update(m)
        return out

    def coefficient(self, mon: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(mon)), Fraction(0))

    def substitute(self, sigma: dict[VarId, "MPoly"]) -> "MPoly":
        """Simultaneous substitution; variables outside sigma are kept."""
        out = MPoly.zero()
        for mon, c in self.terms.items():
            term = MPoly.constant(c)
            for v in mon:
                term = term * sigma.get(v, MPoly.variable(v))
            out = out + term
        return out

    def evaluate(self, values: dict[VarId, Fraction]) -> Fraction:
        """Value at a point; every variable present must be assigned."""
        total = Fraction(0)
        for mon, c in self.terms.items():
            val = c
            for v in mon:
                val *= values[v]
            total += val
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for mon, c in sorted(self.terms.items()):
            mon_s = "*".join(map(repr, mon)) or "1"
            bits.append(f"{c}*{mon_s}")
        return "MPoly(" + " + ".join(bits) + ")"


def coefficient_rows(polys: list[MPoly]) -> tuple[list[dict[int, Fraction]], list[Monomial]]:
    """Sparse coefficient rows of the polynomials over their joint monomial
    basis, columns sorted degree-major then lexicographically."""
    monomials: set[Monomial] = set()
    for f in polys:
        monomials.update(f.terms)
    basis = sorted(monomials, key=lambda m: (len(m), m))
    col = {m: i for i, m in enumerate(basis)}
    rows = [{col[m]: c for m, c in f.terms.items()} for f in polys]
    return rows, basis


def coefficient_matrix_rank(polys: list[MPoly], modulus: int | None = None) -> int:
    """Rank of the coefficient matrix, without homogeneity restrictions."""
    rows, _ = coefficient_rows(polys)
    if modulus is None:
        ech = ExactEchelon()
        for row in rows:
            ech.add(row)
        return ech.rank
    return sparse_modular_rank(fraction_rows_to_int(rows), modulus)


def span_rank(polys: list[MPoly], modulus: int | None = None) -> int:
    """Dimension of the linear span of homogeneous polynomials of one degree.

    Exact rational elimination by default; sparse modular elimination when a
    prime is supplied.
    """
    nonzero = [f for f in polys if f]
    degs = {f.degree() for f in nonzero}
    if len(degs) > 1 or any(not f.is_homogeneous() for f in nonzero):
        raise ValueError(f"span_rank requires equal-degree homogeneous input, got degrees {sorted(degs)}")
    return coefficient_matrix_rank(nonzero, modulus)
