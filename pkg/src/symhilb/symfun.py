"""Symmetric polynomials in d variables on the monomial-symmetric basis.

A SymPoly stores, for each monomial orbit, the dominant exponent (a
partition with at most d parts) and an integer coefficient.  All arithmetic
stays over the integers; the only division in this module is the Newton
recurrence step of sym_plethysm, performed on an integer accumulator and
asserted exact.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .partitions import (
    BudgetError,
    Partition,
    normalize,
    padded,
    partitions_of,
    schur_dim,
    ssyt_iter,
    weight,
)

KEY_BUDGET = 5 * 10**6


class SymPoly:
    """Symmetric polynomial: map dominant exponent -> integer coefficient."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict[Partition, int] | None = None):
        self.d = d
        self.terms: dict[Partition, int] = {}
        if terms:
            for lam, c in terms.items():
                lam = normalize(lam)
                if len(lam) > d:
                    raise ValueError(f"key {lam} exceeds {d} parts")
                if c:
                    self.terms[lam] = self.terms.get(lam, 0) + c
            self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def one(cls, d: int) -> "SymPoly":
        return cls(d, {(): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.d == other.d and self.terms == other.terms

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.d != other.d:
            raise ValueError("mixed variable counts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymPoly(self.d, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SymPoly":
        return SymPoly(self.d, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def degree(self) -> int:
        """Common degree of a homogeneous polynomial."""
        degs = {weight(k) for k in self.terms}
        if len(degs) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def eval_ones(self) -> int:
        """Value at x_1 = ... = x_d = 1, i.e. sum of orbit sizes times coefficients."""
        total = 0
        for lam, c in self.terms.items():
            total += c * _orbit_size(padded(lam, self.d))
        return total

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*m{list(k)}" for k, c in sorted(self.terms.items(), reverse=True))
        return f"SymPoly(d={self.d}, {inner or '0'})"


def _orbit_size(exp: tuple[int, ...]) -> int:
    """Number of distinct permutations of the exponent vector."""
    n = len(exp)
    size = 1
    for i in range(2, n + 1):
        size *= i
    for v in set(exp):
        c = exp.count(v)
        for i in range(2, c + 1):
            size //= i
    return size


def _full_expansion(f: SymPoly) -> dict[tuple[int, ...], int]:
    """Expand orbits to every exponent vector of length d.  Budget-guarded."""
    out: dict[tuple[int, ...], int] = {}
    for lam, c in f.terms.items():
        base = padded(lam, f.d)
        for perm in set(itertools.permutations(base)):
            out[perm] = c
            if len(out) > KEY_BUDGET:
                raise BudgetError(f"expansion exceeds {KEY_BUDGET} monomials")
    return out


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Exact product.  Convolution is evaluated only at dominant exponents:
    the coefficient of m_nu in f*g is sum over beta in the full expansion of
    g of the full-expansion coefficient of f at nu - beta."""
    if f.d != g.d:
        raise ValueError("mixed variable counts")
    if not f.terms or not g.terms:
        return SymPoly(f.d)
    d = f.d
    degf = f.degree()
    degg = g.degree()
    if len(f.terms) < len(g.terms):
        f, g = g, f  # inner convolution loop runs over the smaller expansion
    f_full = _full_expansion(f)
    g_full = _full_expansion(g)
    out: dict[Partition, int] = {}
    for nu in partitions_of(degf + degg, d):
        nu_p = padded(nu, d)
        acc = 0
        for beta, cb in g_full.items():
            rest = tuple(nu_p[i] - beta[i] for i in range(d))
            if any(v < 0 for v in rest):
                continue
            ca = f_full.get(rest)
            if ca:
                acc += ca * cb
        if acc:
            out[nu] = acc
    return SymPoly(d, out)


def frobenius_power(f: SymPoly, k: int) -> SymPoly:
    """Substitute x_i -> x_i^k: every basis key lam becomes k*lam."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return SymPoly(f.d, {tuple(k * p for p in lam): c for lam, c in f.terms.items()})


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, d: int) -> SymPoly:
    """Schur polynomial s_lam(x_1..x_d): sum of x^content over SSYT.

    On the monomial basis the coefficient of m_mu is the count of tableaux
    with dominant content mu (a Kostka number), so only weakly decreasing
    content vectors are recorded.
    """
    lam = normalize(lam)
    terms: dict[Partition, int] = {}
    for content in ssyt_iter(lam, d):
        if all(content[i] >= content[i + 1] for i in range(d - 1)):
            key = normalize(content)
            terms[key] = terms.get(key, 0) + 1
    return SymPoly(d, terms)


class SchurExpansion:
    """Multiset of Schur-module labels: map partition -> multiplicity."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict[Partition, int] | None = None):
        self.d = d
        self.terms = {normalize(k): v for k, v in (terms or {}).items() if v}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.d == other.d
            and self.terms == other.terms
        )

    def __iter__(self):
        return iter(sorted(self.terms.items(), reverse=True))

    def dimension(self) -> int:
        return sum(m * schur_dim(lam, self.d) for lam, m in self.terms.items())

    def to_json_dict(self) -> dict[str, int]:
        return {",".join(map(str, lam)): m for lam, m in sorted(self.terms.items(), reverse=True)}

    @classmethod
    def from_json_dict(cls, d: int, data: dict[str, int]) -> "SchurExpansion":
        terms = {}
        for key, m in data.items():
            lam = tuple(int(x) for x in key.split(",")) if key else ()
            terms[lam] = m
        return cls(d, terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self)
        return f"SchurExpansion(d={self.d}, {{{inner}}})"


def schur_decompose(f: SymPoly) -> SchurExpansion:
    """Expand f in Schur polynomials by peeling the lex-dominant key.

    Schur polynomials are unitriangular against the monomial basis in this
    order, so repeatedly subtracting coeff * s_(dominant key) terminates with
    remainder zero for any symmetric input.  Multiplicities may be negative
    for inputs that are not genuine characters.
    """
    rem = SymPoly(f.d, dict(f.terms))
    out: dict[Partition, int] = {}
    while rem.terms:
        lam = max(rem.terms)
        c = rem.terms[lam]
        out[lam] = c
        rem = rem - schur_poly(lam, f.d).scale(c)
        assert max(rem.terms, default=()) < lam or not rem.terms, "peeling failed to descend"
    return SchurExpansion(f.d, out)


def sym_plethysm(r: int, lam, d: int) -> SchurExpansion:
    """Decomposition of Sym^r(S_lam) for GL(d).

    Uses the Newton recurrence r*h_r[f] = sum_{k=1..r} p_k[f]*h_{r-k}[f]
    with f the character of S_lam; p_k[f] is frobenius_power(f, k).  Each
    step divides an integer accumulator by r and asserts exactness.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    f = schur_poly(normalize(lam), d)
    h: list[SymPoly] = [SymPoly.one(d)]
    for n in range(1, r + 1):
        acc = SymPoly(d)
        for k in range(1, n + 1):
            acc = acc + multiply(frobenius_power(f, k), h[n - k])
        assert all(c % n == 0 for c in acc.terms.values()), f"h_{n} accumulator not divisible by {n}"
        h.append(SymPoly(d, {key: c // n for key, c in acc.terms.items()}))
    expansion = schur_decompose(h[r])
    assert all(m >= 0 for m in expansion.terms.values()), "negative multiplicity in plethysm"
    return expansion
