"""Families of colength-(d+1) ideals that witness reducibility.

A family member is determined by a rational matrix B: the ideal spanned
(inside the polynomial ring truncated at degree 3) by

  (i)   x_s x_t + sum_u B[(s,t),u] x_u      for c < s <= t <= d,
  (ii)  x_i x_j                             whenever min(i,j) <= c,
  (iii) every monomial of degree 3.

Each member has colength d+1.  The family dimension c*C(d-c+1,2) + d
exceeds d(d+1) for d >= 12 with a suitable cut c, which forces a second
irreducible component in the colength-(d+1) punctual family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .linalg import ExactEchelon
from .projector import ProjectorSpec, _project_monomial

Monomial = tuple[int, ...]  # sorted variable indices, () for the constant


def monomial_columns(d: int) -> tuple[list[Monomial], dict[Monomial, int]]:
    """Monomials of degree <= 3, ordered degree-descending so that echelon
    pivots land on the highest-degree term of each row."""
    mons: list[Monomial] = list(combinations_with_replacement(range(1, d + 1), 3))
    mons += list(combinations_with_replacement(range(1, d + 1), 2))
    mons += [(i,) for i in range(1, d + 1)]
    mons.append(())
    return mons, {m: c for c, m in enumerate(mons)}


def truncated_dimension(d: int) -> int:
    return comb(d + 2, 3) + comb(d + 1, 2) + d + 1


def pair_list(d: int, c: int) -> list[tuple[int, int]]:
    """Row order of B: pairs (s,t) with c < s <= t <= d, lexicographic."""
    return [(s, t) for s in range(c + 1, d + 1) for t in range(s, d + 1)]


@dataclass(frozen=True)
class FamilySpec:
    d: int
    c: int
    rows: tuple  # one tuple of c Fractions per pair in pair_list order

    def __post_init__(self):
        if not 1 <= self.c <= self.d - 1:
            raise ValueError("cut c must satisfy 1 <= c <= d-1")
        if len(self.rows) != len(pair_list(self.d, self.c)):
            raise ValueError("B must have one row per pair (s,t)")
        if any(len(row) != self.c for row in self.rows):
            raise ValueError(f"B rows must have {self.c} columns")

    def entry(self, s: int, t: int, u: int) -> Fraction:
        return self.rows[pair_list(self.d, self.c).index((s, t))][u - 1]

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "c": self.c,
            "rows": [[{"num": str(v.numerator), "den": str(v.denominator)}
                      for v in row] for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FamilySpec":
        rows = tuple(
            tuple(Fraction(int(v["num"]), int(v["den"])) for v in row)
            for row in data["rows"]
        )
        return cls(d=int(data["d"]), c=int(data["c"]), rows=rows)


def random_family(d: int, c: int, rng: random.Random) -> FamilySpec:
    rows = tuple(
        tuple(Fraction(rng.randrange(-9, 10)) for _ in range(c))
        for _ in pair_list(d, c)
    )
    return FamilySpec(d=d, c=c, rows=rows)


@dataclass
class TruncatedIdeal:
    """Echelonized span of polynomials of degree <= 3 in d variables."""

    d: int
    ech: ExactEchelon = field(default_factory=ExactEchelon)

    def __post_init__(self):
        self._mons, self._col = monomial_columns(self.d)

    def add(self, poly: dict[Monomial, Fraction]) -> bool:
        return self.ech.add({self._col[m]: v for m, v in poly.items()})

    def contains(self, poly: dict[Monomial, Fraction]) -> bool:
        return self.ech.contains({self._col[m]: v for m, v in poly.items()})

    def remainder(self, poly: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        rem = self.ech.reduce_only({self._col[m]: v for m, v in poly.items()})
        return {self._mons[c]: v for c, v in rem.items()}

    @property
    def colength(self) -> int:
        return truncated_dimension(self.d) - self.ech.rank


def _family_rows(spec: FamilySpec):
    d, c = spec.d, spec.c
    for (s, t), brow in zip(pair_list(d, c), spec.rows):
        poly = {(s, t): Fraction(1)}
        for u, v in enumerate(brow, start=1):
            if v:
                poly[(u,)] = v
        yield poly
    for i, j in combinations_with_replacement(range(1, d + 1), 2):
        if i <= c:
            yield {(i, j): Fraction(1)}
    for mon in combinations_with_replacement(range(1, d + 1), 3):
        yield {mon: Fraction(1)}


def _times_x(poly: dict[Monomial, Fraction], u: int) -> dict[Monomial, Fraction]:
    return {tuple(sorted(mon + (u,))): v for mon, v in poly.items()}


def build_family_ideal(spec: FamilySpec) -> TruncatedIdeal:
    ideal = TruncatedIdeal(d=spec.d)
    rows = list(_family_rows(spec))
    for poly in rows:
        ideal.add(poly)
    # the span must absorb multiplication by every variable
    for poly in rows:
        if max(len(m) for m in poly) > 2:
            continue
        for u in range(1, spec.d + 1):
            assert ideal.contains(_times_x(poly, u))
    return ideal


def ideal_from_projector(proj: ProjectorSpec) -> TruncatedIdeal:
    """Span of m - P(m) over the degree-2 and degree-3 monomials."""
    d = proj.d
    ideal = TruncatedIdeal(d=d)
    for deg in (2, 3):
        for mon in combinations_with_replacement(range(1, d + 1), deg):
            vec = _project_monomial(proj, mon)
            poly = {mon: Fraction(1)}
            if vec[0]:
                poly[()] = -vec[0]
            for b in range(1, d + 1):
                if vec[b]:
                    poly[(b,)] = -vec[b]
            ideal.add(poly)
    return ideal


def colength_check(ideal: TruncatedIdeal) -> int:
    """Colength, after verifying {1, x_1..x_d} is transversal to the span."""
    probe = ExactEchelon()
    for row in ideal.ech.pivots.values():
        probe.add(dict(row))
    base = probe.rank
    _, col = monomial_columns(ideal.d)
    for mon in [()] + [(i,) for i in range(1, ideal.d + 1)]:
        probe.add({col[mon]: Fraction(1)})
    if probe.rank != base + ideal.d + 1:
        raise ArithmeticError("affine-linear functions meet the span")
    return ideal.colength


def recover_family(ideal: TruncatedIdeal, c: int) -> FamilySpec:
    """Invert build_family_ideal.  Fails when the span does not have the
    family shape (remainders must be purely linear in x_1..x_c)."""
    d = ideal.d
    rows = []
    for s, t in pair_list(d, c):
        rem = ideal.remainder({(s, t): Fraction(1)})
        brow = [Fraction(0)] * c
        for mon, v in rem.items():
            if len(mon) != 1 or mon[0] > c:
                raise ValueError("span is not of family shape")
            brow[mon[0] - 1] = -v
        rows.append(tuple(brow))
    return FamilySpec(d=d, c=c, rows=tuple(rows))


def family_dimension(d: int, c: int) -> int:
    """Parameter count: the B entries plus the d translations."""
    return c * comb(d - c + 1, 2) + d


def non_radical_check(ideal: TruncatedIdeal) -> bool:
    """x_1^2 in the span while x_1 is not: the member is non-reduced."""
    one = Fraction(1)
    return ideal.contains({(1, 1): one}) and not ideal.contains({(1,): one})


def _expand_translate(mon: Monomial, v: tuple) -> dict[Monomial, Fraction]:
    """Monomial at x + v, expanded: product over factors of (x_i + v_i)."""
    out: dict[Monomial, Fraction] = {(): Fraction(1)}
    for i in mon:
        nxt: dict[Monomial, Fraction] = {}
        for m, coef in out.items():
            key = tuple(sorted(m + (i,)))
            nxt[key] = nxt.get(key, Fraction(0)) + coef
            if v[i - 1]:
                nxt[m] = nxt.get(m, Fraction(0)) + coef * v[i - 1]
        out = nxt
    return out


def translated_family_ideal(spec: FamilySpec, v: tuple) -> TruncatedIdeal:
    """The family ideal composed with x -> x + v (support moves to -v)."""
    vv = tuple(Fraction(x) for x in v)
    if len(vv) != spec.d:
        raise ValueError(f"need a translation vector of length {spec.d}")
    ideal = TruncatedIdeal(d=spec.d)
    for poly in _family_rows(spec):
        shifted: dict[Monomial, Fraction] = {}
        for mon, coef in poly.items():
            for m2, c2 in _expand_translate(mon, vv).items():
                shifted[m2] = shifted.get(m2, Fraction(0)) + coef * c2
        ideal.add(shifted)
    return ideal


@dataclass
class WitnessRecord:
    d: int
    c: int
    family_dim: int
    radical_dim: int
    verdict: str  # STRICT | BOUNDARY | NONE

    def summary(self) -> str:
        rel = {"STRICT": ">", "BOUNDARY": "=", "NONE": "<"}[self.verdict]
        return (f"d={self.d}: family c={self.c} has dimension {self.family_dim} "
                f"{rel} {self.radical_dim} ({self.verdict})")


def reducibility_witness(d: int, rng: random.Random | None = None) -> WitnessRecord:
    """Compare the best family against the d(d+1)-dimensional locus of
    radical colength-(d+1) ideals.  Ties in the cut go to the larger c."""
    if d < 3:
        raise ValueError("need d >= 3")
    best_c = max(range(1, d), key=lambda c: (family_dimension(d, c), c))
    fdim = family_dimension(d, best_c)
    rdim = d * (d + 1)
    if fdim > rdim:
        verdict = "STRICT"
    elif fdim == rdim:
        # equality only matters when a generic member is non-radical
        rng = rng or random.Random(0)
        member = build_family_ideal(random_family(d, best_c, rng))
        verdict = "BOUNDARY" if non_radical_check(member) else "NONE"
    else:
        verdict = "NONE"
    return WitnessRecord(d=d, c=best_c, family_dim=fdim, radical_dim=rdim,
                         verdict=verdict)
