"""Variable eliminations producing the final homogeneous quadric system.

Step 1 solves each pivot generator C(i+1;j,(i,i+1)) = 0 for p_{0,ij} and
substitutes, leaving homogeneous quadrics in the p_{k,st}.  Step 2 applies
the linear change to q-variables under which every diagonal q_{s,ss}
cancels, leaving N = d*C(d+1,2) - d variables.  The final system is a
deterministically chosen linearly independent subset of the substituted
generators, of size d^2(d^2-4)/3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linalg import ExactEchelon
from .polyring import KIND_P0, KIND_Q, MPoly, VarId, pvar, pzero, qvar
from .projector import closed_c, generate_C

PivotChoice = tuple[str, int]  # ("A", k): C(k;j,(i,k));  ("B", k): C(k;i,(j,k))


def default_pivots(d: int) -> dict[tuple[int, int], PivotChoice]:
    """The printed convention: pivot C(i+1;j,(i,i+1)), cyclically at i = d."""
    out = {}
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            out[(i, j)] = ("A", 1 if i == d else i + 1)
    return out


def _pivot_poly(i: int, j: int, choice: PivotChoice, d: int) -> MPoly:
    kind, k = choice
    if kind == "A":
        poly = closed_c(k, j, i, k, d)
    elif kind == "B":
        poly = closed_c(k, i, j, k, d)
    else:
        raise ValueError(f"unknown pivot kind {kind!r}")
    return poly


@dataclass
class EliminatedSystem:
    d: int
    quadrics: list[MPoly]
    provenance: dict[str, str] = field(default_factory=dict)


def eliminate_p0(d: int, pivots: dict[tuple[int, int], PivotChoice] | None = None) -> EliminatedSystem:
    """Substitute the pivot-solved p_{0,ij} into every generator with a >= 1.

    Each pivot must contain p_{0,ij} with unit coefficient and no other
    p_{0,..} term, so the solved expression is a pure quadric in the p-vars.
    """
    merged = default_pivots(d)
    merged.update(pivots or {})
    pivots = merged
    sigma: dict[VarId, MPoly] = {}
    for (i, j), choice in sorted(pivots.items()):
        target = pzero(i, j)
        poly = _pivot_poly(i, j, choice, d)
        lead = poly.coefficient((target,))
        if lead != 1:
            raise ValueError(f"pivot for p0[{i},{j}] lacks a unit linear term: {choice}")
        solved = MPoly.variable(target) - poly  # equals -(quadratic part)
        if any(v.kind == KIND_P0 for v in solved.variables()):
            raise ValueError(f"pivot for p0[{i},{j}] involves another p0 variable: {choice}")
        sigma[target] = solved
    quadrics: list[MPoly] = []
    for gen in generate_C(d):
        if gen.a == 0:
            continue
        sub = gen.poly.substitute(sigma)
        if not sub:
            continue
        assert sub.is_homogeneous() and sub.degree() == 2, gen.label()
        assert all(v.kind not in (KIND_P0,) for v in sub.variables()), gen.label()
        quadrics.append(sub)
    prov = {"step": "p0 eliminated", "pivots": ", ".join(
        f"p0[{i},{j}]<-{kind}{k}" for (i, j), (kind, k) in sorted(pivots.items()))}
    return EliminatedSystem(d=d, quadrics=quadrics, provenance=prov)


def q_substitution(d: int) -> dict[VarId, MPoly]:
    """p_{k,st} -> q_{k,st} (k not in {s,t});
    p_{k,sk} -> q_{k,sk} + q_{s,ss} (one index matches, s the other);
    p_{s,ss} -> 2 q_{s,ss}."""
    sigma: dict[VarId, MPoly] = {}
    for k in range(1, d + 1):
        for s in range(1, d + 1):
            for t in range(s, d + 1):
                src = pvar(k, s, t)
                if s == t == k:
                    sigma[src] = MPoly.variable(qvar(k, k, k)).scale(2)
                elif t == k:
                    sigma[src] = MPoly.variable(qvar(k, s, k)) + MPoly.variable(qvar(s, s, s))
                elif s == k:
                    sigma[src] = MPoly.variable(qvar(k, k, t)) + MPoly.variable(qvar(t, t, t))
                else:
                    sigma[src] = MPoly.variable(qvar(k, s, t))
    return sigma


def q_variable_list(d: int) -> list[VarId]:
    """The N = d*C(d+1,2) - d off-diagonal q-variables in canonical order."""
    out = []
    for k in range(1, d + 1):
        for s in range(1, d + 1):
            for t in range(s, d + 1):
                if not (s == t == k):
                    out.append(qvar(k, s, t))
    return sorted(out)


@dataclass
class QuadricSystem:
    d: int
    variables: list[VarId]
    quadrics: list[MPoly]
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        allowed = set(self.variables)
        for f in self.quadrics:
            if not f.is_homogeneous() or f.degree() != 2:
                raise ValueError("quadric system entries must be homogeneous of degree 2")
            if not f.variables() <= allowed:
                raise ValueError("quadric uses a variable outside the declared list")

    @property
    def n_variables(self) -> int:
        return len(self.variables)

    def to_json_dict(self) -> dict:
        index = {v: i for i, v in enumerate(self.variables)}
        quads = []
        for f in self.quadrics:
            terms = []
            for mon, c in sorted(f.terms.items()):
                terms.append({
                    "vars": [index[v] for v in mon],
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                })
            quads.append(terms)
        return {
            "d": self.d,
            "variables": [v.to_json_dict() for v in self.variables],
            "quadrics": quads,
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuadricSystem":
        variables = [VarId.from_json_dict(v) for v in data["variables"]]
        quadrics = []
        for terms in data["quadrics"]:
            poly = MPoly({
                tuple(variables[i] for i in t["vars"]): Fraction(int(t["num"]), int(t["den"]))
                for t in terms
            })
            quadrics.append(poly)
        return cls(
            d=data["d"],
            variables=variables,
            quadrics=quadrics,
            provenance=dict(data.get("provenance", {})),
        )

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "QuadricSystem":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))


def to_q_variables(system: EliminatedSystem) -> QuadricSystem:
    """Apply the q-substitution and assert that no diagonal survives."""
    d = system.d
    sigma = q_substitution(d)
    quadrics = []
    for f in system.quadrics:
        g = f.substitute(sigma)
        if not g:
            continue
        for v in g.variables():
            if v.kind == KIND_Q and v.index[0] == v.index[1] == v.index[2]:
                raise ArithmeticError(f"diagonal {v} survived the q-substitution")
        quadrics.append(g)
    variables = q_variable_list(d)
    assert len(variables) == d * comb(d + 1, 2) - d
    prov = dict(system.provenance)
    prov["step"] = prov.get("step", "") + "; q-substitution applied"
    return QuadricSystem(d=d, variables=variables, quadrics=quadrics, provenance=prov)


def independent_subset(polys: list[MPoly]) -> list[MPoly]:
    """Greedy linearly independent subset, in input order (exact arithmetic)."""
    ech = ExactEchelon()
    kept = []
    for f in polys:
        if ech.add(dict(f.terms)):
            kept.append(f)
    return kept


def final_system(d: int, pivots: dict[tuple[int, int], PivotChoice] | None = None) -> QuadricSystem:
    """Both eliminations plus reduction to an independent generating set."""
    staged = to_q_variables(eliminate_p0(d, pivots))
    kept = independent_subset(staged.quadrics)
    expected = d * d * (d * d - 4) // 3
    assert len(kept) == expected, (len(kept), expected)
    prov = dict(staged.provenance)
    prov["step"] = prov.get("step", "") + "; reduced to independent basis"
    return QuadricSystem(d=d, variables=staged.variables, quadrics=kept, provenance=prov)


def _span_signature(polys: list[MPoly]) -> ExactEchelon:
    ech = ExactEchelon()
    for f in polys:
        ech.add(dict(f.terms))
    return ech


def spans_equal(a: list[MPoly], b: list[MPoly]) -> bool:
    """Equality of linear spans via mutual containment."""
    ea = _span_signature(a)
    eb = _span_signature(b)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(dict(f.terms)) for f in b)


def check_pivots(d: int = 3) -> bool:
    """Pivot-choice independence: alternate admissible pivots (kind A or B,
    any k outside {i,j}) give the same eliminated quadric span."""
    base = eliminate_p0(d).quadrics
    variants: list[dict[tuple[int, int], PivotChoice]] = []
    alt_a, alt_b = {}, {}
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            k = min(x for x in range(1, d + 1) if x not in (i, j))
            alt_a[(i, j)] = ("A", k)
            alt_b[(i, j)] = ("B", k)
    variants.append(alt_a)
    variants.append(alt_b)
    mixed = {pair: (alt_a[pair] if (pair[0] + pair[1]) % 2 else alt_b[pair]) for pair in alt_a}
    variants.append(mixed)
    for pick in variants:
        if not spans_equal(base, eliminate_p0(d, pick).quadrics):
            return False
    return True
