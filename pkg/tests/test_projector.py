import random
from fractions import Fraction
from math import comb

import pytest

from symhilb.linalg import SPARSE_PRIMES
from symhilb.polyring import MPoly, pvar, pzero, xvar
from symhilb.projector import (CGenerator, ProjectorSpec, apply_projector,
                               closed_c, generate_C, generator_span_rank,
                               points_to_projector, verify_c_zero,
                               verify_relations)

POINTS3 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 1)]


def _eval_affine(coeffs, pt):
    return coeffs[0] + sum(c * x for c, x in zip(coeffs[1:], pt))


def _random_points(rng, d):
    while True:
        pts = [tuple(Fraction(rng.randrange(-5, 6)) for _ in range(d))
               for _ in range(d + 1)]
        try:
            points_to_projector(pts)
            return pts
        except ValueError:
            continue


def test_interpolation_table():
    spec = points_to_projector(POINTS3)
    assert spec.d == 3 and not spec.symbolic
    for i in range(1, 4):
        for j in range(i, 4):
            for pt in POINTS3:
                want = Fraction(pt[i - 1]) * Fraction(pt[j - 1])
                assert _eval_affine(spec.entry(i, j), pt) == want


def test_degenerate_points_rejected():
    with pytest.raises(ValueError):
        points_to_projector([(0, 0), (1, 0), (2, 0)])  # collinear
    with pytest.raises(ValueError):
        points_to_projector([(0, 0, 0), (1, 0, 0), (1, 0, 0), (0, 1, 0)])


def test_projector_agrees_on_points(rng):
    for d in (2, 3, 4):
        pts = _random_points(rng, d)
        spec = points_to_projector(pts)
        f = MPoly.zero()
        for _ in range(5):
            mon = tuple(sorted(xvar(rng.randrange(1, d + 1))
                               for _ in range(rng.randrange(0, 4))))
            f = f + MPoly({mon: Fraction(rng.randrange(-3, 4))})
        pf = apply_projector(spec, f)
        assert pf.degree() <= 1
        for pt in pts:
            vals = {xvar(i + 1): Fraction(x) for i, x in enumerate(pt)}
            assert pf.evaluate(vals) == f.evaluate(vals)


def test_projector_fixes_affine_and_idempotent():
    spec = points_to_projector(POINTS3)
    f = MPoly.constant(2) + MPoly.variable(xvar(1)) - MPoly.variable(xvar(3))
    assert apply_projector(spec, f) == f
    g = MPoly.variable(xvar(1)) * MPoly.variable(xvar(2)) + f
    assert apply_projector(spec, apply_projector(spec, g)) == apply_projector(spec, g)


def test_product_rule(rng):
    # P(gh) = P(g P(h)) for polynomial g, h
    spec = points_to_projector(POINTS3)
    for _ in range(5):
        g = MPoly({(xvar(rng.randrange(1, 4)),): Fraction(rng.randrange(1, 4)),
                   (): Fraction(rng.randrange(-2, 3))})
        h = MPoly({tuple(sorted((xvar(rng.randrange(1, 4)), xvar(rng.randrange(1, 4))))):
                   Fraction(rng.randrange(1, 4))})
        assert apply_projector(spec, g * h) == \
            apply_projector(spec, g * apply_projector(spec, h))


def test_symbolic_spec_entries():
    spec = ProjectorSpec.symbolic_spec(3)
    assert spec.symbolic
    ent = spec.entry(2, 1)
    assert ent[0] == MPoly.variable(pzero(1, 2))
    assert ent[2] == MPoly.variable(pvar(2, 1, 2))


def test_closed_c_antisymmetry():
    for d in (3, 4):
        for (a, j, i, k) in [(1, 2, 1, 3), (0, 1, 2, 3), (2, 2, 1, 2)]:
            assert closed_c(a, j, i, k, d) == -closed_c(a, j, k, i, d)
            assert closed_c(a, j, i, i, d) == MPoly.zero()


def test_generate_C_census():
    for d in (3, 4):
        gens = generate_C(d)
        assert len(gens) == (d + 1) * d * comb(d, 2)
        labels = {g.label() for g in gens}
        assert len(labels) == len(gens)
        assert all(isinstance(g, CGenerator) for g in gens)
        # every generator is a quadric in p with a linear p0 part
        for g in gens[:10]:
            assert g.poly.degree() <= 2


def test_verify_relations_census():
    rep3 = verify_relations(3)
    assert rep3.ok and rep3.count == 6
    rep4 = verify_relations(4)
    assert rep4.ok and rep4.count == 22
    assert "ok" in rep3.summary()


def test_verify_c_zero_census():
    rep = verify_c_zero(3)
    assert rep.ok
    assert rep.count == comb(3, 2) * 3 * 2  # (i<k) x j x (u != j)


def test_generator_span_rank_both_primes():
    for p in SPARSE_PRIMES:
        assert generator_span_rank(3, modulus=p) == 21


def test_relation_rank_deficit():
    gens = generate_C(3)
    assert len(gens) - generator_span_rank(3) >= 6


def _permute_varid(v, sigma):
    if v.kind == 0:
        return pzero(sigma[v.index[0]], sigma[v.index[1]])
    return pvar(sigma[v.index[0]], sigma[v.index[1]], sigma[v.index[2]])


def test_span_rank_symmetric_group_invariance(rng):
    d = 3
    gens = [g for g in generate_C(d) if g.a >= 1]
    perm = list(range(1, d + 1))
    rng.shuffle(perm)
    sigma = {i + 1: perm[i] for i in range(d)}
    mapped = []
    for g in gens:
        sub = {v: MPoly.variable(_permute_varid(v, sigma)) for v in g.poly.variables()}
        mapped.append(g.poly.substitute(sub))
    assert generator_span_rank(d) == 21
    from symhilb.polyring import coefficient_matrix_rank
    assert coefficient_matrix_rank(mapped, modulus=SPARSE_PRIMES[0]) == 21


def test_numeric_annihilation():
    spec = points_to_projector(POINTS3)
    vals = spec.value_map()
    for g in generate_C(3):
        assert g.poly.evaluate(vals) == 0, g.label()
