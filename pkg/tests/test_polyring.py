import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symhilb.linalg import SPARSE_PRIMES
from symhilb.polyring import (MPoly, VarId, coefficient_matrix_rank,
                              coefficient_rows, pvar, pzero, qvar, span_rank,
                              xvar)

VARS = [pzero(1, 2), pvar(1, 2, 3), qvar(2, 1, 1), xvar(1), xvar(2)]


@st.composite
def mpolys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    poly = MPoly.zero()
    for _ in range(n_terms):
        deg = draw(st.integers(min_value=0, max_value=2))
        mon = tuple(sorted(draw(st.sampled_from(VARS)) for _ in range(deg)))
        c = Fraction(draw(st.integers(min_value=-5, max_value=5)),
                     draw(st.integers(min_value=1, max_value=3)))
        poly = poly + MPoly({mon: c})
    return poly


def test_varid_normalization_and_order():
    assert pzero(3, 1) == pzero(1, 3)
    assert pvar(2, 4, 1) == pvar(2, 1, 4)
    assert pzero(1, 2) < pvar(1, 1, 1) < qvar(1, 1, 1) < xvar(1)
    assert xvar(1) < xvar(2)


def test_varid_json_roundtrip():
    for v in VARS:
        assert VarId.from_json_dict(v.to_json_dict()) == v
    assert pzero(2, 5).to_json_dict() == {"kind": "p0", "index": [2, 5]}


def test_mpoly_basics():
    x, y = MPoly.variable(xvar(1)), MPoly.variable(xvar(2))
    f = x * y + 2 * x
    assert f.coefficient((xvar(1), xvar(2))) == 1
    assert f.coefficient((xvar(1),)) == 2
    assert f.coefficient((xvar(2),)) == 0
    assert f.degree() == 2
    assert not f.is_homogeneous()
    assert (x * y).is_homogeneous()
    assert MPoly.zero().degree() == -1
    assert f.variables() == {xvar(1), xvar(2)}


@given(mpolys(), mpolys(), mpolys())
def test_mpoly_ring_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + MPoly.zero() == f
    assert f * MPoly.constant(1) == f
    assert f - f == MPoly.zero()


@given(mpolys(), mpolys())
def test_substitute_is_a_homomorphism(f, g):
    sigma = {xvar(1): MPoly.variable(xvar(2)) + MPoly.constant(1),
             pzero(1, 2): MPoly.constant(Fraction(1, 2))}
    assert (f * g).substitute(sigma) == f.substitute(sigma) * g.substitute(sigma)
    assert (f + g).substitute(sigma) == f.substitute(sigma) + g.substitute(sigma)


def test_substitute_keeps_unmapped():
    f = MPoly.variable(pvar(1, 1, 2)) * MPoly.variable(xvar(1))
    got = f.substitute({xvar(1): MPoly.constant(3)})
    assert got == MPoly.variable(pvar(1, 1, 2)).scale(3)


@given(mpolys())
def test_evaluate_matches_substitute(f):
    values = {v: Fraction(i - 2, 3) for i, v in enumerate(VARS)}
    got = f.evaluate(values)
    via_subst = f.substitute({v: MPoly.constant(c) for v, c in values.items()})
    assert MPoly.constant(got) == via_subst


def test_coefficient_rows_shape():
    x, y = MPoly.variable(xvar(1)), MPoly.variable(xvar(2))
    rows, cols = coefficient_rows([x * y, x * x - y * y])
    assert len(rows) == 2
    assert len(cols) == 3
    assert all(len(mon) == 2 for mon in cols)


def test_span_rank_exact_and_modular():
    x, y = MPoly.variable(xvar(1)), MPoly.variable(xvar(2))
    polys = [x * y, x * x, x * y + x * x, y * y]
    assert span_rank(polys) == 3
    for p in SPARSE_PRIMES:
        assert span_rank(polys, modulus=p) == 3
    assert coefficient_matrix_rank(polys) == 3


def test_span_rank_rejects_mixed_degree():
    x = MPoly.variable(xvar(1))
    with pytest.raises(ValueError):
        span_rank([x * x, x])
    with pytest.raises(ValueError):
        span_rank([x * x + x])


def test_span_rank_scale_invariance(rng):
    x, y = MPoly.variable(xvar(1)), MPoly.variable(xvar(2))
    polys = [x * y + y * y, x * x - x * y]
    scaled = [f.scale(Fraction(rng.randrange(1, 50), rng.randrange(1, 50)))
              for f in polys]
    assert span_rank(scaled) == span_rank(polys) == 2
