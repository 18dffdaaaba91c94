from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symhilb.partitions import (BudgetError, lr_product, normalize, padded,
                                partitions_of, schur_dim, ssyt_count,
                                ssyt_iter, weight)

partitions = st.builds(
    lambda parts: tuple(sorted(parts, reverse=True)),
    st.lists(st.integers(min_value=1, max_value=4), min_size=0, max_size=4),
)


def test_normalize_drops_trailing_zeros():
    assert normalize((3, 1, 0, 0)) == (3, 1)
    assert normalize(()) == ()
    with pytest.raises(ValueError):
        normalize((1, 2))


def test_padded():
    assert padded((3, 1), 4) == (3, 1, 0, 0)
    with pytest.raises(ValueError):
        padded((3, 1, 1), 2)


def test_partitions_of_counts():
    # partition numbers p(0..9) = 1,1,2,3,5,7,11,15,22,30
    want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    got = [len(list(partitions_of(n, n or 1))) for n in range(10)]
    assert got == want
    assert list(partitions_of(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert list(partitions_of(4, 4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_ssyt_small_counts():
    assert ssyt_count((2,), 2) == 3
    assert ssyt_count((1, 1), 2) == 1
    assert ssyt_count((3, 1), 3) == 15
    assert ssyt_count((1, 1, 1), 2) == 0


def test_ssyt_budget_guard():
    with pytest.raises(BudgetError):
        list(ssyt_iter((4, 3, 2, 1), 6, budget=10))


def test_schur_dim_hooks():
    assert schur_dim((3, 1), 3) == 15
    assert schur_dim((), 5) == 1
    assert schur_dim((1,) * 4, 4) == 1
    assert schur_dim((2, 1), 7) == schur_dim((2, 1, 0, 0), 7)


@given(partitions, st.integers(min_value=1, max_value=5))
def test_schur_dim_matches_tableau_count(lam, d):
    if len(lam) > d:
        assert ssyt_count(lam, d) == 0
    else:
        assert schur_dim(lam, d) == ssyt_count(lam, d)


def test_lr_wedge_times_sym2():
    got = lr_product((1, 1, 1), (2,), 4)
    assert got == {(2, 1, 1, 1): 1, (3, 1, 1): 1}


def test_lr_trivial_factor():
    assert lr_product((4, 2, 1), (), 5) == {(4, 2, 1): 1}
    assert lr_product((), (3, 1), 4) == {(3, 1): 1}


def test_lr_iterated_product():
    # (1,1,1) x (1) x (1,1) in four variables
    step = lr_product((1, 1, 1), (1,), 4)
    acc: dict = {}
    for lam, m in step.items():
        for nu, c in lr_product(lam, (1, 1), 4).items():
            acc[nu] = acc.get(nu, 0) + m * c
    assert acc == {(3, 2, 1): 1, (3, 1, 1, 1): 1, (2, 2, 1, 1): 2, (2, 2, 2): 1}


def test_lr_discards_long_partitions():
    got = lr_product((1, 1), (1, 1), 2)
    assert got == {(2, 2): 1}
    full = lr_product((1, 1), (1, 1), 4)
    assert full == {(2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1}


@given(partitions, partitions, st.integers(min_value=2, max_value=4))
def test_lr_symmetry(lam, mu, d):
    if len(lam) > d or len(mu) > d:
        return
    assert lr_product(lam, mu, d) == lr_product(mu, lam, d)


@given(partitions, partitions, st.integers(min_value=2, max_value=4))
def test_lr_dimension_additivity(lam, mu, d):
    if len(lam) > d or len(mu) > d:
        return
    total = sum(c * schur_dim(nu, d) for nu, c in lr_product(lam, mu, d).items())
    assert total == schur_dim(lam, d) * schur_dim(mu, d)


@given(partitions, st.integers(min_value=2, max_value=4))
def test_lr_determinant_twist(lam, d):
    if len(lam) > d:
        return
    got = lr_product(lam, (1,) * d, d)
    shifted = tuple(x + 1 for x in padded(lam, d))
    assert got == {shifted: 1}


def test_lr_rejects_too_many_parts():
    with pytest.raises(ValueError):
        lr_product((1, 1, 1), (1,), 2)


def test_twist_pair_dimensions():
    for d in range(3, 9):
        a = (3, 2) + (1,) * (d - 3)
        b = (4, 3) + (2,) * (d - 3) + (1,)
        n = d * d * (d * d - 4) // 3
        assert schur_dim(a, d) == n
        assert schur_dim(b, d) == n


@given(partitions)
def test_weight(lam):
    assert weight(lam) == sum(lam)
