from math import comb

import pytest

from symhilb.bounds import (bound_scan, corollary_bound, module_31,
                            module_4321, remark_multiplicities,
                            remark_multiplicity_modules, tail_sum,
                            tensor_tail_check)
from symhilb.partitions import schur_dim, weight
from symhilb.symfun import sym_plethysm


def test_modules():
    assert module_31(3) == (3, 1)
    assert module_31(5) == (3, 1, 1, 1)
    assert module_4321(3) == (4, 3, 1)
    assert module_4321(5) == (4, 3, 2, 2, 1)
    for d in range(3, 8):
        assert weight(module_31(d)) == d + 1
        assert weight(module_4321(d)) == 2 * d + 2
    with pytest.raises(ValueError):
        module_31(2)


def test_tail_sum():
    assert tail_sum((6, 2), 3, 0) == 0
    assert tail_sum((6, 2), 3, 1) == 2
    assert tail_sum((6, 2), 3, 2) == 8
    assert tail_sum((4, 3, 2, 1), 4, 1) == 3


def test_corollary_bound_frozen_values():
    for k, want in [(0, 75), (1, 60), (2, 0)]:
        rep = corollary_bound(3, 2, k)
        assert rep.value == want
        assert rep.value == sum(m * dim for _, m, dim in rep.admitted)


def test_corollary_bound_validation():
    with pytest.raises(ValueError):
        corollary_bound(3, 1, 0)
    with pytest.raises(ValueError):
        corollary_bound(3, 2, 3)


def test_bound_admits_subset_of_expansion():
    exp = sym_plethysm(2, module_31(4), 4)
    rep = corollary_bound(4, 2, 1, exp)
    admitted = {lam for lam, _, _ in rep.admitted}
    assert admitted <= set(exp.terms)
    assert rep.value <= exp.dimension()


def test_k_zero_drops_last_part():
    # k = 0 admits only partitions with lam_d = 0
    rep = corollary_bound(3, 2, 0)
    assert all(len(lam) < 3 for lam, _, _ in rep.admitted)


def test_bound_scan():
    rows = bound_scan(3, 3, hilbert_values={2: 105, 3: 490})
    assert [row.r for row in rows] == [2, 3]
    assert rows[0].bounds == {0: 75, 1: 60, 2: 0}
    assert rows[0].best == 75 and rows[0].best_k == 0
    assert rows[0].hilbert == 105
    assert all(row.best <= row.hilbert for row in rows)


def test_tensor_tail_check_passes():
    for d in (3, 4):
        for r in (2, 3):
            rep = tensor_tail_check(d, r)
            assert rep.ok
            assert all(m >= 1 for _, m in rep.constituents)
    # r = 2: the product is the single relation module itself
    rep = tensor_tail_check(3, 2)
    assert rep.constituents == [(module_4321(3), 1)]


def test_remark_multiplicities():
    assert remark_multiplicity_modules(4) == [(6, 4, 3, 2), (5, 4, 4, 2), (5, 4, 3, 3)]
    for d in (4, 5):
        mults = remark_multiplicities(d)
        assert list(mults.values()) == [3, 2, 2]
        # their dimension total matches the cubic correction term
        total = sum(schur_dim(lam, d) for lam in mults)
        assert total == d * (d * d - 4) * (3 * d * d + 1) // 12
    with pytest.raises(ValueError):
        remark_multiplicities(3)


def test_plethysm_conservation():
    # unfiltered sum over the full expansion recovers the symmetric power
    for d in (3, 4):
        exp = sym_plethysm(2, module_31(d), d)
        n = d * comb(d + 1, 2) - d
        assert exp.dimension() == comb(n + 1, 2)
        full = corollary_bound(d, 2, d - 1, exp)
        assert full.value <= comb(n + 1, 2)
