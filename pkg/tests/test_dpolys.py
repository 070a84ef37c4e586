from fractions import Fraction

import pytest

from mvdop.dpolys import (
    FamilyParams,
    charlier,
    charlier_limit_gaps,
    determinant_formula,
    krawtchouk,
    krawtchouk_limit_gaps,
    laguerre,
    meixner,
    univariate,
    univariate_charlier,
    univariate_krawtchouk,
    univariate_laguerre,
    univariate_meixner,
)
from mvdop.errors import DomainError, ParameterError, PoleError
from mvdop.jack import jack_table
from mvdop.partitions import contains, enumerate_up_to, weight
from mvdop.conearith import cone_params, dim_partition, gen_pochhammer

F = Fraction


def test_univariate_examples():
    assert univariate_meixner(0, 5, F(7, 2), F(1, 3)) == 1
    assert univariate_meixner(1, 1, 2, F(1, 2)) == F(1, 2)
    assert univariate_charlier(1, 1, 1) == 0  # 1 - x/a at x = a = 1
    assert univariate_charlier(2, 1, 1) == -1
    assert univariate_krawtchouk(1, 1, F(1, 2), 2) == 0
    assert univariate("charlier", 0, 3, a=2) == 1


def test_univariate_meixner_pole():
    with pytest.raises(PoleError):
        univariate_meixner(2, 2, F(-1), F(1, 2))


def test_normalization_at_empty_index():
    t = jack_table(2, F(5, 2), 4)
    for x in enumerate_up_to(2, 4):
        assert meixner((0, 0), x, F(7, 2), F(1, 3), t) == 1
        assert meixner(x, (0, 0), F(7, 2), F(1, 3), t) == 1
        assert charlier((0, 0), x, 2, t) == 1
        if contains(x, (4, 4)):
            assert krawtchouk(x, (0, 0), F(1, 3), 4, t) == 1


def test_r1_reduction_all_families():
    t = jack_table(1, 1, 6)
    for m in range(7):
        for x in range(7):
            assert meixner((m,), (x,), 2, F(1, 2), t) == univariate_meixner(m, x, 2, F(1, 2))
            assert charlier((m,), (x,), 1, t) == univariate_charlier(m, x, 1)
            if m <= 4:
                assert krawtchouk((m,), (x,), F(1, 3), 4, t) == univariate_krawtchouk(m, x, F(1, 3), 4)


def test_charlier_r1_linear():
    t = jack_table(1, 2, 3)
    for x in range(5):
        assert charlier((1,), (x,), F(3, 2), t) == 1 - F(x) / F(3, 2)


def test_duality_structural():
    for r, d in ((2, F(5, 2)), (3, F(2))):
        t = jack_table(r, d, 4)
        grid = enumerate_up_to(r, 4)
        for m in grid:
            for x in grid:
                assert meixner(m, x, F(7, 2), F(1, 3), t) == meixner(x, m, F(7, 2), F(1, 3), t)
                assert charlier(m, x, 2, t) == charlier(x, m, 2, t)
                box = (4,) * r
                if contains(m, box) and contains(x, box):
                    assert krawtchouk(m, x, F(1, 3), 4, t) == krawtchouk(x, m, F(1, 3), 4, t)


def test_meixner_krawtchouk_relation():
    # exact for every p except 0 and 1
    for r, d in ((2, F(5, 2)), (2, F(2))):
        t = jack_table(r, d, 4)
        for p in (F(1, 3), F(2, 7), F(5, 3), F(-1, 2)):
            for m in enumerate_up_to(r, 3):
                if not contains(m, (3,) * r):
                    continue
                for x in enumerate_up_to(r, 3):
                    lhs = meixner(m, x, F(-3), p / (p - 1), t)
                    rhs = krawtchouk(m, x, p, 3, t)
                    assert lhs == rhs, (r, d, p, m, x)


def test_krawtchouk_domain_error():
    t = jack_table(2, 2, 4)
    with pytest.raises(DomainError):
        krawtchouk((3, 0), (1, 0), F(1, 3), 2, t)


def test_meixner_pole_error_names_k():
    t = jack_table(1, 2, 3)
    with pytest.raises(PoleError) as err:
        meixner((2,), (2,), F(-1), F(1, 2), t)
    assert "k=" in str(err.value)


def test_charlier_zero_parameter():
    t = jack_table(1, 2, 2)
    with pytest.raises(ParameterError):
        charlier((1,), (1,), 0, t)


def test_laguerre_examples():
    t = jack_table(2, F(5, 2), 3)
    params = cone_params(t)
    alpha = F(7, 2)
    assert laguerre((0, 0), (F(1, 2), F(1, 3)), alpha, t) == 1
    for m in enumerate_up_to(2, 3):
        want = (
            dim_partition(m, t)
            * gen_pochhammer(alpha, m, params)
            / gen_pochhammer(params.rank_ratio, m, params)
        )
        assert laguerre(m, (0, 0), alpha, t) == want


def test_laguerre_r1_reduction():
    t = jack_table(1, 2, 5)
    for m in range(5):
        for u in (F(0), F(1, 2), F(3)):
            assert laguerre((m,), (u,), F(7, 2), t) == univariate_laguerre(m, u, F(7, 2))


def test_laguerre_classical_values():
    # L_1^{(alpha-1)}(u) = alpha - u with the leading normalization
    for u in (F(0), F(1), F(5, 2)):
        assert univariate_laguerre(1, u, F(3)) == 3 - u


@pytest.mark.parametrize("r,d", [(1, F(2)), (2, F(2)), (2, F(5, 2))])
def test_limit_gaps_decay_first_order(r, d):
    t = jack_table(r, d, 3)
    alphas = (100, 10000)
    # both indices must share a sub-partition of weight >= 2, otherwise the
    # relation is exact and the gap is identically zero
    m = (2,) + (0,) * (r - 1)
    x = m
    gaps = charlier_limit_gaps(m, x, 1, alphas, t)
    assert gaps[0] > gaps[1] > 0
    # one extra decade of alpha buys at least ~0.9 orders of accuracy
    assert gaps[1] <= gaps[0] / 50
    kgaps = krawtchouk_limit_gaps(m, x, 1, (100, 10000), t)
    assert kgaps[0] > kgaps[1] > 0
    assert kgaps[1] <= kgaps[0] / 50


def test_limit_gap_zero_cases():
    t = jack_table(2, 2, 2)
    gaps = charlier_limit_gaps((0, 0), (0, 0), 1, (100, 10000), t)
    assert gaps == [0, 0]


# ---------------------------------------------------------------------------
# determinant route (d = 2)


def test_determinant_reduces_to_univariate_at_r1():
    t = jack_table(1, 2, 5)
    assert determinant_formula("meixner", (3,), (2,), t, alpha=F(7, 2), c=F(1, 3)) == univariate_meixner(3, 2, F(7, 2), F(1, 3))
    assert determinant_formula("charlier", (4,), (1,), t, a=2) == univariate_charlier(4, 1, 2)
    assert determinant_formula("krawtchouk", (2,), (3,), t, p=F(1, 3), N=4) == univariate_krawtchouk(2, 3, F(1, 3), 4)


@pytest.mark.parametrize("r", [2, 3])
def test_determinant_agrees_with_direct_sum(r):
    t = jack_table(r, 2, 4)
    grid = enumerate_up_to(r, 4)
    box = (4,) * r
    for m in grid:
        for x in grid:
            direct = meixner(m, x, F(7, 2), F(1, 3), t)
            assert determinant_formula("meixner", m, x, t, alpha=F(7, 2), c=F(1, 3)) == direct
            assert determinant_formula("charlier", m, x, t, a=2) == charlier(m, x, 2, t)
            if contains(m, box) and contains(x, box):
                assert determinant_formula("krawtchouk", m, x, t, p=F(1, 3), N=4) == krawtchouk(m, x, F(1, 3), 4, t)


def test_determinant_needs_d2():
    t = jack_table(2, F(5, 2), 3)
    with pytest.raises(DomainError):
        determinant_formula("meixner", (1, 0), (1, 0), t, alpha=F(7, 2), c=F(1, 3))


def test_determinant_meixner_prefactor_pole():
    t = jack_table(2, 2, 3)
    with pytest.raises(DomainError):
        determinant_formula("meixner", (1, 0), (1, 0), t, alpha=F(1), c=F(1, 3))


def test_family_params_validation():
    with pytest.raises(ParameterError):
        FamilyParams("meixner", alpha=F(2))  # missing c
    with pytest.raises(ParameterError):
        FamilyParams("charlier", a=0)
    with pytest.raises(ParameterError):
        FamilyParams("nosuch")
    fp = FamilyParams("krawtchouk", p=F(1, 3), N=2)
    assert fp.label() == {"family": "krawtchouk", "p": "1/3", "N": 2}
