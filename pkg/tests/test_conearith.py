from fractions import Fraction
from math import comb, isclose

import pytest

from mvdop.conearith import (
    ConeParams,
    binomial,
    binomial_row,
    box_binomial,
    cone_params,
    dim_partition,
    dim_partition_gamma_check,
    gen_pochhammer,
    generalized_falling,
    lower_coefficient,
    raise_coefficient,
)
from mvdop.errors import SingularArgumentError
from mvdop.jack import jack_table
from mvdop.partitions import contains, enumerate_up_to, sub_partitions, weight

F = Fraction


def test_cone_params_invariants():
    for r, d in ((1, F(2)), (2, F(5, 2)), (3, F(1, 3))):
        p = ConeParams(r, d)
        assert p.n == r + d / 2 * r * (r - 1)
        assert p.rank_ratio * r == p.n
        assert sum(p.rho) == 0


def test_gen_pochhammer_examples():
    p1 = ConeParams(1, F(2))
    assert gen_pochhammer(F(7, 3), (0,), p1) == 1
    # ordinary rising factorial at r = 1
    assert gen_pochhammer(F(3), (4,), p1) == 3 * 4 * 5 * 6
    p2 = ConeParams(2, F(2))
    assert gen_pochhammer(F(3), (2, 1), p2) == 24


def test_dim_examples():
    t1 = jack_table(1, F(7, 2), 5)
    for m in range(6):
        assert dim_partition((m,), t1) == 1
    t2 = jack_table(2, 2, 3)
    assert dim_partition((1, 0), t2) == 4
    for r, d in ((2, F(5, 2)), (3, F(1))):
        t = jack_table(r, d, 1)
        assert dim_partition((1,) + (0,) * (r - 1), t) == cone_params(t).n


def test_dim_positive():
    for r, d in ((2, F(1, 3)), (3, F(5, 2))):
        t = jack_table(r, d, 4)
        for m in enumerate_up_to(r, 4):
            assert dim_partition(m, t) > 0


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_dim_against_gamma_product(d, r):
    t = jack_table(r, d, 5)
    params = cone_params(t)
    for m in enumerate_up_to(r, 5):
        exact = float(dim_partition(m, t))
        viaGamma = dim_partition_gamma_check(m, params)
        assert isclose(exact, viaGamma, rel_tol=1e-9), (d, r, m)


def test_d2_dimension_is_squared_principal():
    t = jack_table(3, 2, 4)
    for m in enumerate_up_to(3, 4):
        assert dim_partition(m, t) == t.principal(m) ** 2


def test_dim_query_past_built_degree():
    from mvdop.errors import TableDegreeError
    from mvdop.jack import JackTable

    t = JackTable(2, 2)
    t.extend(2)
    with pytest.raises(TableDegreeError):
        dim_partition((3, 0), t)


def test_binomial_normalization_and_support():
    t = jack_table(2, F(5, 2), 4)
    for m in enumerate_up_to(2, 4):
        row = binomial_row(t, m)
        assert row[(0, 0)] == 1
        assert row[m] == 1
        for k in enumerate_up_to(2, weight(m)):
            if contains(k, m):
                assert row.get(k, F(0)) > 0
            else:
                assert binomial(m, k, t) == 0


def test_binomial_r1_is_classical():
    t = jack_table(1, F(9, 4), 6)
    for m in range(7):
        for k in range(m + 1):
            assert binomial((m,), (k,), t) == comb(m, k)


def test_falling_factorial_r1():
    t = jack_table(1, 2, 6)
    for m in range(7):
        for k in range(m + 1):
            want = F(1)
            for i in range(k):
                want *= m - i
            assert generalized_falling((k,), (m,), t) == want


def test_falling_factorial_nonnegative():
    t = jack_table(2, F(5, 2), 5)
    for m in enumerate_up_to(2, 5):
        for k in sub_partitions(m):
            assert generalized_falling(k, m, t) >= 0


def test_box_binomial_matches_expansion_route():
    for r, d, N in ((2, F(3), 3), (3, F(5, 2), 2), (1, F(2), 4)):
        t = jack_table(r, d, r * N)
        box = (N,) * r
        for x in enumerate_up_to(r, r * N):
            assert box_binomial(N, x, t) == binomial(box, x, t), (r, d, N, x)


def test_raise_coefficient_examples():
    p1 = ConeParams(1, F(2))
    assert raise_coefficient(1, (5,), p1) == 1
    p2 = ConeParams(2, F(2))
    assert raise_coefficient(1, (1, 0), p2) == F(3, 2)
    assert raise_coefficient(2, (1, 0), p2) == F(1, 2)


def test_raise_matches_basis_expansion():
    for r, d in ((2, F(2)), (2, F(5, 2)), (3, F(1))):
        t = jack_table(r, d, 6)
        params = cone_params(t)
        for m in enumerate_up_to(r, 5):
            pieri = t.pieri_coefficients(m)
            for j, val in pieri.items():
                assert raise_coefficient(j, m, params) == val, (r, d, m, j)


def test_singular_argument_reported():
    p2 = ConeParams(2, F(2))
    with pytest.raises(SingularArgumentError):
        raise_coefficient(1, (0, 1), p2)
    with pytest.raises(SingularArgumentError):
        # the naive sign-flipped down argument is singular at d = 2
        raise_coefficient(2, (-2, -1), p2)


def test_lower_coefficient_finite_on_partitions():
    for r, d in ((2, F(2)), (3, F(7, 3))):
        params = ConeParams(r, d)
        for y in enumerate_up_to(r, 5):
            for j in range(1, r + 1):
                lower_coefficient(j, y, params)  # must not raise


def test_expansion_identities_degree_five():
    """Both shifted-expansion identities, checked coefficientwise to
    degree 5: the binomial-weighted sum reproduces the shifted series."""
    from mvdop.symfun import series_exp_trace, series_prod_binomial, series_compose_diagonal, u_ratio
    from mvdop.symfun import TruncatedSeries

    D = 5
    for r, d in ((2, F(2)), (2, F(5, 2)), (3, F(3))):
        t = jack_table(r, d, D)
        params = cone_params(t)
        alpha = F(7, 3)
        for k in enumerate_up_to(r, 3):
            # exponential form: exp-trace times Phi_k
            lhs = series_exp_trace(1, r, D) * t.phi(k)
            rhs = TruncatedSeries(r, D)
            for x in enumerate_up_to(r, D):
                g = generalized_falling(k, x, t)
                if not g:
                    continue
                coeff = dim_partition(x, t) * g / gen_pochhammer(params.rank_ratio, x, params)
                rhs = rhs + t.phi(x).scale(coeff).truncated(D)
            assert lhs.coeffs == rhs.coeffs, ("exp", r, d, k)
            # binomial-power form
            poch_k = gen_pochhammer(alpha, k, params)
            entry = u_ratio([0, 1], [1, -1], D)
            lhs2 = series_prod_binomial(-alpha, 1, r, D) * series_compose_diagonal(
                t.phi(k), entry, D
            )
            lhs2 = lhs2.scale(poch_k)
            rhs2 = TruncatedSeries(r, D)
            for x in enumerate_up_to(r, D):
                g = generalized_falling(k, x, t)
                if not g:
                    continue
                coeff = (
                    dim_partition(x, t)
                    * gen_pochhammer(alpha, x, params)
                    / gen_pochhammer(params.rank_ratio, x, params)
                    * g
                )
                rhs2 = rhs2 + t.phi(x).scale(coeff).truncated(D)
            assert lhs2.coeffs == rhs2.coeffs, ("binom", r, d, k)
