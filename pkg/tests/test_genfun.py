import pytest

from gbgrank.genfun import (
    FormulaParams,
    bg_two_factor_formula,
    ceil_div,
    formula,
    g_formula,
    g_omega_formula,
    gsc2_formula,
    gsc_odd_formula,
    gtilde_formula,
    quotient_bounds,
    resolve,
)
from gbgrank.qseries import Series, pochhammer

# expected coefficient lists below were computed with tests/oracles.py
# (filtering all partitions by largest part, conjugation and cell labels)


def P(t, N, nu, k, M, j=None):
    return FormulaParams(t, N, nu, k, M, j)


def test_ceil_div_negative():
    assert [ceil_div(a, 3) for a in (-4, -3, -2, -1, 0, 1, 2, 3, 4)] == [-1, -1, 0, 0, 0, 1, 1, 1, 2]


@pytest.mark.parametrize("kwargs", [
    dict(t=4, N=0, nu=0, k=0, order=5),
    dict(t=3, N=-1, nu=0, k=0, order=5),
    dict(t=3, N=0, nu=3, k=0, order=5),
    dict(t=3, N=0, nu=0, k=0, order=5, j=3),
    dict(t=3, N=0, nu=0, k=0, order=-1),
])
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        FormulaParams(**kwargs)


def test_g_examples():
    assert g_formula(P(2, 1, 0, 0, 6)).coeffs == [1, 0, 2, 0, 3, 0, 4]
    assert g_formula(P(2, 0, 0, 1, 10)).is_zero()
    assert g_formula(P(3, 0, 2, 1, 10)).coeffs == [0, 1, 0, 0, 2, 0, 0, 3, 0, 0, 4]


def test_quotient_bounds_t3():
    # nu = 1: component 0 may reach region N+1
    assert quotient_bounds(P(3, 2, 1, 1, 5)) == [2, 2, 3]
    assert quotient_bounds(P(3, 2, 0, 0, 5)) == [2, 2, 2]


def test_gsc2_examples():
    assert gsc2_formula(P(2, 0, 1, 1, 6)).coeffs == [0, 1, 0, 0, 0, 0, 0]
    assert gsc2_formula(P(2, 0, 0, 0, 6)) == Series.one(6)
    assert gsc2_formula(P(2, 1, 0, 0, 8)).coeffs == [1, 0, 0, 0, 1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        gsc2_formula(P(3, 0, 0, 0, 6))


def test_gsc_odd_examples():
    assert gsc_odd_formula(P(3, 0, 2, 0, 8)).coeffs == [1, 0, 0, 1, 0, 0, 0, 0, 0]
    assert gsc_odd_formula(P(3, 0, 0, 0, 8)) == Series.one(8)
    assert gsc_odd_formula(P(5, 0, 4, 0, 12)).coeffs == [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0]
    with pytest.raises(ValueError):
        gsc_odd_formula(P(2, 0, 0, 0, 8))


def test_gtilde_examples():
    assert gtilde_formula(P(2, 0, 1, 0, 6)) == Series.one(6)
    assert gtilde_formula(P(2, 0, 1, 1, 6)).coeffs == [0, 1, 0, 0, 0, 0, 0]
    assert gtilde_formula(P(3, 0, 0, 0, 10)) == Series.one(10)


@pytest.mark.parametrize("t", [2, 3, 5])
def test_gtilde_is_pochhammer_times_g(t):
    for N in range(3):
        for nu in range(t):
            for k in range(-2, 3):
                p = P(t, N, nu, k, 30)
                assert gtilde_formula(p) == pochhammer(t, t, t * N + nu, 1, 30) * g_formula(p)


def test_g_omega_examples():
    assert g_omega_formula(P(3, 1, 1, 1, 10, j=1)).coeffs == [0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 4]
    assert g_omega_formula(P(3, 1, 1, 1, 10, j=2)).coeffs == [0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 5]
    assert g_omega_formula(P(3, 0, 0, 1, 10, j=1)).is_zero()
    with pytest.raises(ValueError):
        g_omega_formula(P(3, 0, 0, 1, 10))
    with pytest.raises(ValueError):
        g_omega_formula(P(2, 0, 0, 1, 10, j=1))


def test_bg_two_factor_examples():
    assert bg_two_factor_formula(1, 0, 0, 6).coeffs == [1, 0, 2, 0, 3, 0, 4]
    assert bg_two_factor_formula(0, 1, 1, 6).coeffs == [0, 1, 0, 1, 0, 1, 0]
    assert bg_two_factor_formula(0, 0, 0, 4) == Series.one(4)
    with pytest.raises(ValueError):
        bg_two_factor_formula(0, 2, 0, 4)


def test_t2_consistency():
    for N in range(5):
        for nu in (0, 1):
            for k in range(-3, 4):
                assert g_formula(P(2, N, nu, k, 40)) == bg_two_factor_formula(N, nu, k, 40)


@pytest.mark.parametrize("t", [2, 3, 5, 7])
def test_leading_term_and_emptiness(t):
    for N in range(3):
        for nu in range(t):
            for k in range(-3, 4):
                s = g_formula(P(t, N, nu, k, 60))
                feasible = all(L >= 0 for L in quotient_bounds(P(t, N, nu, k, 60)))
                assert s.is_zero() is not feasible
                if feasible:
                    assert s.valuation() == t * k * k - (t - 1) * k
                    assert s[s.valuation()] == 1


@pytest.mark.parametrize("t", [3, 5])
def test_g_omega_leading_term(t):
    for N in range(3):
        for nu in range(t):
            for k in range(-2, 3):
                for j in range(1, t):
                    s = g_omega_formula(P(t, N, nu, k, 60, j=j))
                    if not s.is_zero():
                        assert s.valuation() == t * k * k + k


def test_resolve_and_dispatch():
    assert resolve("2.1") == "g" and resolve("g") == "g"
    with pytest.raises(ValueError):
        resolve("9.9")
    assert formula("1.4", P(2, 1, 0, 0, 6)) == bg_two_factor_formula(1, 0, 0, 6)
    with pytest.raises(ValueError):
        formula("1.4", P(3, 1, 0, 0, 6))
