import pytest

from oracles import brute, fib, lhs_ok
from restricted_compositions import ParameterError, PreconditionError
from restricted_compositions import formulas as fm
from restricted_compositions.series import (
    BivariateSeries,
    TruncatedSeries,
    a_k_bivariate_denominator,
    a_k_bivariate_series,
    a_k_denominator,
    a_k_series,
    extend_by_recurrence,
    recurrence_from_denominator,
    series_add,
    series_invert,
    series_mul,
)

# Oracle rows for x^0..x^12, indexed by the number of exceptional parts.
BIVARIATE_K2 = [
    [1, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144],
    [0, 0, 0, 0, 1, 2, 4, 8, 15, 28, 51, 92, 164],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 8, 19, 42],
]
BIVARIATE_K3 = [
    [1, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41],
    [0, 0, 0, 0, 0, 1, 3, 5, 8, 14, 24, 39, 63],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 5, 13],
]


def S(coeffs, order):
    return TruncatedSeries(coeffs, order)


def test_arithmetic_examples():
    assert series_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1], 2)
    assert series_add(S([], 3), S([4, 5], 3)) == S([4, 5], 3)
    assert S([1, 1, 1], 3) * S([1, 1], 3) == S([1, 2, 2, 1], 3)
    assert S([3, 2], 2) - S([1, 2], 2) == S([2], 2)


def test_truncation_drops_high_terms():
    s = TruncatedSeries.from_terms({0: 1, 5: 7}, 3)
    assert s.coeffs == (1, 0, 0, 0) and len(s) == 4
    assert (S([1, 1], 3) ** 5).coeffs == (1, 5, 10, 10)


@pytest.mark.parametrize(
    "series, inverse",
    [
        (S([1, -1], 4), S([1, 1, 1, 1, 1], 4)),
        (S([1], 0), S([1], 0)),
        (S([1, -2, 1], 3), S([1, 2, 3, 4], 3)),
        (S([-1, 1], 2), S([-1, -1, -1], 2)),
    ],
)
def test_invert_examples(series, inverse):
    assert series_invert(series) == inverse
    assert series * inverse == TruncatedSeries.one(series.order)
    assert series ** -1 == inverse


def test_invert_rejects_non_unit():
    with pytest.raises(PreconditionError):
        S([2, 1], 3).invert()
    with pytest.raises(PreconditionError):
        S([0, 1], 3).invert()


def test_order_mismatch():
    with pytest.raises(ParameterError):
        S([1], 2) + S([1], 3)
    with pytest.raises(ParameterError):
        S([1], 2) * S([1], 3)
    a = BivariateSeries([[1]], 2, 1)
    with pytest.raises(ParameterError):
        a * BivariateSeries([[1]], 2, 2)
    with pytest.raises(ParameterError):
        S([1], -1)


def test_univariate_examples():
    assert a_k_series(2, 6).coeffs == (1, 1, 1, 2, 3, 5, 8)
    assert a_k_series(3, 7)[7] == 6
    assert a_k_series(1, 6).coeffs == (1, 1, 2, 4, 8, 16, 32)
    assert a_k_series(3, 11).coeffs == (1, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28)


@pytest.mark.parametrize("k", range(1, 6))
def test_univariate_matches_dani(k):
    s = a_k_series(k, 60)
    assert s[0] == 1
    for n in range(1, 61):
        assert s[n] == fm.a_k_n_dani(k, n)


@pytest.mark.parametrize("k, rows", [(2, BIVARIATE_K2), (3, BIVARIATE_K3)])
def test_bivariate_against_frozen_rows(k, rows):
    s = a_k_bivariate_series(k, 12, 2)
    assert [list(r) for r in s.rows] == rows


def test_bivariate_boundary_and_slice():
    for k in range(2, 6):
        s = a_k_bivariate_series(k, 30, 4)
        assert s.coeff(0, 0) == 1
        assert all(s.coeff(0, m) == 0 for m in range(1, 5))
        assert s.y_slice(0) == a_k_series(k, 30)
    assert a_k_bivariate_series(2, 5, 1).coeff(4, 1) == 1
    assert a_k_bivariate_series(2, 5, 1).coeff(5, 1) == 2


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bivariate_matches_oracle(k):
    s = a_k_bivariate_series(k, 16, 3)
    for m in range(4):
        for n in range(17):
            assert s.coeff(n, m) == len(brute(n, lambda c: lhs_ok(c, k, m))), (m, n)


@pytest.mark.parametrize("k", range(1, 6))
def test_univariate_reconstruction(k):
    N = 60
    num = TruncatedSeries.from_terms({0: 1, k: -1}, N)
    assert a_k_series(k, N) * a_k_denominator(k, N) == num


@pytest.mark.parametrize("k", range(2, 6))
def test_bivariate_reconstruction(k):
    N, M = 60, 6
    num = BivariateSeries.from_terms({(0, 0): 1, (k, 0): -1}, N, M)
    assert a_k_bivariate_series(k, N, M) * a_k_bivariate_denominator(k, N, M) == num


def test_bivariate_invert_round_trip():
    den = a_k_bivariate_denominator(3, 20, 4)
    one = BivariateSeries.from_terms({(0, 0): 1}, 20, 4)
    assert den * den.invert() == one
    assert (den - den) + one == one


def test_bivariate_needs_k_two():
    with pytest.raises(ParameterError):
        a_k_bivariate_series(1, 5, 1)


@pytest.mark.parametrize("k, coeffs", [(1, [2]), (2, [1, 1]), (3, [1, 0, 1]), (5, [1, 0, 0, 0, 1])])
def test_recurrence_coefficients(k, coeffs):
    assert recurrence_from_denominator(k) == coeffs


def test_recurrence_worked_value():
    a = extend_by_recurrence(3, 7)
    assert a[7] == a[6] + a[4] == 4 + 2 == 6


@pytest.mark.parametrize("k", range(1, 6))
def test_recurrence_matches_division(k):
    assert extend_by_recurrence(k, 200) == list(a_k_series(k, 200).coeffs)


def test_recurrence_fibonacci_shift():
    assert extend_by_recurrence(2, 40)[1:] == [fib(n) for n in range(1, 41)]


def test_recurrence_needs_enough_seeds():
    with pytest.raises(PreconditionError):
        extend_by_recurrence(3, 10, seeds=[1, 1])
