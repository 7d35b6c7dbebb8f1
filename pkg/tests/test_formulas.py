import pytest

from oracles import brute, fib, lhs_ok
from restricted_compositions import PartitionInBox, PreconditionError, ParameterError
from restricted_compositions import formulas as fm

# Counts of compositions of n with exactly one even part, from the oracle.
ONE_EVEN = [0, 0, 1, 2, 4, 8, 15, 28, 51, 92, 164]
# Total number of parts over compositions of n + 1 with all parts >= 2.
B_VALUES = [0, 1, 1, 3, 5, 10, 18, 33, 59, 105]


@pytest.mark.parametrize("a, b, value", [(5, 2, 10), (-1, 0, 1), (2, 5, 0), (-3, 0, 1), (-1, 1, 0), (0, 0, 1), (4, -1, 0)])
def test_binom_convention(a, b, value):
    assert fm.binom(a, b) == value


@pytest.mark.parametrize("n, value", [(0, 0), (1, 1), (2, 1), (10, 55)])
def test_fibonacci(n, value):
    assert fm.fibonacci(n) == value


def test_fibonacci_rejects_negative():
    with pytest.raises(ParameterError):
        fm.fibonacci(-1)


@pytest.mark.parametrize("parts, rows, width, d, value", [((), 0, 0, 4, 1), ((2, 1), 3, 2, 3, 6), ((1, 1), 2, 1, 2, 1)])
def test_monomial_eval(parts, rows, width, d, value):
    assert fm.monomial_eval(PartitionInBox(parts, rows, width), d) == value


def test_monomial_eval_too_many_parts():
    with pytest.raises(PreconditionError):
        fm.monomial_eval(PartitionInBox((1, 1, 1), 3, 1), 2)


@pytest.mark.parametrize("k, n, value", [(2, 5, 5), (3, 7, 6), (3, 1, 1)])
def test_dani_examples(k, n, value):
    assert fm.a_k_n_dani(k, n) == value


def test_dani_rejects_zero():
    with pytest.raises(PreconditionError, match="enumeration"):
        fm.a_k_n_dani(2, 0)


@pytest.mark.parametrize("n", range(1, 41))
def test_dani_is_fibonacci_for_k_two(n):
    assert fm.a_k_n_dani(2, n) == fib(n)


@pytest.mark.parametrize("formula", [fm.a_k_n_m_positive, fm.a_k_n_m_signed])
@pytest.mark.parametrize("k, n, m, value", [(2, 5, 0, 5), (2, 3, 1, 0), (2, 4, 1, 1), (2, 5, 1, 2), (3, 16, 2, 195), (2, 0, 0, 1), (3, 0, 2, 0)])
def test_franklin_formula_examples(formula, k, n, m, value):
    assert formula(k, n, m) == value


@pytest.mark.parametrize("formula", [fm.a_k_n_m_positive, fm.a_k_n_m_signed])
def test_franklin_formula_parameter_errors(formula):
    with pytest.raises(ParameterError):
        formula(1, 3, 0)
    with pytest.raises(ParameterError):
        formula(2, -1, 0)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_positive_and_signed_agree(k):
    for m in range(5):
        for n in range(41):
            assert fm.a_k_n_m_positive(k, n, m) == fm.a_k_n_m_signed(k, n, m), (m, n)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_formulas_match_oracle(k):
    for m in range(4):
        for n in range(17):
            expected = len(brute(n, lambda c: lhs_ok(c, k, m)))
            assert fm.a_k_n_m_positive(k, n, m) == expected, (m, n)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_m_zero_reduces_to_dani(k):
    for n in range(1, 41):
        assert fm.a_k_n_m_positive(k, n, 0) == fm.a_k_n_dani(k, n)


def test_a_examples_and_seed():
    assert [fm.A_n(n) for n in range(len(ONE_EVEN) - 1)] == ONE_EVEN[1:]
    assert fm.A_n(0) == 0
    # The closed form also yields 0 at n = 0, though it is only stated for n >= 1.
    assert ((0 + 4) * fm.fibonacci(0) + 0) // 5 == 0


@pytest.mark.parametrize("n", range(1, 41))
def test_a_closed_forms_agree(n):
    assert fm.A_n_closed(n) == fm.A_n_double_sum(n) == fm.a_k_n_m_positive(2, n + 3, 1)


@pytest.mark.parametrize("n", range(0, 39))
def test_a_recurrence(n):
    assert fm.A_n(n + 2) == fm.A_n(n + 1) + fm.A_n(n) + fm.fibonacci(n + 1)


def test_b_examples():
    assert [fm.B_n(n) for n in range(len(B_VALUES))] == B_VALUES


@pytest.mark.parametrize("n", range(2, 41))
def test_b_closed_forms_agree(n):
    assert fm.B_n_closed(n) == fm.B_n_closed_alt(n)


@pytest.mark.parametrize("n", range(1, 41))
def test_b_minus_a(n):
    assert fm.B_n(n - 1) == fm.A_n(n) - fm.B_n(n)


@pytest.mark.parametrize("n", range(1, 41))
def test_fifth_expressions_divide_exactly(n):
    F = fm.fibonacci
    assert ((n + 4) * F(n) + 2 * n * F(n - 1)) % 5 == 0
    assert ((2 * n + 3) * F(n) - n * F(n - 1)) % 5 == 0
    if n >= 2:
        assert ((n + 3) * F(n) + n * F(n - 2)) % 5 == 0


def test_div5_refuses_remainder():
    with pytest.raises(ArithmeticError):
        fm._div5(7)


@pytest.mark.parametrize(
    "call",
    [lambda: fm.A_n_closed(0), lambda: fm.A_n_double_sum(0), lambda: fm.B_n_closed(0), lambda: fm.B_n_closed_alt(1)],
)
def test_closed_forms_outside_stated_range(call):
    with pytest.raises(PreconditionError):
        call()


def test_corrupted_binomial_changes_only_boundary_terms():
    def corrupted(a, b):
        return 0 if (a, b) == (-1, 0) else fm.binom(a, b)

    assert fm.a_k_n_m_positive(3, 0, 0, binom=corrupted) == 0
    assert fm.a_k_n_m_signed(3, 0, 0, binom=corrupted) == 0
    for k in (2, 3, 4):
        for m in range(1, 4):
            for n in range(17):
                assert fm.a_k_n_m_positive(k, n, m, binom=corrupted) == fm.a_k_n_m_positive(k, n, m)
