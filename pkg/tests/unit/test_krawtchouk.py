from fractions import Fraction
from math import comb, sqrt

import pytest

from qenum.errors import DomainError
from qenum.krawtchouk import (
    a_polynomial,
    alpha_coefficients,
    alpha_expansion_holds,
    asymptotic_smallest_root,
    binomial_sum_identity,
    christoffel_darboux_holds,
    eval_integer,
    eval_real,
    eval_real_sum,
    eval_recurrence,
    generating_function_holds,
    half_binomial,
    krawtchouk_table,
    orthogonality_holds,
    product_expansion,
    product_expansion_holds,
    ratio_estimate,
    reciprocity_holds,
    recurrence_holds,
    smallest_root,
    x_recurrence_holds,
)


def test_known_values():
    assert eval_integer(5, 0, 3) == 1
    assert eval_integer(5, 1, 0) == 5
    assert eval_integer(5, 1, 2) == 1
    assert [eval_integer(5, 2, x) for x in range(6)] == [10, 2, -2, -2, 2, 10]
    assert eval_integer(5, 5, 1) == -1


def test_half_binomial():
    assert half_binomial(4, 2) == 4
    assert half_binomial(4, 3) == 0
    assert half_binomial(4, -2) == 0
    assert half_binomial(4, 10) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_recurrence_agrees_with_defining_sum(n):
    for i in range(n + 1):
        for x in range(n + 1):
            assert eval_recurrence(n, i, x) == eval_integer(n, i, x)


def test_recurrence_pins_the_lower_coefficient():
    # (i+1) P_{i+1} = (n-2x) P_i - (n-i+1) P_{i-1}, checked at n=6, i=2, x=1
    n, i, x = 6, 2, 1
    lhs = (i + 1) * eval_integer(n, i + 1, x)
    assert lhs == (n - 2 * x) * eval_integer(n, i, x) - (n - i + 1) * eval_integer(n, i - 1, x)


@pytest.mark.parametrize(
    "checker",
    [
        reciprocity_holds,
        orthogonality_holds,
        generating_function_holds,
        recurrence_holds,
        x_recurrence_holds,
        christoffel_darboux_holds,
        product_expansion_holds,
        alpha_expansion_holds,
    ],
)
@pytest.mark.parametrize("n", [1, 2, 5, 7, 16])
def test_identity_checkers(checker, n):
    assert checker(n)


@pytest.mark.parametrize("checker", [reciprocity_holds, orthogonality_holds])
@pytest.mark.parametrize("n", [20, 24])
def test_orthogonality_and_reciprocity_for_larger_n(checker, n):
    assert checker(n)


def test_table_layout():
    table = krawtchouk_table(4)
    assert table.values[1] == (4, 2, 0, -2, -4)
    assert table.column(0) == tuple(comb(4, i) for i in range(5))
    assert table.value(2, 2) == -2


def test_out_of_range_arguments():
    with pytest.raises(DomainError):
        eval_integer(5, 6, 0)
    with pytest.raises(DomainError):
        eval_integer(5, 1, 6)
    with pytest.raises(DomainError):
        krawtchouk_table(4).value(0, 5)


def test_real_evaluation_paths_agree():
    for i in range(6):
        for x in range(6):
            assert eval_real(5, i, x) == pytest.approx(eval_integer(5, i, x))
        assert eval_real(5, i, 2.5) == pytest.approx(eval_real_sum(5, i, 2.5), abs=1e-9)


@pytest.mark.parametrize(
    "n, t, expected",
    [
        (10, 1, 5.0),
        (9, 1, 4.5),
        (10, 2, (10 - sqrt(10)) / 2),
        (10, 3, (10 - sqrt(28)) / 2),
        (5, 1, 2.5),
        (5, 2, (5 - sqrt(5)) / 2),
    ],
)
def test_smallest_root(n, t, expected):
    assert smallest_root(n, t) == pytest.approx(expected, abs=1e-9)


def test_smallest_root_tracks_its_limit():
    assert abs(smallest_root(200, 40) / 200 - asymptotic_smallest_root(0.2)) < 0.05


def test_smallest_roots_decrease_with_degree():
    roots = [smallest_root(20, t) for t in range(1, 11)]
    assert roots == sorted(roots, reverse=True)


def test_smallest_root_range():
    with pytest.raises(DomainError):
        smallest_root(5, 0)


def test_asymptotic_smallest_root():
    assert asymptotic_smallest_root(0.0) == 0.5
    assert asymptotic_smallest_root(0.5) == 0.0
    assert asymptotic_smallest_root(0.1) == pytest.approx(0.2)


def test_ratio_estimate():
    n, t = 40, 4
    assert ratio_estimate(n, t, 0) == pytest.approx(1 - 2 * t / n)
    for x in range(1, 4):
        exact = eval_integer(n, t, x + 1) / eval_integer(n, t, x)
        assert ratio_estimate(n, t, x) == pytest.approx(exact, rel=0.05)
    with pytest.raises(DomainError):
        ratio_estimate(10, 5, 5)


def test_ratio_estimate_for_large_n():
    exact = eval_integer(200, 40, 11) / eval_integer(200, 40, 10)
    assert ratio_estimate(200, 40, 10) == pytest.approx(exact, rel=0.1)


def test_product_expansion():
    assert product_expansion(5, 1, 1) == (5, 0, 2, 0, 0, 0)
    assert product_expansion(4, 0, 3) == (0, 0, 0, 1, 0)


def test_alpha_coefficients():
    coefficients = alpha_coefficients(6, 3)
    assert coefficients.values[0] == 1
    assert coefficients.values[-1] == 0
    assert coefficients.evaluate(0) == a_polynomial(6, 3, 0) == 2**4
    for x in range(3, 7):
        assert a_polynomial(6, 3, x) == 0
    with pytest.raises(DomainError):
        alpha_coefficients(6, 8)


def test_a_polynomial_accepts_fractions():
    assert a_polynomial(4, 4, Fraction(2)) == Fraction(2) * (1 - Fraction(2, 4))


@pytest.mark.parametrize("n", [3, 6])
def test_binomial_sum_identity(n):
    for j in range(n + 1):
        for x in range(n + 1):
            lhs, rhs = binomial_sum_identity(n, j, x)
            assert lhs == rhs
