from fractions import Fraction

import pytest

from src.conditions.formulas import parse_formula, substitution_gap
from src.utils.exceptions import DegenerateOrderError


def test_evaluate__polynomial() -> None:
    # Act
    value = parse_formula("n*(n - k - 2) + (k + 2)**2").evaluate(7, 1)

    # Assert
    assert value == 37


def test_evaluate__binomial() -> None:
    # Act
    value = parse_formula("binomial(n - k - 2, 2) + (k + 1)*(k + 2)").evaluate(16, 1)

    # Assert
    assert value == 84


def test_evaluate__rational_is_exact() -> None:
    # Act
    value = parse_formula("(n**2 - n)/2 - (n - 2)/(n - 1)*e").evaluate(4, 0, 3)

    # Assert
    assert value == Fraction(4)
    assert isinstance(value, Fraction)


def test_evaluate__fractional_coefficients() -> None:
    # Act
    value = parse_formula("n**4/4 - 3*k/2").evaluate(3, 1)

    # Assert
    assert value == Fraction(75, 4)


def test_evaluate__zero_denominator() -> None:
    # Act / Assert
    with pytest.raises(DegenerateOrderError):
        parse_formula("1/(n - 1)").evaluate(1)


def test_parse_formula__is_cached() -> None:
    # Act / Assert
    assert parse_formula("n + k") is parse_formula("n + k")


def test_substitution_gap__exact() -> None:
    # Act
    gap = substitution_gap("2*n + 2*k", "2*e", "n + k")

    # Assert
    assert gap == 0
