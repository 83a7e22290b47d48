from fractions import Fraction
import math

import pytest

from cauchy_conv.combinatorics import (
    build_stirling_table,
    cauchy_number,
    cauchy_number_via_integral,
    cauchy_number_via_reciprocal,
    cauchy_numbers,
    cauchy_sequence,
    descending_factorial_at,
    descending_factorial_poly,
)
from cauchy_conv.exceptions import BoundError, ExactArithmeticError
from cauchy_conv.verify import verify_cauchy

CAUCHY_NUMBERS = [
    Fraction(1),
    Fraction(1, 2),
    Fraction(-1, 6),
    Fraction(1, 4),
    Fraction(-19, 30),
]


def test_stirling_examples():
    table = build_stirling_table(6)
    assert table.first(3, 1) == 2
    assert table.first(3, 2) == -3
    assert table.first(4, 1) == -6
    assert table.second(4, 2) == 7
    assert table.second(5, 3) == 25
    assert table.row("first", 4) == (0, -6, 11, -6, 1)
    assert table.row("second", 4) == (0, 1, 7, 6, 1)


def test_stirling_boundaries():
    table = build_stirling_table(12)
    assert table.first(0, 0) == 1
    assert table.second(0, 0) == 1
    for n in range(1, 13):
        assert table.first(n, 0) == 0
        assert table.second(n, 0) == 0
        assert table.first(n, n) == 1
        assert table.second(n, n) == 1
        # s(n, 1) = (-1)**(n-1) (n-1)!, S(n, 1) = 1
        assert table.first(n, 1) == (-1) ** (n - 1) * math.factorial(n - 1)
        assert table.second(n, 1) == 1


def test_stirling_rows_sum_to_known_values():
    table = build_stirling_table(10)
    for n in range(2, 11):
        # s(n, .) sums to (1)_n = 0; |s(n, .)| sums to n!
        assert sum(table.row("first", n)) == 0
        assert sum(abs(s) for s in table.row("first", n)) == math.factorial(n)


def test_stirling_triangles_are_inverse():
    table = build_stirling_table(14)
    table.validate()
    for n in range(15):
        for k in range(n + 1):
            total = sum(table.first(n, j) * table.second(j, k) for j in range(n + 1))
            assert total == (1 if n == k else 0)


def test_validate_detects_a_corrupted_entry():
    table = build_stirling_table(6).with_entry("second", 4, 2, 8)
    assert table.second(4, 2) == 8
    with pytest.raises(ExactArithmeticError):
        table.validate()


def test_with_entry_leaves_the_original_alone():
    table = build_stirling_table(5)
    corrupted = table.with_entry("first", 3, 2, 3)
    assert table.first(3, 2) == -3
    assert corrupted.first(3, 2) == 3
    assert corrupted.second_kind == table.second_kind


def test_descending_factorial_poly_matches_direct_product():
    table = build_stirling_table(8)
    points = [Fraction(-3, 2), Fraction(0), Fraction(1, 3), Fraction(5), Fraction(7, 2)]
    for n in range(9):
        poly = descending_factorial_poly(n, table)
        assert poly.degree == n
        for x in points:
            assert poly(x) == descending_factorial_at(x, n)


def test_second_kind_expands_powers_into_descending_factorials():
    table = build_stirling_table(12)
    for n in range(13):
        for x in range(13):
            expansion = sum(
                table.second(n, k) * descending_factorial_at(Fraction(x), k)
                for k in range(n + 1)
            )
            assert expansion == x ** n


def test_descending_factorial_at():
    assert descending_factorial_at(Fraction(5), 0) == 1
    assert descending_factorial_at(Fraction(5), 3) == 60
    assert descending_factorial_at(Fraction(2), 3) == 0
    assert descending_factorial_at(Fraction(1, 2), 2) == Fraction(-1, 4)


def test_cauchy_numbers():
    table = build_stirling_table(4)
    assert cauchy_numbers(4, table) == CAUCHY_NUMBERS
    assert cauchy_number(4, table) == Fraction(-19, 30)


def test_cauchy_sequence_is_the_reciprocal_of_log1p_over_z():
    table = build_stirling_table(20)
    c = cauchy_sequence(20, table)
    assert c.order == 20
    assert list(c)[:5] == CAUCHY_NUMBERS
    for n in range(21):
        assert c[n] == cauchy_number_via_reciprocal(n)
        assert c[n] == cauchy_number_via_integral(n, table)


def test_verify_cauchy():
    checks = verify_cauchy(20, build_stirling_table(20))
    assert len(checks) == 21
    assert all(check.equal for check in checks)
    assert checks[4].stirling_sum == Fraction(-19, 30)


def test_cauchy_numbers_need_a_large_enough_table():
    table = build_stirling_table(3)
    with pytest.raises(BoundError):
        cauchy_number(4, table)
    with pytest.raises(ValueError):
        build_stirling_table(-1)
