"""Stirling triangles, descending factorials and Cauchy numbers."""

from fractions import Fraction
import logging
from typing import List

from .convolution import convolve_inverse, series_log1p_over_z
from .exceptions import BoundError
from .models.common import Rational, Rationals
from .models.polynomial import Polynomial
from .models.sequences import EgfSequence
from .models.stirling import StirlingTable

logger = logging.getLogger(__name__)


def build_stirling_table(bound: int) -> StirlingTable:
    """Fill both triangles up to row `bound` with the integer recurrences

        s(n + 1, k) = s(n, k - 1) - n * s(n, k)
        S(n + 1, k) = S(n, k - 1) + k * S(n, k)
    """
    if bound < 0:
        raise ValueError(f"{bound} < 0")

    first: List[List[int]] = [[1]]
    second: List[List[int]] = [[1]]
    for n in range(bound):
        prev_s, prev_S = first[n], second[n]
        row_s, row_S = [0] * (n + 2), [0] * (n + 2)
        for k in range(1, n + 2):
            below_s = prev_s[k] if k <= n else 0
            below_S = prev_S[k] if k <= n else 0
            row_s[k] = prev_s[k - 1] - n * below_s
            row_S[k] = prev_S[k - 1] + k * below_S
        first.append(row_s)
        second.append(row_S)

    logger.debug("built Stirling table up to row %d", bound)
    return StirlingTable(
        bound,
        tuple(tuple(row) for row in first),
        tuple(tuple(row) for row in second),
    )


def _check_bound(n: int, table: StirlingTable) -> None:
    if n < 0:
        raise ValueError(f"{n} < 0")
    if n > table.bound:
        raise BoundError(f"{n} exceeds Stirling table bound {table.bound}")


def descending_factorial_poly(n: int, table: StirlingTable) -> Polynomial:
    """(x)_n = x (x - 1) ... (x - n + 1) in powers of x; the coefficient of
    x**k is s(n, k)."""
    _check_bound(n, table)
    return Polynomial(table.first_kind[n])


def descending_factorial_at(x: Rational, n: int) -> Rational:
    """(x)_n by direct product; (x)_0 = 1."""
    if n < 0:
        raise ValueError(f"{n} < 0")
    value = Fraction(1)
    for j in range(n):
        value *= x - j
    return value


def cauchy_number(n: int, table: StirlingTable) -> Rational:
    """c_n = sum_k s(n, k) / (k + 1), the integral of (theta)_n over [0, 1]
    taken term by term."""
    _check_bound(n, table)
    return sum(
        (Fraction(s, k + 1) for k, s in enumerate(table.first_kind[n])),
        Fraction(0),
    )


def cauchy_numbers(n_max: int, table: StirlingTable) -> Rationals:
    return [cauchy_number(n, table) for n in range(n_max + 1)]


def cauchy_sequence(order: int, table: StirlingTable) -> EgfSequence:
    """(c_0, ..., c_order), the coefficients of z / log(1 + z)."""
    return EgfSequence(tuple(cauchy_numbers(order, table)))


def cauchy_number_via_integral(n: int, table: StirlingTable) -> Rational:
    """c_n as the exact antiderivative of the expanded (theta)_n on [0, 1]."""
    return descending_factorial_poly(n, table).integrate(0, 1)


def cauchy_number_via_reciprocal(n: int) -> Rational:
    """c_n as the n-th term of the inverse of log(1 + z) / z; no Stirling
    numbers involved."""
    return convolve_inverse(series_log1p_over_z(n))[n]
