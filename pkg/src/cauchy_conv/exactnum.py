"""Exact scalars: reduced arbitrary-precision rationals and integer
combinatorial coefficients.

Every value downstream is a `fractions.Fraction`. It is reduced on
construction, keeps a positive denominator and represents zero as 0/1, so
equality of two values is equality of their canonical forms."""

from fractions import Fraction
from functools import reduce
import math
import numbers
import operator
import re
from typing import Any, Iterable

from .exceptions import CompositionError, DivisionByZeroError, ExactArithmeticError
from .models.common import Rational

# An optional minus sign, digits, and an optional "/digits" denominator.
RATIONAL_PATTERN = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$", re.ASCII)


def rat(numerator: Any, denominator: Any = 1) -> Rational:
    """Build a reduced rational from integers (or an existing rational).

    Text goes through parse_rational; floats and decimal strings are refused."""
    for part in (numerator, denominator):
        if isinstance(part, bool) or not isinstance(part, numbers.Rational):
            raise ExactArithmeticError(
                f"{numerator!r}/{denominator!r}: not an exact rational"
            )
    if denominator == 0:
        raise DivisionByZeroError(f"{numerator}/0")
    return Fraction(numerator, denominator)


def rat_add(a: Rational, b: Rational) -> Rational:
    return rat(a) + rat(b)


def rat_sub(a: Rational, b: Rational) -> Rational:
    return rat(a) - rat(b)


def rat_mul(a: Rational, b: Rational) -> Rational:
    return rat(a) * rat(b)


def rat_div(a: Rational, b: Rational) -> Rational:
    if b == 0:
        raise DivisionByZeroError(f"{render_rational(rat(a))} / 0")
    return rat(a) / rat(b)


def rat_neg(a: Rational) -> Rational:
    return -rat(a)


def rat_cmp(a: Rational, b: Rational) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (a > b) - (a < b)


def rat_prod(values: Iterable[Rational]) -> Rational:
    return reduce(operator.mul, values, Fraction(1))


def binomial(n: int, k: int) -> int:
    """C(n, k) over the integers; 0 when k is outside [0, n]."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (k_1! ... k_m!) for parts summing to n."""
    parts = tuple(parts)
    if any(k < 0 for k in parts):
        raise CompositionError(f"{parts} has a negative part")
    if sum(parts) != n:
        raise CompositionError(f"{parts} does not sum to {n}")
    # C(n, k_1) C(n - k_1, k_2) ...
    result, remaining = 1, n
    for k in parts:
        result *= math.comb(remaining, k)
        remaining -= k
    return result


def render_rational(value: Rational) -> str:
    """Canonical text: "p/q" with q > 0 and no spaces, or "p" when q = 1."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    """Inverse of render_rational; also accepts non-reduced "p/q"."""
    if not isinstance(text, str):
        raise TypeError(f"{text!r} is not a str")
    if not RATIONAL_PATTERN.fullmatch(text):
        raise ValueError(f"{text!r} is not a rational of the form p/q")
    numerator, _, denominator = text.partition("/")
    return rat(int(numerator), int(denominator or 1))
