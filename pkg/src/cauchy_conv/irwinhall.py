"""The density of a sum of m independent uniforms on [0, 1] as an exact
piecewise polynomial, and its moments."""

from fractions import Fraction
from functools import lru_cache
import logging
import math
from typing import List

from .combinatorics import descending_factorial_poly
from .exactnum import binomial, render_rational
from .exceptions import (
    BoundError,
    ExactArithmeticError,
    IdentityViolation,
    SupportError,
)
from .models.common import Rational
from .models.polynomial import Polynomial
from .models.sequences import EgfSequence
from .models.spline import PiecewisePoly
from .models.stirling import StirlingTable

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def irwin_hall_density(m: int) -> PiecewisePoly:
    """rho_m(theta) = 1/(m-1)! sum_(k=0..m-1) C(m, k) (-1)**k (theta - k)_+**(m-1)

    The positive part is handled by restriction: the k-th term contributes to
    every piece j >= k and to no piece left of its knot."""
    if m < 1:
        raise ValueError(f"{m} < 1")

    scale = math.factorial(m - 1)
    pieces: List[Polynomial] = [Polynomial()] * m
    for k in range(m):
        term = Polynomial.shifted_power(k, m - 1) * Fraction(
            (-1) ** k * binomial(m, k), scale
        )
        for j in range(k, m):
            pieces[j] = pieces[j] + term
    return PiecewisePoly(m, tuple(pieces))


def _check_support(rho: PiecewisePoly, theta: Rational) -> None:
    if not rho.contains(theta):
        lower, upper = rho.support
        raise SupportError(
            f"{render_rational(theta)} is outside the support [{lower}, {upper}]"
        )


def density_eval(rho: PiecewisePoly, theta: Rational) -> Rational:
    """Exact rho_m(theta) for 0 <= theta <= m."""
    theta = Fraction(theta)
    _check_support(rho, theta)
    return rho.pieces[rho.piece_index(theta)](theta)


def density_cdf(rho: PiecewisePoly, theta: Rational) -> Rational:
    """Exact P(S_m <= theta) for 0 <= theta <= m."""
    theta = Fraction(theta)
    _check_support(rho, theta)
    total = Fraction(0)
    for lower, upper, piece in rho.intervals():
        if theta <= lower:
            break
        total += piece.integrate(lower, min(theta, upper))
    return total


def integrate_poly_against_density(p: Polynomial, rho: PiecewisePoly) -> Rational:
    """The integral of p(theta) rho_m(theta) over [0, m], piece by piece."""
    return sum(
        (
            (p * piece).integrate(lower, upper)
            for lower, upper, piece in rho.intervals()
        ),
        Fraction(0),
    )


def factorial_moment(m: int, p: int, table: StirlingTable) -> Rational:
    """E (S_m)_p, integrating the expanded descending factorial against rho_m."""
    if p > table.bound:
        raise BoundError(f"{p} exceeds Stirling table bound {table.bound}")
    return integrate_poly_against_density(
        descending_factorial_poly(p, table), irwin_hall_density(m)
    )


def factorial_moment_sequence(m: int, order: int, table: StirlingTable) -> EgfSequence:
    """(E (S_m)_0, ..., E (S_m)_order): the coefficients of E (1 + z)**S_m."""
    return EgfSequence(tuple(factorial_moment(m, p, table) for p in range(order + 1)))


def raw_moment(m: int, k: int) -> Rational:
    """E S_m**k by piecewise integration."""
    if k < 0:
        raise ValueError(f"{k} < 0")
    return integrate_poly_against_density(Polynomial.monomial(k), irwin_hall_density(m))


def raw_moment_via_stirling(
    m: int, k: int, table: StirlingTable, check: bool = True
) -> Rational:
    """E S_m**k = S(m + k, m) / C(m + k, m).

    With check, the value is compared against raw_moment() and a mismatch
    raises IdentityViolation."""
    if m < 1:
        raise ValueError(f"{m} < 1")
    if k < 0:
        raise ValueError(f"{k} < 0")
    if m + k > table.bound:
        raise BoundError(f"{m} + {k} exceeds Stirling table bound {table.bound}")

    value = Fraction(table.second(m + k, m), binomial(m + k, m))
    if check:
        integral = raw_moment(m, k)
        if value != integral:
            logger.warning("moment mismatch at m=%d k=%d", m, k)
            raise IdentityViolation(
                f"S({m + k}, {m}) / C({m + k}, {m}) = {render_rational(value)} "
                f"!= {render_rational(integral)}"
            )
    return value


def stirling_second_via_moments(n: int, m: int) -> int:
    """S(n, m) = C(n, m) E S_m**(n - m), from the density alone."""
    if n < 0 or m < 0:
        raise ValueError(f"negative index in ({n}, {m})")
    if m > n:
        return 0
    if m == 0:
        # S_0 = 0, so E S_0**n is 1 for n = 0 and 0 otherwise.
        return 1 if n == 0 else 0

    value = binomial(n, m) * raw_moment(m, n - m)
    if value.denominator != 1:
        raise ExactArithmeticError(f"S({n}, {m}) came out as {value}")
    return value.numerator
