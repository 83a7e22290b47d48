from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Any, Iterable, Tuple, Union

from .common import Rational

Scalar = Union[int, Rational]


def _trim(coefficients: Iterable[Any]) -> Tuple[Rational, ...]:
    trimmed = [Fraction(c) for c in coefficients]
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return tuple(trimmed)


# __eq__ and __hash__ autogenerated by dataclass; coefficients are trimmed so
# that equal polynomials compare equal.
@dataclass(frozen=True)
class Polynomial:
    """A dense polynomial in one variable with exact rational coefficients.

    coefficients[i] is the coefficient of x**i. The zero polynomial has no
    coefficients at all; otherwise the last coefficient is nonzero."""

    coefficients: Tuple[Rational, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, value: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError(f"{power} < 0")
        return cls((0,) * power + (value,))

    @classmethod
    def shifted_power(cls, shift: Scalar, power: int) -> "Polynomial":
        """(x - shift)**power expanded by the binomial theorem."""
        if power < 0:
            raise ValueError(f"{power} < 0")
        shift = Fraction(shift)
        return cls(
            math.comb(power, i) * (-shift) ** (power - i) for i in range(power + 1)
        )

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, power: int) -> Rational:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        size = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Rational:
        # Horner's rule.
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def antiderivative(self) -> "Polynomial":
        """The antiderivative that vanishes at 0."""
        return Polynomial(
            (Fraction(0),)
            + tuple(c / (i + 1) for i, c in enumerate(self.coefficients))
        )

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coefficients) if i > 0)

    def integrate(self, lower: Scalar, upper: Scalar) -> Rational:
        primitive = self.antiderivative()
        return primitive(upper) - primitive(lower)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return " + ".join(terms)
