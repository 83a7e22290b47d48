"""Binomial convolution of truncated sequences.

Sequences with u_0 != 0 form an abelian group under

    (u x v)_n = sum_k C(n, k) u_k v_(n - k)

with identity e = (1, 0, 0, ...). Convolution mirrors the product of
exponential generating functions, and shifting a sequence mirrors
differentiating its generating function, so the series operations below are
computed on the same raw terms. Every result is truncated at the smallest
order among its operands; nothing is extrapolated."""

from fractions import Fraction
from functools import lru_cache
import math
from typing import Iterator, List, Sequence

from .exactnum import multinomial, rat_prod
from .exceptions import BoundError, NotInGroupError
from .models.common import Composition, Rational
from .models.sequences import CompositionList, EgfSequence


def _compositions(n: int, m: int) -> Iterator[Composition]:
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


@lru_cache(maxsize=256)
def compositions(n: int, m: int) -> CompositionList:
    """All m-tuples of nonnegative integers summing to n, lexicographically."""
    if n < 0:
        raise ValueError(f"{n} < 0")
    if m < 1:
        raise ValueError(f"{m} < 1")
    return CompositionList(n, m, tuple(_compositions(n, m)))


def composition_count(n: int, m: int) -> int:
    """C(n + m - 1, m - 1), without enumerating."""
    return math.comb(n + m - 1, m - 1)


def _check_unit(u: EgfSequence) -> None:
    if not u.is_unit():
        raise NotInGroupError(f"{u} has u_0 = 0 and is not invertible")


def _check_factors(us: Sequence[EgfSequence]) -> None:
    if not us:
        raise ValueError("at least one factor is required")


def _common_order(us: Sequence[EgfSequence]) -> int:
    return min(u.order for u in us)


def binomial_convolve(u: EgfSequence, v: EgfSequence) -> EgfSequence:
    order = min(u.order, v.order)
    return EgfSequence(
        tuple(
            sum(
                (math.comb(n, k) * u[k] * v[n - k] for k in range(n + 1)),
                Fraction(0),
            )
            for n in range(order + 1)
        )
    )


def convolve_identity(order: int) -> EgfSequence:
    if order < 0:
        raise ValueError(f"{order} < 0")
    return EgfSequence((Fraction(1),) + (Fraction(0),) * order)


def convolve_inverse(u: EgfSequence) -> EgfSequence:
    """The v with u x v = e up to the order of u:

    v_0 = 1 / u_0,  v_n = -(1 / u_0) sum_(k=1..n) C(n, k) u_k v_(n - k)
    """
    _check_unit(u)
    head = 1 / u[0]
    v: List[Rational] = [head]
    for n in range(1, u.order + 1):
        total = sum(
            (math.comb(n, k) * u[k] * v[n - k] for k in range(1, n + 1)),
            Fraction(0),
        )
        v.append(-head * total)
    return EgfSequence(tuple(v))


def shift(u: EgfSequence, l: int) -> EgfSequence:  # noqa: E741
    """u(l) = (u_l, u_(l+1), ..., u_N), truncated at order N - l."""
    if l < 0:
        raise ValueError(f"{l} < 0")
    if l > u.order:
        raise BoundError(f"shift {l} exceeds truncation order {u.order}")
    return EgfSequence(u.terms[l:])


def convolve_all(us: Sequence[EgfSequence]) -> EgfSequence:
    """u(1) x ... x u(m) by iterated pairwise convolution."""
    _check_factors(us)
    product = us[0]
    for u in us[1:]:
        product = binomial_convolve(product, u)
    return product


def convolve_power(u: EgfSequence, m: int) -> EgfSequence:
    """The m-fold binomial convolution of u with itself."""
    if m < 1:
        raise ValueError(f"{m} < 1")
    return convolve_all([u] * m)


def multinomial_expand_all(us: Sequence[EgfSequence], n: int) -> Rational:
    """Brute force over compositions j of n:

    sum (n; j_1, ..., j_m) u(1)_(j_1) ... u(m)_(j_m)
    """
    _check_factors(us)
    if n > _common_order(us):
        raise BoundError(f"{n} exceeds truncation order {_common_order(us)}")
    total = Fraction(0)
    for parts in compositions(n, len(us)):
        total += multinomial(n, parts) * rat_prod(u[j] for u, j in zip(us, parts))
    return total


def multinomial_expand(u: EgfSequence, m: int, n: int) -> Rational:
    if m < 1:
        raise ValueError(f"{m} < 1")
    return multinomial_expand_all([u] * m, n)


def leibniz_split_all(us: Sequence[EgfSequence], mu: int, n: int) -> Rational:
    """The double sum over compositions l of mu and k of n:

    sum_l (mu; l) sum_k (n; k) u(1)_(k_1 + l_1) ... u(m)_(k_m + l_m)
    """
    _check_factors(us)
    if mu < 0 or n < 0:
        raise ValueError(f"negative index in ({mu}, {n})")
    if mu + n > _common_order(us):
        raise BoundError(
            f"{mu} + {n} exceeds truncation order {_common_order(us)}"
        )

    m = len(us)
    inner = [(parts, multinomial(n, parts)) for parts in compositions(n, m)]
    total = Fraction(0)
    for shifts in compositions(mu, m):
        outer_weight = multinomial(mu, shifts)
        subtotal = Fraction(0)
        for parts, weight in inner:
            subtotal += weight * rat_prod(
                u[k + j] for u, k, j in zip(us, parts, shifts)
            )
        total += outer_weight * subtotal
    return total


def leibniz_split(u: EgfSequence, m: int, mu: int, n: int) -> Rational:
    if m < 1:
        raise ValueError(f"{m} < 1")
    return leibniz_split_all([u] * m, mu, n)


def leibniz_derivative(us: Sequence[EgfSequence], mu: int) -> EgfSequence:
    """The mu-th derivative of a product of generating functions, expanded by
    Leibniz's rule:

    sum_l (mu; l) u(1)(l_1) x ... x u(m)(l_m)
    """
    _check_factors(us)
    order = _common_order(us)
    if mu > order:
        raise BoundError(f"{mu} exceeds truncation order {order}")

    terms = [Fraction(0)] * (order - mu + 1)
    for shifts in compositions(mu, len(us)):
        weight = multinomial(mu, shifts)
        product = convolve_all(
            [shift(u.truncate(order), j) for u, j in zip(us, shifts)]
        )
        for i in range(len(terms)):
            terms[i] += weight * product[i]
    return EgfSequence(tuple(terms))


def series_product(u: EgfSequence, v: EgfSequence) -> EgfSequence:
    """Terms of G(u, z) G(v, z); identical to u x v."""
    return binomial_convolve(u, v)


def series_derivative(u: EgfSequence, l: int) -> EgfSequence:  # noqa: E741
    """Terms of the l-th derivative of G(u, z).

    Differentiates the ordinary coefficients u_n / n! one order at a time and
    converts back, so it shares no code with shift()."""
    if l < 0:
        raise ValueError(f"{l} < 0")
    if l > u.order:
        raise BoundError(f"derivative order {l} exceeds truncation order {u.order}")

    ordinary: List[Rational] = [
        t / math.factorial(n) for n, t in enumerate(u.terms)
    ]
    for _ in range(l):
        ordinary = [(n + 1) * a for n, a in enumerate(ordinary[1:])]
    return EgfSequence(tuple(a * math.factorial(n) for n, a in enumerate(ordinary)))


def series_reciprocal(u: EgfSequence) -> EgfSequence:
    """Terms of 1 / G(u, z)."""
    return convolve_inverse(u)


def series_log1p_over_z(order: int) -> EgfSequence:
    """Terms of log(1 + z) / z: b_n = (-1)**n n! / (n + 1)."""
    if order < 0:
        raise ValueError(f"{order} < 0")
    return EgfSequence(
        tuple(
            Fraction((-1) ** n * math.factorial(n), n + 1) for n in range(order + 1)
        )
    )
