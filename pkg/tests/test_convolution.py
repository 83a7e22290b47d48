from fractions import Fraction
import random

import pytest

from cauchy_conv.combinatorics import build_stirling_table, cauchy_sequence
from cauchy_conv.convolution import (
    binomial_convolve,
    composition_count,
    compositions,
    convolve_all,
    convolve_identity,
    convolve_inverse,
    convolve_power,
    leibniz_derivative,
    leibniz_split,
    leibniz_split_all,
    multinomial_expand,
    multinomial_expand_all,
    series_derivative,
    series_log1p_over_z,
    series_product,
    series_reciprocal,
    shift,
)
from cauchy_conv.exceptions import BoundError, NotInGroupError
from cauchy_conv.models.sequences import EgfSequence

ORDER = 8


def random_unit(rng, order=ORDER):
    head = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    tail = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(order)]
    return EgfSequence.of([head] + tail)


def random_units(count, seed=1729):
    rng = random.Random(seed)
    return [random_unit(rng) for _ in range(count)]


def exp_sequence(a, order=ORDER):
    # e^(a z) has terms a^n.
    return EgfSequence.of(Fraction(a) ** n for n in range(order + 1))


@pytest.fixture(scope="module")
def cauchy():
    return cauchy_sequence(12, build_stirling_table(12))


def test_compositions_are_lexicographic():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert list(compositions(3, 1)) == [(3,)]
    items = list(compositions(4, 3))
    assert items == sorted(items)
    assert all(sum(parts) == 4 for parts in items)


def test_composition_count():
    for n in range(7):
        for m in range(1, 5):
            assert len(compositions(n, m)) == composition_count(n, m)
    assert composition_count(4, 4) == 35
    assert composition_count(6, 4) == 84


def test_group_laws_on_random_sequences():
    units = random_units(100)
    e = convolve_identity(ORDER)
    for u, v, w in zip(units, units[1:] + units[:1], units[2:] + units[:2]):
        assert binomial_convolve(u, e) == u
        assert binomial_convolve(u, v) == binomial_convolve(v, u)
        assert binomial_convolve(binomial_convolve(u, v), w) == binomial_convolve(
            u, binomial_convolve(v, w)
        )
        assert binomial_convolve(u, convolve_inverse(u)) == e


def test_convolution_of_exponentials_adds_rates():
    for a, b in [(1, 2), (Fraction(1, 2), Fraction(-1, 3)), (0, 5)]:
        assert binomial_convolve(exp_sequence(a), exp_sequence(b)) == exp_sequence(
            a + b
        )


def test_inverse_requires_a_unit():
    with pytest.raises(NotInGroupError):
        convolve_inverse(EgfSequence.of([0, 1, 2]))


def test_truncation_order_is_the_smallest():
    u = EgfSequence.of([1, 2, 3, 4])
    v = EgfSequence.of([1, 1])
    assert binomial_convolve(u, v).order == 1


def test_shift():
    u = EgfSequence.of([1, 2, 3, 4])
    assert shift(u, 0) == u
    assert shift(u, 2) == EgfSequence.of([3, 4])
    with pytest.raises(BoundError):
        shift(u, 4)


def test_shift_is_the_series_derivative():
    for u in random_units(20, seed=7):
        for j in range(ORDER + 1):
            assert shift(u, j) == series_derivative(u, j)


def test_series_product_and_reciprocal():
    for u, v in zip(random_units(10, seed=3), random_units(10, seed=4)):
        assert series_product(u, v) == binomial_convolve(u, v)
        assert series_product(u, series_reciprocal(u)) == convolve_identity(ORDER)


def test_log1p_over_z_terms():
    b = series_log1p_over_z(3)
    assert list(b) == [1, Fraction(-1, 2), Fraction(2, 3), Fraction(-3, 2)]


def test_multinomial_expansion_matches_iterated_convolution():
    units = random_units(12, seed=11)
    for m in range(1, 5):
        us = units[:m]
        product = convolve_all(us)
        for n in range(6):
            assert multinomial_expand_all(us, n) == product[n]


def test_multinomial_expansion_of_the_cauchy_sequence(cauchy):
    for m in range(1, 5):
        power = convolve_power(cauchy, m)
        for n in range(7):
            assert multinomial_expand(cauchy, m, n) == power[n]


def test_leibniz_split_matches_single_sum(cauchy):
    for m in range(1, 5):
        power = convolve_power(cauchy, m)
        for mu in range(5):
            for n in range(7):
                assert leibniz_split(cauchy, m, mu, n) == power[mu + n]


def test_leibniz_split_on_distinct_factors():
    us = random_units(3, seed=5)
    product = convolve_all(us)
    for mu in range(3):
        for n in range(4):
            assert leibniz_split_all(us, mu, n) == product[mu + n]


def test_leibniz_derivative_is_the_shifted_product():
    us = random_units(3, seed=13)
    product = convolve_all(us)
    for mu in range(ORDER + 1):
        assert leibniz_derivative(us, mu) == shift(product, mu)


def test_leibniz_split_bounds(cauchy):
    with pytest.raises(BoundError):
        leibniz_split(cauchy, 2, 7, 6)
    with pytest.raises(ValueError):
        leibniz_split(cauchy, 0, 1, 1)


def test_cauchy_power_small_values(cauchy):
    assert convolve_power(cauchy, 2)[2] == Fraction(1, 6)
    assert leibniz_split(cauchy, 2, 1, 0) == 1
    assert convolve_power(cauchy, 1)[4] == Fraction(-19, 30)
