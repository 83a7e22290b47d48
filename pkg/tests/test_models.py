from fractions import Fraction

import pytest

from cauchy_conv.exceptions import BoundError
from cauchy_conv.models.common import Natural, Positive, Seed
from cauchy_conv.models.polynomial import Polynomial
from cauchy_conv.models.reports import IdentityReport
from cauchy_conv.models.sequences import EgfSequence
from cauchy_conv.models.spline import PiecewisePoly


def test_natural_and_positive():
    assert Natural(0).value == 0
    assert Natural("7").value == 7
    assert Positive(3) + 1 == Positive(4)
    assert Natural(2) < Natural(5)
    with pytest.raises(ValueError):
        Natural(-1)
    with pytest.raises(ValueError):
        Positive(0)
    with pytest.raises(TypeError):
        Natural(True)
    with pytest.raises(TypeError):
        Positive(1.5)


def test_seed_is_64_bit_unsigned():
    assert Seed(2 ** 64 - 1).value == 2 ** 64 - 1
    with pytest.raises(ValueError):
        Seed(2 ** 64)
    with pytest.raises(ValueError):
        Seed(-3)


def test_polynomial_is_trimmed():
    assert Polynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert Polynomial((0, 0)).is_zero()
    assert Polynomial().degree == -1
    assert Polynomial((1, 2, 0)) == Polynomial((1, 2))


def test_polynomial_arithmetic():
    x = Polynomial.monomial(1)
    p = x * x - x
    assert p.coefficients == (0, -1, 1)
    assert p(3) == 6
    assert (p + 1)(Fraction(1, 2)) == Fraction(3, 4)
    assert (2 * p).coefficients == (0, -2, 2)
    assert (p - p).is_zero()
    assert p.derivative().coefficients == (-1, 2)


def test_shifted_power():
    # (x - 2)^3 = x^3 - 6x^2 + 12x - 8
    assert Polynomial.shifted_power(2, 3).coefficients == (-8, 12, -6, 1)
    assert Polynomial.shifted_power(5, 0).coefficients == (1,)


def test_polynomial_integration():
    x_squared = Polynomial.monomial(2)
    assert x_squared.antiderivative().coefficients == (0, 0, 0, Fraction(1, 3))
    assert x_squared.integrate(0, 1) == Fraction(1, 3)
    assert x_squared.integrate(1, 2) == Fraction(7, 3)
    assert Polynomial().integrate(0, 5) == 0


def test_egf_sequence():
    u = EgfSequence.of([1, Fraction(1, 2), 0])
    assert u.order == 2
    assert u[1] == Fraction(1, 2)
    assert u.is_unit()
    assert not u.is_nowhere_zero()
    assert u.truncate(1) == EgfSequence.of([1, Fraction(1, 2)])
    with pytest.raises(IndexError):
        u[3]
    with pytest.raises(ValueError):
        EgfSequence(())


def test_piecewise_poly_piece_index_uses_left_piece_at_knots():
    rho = PiecewisePoly(3, (Polynomial(), Polynomial(), Polynomial()))
    assert rho.piece_index(Fraction(0)) == 0
    assert rho.piece_index(Fraction(1)) == 0
    assert rho.piece_index(Fraction(3, 2)) == 1
    assert rho.piece_index(Fraction(2)) == 1
    assert rho.piece_index(Fraction(3)) == 2
    with pytest.raises(ValueError):
        PiecewisePoly(2, (Polynomial(),))


def test_identity_report_all_equal():
    sixth = Fraction(1, 6)
    same = IdentityReport.of(2, 0, 2, sixth, sixth, sixth, sixth)
    assert same.all_equal
    assert same.mu_zero_case
    assert not same.double_sum_skipped

    skipped = IdentityReport.of(2, 1, 2, None, Fraction(1), Fraction(1), Fraction(1))
    assert skipped.all_equal
    assert skipped.double_sum_skipped
    assert not skipped.mu_zero_case

    different = IdentityReport.of(2, 0, 2, sixth, sixth, sixth, Fraction(1, 3))
    assert not different.all_equal


def test_stirling_table_rejects_rows_beyond_its_bound():
    from cauchy_conv.combinatorics import build_stirling_table

    table = build_stirling_table(3)
    assert table.first(3, 3) == 1
    assert table.first(3, 5) == 0
    with pytest.raises(BoundError):
        table.first(4, 1)
    with pytest.raises(BoundError):
        table.second(4, 1)
