"""
Tests for divisor classes, intersection numbers and Euler characteristics.
"""

import logging
from fractions import Fraction

import pytest

from nonvanishing.errors import InvalidArgument, NonIntegralResult, NonPositiveCoefficient
from nonvanishing.picard import (
    DivClassP,
    DivClassX,
    adjunction_twist,
    as_integer,
    canonical_P,
    canonical_self_intersection,
    canonical_X,
    curve_class,
    euler_char_P,
    euler_char_thickening,
    euler_char_X,
    fiber_arithmetic_genus,
    fiber_canonical_degree,
    fiber_P,
    fiber_singularity,
    fiber_X,
    hurwitz_canonical_X,
    intersect_P,
    intersect_X,
    is_ample_criterion,
    m_class_P,
    m_power_check,
    pullback,
    ramification_class_P,
    section_P,
    section_X,
    structure_euler_char_X,
    z_ab_class,
)


class TestIntersections:
    """Test the intersection forms on P and X."""

    def test_section_self_intersection_on_P(self, flagship):
        """(E.E) = deg L."""
        assert intersect_P(section_P(), section_P(), flagship) == 6

    def test_section_self_intersection_on_X(self, flagship, char3_double):
        """(Et.Et) = (2g - 2)/(pl) = deg N."""
        assert intersect_X(section_X(), section_X(), flagship) == 1
        assert intersect_X(section_X(), section_X(), char3_double) == Fraction(12, 6)

    def test_fiber_pairings(self, flagship):
        """A fiber meets the section once and itself not at all."""
        assert intersect_P(section_P(), fiber_P(), flagship) == 1
        assert intersect_P(fiber_P(), fiber_P(), flagship) == 0
        assert intersect_X(section_X(), fiber_X(), flagship) == 1

    @pytest.mark.parametrize("a, b", [
        (DivClassP(2, Fraction(3)), DivClassP(-1, Fraction(5))),
        (DivClassP(1, Fraction(0)), DivClassP(1, Fraction(0))),
        (DivClassP(0, Fraction(1)), DivClassP(3, Fraction(-7))),
        (DivClassP(-2, Fraction(1, 3)), DivClassP(5, Fraction(-2, 5))),
        (DivClassP(4, Fraction(-24)), DivClassP(0, Fraction(0))),
        (DivClassP(-5, Fraction(25)), DivClassP(-5, Fraction(25))),
    ])
    def test_pullback_multiplies_degree(self, flagship, char3, char3_double, a, b):
        """psi^* multiplies intersection numbers by l."""
        for params in (flagship, char3, char3_double):
            pulled = intersect_X(pullback(a, params), pullback(b, params), params)
            assert pulled == params.l * intersect_P(a, b, params)

    def test_m_dot_section(self, flagship, char3_double):
        """(M.E) = -deg N."""
        assert intersect_P(m_class_P(flagship), section_P(), flagship) == -1
        assert intersect_P(m_class_P(char3_double), section_P(), char3_double) == -2


class TestCanonical:
    """Test canonical classes."""

    def test_canonical_P(self, flagship):
        """K_P = -2E + (K_C + L)."""
        assert canonical_P(flagship) == DivClassP(-2, Fraction(36))

    def test_canonical_X_flagship(self, flagship):
        """K_X = 18 Et + phi^*(K_C - 19N)."""
        k_x = canonical_X(flagship)
        assert (k_x.et_coeff, k_x.base_deg) == (18, 11)
        assert str(k_x.base) == "-19N + K_C"

    def test_canonical_X_char3(self, char3, char3_double):
        """m = 2 kills the Et part."""
        assert (canonical_X(char3).et_coeff, canonical_X(char3).base_deg) == (4, 7)
        assert (canonical_X(char3_double).et_coeff, canonical_X(char3_double).base_deg) == (0, 10)

    def test_hurwitz_route_agrees(self, small_sweep):
        """psi^*(K_P - (l - 1)M) is K_X numerically."""
        for params in small_sweep:
            assert hurwitz_canonical_X(params) == canonical_X(params)

    def test_canonical_self_intersection(self, flagship):
        """(18 Et + 11 F)^2 = 324 + 396."""
        assert canonical_self_intersection(flagship) == 720

    def test_noether_formula(self, small_sweep):
        """12 chi(O_X) = K^2 + e(X), every fiber being homeomorphic to P^1."""
        for params in small_sweep:
            euler_number = 2 * (2 - 2 * params.g)
            assert 12 * structure_euler_char_X(params) == canonical_self_intersection(params) + euler_number


class TestRamification:
    """Test the branch data of the cover."""

    def test_ramification_class(self, flagship):
        """C'' = O_P(p) (x) L^-p."""
        assert ramification_class_P(flagship) == DivClassP(5, Fraction(-30))

    def test_m_power(self, small_sweep):
        """M^-l = O_P(E + C'') with E and C'' disjoint."""
        for params in small_sweep:
            assert m_power_check(params)

    def test_fiber_invariants(self, flagship):
        """Fibers are cusps x^6 = y^5 of arithmetic genus 10."""
        assert fiber_canonical_degree(flagship) == 18
        assert fiber_arithmetic_genus(flagship) == 10
        assert fiber_singularity(flagship) == (6, 5)


class TestTwists:
    """Test Z_{a,b} and the adjunction twist."""

    def test_z_ab_class(self, flagship):
        """Z_{a,b} = a Et + b N."""
        z = z_ab_class(6, 3, flagship)
        assert (z.et_coeff, z.base_deg) == (6, 3)

    @pytest.mark.parametrize("a, b", [(0, 1), (1, 0), (-2, 3)])
    def test_z_ab_rejects_non_positive(self, flagship, a, b):
        """Both coefficients must be positive."""
        with pytest.raises(NonPositiveCoefficient):
            z_ab_class(a, b, flagship)

    def test_flagship_twist(self, flagship):
        """Z_{6,3}^4 (x) omega_X^-1 = 6 Et + (31N - K_C), base degree 1."""
        twist = adjunction_twist(6, 3, 4, flagship)
        assert (twist.et_coeff, twist.base_deg) == (6, 1)
        assert str(twist.base) == "31N - K_C"
        assert is_ample_criterion(twist, flagship)

    def test_twist_coefficients_at_p_minus_1(self, small_sweep):
        """At k = p - 1: Et coefficient ap - a - pl + p + l + 1."""
        for params in small_sweep:
            p, l = params.p, params.l
            for a, b in [(1, 1), (2, 3), (l, 1)]:
                twist = adjunction_twist(a, b, p - 1, params)
                assert twist.et_coeff == a * p - a - p * l + p + l + 1
                expected_base = (b * p - b + p * l - p - l) * params.deg_N - params.canonical_degree
                assert twist.base_deg == expected_base

    def test_twist_rejects_zero_power(self, flagship):
        """k must be positive."""
        with pytest.raises(InvalidArgument):
            adjunction_twist(1, 1, 0, flagship)

    def test_ampleness_needs_positive_square(self, flagship):
        """A fiber has square zero and fails the check."""
        assert not is_ample_criterion(fiber_X(), flagship)
        assert is_ample_criterion(section_X(), flagship)

    def test_z_ab_ample_on_grid(self, flagship):
        """Z_(a,b) passes the check for 1 <= a, b <= 20."""
        for a in range(1, 21):
            for b in range(1, 21):
                assert is_ample_criterion(z_ab_class(a, b, flagship), flagship), (a, b)

    def test_twist_is_logged(self, flagship, caplog):
        """The twist class is logged at debug level."""
        with caplog.at_level(logging.DEBUG, logger="nonvanishing.picard"):
            adjunction_twist(6, 3, 4, flagship)
        assert "Z_(6,3)^4" in caplog.text


class TestEulerCharacteristics:
    """Test Riemann-Roch on P and X."""

    def test_thickening_flagship(self, flagship):
        """chi(O_2Et) = -31 and chi(O_2E) = -36."""
        assert euler_char_thickening(2, True, flagship) == -31
        assert euler_char_thickening(2, False, flagship) == -36
        assert euler_char_thickening(1, True, flagship) == euler_char_thickening(1, False, flagship) == -15

    def test_thickening_difference(self, char3):
        """3 * 2 * 6 * (1/3 - 1/12) = 9."""
        difference = euler_char_thickening(3, True, char3) - euler_char_thickening(3, False, char3)
        assert difference == 9

    def test_thickening_integral_up_to_10000(self, full_sweep):
        """chi(O_kEt) and chi(O_kE) are integers for k <= 10^4 (strided)."""
        ks = list(range(1, 10001, 97)) + [9999, 10000]
        for params in full_sweep:
            for k in ks:
                assert isinstance(euler_char_thickening(k, True, params), int)
                assert isinstance(euler_char_thickening(k, False, params), int)

    def test_thickening_rejects_zero(self, flagship):
        """k must be positive."""
        with pytest.raises(InvalidArgument):
            euler_char_thickening(0, True, flagship)

    def test_euler_char_P(self, flagship):
        """chi(O_P) = 1 - g and chi(O_P(E)) = -24."""
        assert euler_char_P(DivClassP(0, Fraction(0)), flagship) == -15
        assert euler_char_P(section_P(), flagship) == -24

    def test_structure_sheaf(self, flagship, char3):
        """chi(O_X) as the sum of chi(M^i)."""
        assert structure_euler_char_X(flagship) == 55
        assert structure_euler_char_X(char3) == 4

    def test_euler_char_X(self, flagship):
        """chi(O_X(-Et)) = 55 + 15."""
        assert euler_char_X(section_X().scaled(-1), flagship) == 70
        assert euler_char_X(DivClassX(Fraction(0), Fraction(0)), flagship) == 55


class TestHelpers:
    """Test the small value types."""

    def test_as_integer(self):
        """Integral Fractions pass, others raise."""
        assert as_integer(Fraction(6, 3), "x") == 2
        with pytest.raises(NonIntegralResult):
            as_integer(Fraction(1, 2), "x")

    def test_curve_class_arithmetic(self, flagship):
        """Degrees add with the classes."""
        c = curve_class(3, 1, flagship) - curve_class(1, 0, flagship)
        assert c.degree == 2 + 30
        assert str(c) == "2N + K_C"
        assert str(curve_class(0, 0, flagship)) == "0"
