"""
Tests for the non-nef and Kollar certificates and the closed-form formulas.
"""

from fractions import Fraction

import pytest

from nonvanishing.errors import InvalidArgument, NonPositiveMultiple, UnsupportedCharacteristic
from nonvanishing.params import fiber_genus
from nonvanishing.pathology import (
    DERIVED_BY_TOOL,
    DISPLAYED,
    SECTION_E,
    insep_cover_euler,
    kollar_violation,
    nef_failure,
    pushforward_relative_dualizing,
    quasi_elliptic_solutions,
    relative_dualizing_rank,
    shepherd_barron_ky_coeffs,
)


class TestRelativeDualizing:
    """Test phi_*(omega_{X/C}^k)."""

    def test_flagship_k1(self, flagship):
        """Sym^(4-i)(E) (x) N^(5i-24) for i = 1..4; i = 5, 6 vanish."""
        summands = pushforward_relative_dualizing(1, flagship)
        assert [(s.index, s.bundle.sym_deg, s.bundle.n_exp) for s in summands] == [
            (1, 3, -19), (2, 2, -14), (3, 1, -9), (4, 0, -4),
        ]
        assert all(s.provenance == DISPLAYED for s in summands)
        assert not any(s.bundle.dualized for s in summands)

    def test_char3_k1(self, char3):
        """Sym^1 (x) N^-5 and Sym^0 (x) N^-2."""
        summands = pushforward_relative_dualizing(1, char3)
        assert [(s.index, s.bundle.sym_deg, s.bundle.n_exp) for s in summands] == [(1, 1, -5), (2, 0, -2)]

    def test_flagship_k2(self, flagship):
        """k = 2 keeps all six summands and is marked as derived."""
        summands = pushforward_relative_dualizing(2, flagship)
        assert [s.bundle.sym_deg for s in summands] == [6, 5, 4, 3, 2, 1]
        assert summands[0].bundle.n_exp == -38
        assert all(s.provenance == DERIVED_BY_TOOL for s in summands)

    def test_retained_count(self, small_sweep):
        """One summand for each i with p - im - 1 >= 0."""
        for params in small_sweep:
            expected = sum(1 for i in range(1, params.l + 1) if params.p - i * params.m - 1 >= 0)
            assert len(pushforward_relative_dualizing(1, params)) == expected

    def test_rank_is_fiber_genus(self, small_sweep):
        """Total rank (l - 1)(p - 1)/2."""
        for params in small_sweep:
            assert relative_dualizing_rank(params) == fiber_genus(params)

    def test_rejects_non_positive(self, flagship):
        """k must be positive."""
        with pytest.raises(NonPositiveMultiple):
            pushforward_relative_dualizing(0, flagship)


class TestNefFailure:
    """Test the non-nef certificate."""

    def test_flagship(self, flagship):
        """(W.E) = 3 * 6 - 19 = -1."""
        cert = nef_failure(flagship, 1)
        assert cert.pairing_value == -1
        assert cert.summand_index == 1
        assert (cert.quotient_bundle.sym_deg, cert.quotient_bundle.n_exp) == (3, -19)
        assert cert.test_curve == SECTION_E
        assert cert.holds

    def test_char3(self, char3, char3_double):
        """-deg N in both cases."""
        assert nef_failure(char3, 1).pairing_value == -1
        assert nef_failure(char3_double, 1).pairing_value == -2

    def test_higher_powers(self, flagship):
        """(W_k.E) = -k deg N."""
        for k in range(1, 6):
            assert nef_failure(flagship, k).pairing_value == -k

    def test_all_params(self, full_sweep):
        """-deg N on every enumerated triple."""
        for params in full_sweep:
            assert nef_failure(params, 1).pairing_value == -params.deg_N


class TestKollar:
    """Test the Kollar vanishing violation."""

    def test_flagship(self, flagship):
        """6 * 3 + 5 + 6 - 30 = -1."""
        cert = kollar_violation(flagship)
        assert cert.exponent == -1
        assert cert.h1_lower_bound == 1
        assert cert.holds
        assert cert.quotient_chain[0].endswith("N^-1")

    def test_all_params(self, full_sweep):
        """The exponent is -1 whenever ml = p + 1."""
        for params in full_sweep:
            assert kollar_violation(params).exponent == -1


class TestClosedForms:
    """Test the inseparable-cover and quasi-elliptic formulas."""

    @pytest.mark.parametrize("args, expected", [
        ((2, 1, 1, 1, 1), 2),
        ((3, 1, 2, 2, 0), 11),
        ((5, 2, 0, 0, 0), 0),
    ])
    def test_insep_cover_euler(self, args, expected):
        """Spot values of chi(O_Y)."""
        p, n, chi_x, l2, lk = args
        assert insep_cover_euler(p, n, Fraction(chi_x), Fraction(l2), Fraction(lk)) == expected

    def test_insep_cover_euler_is_exact(self):
        """Non-integral inputs give exact rationals."""
        value = insep_cover_euler(2, 1, Fraction(0), Fraction(1, 3), Fraction(0))
        assert value == Fraction(1, 6)
        assert isinstance(value, Fraction)

    @pytest.mark.parametrize("p, n, expected", [(2, 3, (1, -7)), (5, 1, (1, -4))])
    def test_shepherd_barron(self, p, n, expected):
        """K_Y = phi^*(K_X + (1 - p^n)L)."""
        assert shepherd_barron_ky_coeffs(p, n) == expected

    def test_shepherd_barron_rejects_n0(self):
        """n = 0 is not a cover."""
        with pytest.raises(InvalidArgument):
            shepherd_barron_ky_coeffs(2, 0)

    def test_quasi_elliptic(self):
        """No solution in characteristic 3, only (2, 1) in characteristic 2."""
        assert quasi_elliptic_solutions(3, 10, 10) == []
        assert quasi_elliptic_solutions(2, 10, 10) == [(2, 1)]

    def test_quasi_elliptic_rejects_p5(self):
        """Only p = 2, 3 have quasi-elliptic fibrations."""
        with pytest.raises(UnsupportedCharacteristic):
            quasi_elliptic_solutions(5, 10, 10)
