"""
Tests for the symbolic identity proofs.
"""

import pytest

from nonvanishing import symbolic


class TestSymbolic:
    """Every closed-form identity simplifies to zero."""

    @pytest.mark.parametrize("proof", [
        symbolic.nef_pairing,
        symbolic.kollar_exponent,
        symbolic.nonvan1_witness,
        symbolic.nonvan2_index,
        symbolic.never_both_positive,
    ])
    def test_single_identities(self, proof):
        """Each proof holds."""
        result = proof()
        assert result.holds, f"{result.name}: {result.lhs} != {result.rhs}"

    def test_grouped_identities(self):
        """Remark coefficients and thickening formulas."""
        for result in symbolic.remark_twist_coefficients() + symbolic.thickening_difference():
            assert result.holds, result.name

    def test_all_proofs(self):
        """Names are unique and every proof holds."""
        proofs = symbolic.all_proofs()
        names = [proof.name for proof in proofs]
        assert len(names) == len(set(names)) == 9
        assert all(proof.holds for proof in proofs)

    def test_records_expressions(self):
        """lhs and rhs are kept as strings."""
        result = symbolic.kollar_exponent()
        assert result.rhs == "-1"
        assert isinstance(result.lhs, str)
