"""
Downstream pathologies of the cover and the closed-form formulas for
purely inseparable covers and quasi-elliptic fibrations.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .cohomology import CurveBundle, curve_bundle
from .errors import (
    IdentityFailure,
    InvalidArgument,
    NonPositiveMultiple,
    UnsupportedCharacteristic,
)
from .params import ConstructionParams
from .picard import DivClassP, intersect_P, section_P

logger = logging.getLogger(__name__)

DISPLAYED = "displayed"
DERIVED_BY_TOOL = "derived-by-tool"

SECTION_E = "section E"


@dataclass(frozen=True)
class RelativeDualizingSummand:
    """Summand i of phi_*(omega_{X/C}^k)."""

    index: int
    bundle: CurveBundle
    provenance: str


@dataclass(frozen=True)
class NefFailureCertificate:
    """A quotient of phi_*(omega_{X/C}^k) with negative degree on the section."""

    k: int
    summand_index: int
    quotient_bundle: CurveBundle
    test_curve: str
    pairing_value: Fraction

    @property
    def holds(self) -> bool:
        return self.pairing_value < 0


@dataclass(frozen=True)
class KollarCertificate:
    """
    Failure of Kollar vanishing for phi_*omega_X (x) N.

    The i = 1 summand V (x) N^(p + l - pl) of phi_*omega_{X/C} surjects onto
    N^exponent, and exponent = -1 turns V (x) omega_C (x) N into a bundle
    with quotient omega_C. H^1 is right exact on a curve.
    """

    exponent: int
    quotient_chain: Tuple[str, ...]
    h1_lower_bound: int

    @property
    def holds(self) -> bool:
        return self.exponent == -1


def _check_multiple(k: int) -> None:
    if k < 1:
        raise NonPositiveMultiple(f"multiple k={k} must be >= 1")


def pushforward_relative_dualizing(k: int, params: ConstructionParams) -> List[RelativeDualizingSummand]:
    """
    phi_*(omega_{X/C}^k) = (+)_{i=1}^{l} Sym^(k(p-m-1) - (i-1)m)(E) (x) N^((i-1)p - k(pl-p-l)).

    omega_{X/C}^k is psi^*O_P(k(p - m - 1)E) (x) phi^*N^(-k(pl - p - l)); the
    projection formula against psi_*O_X = (+) M^i gives the summands. At
    k = 1 this is the displayed decomposition, for k > 1 the summands are
    marked derived-by-tool. Zero summands are dropped.
    """
    _check_multiple(k)
    p, l, m = params.p, params.l, params.m
    provenance = DISPLAYED if k == 1 else DERIVED_BY_TOOL
    summands = []
    for i in range(1, l + 1):
        sym_deg = k * (p - m - 1) - (i - 1) * m
        if sym_deg < 0:
            continue
        n_exp = (i - 1) * p - k * (p * l - p - l)
        summands.append(RelativeDualizingSummand(i, curve_bundle(sym_deg, False, n_exp, params), provenance))
    return summands


def relative_dualizing_rank(params: ConstructionParams) -> int:
    """Rank of phi_*omega_{X/C}; equals the arithmetic genus of a fiber."""
    return sum(s.bundle.rank for s in pushforward_relative_dualizing(1, params))


def nef_failure(params: ConstructionParams, k: int = 1) -> NefFailureCertificate:
    """
    Certify that phi_*(omega_{X/C}^k) is not nef.

    The i = 1 summand Sym^(k(p-m-1))(E) (x) N^(-k(pl-p-l)) is a quotient; on P
    it corresponds to W = O_P(k(p - m - 1)) (x) pi^*N^(-k(pl - p - l)) and
    (W.E) = -k deg N < 0.

    Raises:
        IdentityFailure: if the pairing differs from -k deg N
    """
    _check_multiple(k)
    p, l, m = params.p, params.l, params.m
    w = DivClassP(k * (p - m - 1), Fraction(-k * (p * l - p - l) * params.deg_N))
    pairing = intersect_P(w, section_P(), params)
    if pairing != -k * params.deg_N:
        raise IdentityFailure(f"(W.E) = {pairing}, expected {-k * params.deg_N} on {params}")

    quotient = pushforward_relative_dualizing(k, params)[0]
    logger.debug("nef failure on %s at k=%d: (W.E) = %s", params, k, pairing)
    return NefFailureCertificate(
        k=k,
        summand_index=quotient.index,
        quotient_bundle=quotient.bundle,
        test_curve=SECTION_E,
        pairing_value=pairing,
    )


def kollar_violation(params: ConstructionParams) -> KollarCertificate:
    """
    Certify h^1(C, phi_*omega_X (x) N) >= 1.

    Raises:
        IdentityFailure: if l(p - m - 1) + p + l - pl != -1
    """
    p, l, m = params.p, params.l, params.m
    exponent = l * (p - m - 1) + p + l - p * l
    if exponent != -1:
        raise IdentityFailure(f"Kollar exponent {exponent} != -1 on {params}")

    chain = (
        f"Sym^{p - m - 1}(E) (x) N^{p + l - p * l} ->> L^{p - m - 1} (x) N^{p + l - p * l} = N^{exponent}",
        "V (x) omega_C (x) N ->> omega_C",
        "h^1(C, phi_*omega_X (x) N) >= h^1(C, omega_C) = 1",
    )
    return KollarCertificate(exponent=exponent, quotient_chain=chain, h1_lower_bound=1)


# Purely inseparable covers and quasi-elliptic fibrations

def _check_cover(p: int, n: int) -> None:
    if p < 2:
        raise InvalidArgument(f"characteristic p={p} must be >= 2")
    if n < 1:
        raise InvalidArgument(f"cover exponent n={n} must be >= 1")


def insep_cover_euler(p: int, n: int, chi_X: Fraction, L2: Fraction, LK: Fraction) -> Fraction:
    """
    chi(O_Y) for a purely inseparable cover Y -> X of degree p^n.

    chi(O_Y) = q chi(O_X) + q(q - 1)((2q - 1)(L^2) - 3(L.K_X))/12 with q = p^n.
    No integrality is asserted; the result is an exact rational.
    """
    _check_cover(p, n)
    q = p ** n
    bracket = (2 * q - 1) * Fraction(L2) - 3 * Fraction(LK)
    return q * Fraction(chi_X) + Fraction(q * (q - 1), 12) * bracket


def shepherd_barron_ky_coeffs(p: int, n: int) -> Tuple[int, int]:
    """Coefficients of K_X and L in K_Y = phi^*(K_X + (1 - p^n)L)."""
    _check_cover(p, n)
    return (1, 1 - p ** n)


def quasi_elliptic_solutions(p: int, max_n: int, max_LF: int) -> List[Tuple[int, int]]:
    """
    Pairs (n, L.F) with 2 <= n <= max_n, 1 <= L.F <= max_LF and
    -2 <= (1 - p) n (L.F).

    Only the quasi-elliptic characteristics 2 and 3 are accepted. The full
    fibration argument around this inequality is not modelled.
    """
    if p not in (2, 3):
        raise UnsupportedCharacteristic(f"quasi-elliptic fibrations need p in (2, 3), got p={p}")
    if max_n < 1 or max_LF < 1:
        raise InvalidArgument(f"bounds must be >= 1, got max_n={max_n}, max_LF={max_LF}")

    return [
        (n, lf)
        for n in range(2, max_n + 1)
        for lf in range(1, max_LF + 1)
        if -2 <= (1 - p) * n * lf
    ]
