"""
Symbolic proofs of the closed-form identities behind the numeric checks.

Each proof works over free symbols with deg L = l*deg N, m = (p + 1)/l and
2g - 2 = p*l*deg N substituted, and reports whether lhs - rhs simplifies
to zero.
"""

import logging
from dataclasses import dataclass
from typing import List

import sympy as sp

logger = logging.getLogger(__name__)

p, l, N, a, b, k, n, j = sp.symbols("p l deg_N a b k n j", integer=True, positive=True)
m = (p + 1) / l
g = p * l * N / 2 + 1


@dataclass(frozen=True)
class IdentityProof:
    """Outcome of simplifying lhs - rhs."""

    name: str
    lhs: str
    rhs: str
    holds: bool


def _prove(name: str, lhs: sp.Expr, rhs: sp.Expr) -> IdentityProof:
    holds = sp.simplify(sp.expand(lhs - rhs)) == 0
    logger.debug("identity %s: %s", name, "holds" if holds else "FAILS")
    return IdentityProof(name, str(lhs), str(rhs), bool(holds))


def nef_pairing() -> IdentityProof:
    """(W.E) = (p - m - 1) deg L + (p + l - pl) deg N = -deg N."""
    return _prove("nef_pairing", (p - m - 1) * l * N + (p + l - p * l) * N, -N)


def kollar_exponent() -> IdentityProof:
    """l(p - m - 1) + p + l - pl = -1."""
    return _prove("kollar_exponent", l * (p - m - 1) + p + l - p * l, sp.Integer(-1))


def nonvan1_witness() -> IdentityProof:
    """l((l - n)m - 2) = (l - n)p - n - l."""
    return _prove("nonvan1_witness", l * ((l - n) * m - 2), (l - n) * p - n - l)


def nonvan2_index() -> IdentityProof:
    """At i = l - b the N-exponent ip - b - l equals l(im - 2)."""
    i = l - b
    return _prove("nonvan2_index", i * p - b - l, l * (i * m - 2))


def remark_twist_coefficients() -> List[IdentityProof]:
    """
    Z_{a,b}^(p-1) (x) omega_X^(-1) with K_X = (p - m - 1)l Et + (K_C - (pl - p - l)N).
    """
    et = (p - 1) * a - (p - m - 1) * l
    base = (p - 1) * b * N - ((2 * g - 2) - (p * l - p - l) * N)
    return [
        _prove("remark_et_coefficient", et, a * p - a - p * l + p + l + 1),
        _prove("remark_base_degree", base, (b * p - b + p * l - p - l) * N - (2 * g - 2)),
    ]


def never_both_positive() -> IdentityProof:
    """
    et + base/deg N = 1 - l - (p - 1)(l - a - b).

    Inside the rectangle b <= l - a the right side is at most 1 - l < 0, so
    the two coefficients cannot both be positive.
    """
    et = a * p - a - p * l + p + l + 1
    base = (b * p - b + p * l - p - l) * N - (2 * g - 2)
    return _prove("never_both_positive", et + base / N, 1 - l - (p - 1) * (l - a - b))


def thickening_difference() -> List[IdentityProof]:
    """
    chi(O_{k Et}) as the sum of its graded pieces, and its gap to chi(O_{kE}).
    """
    cover = k * (1 - g) - k * (k - 1) * (g - 1) / (p * l)
    base = k * (1 - g) - k * (k - 1) * (g - 1) / p
    graded = sp.summation(-j * N + 1 - g, (j, 0, k - 1))
    return [
        _prove("thickening_graded_sum", graded, cover),
        _prove("thickening_difference", cover - base, k * (k - 1) * N * (l - 1) / 2),
    ]


def all_proofs() -> List[IdentityProof]:
    """Every identity, in a fixed order."""
    return [
        nef_pairing(),
        kollar_exponent(),
        nonvan1_witness(),
        nonvan2_index(),
        *remark_twist_coefficients(),
        never_both_positive(),
        *thickening_difference(),
    ]
