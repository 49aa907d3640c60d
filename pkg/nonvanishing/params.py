"""
Construction parameters for the cyclic cover over a Tango curve.

A parameter triple (p, g, l) fixes the characteristic p, the genus g of the
Tango curve C and the degree l of the cyclic cover X -> P. Every derived
scalar used elsewhere (deg L, deg N, m) is computed here once.
"""

import logging
from dataclasses import dataclass
from typing import List

from sympy import divisors, isprime, primerange

from .errors import (
    CharNotDividingCanonicalDegree,
    CoverDegreeInvalid,
    GenusTooSmall,
    NotPrime,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionParams:
    """
    Validated (p, g, l) with derived invariants.

    The cover degree l divides both p + 1 and deg L = (2g - 2)/p, so that
    N^l = L has integral degree and m = (p + 1)/l is an integer. The twist
    exponent written d in the direct-image lemma is the same number as m.
    """

    p: int
    g: int
    l: int
    deg_L: int
    deg_N: int
    m: int

    @property
    def canonical_degree(self) -> int:
        """deg K_C = 2g - 2."""
        return 2 * self.g - 2

    def as_tuple(self):
        return (self.p, self.g, self.l)

    def __str__(self) -> str:
        return f"(p={self.p}, g={self.g}, l={self.l})"


def validate(p: int, g: int, l: int) -> ConstructionParams:
    """
    Check the divisibility constraints and derive the scalar invariants.

    Args:
        p: Characteristic, must be prime
        g: Genus of C, at least 2
        l: Cyclic cover degree, at least 2

    Returns:
        ConstructionParams: Parameters with deg_L, deg_N and m filled in

    Raises:
        NotPrime, GenusTooSmall, CharNotDividingCanonicalDegree,
        CoverDegreeInvalid
    """
    if not isprime(p):
        raise NotPrime(f"p={p} is not prime")
    if g < 2:
        raise GenusTooSmall(f"g={g} < 2")
    canonical_degree = 2 * g - 2
    if canonical_degree % p != 0:
        raise CharNotDividingCanonicalDegree(
            f"p={p} does not divide 2g-2={canonical_degree}"
        )
    deg_L = canonical_degree // p
    if l < 2:
        raise CoverDegreeInvalid(f"l={l} < 2")
    if deg_L % l != 0:
        raise CoverDegreeInvalid(f"l={l} does not divide deg L={deg_L}")
    if (p + 1) % l != 0:
        raise CoverDegreeInvalid(f"l={l} does not divide p+1={p + 1}")

    return ConstructionParams(
        p=p, g=g, l=l, deg_L=deg_L, deg_N=deg_L // l, m=(p + 1) // l
    )


def enumerate_params(max_p: int, max_g: int) -> List[ConstructionParams]:
    """
    List every valid triple with p <= max_p and g <= max_g.

    Args:
        max_p: Largest characteristic to consider
        max_g: Largest genus to consider

    Returns:
        List[ConstructionParams]: Sorted by (p, g, l); may be empty
    """
    found = []
    for p in primerange(2, max_p + 1):
        for g in range(2, max_g + 1):
            if (2 * g - 2) % p != 0:
                continue
            deg_L = (2 * g - 2) // p
            # l ranges over common divisors of deg L and p + 1
            for l in divisors(deg_L):
                if l >= 2 and (p + 1) % l == 0:
                    found.append(validate(int(p), g, int(l)))

    found.sort(key=ConstructionParams.as_tuple)
    logger.debug("enumerated %d parameter triples (p<=%d, g<=%d)", len(found), max_p, max_g)
    return found


def fiber_genus(params: ConstructionParams) -> int:
    """Geometric genus (l - 1)(p - 1)/2 of a closed fiber of X -> C."""
    return (params.l - 1) * (params.p - 1) // 2


def omega_x_is_ample(params: ConstructionParams) -> bool:
    """Sufficient condition for ampleness of the canonical sheaf of X."""
    return params.p >= 5 or (params.p, params.l) == (3, 4)
