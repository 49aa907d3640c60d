"""
Pushing summands down to the curve C and certifying nonvanishing.

Along pi: P -> C a summand O_P(t) (x) pi^*N^e gives
    pi_*     Sym^t(E) (x) N^e                      for t >= 0
    R^1pi_*  Sym^(-t-2)(E)^v (x) N^(e - l)          for t <= -2
and zero otherwise (det E = L = N^l). Since phi_* Z^(-n) = 0 for n >= 1,
the Leray sequence identifies H^1(X, Z^(-n)) with H^0(C, R^1phi_* Z^(-n)),
and a nonzero section of one summand certifies nonvanishing.

Zero bundles are dropped from every list.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import (
    DegenerateSummand,
    IdentityFailure,
    LerayObstruction,
    NonPositiveMultiple,
    OutOfProvenRange,
)
from .params import ConstructionParams
from .picard import DivClassX, adjunction_twist, is_ample_criterion
from .pushforward import (
    Decomposition,
    PSummand,
    pushforward_erroneous,
    pushforward_negative,
)

logger = logging.getLogger(__name__)

EXACT_MATCH = "exact-match"
RR_POSITIVITY = "rr-positivity"

PROVEN = "proven"
BEYOND_RANGE = "beyond Theorem range"


@dataclass(frozen=True)
class CurveBundle:
    """Sym^a(E) or its dual, twisted by N^e, with rank and degree on C."""

    sym_deg: int
    dualized: bool
    n_exp: int
    rank: int
    degree: int

    def euler_char(self, g: int) -> int:
        """Riemann-Roch on C."""
        return self.degree + self.rank * (1 - g)

    def __str__(self) -> str:
        dual = "^v" if self.dualized else ""
        return f"Sym^{self.sym_deg}(E){dual} (x) N^{self.n_exp}"


def curve_bundle(sym_deg: int, dualized: bool, n_exp: int, params: ConstructionParams) -> CurveBundle:
    """Build a CurveBundle, filling rank and degree from the parameters."""
    rank = sym_deg + 1
    sym_degree = sym_deg * (sym_deg + 1) // 2 * params.deg_L
    degree = (-sym_degree if dualized else sym_degree) + rank * n_exp * params.deg_N
    return CurveBundle(sym_deg, dualized, n_exp, rank, degree)


@dataclass(frozen=True)
class IndexedBundle:
    """A bundle on C together with the summand index i it came from."""

    index: int
    bundle: CurveBundle


@dataclass(frozen=True)
class IdentityRecord:
    """An exact integer relation `lhs relation rhs` certifying a section."""

    statement: str
    lhs: int
    rhs: int
    relation: str = "="

    @property
    def holds(self) -> bool:
        if self.relation == "=":
            return self.lhs == self.rhs
        return self.lhs > self.rhs


@dataclass(frozen=True)
class Witness:
    """A certified nonzero section of one summand of R^1phi_*."""

    index: int
    bundle: CurveBundle
    identity: IdentityRecord
    h_lower_bound: int
    rule: str
    scope: str = PROVEN


# Pushforwards along pi

def pi_lower(s: PSummand, params: ConstructionParams) -> Optional[CurveBundle]:
    """pi_* of O_P(t) (x) pi^*N^e, or None when it vanishes."""
    if s.op_deg < 0:
        return None
    return curve_bundle(s.op_deg, False, s.n_exp, params)


def r1_pi_lower(s: PSummand, params: ConstructionParams) -> Optional[CurveBundle]:
    """R^1pi_* of O_P(t) (x) pi^*N^e, or None when it vanishes."""
    if s.op_deg > -2:
        return None
    return curve_bundle(-s.op_deg - 2, True, s.n_exp - params.l, params)


def _z_negative(n: int, params: ConstructionParams) -> Decomposition:
    """psi_* Z^(-n) = psi_* O_X(-n Et) (x) N^(-n)."""
    if n < 1:
        raise NonPositiveMultiple(f"power n={n} must be >= 1")
    return pushforward_negative(n, params).twisted(-n)


def phi_lower_z_neg(n: int, params: ConstructionParams) -> List[CurveBundle]:
    """phi_* Z^(-n); empty for every n >= 1."""
    bundles = (pi_lower(s, params) for s in _z_negative(n, params).summands)
    return [b for b in bundles if b is not None]


def r1_lower(d: Decomposition, params: ConstructionParams) -> List[IndexedBundle]:
    """R^1pi_* applied summand by summand, zero pieces dropped."""
    found = []
    for index, summand in enumerate(d.summands):
        bundle = r1_pi_lower(summand, params)
        if bundle is not None:
            found.append(IndexedBundle(index, bundle))
    return found


def r1_phi_lower_z_neg(n: int, params: ConstructionParams) -> List[IndexedBundle]:
    """R^1phi_* Z^(-n) through the corrected pushforward."""
    return r1_lower(_z_negative(n, params), params)


def directimage_display(n: int, params: ConstructionParams) -> List[IndexedBundle]:
    """
    The case-split closed form for R^1pi_*(psi_* Z^(-n)), evaluated literally.

    For n <= l:
        i = 1..n-1:   Sym^(id-1)(E)^v (x) N^(ip-n-l)
        i = n..l-1:   Sym^(id-2)(E)^v (x) N^(ip-n-l)
    For n > l, with n = ql + r:
        i = 0..r-1:   Sym^(id+q-1)(E)^v (x) N^(ip-n-l)
        i = r..l-1:   Sym^(id+q-2)(E)^v (x) N^(ip-n-l)
    Pieces with negative symmetric degree are zero and dropped.
    """
    if n < 1:
        raise NonPositiveMultiple(f"power n={n} must be >= 1")
    p, l, d = params.p, params.l, params.m

    if n <= l:
        blocks = [(range(1, n), -1), (range(n, l), -2)]
    else:
        q, r = divmod(n, l)
        blocks = [(range(0, r), q - 1), (range(r, l), q - 2)]

    found = []
    for indices, shift in blocks:
        for i in indices:
            sym_deg = i * d + shift
            if sym_deg >= 0:
                found.append(IndexedBundle(i, curve_bundle(sym_deg, True, i * p - n - l, params)))
    return found


def leray_h1(n: int, params: ConstructionParams) -> List[IndexedBundle]:
    """
    Bundles whose global sections compute H^1(X, Z^(-n)).

    Raises:
        LerayObstruction: if phi_* Z^(-n) is nonzero
    """
    direct = phi_lower_z_neg(n, params)
    if direct:
        raise LerayObstruction(f"phi_* Z^-{n} is nonzero on {params}: {[str(b) for b in direct]}")
    return r1_phi_lower_z_neg(n, params)


# Sections

def has_section(b: CurveBundle, params: ConstructionParams, index: int = 0) -> Optional[Witness]:
    """
    Sufficient conditions for H^0(C, b) != 0.

    exact-match: Sym^a(E)^v (x) N^(la) contains O_C, dual to the quotient
    Sym^a(E) -> L^a. rr-positivity: chi(b) > 0 forces h^0 >= chi(b).
    """
    if (b.dualized or b.sym_deg == 0) and b.n_exp == params.l * b.sym_deg:
        identity = IdentityRecord("l * sym_deg = n_exp", params.l * b.sym_deg, b.n_exp)
        return Witness(index, b, identity, 1, EXACT_MATCH)

    chi = b.euler_char(params.g)
    if chi > 0:
        identity = IdentityRecord("deg + rank * (1 - g) > 0", chi, 0, ">")
        return Witness(index, b, identity, chi, RR_POSITIVITY)
    return None


def scan_witnesses(
    bundles: List[IndexedBundle], params: ConstructionParams, scope: str = PROVEN
) -> List[Witness]:
    """Test every bundle for a section; returns all witnesses found."""
    witnesses = []
    for entry in bundles:
        witness = has_section(entry.bundle, params, entry.index)
        if witness is not None:
            witnesses.append(
                Witness(witness.index, witness.bundle, witness.identity,
                        witness.h_lower_bound, witness.rule, scope)
            )
    return witnesses


def _find_index(bundles: List[IndexedBundle], index: int) -> Optional[CurveBundle]:
    for entry in bundles:
        if entry.index == index:
            return entry.bundle
    return None


# Theorems

def theorem_nonvan1(n: int, params: ConstructionParams) -> Witness:
    """
    H^1(X, Z^(-n)) != 0 for 1 <= n <= floor(l/2).

    The witness sits at index i = l - n, where
    l((l - n)m - 2) = (l - n)p - n - l makes the summand an exact match.

    Raises:
        OutOfProvenRange: if n > floor(l/2)
    """
    if n < 1:
        raise NonPositiveMultiple(f"power n={n} must be >= 1")
    p, l, m = params.p, params.l, params.m
    if n > l // 2:
        raise OutOfProvenRange(f"n={n} exceeds floor(l/2)={l // 2} on {params}")

    index = l - n
    bundle = _find_index(leray_h1(n, params), index)
    identity = IdentityRecord(
        "l((l - n)m - 2) = (l - n)p - n - l",
        l * ((l - n) * m - 2),
        (l - n) * p - n - l,
    )
    if bundle is None or not identity.holds or bundle.n_exp != l * bundle.sym_deg:
        raise IdentityFailure(f"no exact-match summand at index {index} for n={n} on {params}")

    logger.debug("nonvan1 witness n=%d on %s: %s", n, params, bundle)
    return Witness(index, bundle, identity, 1, EXACT_MATCH)


def in_proven_rectangle(a: int, b: int, params: ConstructionParams) -> bool:
    return 1 <= a <= params.l - 1 and 1 <= b <= params.l - a


def proven_pairs(params: ConstructionParams) -> List[Tuple[int, int]]:
    """All (a, b) with 1 <= a <= l - 1 and 1 <= b <= l - a, sorted."""
    l = params.l
    return [(a, b) for a in range(1, l) for b in range(1, l - a + 1)]


def nonvan2_designated_summand(a: int, b: int, params: ConstructionParams) -> Tuple[int, int, int]:
    """
    Index, symmetric degree and N-exponent of the designated witness summand.

    With a < l there is no carry (q = 0, r = a) and i = l - b >= a lies in the
    second block, giving Sym^(im - 2)(E)^v (x) N^(ip - b - l). The exponent
    equals l times the symmetric degree exactly when i = l - b.
    """
    index = params.l - b
    return index, index * params.m - 2, index * params.p - b - params.l


def theorem_nonvan2(a: int, b: int, params: ConstructionParams) -> Witness:
    """
    H^1(X, Z_{a,b}^(-1)) != 0 for a <= l - 1 and b <= l - a.

    Raises:
        OutOfProvenRange: if (a, b) lies outside the rectangle
        DegenerateSummand: if the designated summand is zero (m = 1, b = l - 1)
    """
    if not in_proven_rectangle(a, b, params):
        raise OutOfProvenRange(f"(a, b)=({a}, {b}) outside the proven range on {params}")

    index, sym_deg, n_exp = nonvan2_designated_summand(a, b, params)
    bundles = r1_lower(pushforward_negative(a, params).twisted(-b), params)
    bundle = _find_index(bundles, index)
    if bundle is None:
        raise DegenerateSummand(
            f"summand {index} for (a, b)=({a}, {b}) on {params} is R^1pi_* O_P(-1) = 0"
        )

    identity = IdentityRecord("l * sym_deg = n_exp", params.l * sym_deg, n_exp)
    if (bundle.sym_deg, bundle.n_exp) != (sym_deg, n_exp) or not identity.holds:
        raise IdentityFailure(f"summand {index} for (a, b)=({a}, {b}) on {params} is {bundle}")
    return Witness(index, bundle, identity, 1, EXACT_MATCH)


def beyond_range_witnesses(params: ConstructionParams, max_n: int) -> List[Tuple[str, Tuple[int, ...], List[Witness]]]:
    """
    Candidate witnesses outside the proven ranges.

    Scans Z^(-n) for floor(l/2) < n <= max_n and Z_{a,b}^(-1) for
    1 <= a, b <= max_n outside the rectangle. Nothing here is a theorem.

    Returns:
        List of (kind, arguments, witnesses) with kind "nonvan1" or "nonvan2"
    """
    findings = []
    for n in range(params.l // 2 + 1, max_n + 1):
        witnesses = scan_witnesses(leray_h1(n, params), params, BEYOND_RANGE)
        if witnesses:
            findings.append(("nonvan1", (n,), witnesses))

    for a in range(1, max_n + 1):
        for b in range(1, max_n + 1):
            if in_proven_rectangle(a, b, params):
                continue
            bundles = r1_lower(pushforward_negative(a, params).twisted(-b), params)
            witnesses = scan_witnesses(bundles, params, BEYOND_RANGE)
            if witnesses:
                findings.append(("nonvan2", (a, b), witnesses))

    logger.debug("beyond-range scan on %s: %d findings", params, len(findings))
    return findings


# Regularity contradiction

@dataclass(frozen=True)
class ContradictionReport:
    """
    Outcome of testing (a, b) against the regularity statement.

    A contradiction is flagged when Z_{a,b}^k (x) omega_X^(-1) passes the
    ampleness check while the erroneous pushforward yields a nonvanishing
    witness: X would be regular, yet it dominates a ruled surface over a
    curve of genus g by a cover of degree prime to p, so q(X) >= g > 0.
    """

    params: ConstructionParams
    a: int
    b: int
    k: int
    twist: DivClassX
    twist_ample: bool
    erroneous_witnesses: Tuple[Witness, ...]
    corrected_witnesses: Tuple[Witness, ...]
    remark_coefficients: Tuple[int, int]
    never_both_positive: bool
    rectangle_violations: Tuple[Tuple[int, int], ...]

    @property
    def contradiction(self) -> bool:
        return self.twist_ample and bool(self.erroneous_witnesses)


def remark_coefficients(a: int, b: int, params: ConstructionParams) -> Tuple[int, int]:
    """
    Et coefficient and base degree of Z_{a,b}^(p-1) (x) omega_X^(-1).

    Returns (ap - a - pl + p + l + 1, deg((bp - b + pl - p - l)N - K_C)).
    """
    p, l = params.p, params.l
    et = a * p - a - p * l + p + l + 1
    base_deg = (b * p - b + p * l - p - l) * params.deg_N - params.canonical_degree
    return et, base_deg


def regularity_contradiction_demo(
    params: ConstructionParams, a: int, b: int, k: Optional[int] = None
) -> ContradictionReport:
    """
    Reproduce the contradiction the erroneous formula leads to, and check
    that the corrected theorems stay compatible with regularity.

    Args:
        params: Construction parameters
        a, b: Exponents of Z_{a,b}
        k: Power of Z_{a,b} in the twist; defaults to p - 1
    """
    k = params.p - 1 if k is None else k
    twist = adjunction_twist(a, b, k, params)

    erroneous = r1_lower(pushforward_erroneous(a, params).twisted(-b), params)
    corrected = r1_lower(pushforward_negative(a, params).twisted(-b), params)

    violations = []
    for a_, b_ in proven_pairs(params):
        et, base_deg = remark_coefficients(a_, b_, params)
        if et > 0 and base_deg > 0:
            violations.append((a_, b_))

    return ContradictionReport(
        params=params,
        a=a,
        b=b,
        k=k,
        twist=twist,
        twist_ample=is_ample_criterion(twist, params),
        erroneous_witnesses=tuple(scan_witnesses(erroneous, params)),
        corrected_witnesses=tuple(scan_witnesses(corrected, params)),
        remark_coefficients=remark_coefficients(a, b, params),
        never_both_positive=not violations,
        rectangle_violations=tuple(violations),
    )
