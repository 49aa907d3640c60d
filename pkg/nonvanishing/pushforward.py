"""
Direct-sum decompositions of psi-pushforwards along the cyclic cover.

Every summand is a line bundle O_P(t) (x) pi^*N^e, encoded as a PSummand
(t, e). With M = O_P(-m) (x) pi^*N^p, the twist M^i(-jE) becomes
(-(i*m + j), i*p).

Three decompositions are provided:
    corrected   psi_* O_X(-k Et), multiplicities spread over the l summands
    erroneous   the refuted formula O_P(-kE) + M + ... + M^(l-1)
    thickening  psi_* O_{k Et}, as k graded line bundles on E = C
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

from .errors import NoContradiction, NonPositiveMultiple, RankMismatch
from .params import ConstructionParams
from .picard import (
    euler_char_P,
    euler_char_thickening,
    euler_char_X,
    intersect_P,
    section_P,
    section_X,
    structure_euler_char_X,
    summand_class_P,
)

logger = logging.getLogger(__name__)

CORRECTED = "corrected"
ERRONEOUS = "erroneous"
THICKENING = "thickening"


@dataclass(frozen=True)
class PSummand:
    """The line bundle O_P(op_deg) (x) pi^*N^(n_exp)."""

    op_deg: int
    n_exp: int

    def twisted(self, e: int) -> "PSummand":
        """Tensor with pi^*N^e."""
        return PSummand(self.op_deg, self.n_exp + e)

    def as_pair(self) -> Tuple[int, int]:
        return (self.op_deg, self.n_exp)


@dataclass(frozen=True)
class Decomposition:
    """
    Ordered summands of a pushforward with one label per summand.

    For the thickening the summands are line bundles restricted to the
    section E (`on_section` is True) and are the graded pieces of the
    filtration by powers of the ideal of E.
    """

    summands: Tuple[PSummand, ...]
    provenance: str
    labels: Tuple[str, ...]
    on_section: bool = False

    @property
    def rank(self) -> int:
        return len(self.summands)

    def pairs(self) -> List[Tuple[int, int]]:
        return [s.as_pair() for s in self.summands]

    def twisted(self, e: int) -> "Decomposition":
        """Tensor every summand with pi^*N^e."""
        return Decomposition(
            tuple(s.twisted(e) for s in self.summands),
            self.provenance,
            tuple(f"{label} (x) N^{e}" for label in self.labels),
            self.on_section,
        )


def _m_power(i: int, j: int, params: ConstructionParams) -> PSummand:
    """M^i(-jE)."""
    return PSummand(-(i * params.m + j), i * params.p)


def _check_multiple(k: int) -> None:
    if k < 1:
        raise NonPositiveMultiple(f"multiple k={k} must be >= 1")


def pushforward_negative(k: int, params: ConstructionParams) -> Decomposition:
    """
    psi_* O_X(-k Et) = (+)_{i<r} M^i(-(q+1)E) (+) (+)_{r<=i<l} M^i(-qE).

    Here q = floor(k/l) and r = k - q*l.
    """
    _check_multiple(k)
    q, r = divmod(k, params.l)
    summands, labels = [], []
    for i in range(params.l):
        j = q + 1 if i < r else q
        summands.append(_m_power(i, j, params))
        labels.append(f"M^{i}(-{j}E)")

    logger.debug("corrected pushforward k=%d on %s: q=%d r=%d", k, params, q, r)
    return Decomposition(tuple(summands), CORRECTED, tuple(labels))


def pushforward_thickening(k: int, params: ConstructionParams) -> Decomposition:
    """
    psi_* O_{k Et} as graded pieces on E.

    The summand M^i restricted to the j-th order neighbourhood jE contributes
    the pieces M^i(-sE)|_E for 0 <= s < j, where j = q + 1 for i < r and
    j = q otherwise. Piece (i, s) has degree -(i + s*l)*deg N, so the k pieces
    run through the degrees 0, -deg N, ..., -(k - 1)deg N.
    """
    _check_multiple(k)
    q, r = divmod(k, params.l)
    summands, labels = [], []
    for i in range(params.l):
        multiplicity = q + 1 if i < r else q
        for s in range(multiplicity):
            summands.append(_m_power(i, s, params))
            labels.append(f"M^{i}(-{s}E)|_E")

    if len(summands) != k:
        raise RankMismatch(f"thickening of order {k} produced rank {len(summands)}")
    return Decomposition(tuple(summands), THICKENING, tuple(labels), on_section=True)


def pushforward_erroneous(k: int, params: ConstructionParams) -> Decomposition:
    """The refuted formula: O_P(-kE) (+) M (+) ... (+) M^(l-1)."""
    _check_multiple(k)
    summands = [PSummand(-k, 0)]
    labels = [f"O_P(-{k}E)"]
    for i in range(1, params.l):
        summands.append(_m_power(i, 0, params))
        labels.append(f"M^{i}")
    return Decomposition(tuple(summands), ERRONEOUS, tuple(labels))


def section_degree(summand: PSummand, params: ConstructionParams) -> int:
    """Degree of the restriction of a summand to E = C."""
    return int(intersect_P(summand_class_P(summand, params), section_P(), params))


def decomposition_euler_char(d: Decomposition, params: ConstructionParams) -> int:
    """
    Euler characteristic of a decomposition, summand by summand.

    Surface summands use Riemann-Roch on P; restricted summands use
    Riemann-Roch on the curve E = C.
    """
    if d.on_section:
        return sum(section_degree(s, params) + 1 - params.g for s in d.summands)
    return sum(euler_char_P(s, params) for s in d.summands)


def cover_euler_char_negative(k: int, params: ConstructionParams) -> int:
    """chi(X, O_X(-k Et)) by Riemann-Roch on X."""
    return euler_char_X(section_X().scaled(-k), params)


def same_multiset(first: Decomposition, second: Decomposition) -> bool:
    return Counter(first.pairs()) == Counter(second.pairs())


@dataclass(frozen=True)
class RefutationReport:
    """
    Euler-characteristic comparison refuting the erroneous pushforward formula.

    chi_cover and chi_base are chi(O_{k Et}) and chi(O_{kE}). The quotient
    values chi(O_X) - sum(chi) record what each decomposition forces for
    psi_* O_{k Et}: the corrected one reproduces chi_cover, the erroneous one
    reproduces chi_base.
    """

    params: ConstructionParams
    k: int
    chi_cover: int
    chi_base: int
    corrected: Decomposition
    erroneous: Decomposition
    corrected_chi: int
    erroneous_chi: int
    corrected_quotient_chi: int
    erroneous_quotient_chi: int
    decompositions_differ: bool

    @property
    def difference(self) -> int:
        return self.chi_cover - self.chi_base

    @property
    def verdict(self) -> str:
        return "mismatch" if self.chi_cover != self.chi_base else "match"


def refute_erroneous(k: int, params: ConstructionParams) -> RefutationReport:
    """
    Compare chi(O_{k Et}) with chi(O_{kE}) and both decompositions.

    Raises:
        NonPositiveMultiple: if k < 1
        NoContradiction: if k == 1, where both formulas agree
    """
    _check_multiple(k)
    if k == 1:
        raise NoContradiction("at k=1 the corrected and erroneous formulas agree")

    corrected = pushforward_negative(k, params)
    erroneous = pushforward_erroneous(k, params)
    chi_structure = structure_euler_char_X(params)
    corrected_chi = decomposition_euler_char(corrected, params)
    erroneous_chi = decomposition_euler_char(erroneous, params)

    return RefutationReport(
        params=params,
        k=k,
        chi_cover=euler_char_thickening(k, True, params),
        chi_base=euler_char_thickening(k, False, params),
        corrected=corrected,
        erroneous=erroneous,
        corrected_chi=corrected_chi,
        erroneous_chi=erroneous_chi,
        corrected_quotient_chi=chi_structure - corrected_chi,
        erroneous_quotient_chi=chi_structure - erroneous_chi,
        decompositions_differ=not same_multiset(corrected, erroneous),
    )
