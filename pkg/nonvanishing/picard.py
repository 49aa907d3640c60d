"""
Numerical divisor classes on C, on the ruled surface P = P(E) and on the
cyclic cover X, with their intersection forms.

Classes are kept modulo numerical equivalence. A class on P is
e*E + pi^*(c) and a class on X is e*Et + phi^*(c), where E is the section,
Et its reduced preimage in X and c a class on C recorded by its degree. The
effective divisor D in |L| is identified with l*N throughout.

Intersection data:
    P:  (E.E) = deg L,  (E.fiber) = 1,  (fiber.fiber) = 0
    X:  (Et.Et) = deg N, (Et.fiber) = 1, (fiber.fiber) = 0
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

from .errors import InvalidArgument, NonIntegralResult, NonPositiveCoefficient
from .params import ConstructionParams

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


def as_integer(value: Number, what: str) -> int:
    """
    Return `value` as an int, raising when it is not integral.

    Args:
        value: Exact rational to check
        what: Description used in the error message

    Returns:
        int: The integral value
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralResult(f"{what} = {value} is not an integer")
    return value.numerator


@dataclass(frozen=True)
class CurveClass:
    """
    A class n_exp*N + k_coeff*K_C on C together with its degree.

    Use `curve_class` to build one; it fills the degree from the parameters.
    """

    n_exp: Fraction
    k_coeff: int
    degree: Fraction

    def __add__(self, other: "CurveClass") -> "CurveClass":
        return CurveClass(
            self.n_exp + other.n_exp,
            self.k_coeff + other.k_coeff,
            self.degree + other.degree,
        )

    def __neg__(self) -> "CurveClass":
        return CurveClass(-self.n_exp, -self.k_coeff, -self.degree)

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return self + (-other)

    def scaled(self, k: Number) -> "CurveClass":
        return CurveClass(self.n_exp * k, self.k_coeff * k, self.degree * k)

    def __str__(self) -> str:
        terms = []
        for coeff, symbol in ((self.n_exp, "N"), (Fraction(self.k_coeff), "K_C")):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            text = symbol if magnitude == 1 else f"{magnitude}{symbol}"
            terms.append(("-" if coeff < 0 else "+", text))
        if not terms:
            return "0"
        sign, text = terms[0]
        rendered = f"-{text}" if sign == "-" else text
        for sign, text in terms[1:]:
            rendered += f" {sign} {text}"
        return rendered


def curve_class(n_exp: Number, k_coeff: int, params: ConstructionParams) -> CurveClass:
    """Build n_exp*N + k_coeff*K_C with degree n_exp*deg N + k_coeff*(2g - 2)."""
    n_exp = Fraction(n_exp)
    return CurveClass(
        n_exp=n_exp,
        k_coeff=k_coeff,
        degree=n_exp * params.deg_N + k_coeff * params.canonical_degree,
    )


@dataclass(frozen=True)
class DivClassP:
    """Numerical class e_coeff*E + pi^*(c) on P, with deg c = base_deg."""

    e_coeff: int
    base_deg: Fraction

    def __add__(self, other: "DivClassP") -> "DivClassP":
        return DivClassP(self.e_coeff + other.e_coeff, Fraction(self.base_deg) + other.base_deg)

    def __neg__(self) -> "DivClassP":
        return DivClassP(-self.e_coeff, -Fraction(self.base_deg))

    def __sub__(self, other: "DivClassP") -> "DivClassP":
        return self + (-other)

    def scaled(self, k: int) -> "DivClassP":
        return DivClassP(self.e_coeff * k, Fraction(self.base_deg) * k)


@dataclass(frozen=True)
class DivClassX:
    """
    Numerical class et_coeff*Et + phi^*(c) on X, with deg c = base_deg.

    `base` optionally records c as a CurveClass for display; it does not take
    part in equality, which is numerical.
    """

    et_coeff: Fraction
    base_deg: Fraction
    base: Optional[CurveClass] = field(default=None, compare=False)

    def __add__(self, other: "DivClassX") -> "DivClassX":
        base = None
        if self.base is not None and other.base is not None:
            base = self.base + other.base
        return DivClassX(
            Fraction(self.et_coeff) + other.et_coeff,
            Fraction(self.base_deg) + other.base_deg,
            base,
        )

    def __neg__(self) -> "DivClassX":
        return DivClassX(
            -Fraction(self.et_coeff),
            -Fraction(self.base_deg),
            -self.base if self.base is not None else None,
        )

    def __sub__(self, other: "DivClassX") -> "DivClassX":
        return self + (-other)

    def scaled(self, k: Number) -> "DivClassX":
        return DivClassX(
            Fraction(self.et_coeff) * k,
            Fraction(self.base_deg) * k,
            self.base.scaled(k) if self.base is not None else None,
        )

    def describe(self) -> str:
        base = str(self.base) if self.base is not None else f"deg {self.base_deg}"
        return f"{self.et_coeff}Et + phi^*({base})"


# Basic classes

def section_P() -> DivClassP:
    return DivClassP(1, Fraction(0))


def fiber_P() -> DivClassP:
    return DivClassP(0, Fraction(1))


def base_P(c: CurveClass) -> DivClassP:
    return DivClassP(0, c.degree)


def section_X() -> DivClassX:
    return DivClassX(Fraction(1), Fraction(0))


def fiber_X() -> DivClassX:
    return DivClassX(Fraction(0), Fraction(1))


def base_X(c: CurveClass) -> DivClassX:
    return DivClassX(Fraction(0), c.degree, c)


def m_class_P(params: ConstructionParams) -> DivClassP:
    """M = O_P(-m) (x) pi^*N^p."""
    return DivClassP(-params.m, Fraction(params.p * params.deg_N))


def summand_class_P(summand: Any, params: ConstructionParams) -> DivClassP:
    """
    Class of O_P(t) (x) pi^*N^e for anything exposing `op_deg` and `n_exp`.

    DivClassP instances are passed through unchanged.
    """
    if isinstance(summand, DivClassP):
        return summand
    return DivClassP(summand.op_deg, Fraction(summand.n_exp * params.deg_N))


def pullback(c: DivClassP, params: ConstructionParams) -> DivClassX:
    """psi^*: E pulls back to l*Et, pullbacks from C are unchanged."""
    return DivClassX(Fraction(params.l * c.e_coeff), Fraction(c.base_deg))


# Intersection forms

def intersect_P(a: DivClassP, b: DivClassP, params: ConstructionParams) -> Fraction:
    """Intersection number on P."""
    return (
        Fraction(a.e_coeff * b.e_coeff * params.deg_L)
        + a.e_coeff * Fraction(b.base_deg)
        + b.e_coeff * Fraction(a.base_deg)
    )


def intersect_X(a: DivClassX, b: DivClassX, params: ConstructionParams) -> Fraction:
    """Intersection number on X."""
    a_et, b_et = Fraction(a.et_coeff), Fraction(b.et_coeff)
    return a_et * b_et * params.deg_N + a_et * Fraction(b.base_deg) + b_et * Fraction(a.base_deg)


# Canonical classes

def canonical_P(params: ConstructionParams) -> DivClassP:
    """K_P = -2E + pi^*(K_C + L) numerically."""
    return DivClassP(-2, Fraction(params.canonical_degree + params.deg_L))


def canonical_X(params: ConstructionParams) -> DivClassX:
    """
    K_X = (p - m - 1)l*Et + phi^*(K_C - (pl - p - l)N).

    The base part is K_C - ((pl - p - l)/l)D with D identified with l*N.
    """
    p, l, m = params.p, params.l, params.m
    base = curve_class(-(p * l - p - l), 1, params)
    return DivClassX(Fraction((p - m - 1) * l), base.degree, base)


def hurwitz_canonical_X(params: ConstructionParams) -> DivClassX:
    """K_X computed as psi^*(K_P - (l - 1)M); agrees with canonical_X."""
    adjusted = canonical_P(params) - m_class_P(params).scaled(params.l - 1)
    return pullback(adjusted, params)


def ramification_class_P(params: ConstructionParams) -> DivClassP:
    """C'' = O_P(p) (x) pi^*L^(-p)."""
    return DivClassP(params.p, Fraction(-params.p * params.deg_L))


def m_power_check(params: ConstructionParams) -> bool:
    """M^(-l) = O_P(E + C'') numerically, with E and C'' disjoint."""
    branch = section_P() + ramification_class_P(params)
    disjoint = intersect_P(section_P(), ramification_class_P(params), params) == 0
    return m_class_P(params).scaled(-params.l) == branch and disjoint


def fiber_canonical_degree(params: ConstructionParams) -> int:
    """(K_X . fiber) = (p - m - 1)l."""
    return as_integer(intersect_X(canonical_X(params), fiber_X(), params), "(K_X.F)")


def fiber_arithmetic_genus(params: ConstructionParams) -> int:
    """Arithmetic genus of a fiber by adjunction, ((K_X.F) + (F.F) + 2)/2."""
    return as_integer(Fraction(fiber_canonical_degree(params) + 2, 2), "p_a(F)")


def fiber_singularity(params: ConstructionParams) -> Tuple[int, int]:
    """Exponents (l, p) of the cusp x^l = y^p on every fiber."""
    return (params.l, params.p)


def canonical_self_intersection(params: ConstructionParams) -> Fraction:
    k_x = canonical_X(params)
    return intersect_X(k_x, k_x, params)


# Line bundles of the construction

def z_ab_class(a: int, b: int, params: ConstructionParams) -> DivClassX:
    """
    Class of Z_{a,b} = O_X(a*Et) (x) phi^*N^b; Z itself is (1, 1).

    Raises:
        NonPositiveCoefficient: if a < 1 or b < 1
    """
    if a < 1 or b < 1:
        raise NonPositiveCoefficient(f"Z_(a,b) needs a, b >= 1, got a={a}, b={b}")
    base = curve_class(b, 0, params)
    return DivClassX(Fraction(a), base.degree, base)


def adjunction_twist(a: int, b: int, k: int, params: ConstructionParams) -> DivClassX:
    """
    Class of Z_{a,b}^k (x) omega_X^(-1).

    At k = p - 1 the Et coefficient is ap - a - pl + p + l + 1 and the base
    class is (bp - b + pl - p - l)N - K_C.
    """
    if k < 1:
        raise InvalidArgument(f"twist power k={k} must be >= 1")
    twist = z_ab_class(a, b, params).scaled(k) - canonical_X(params)
    logger.debug("Z_(%d,%d)^%d (x) omega_X^-1 on %s: %s", a, b, k, params, twist.describe())
    return twist


def is_ample_criterion(c: DivClassX, params: ConstructionParams) -> bool:
    """
    Positivity against itself, the section Et and a fiber.

    This is the fiber-and-section check used for ampleness of the twisted
    bundles, not a full Nakai-Moishezon test over every curve on X.
    """
    return (
        intersect_X(c, c, params) > 0
        and intersect_X(c, section_X(), params) > 0
        and intersect_X(c, fiber_X(), params) > 0
    )


# Euler characteristics

def euler_char_thickening(k: int, on_cover: bool, params: ConstructionParams) -> int:
    """
    chi(O_{k Et}) on X (on_cover) or chi(O_{kE}) on P.

    k(1 - g) - k(k - 1)(g - 1)/(pl) on the cover, with pl replaced by p on P.
    """
    if k < 1:
        raise InvalidArgument(f"thickening multiple k={k} must be >= 1")
    g = params.g
    denominator = params.p * params.l if on_cover else params.p
    value = k * (1 - g) - Fraction(k * (k - 1) * (g - 1), denominator)
    return as_integer(value, f"chi(O_{k}{'Et' if on_cover else 'E'})")


def euler_char_P(summand: Any, params: ConstructionParams) -> int:
    """
    Riemann-Roch on P: chi = (1 - g) + D.(D - K_P)/2.

    Args:
        summand: A PSummand or a DivClassP
        params: Construction parameters

    Returns:
        int: The Euler characteristic (checked integral)
    """
    d = summand_class_P(summand, params)
    value = (1 - params.g) + intersect_P(d, d - canonical_P(params), params) / 2
    return as_integer(value, f"chi_P({d})")


@lru_cache(maxsize=None)
def structure_euler_char_X(params: ConstructionParams) -> int:
    """chi(O_X) = sum over i < l of chi_P(M^i)."""
    m_class = m_class_P(params)
    value = sum(euler_char_P(m_class.scaled(i), params) for i in range(params.l))
    logger.debug("chi(O_X) = %d on %s", value, params)
    return value


def euler_char_X(d: DivClassX, params: ConstructionParams) -> int:
    """Riemann-Roch on X: chi(O_X(D)) = chi(O_X) + D.(D - K_X)/2."""
    value = structure_euler_char_X(params) + intersect_X(d, d - canonical_X(params), params) / 2
    return as_integer(value, f"chi_X({d.describe()})")
