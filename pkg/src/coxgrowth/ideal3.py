"""Closed-form growth data for ideal Coxeter polytopes in hyperbolic 3-space.

An ideal Coxeter polytope is described here only by its facet count ``n``
and the numbers ``p, q, r, s`` of edges with dihedral angles pi/2, pi/3,
pi/4 and pi/6.  Realizability of the data is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Tuple

from .polyring import IntPolynomial, bracket_product, div_exact, reduce
from .steinberg import GrowthFunction

T_MINUS_ONE = IntPolynomial([-1, 1])
FULL_BRACKET = bracket_product([2, 2, 3, 4, 6])


class AngleDataError(ValueError):
    pass


class FacetCountError(AngleDataError):
    pass


class NegativeCountError(AngleDataError):
    pass


class SerreViolationError(AngleDataError):
    """``p/2 + q/3 + r/4 + s/6`` differs from ``n - 2``; ``residual`` is the gap."""

    def __init__(self, residual: Fraction, message: str):
        self.residual = residual
        super().__init__(message)


@dataclass(frozen=True)
class AngleVector:
    n: int
    p: int
    q: int
    r: int
    s: int

    @property
    def a(self) -> Fraction:
        return Fraction(self.p, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.q, 3)

    @property
    def c(self) -> Fraction:
        return Fraction(self.r, 4)

    @property
    def d(self) -> Fraction:
        return Fraction(self.s, 6)

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    @property
    def right_angled(self) -> bool:
        return self.q == self.r == self.s == 0

    def __str__(self) -> str:
        return f"n={self.n} (p,q,r,s)=({self.p},{self.q},{self.r},{self.s})"


def serre_residual(n: int, p: int, q: int, r: int, s: int) -> Fraction:
    return (n - 2) - (Fraction(p, 2) + Fraction(q, 3) + Fraction(r, 4) + Fraction(s, 6))


def validate(n: int, p: int, q: int, r: int, s: int) -> AngleVector:
    for name, v in zip("npqrs", (n, p, q, r, s)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise AngleDataError(f"{name} must be an integer, got {v!r}")
    if n < 4:
        raise FacetCountError(f"an ideal polytope has at least 4 facets, got n={n}")
    negative = [name for name, v in zip("pqrs", (p, q, r, s)) if v < 0]
    if negative:
        raise NegativeCountError(f"negative edge counts: {', '.join(negative)}")
    residual = serre_residual(n, p, q, r, s)
    if residual:
        raise SerreViolationError(
            residual,
            f"p/2 + q/3 + r/4 + s/6 must equal n - 2 = {n - 2}; residual {residual}",
        )
    return AngleVector(n, p, q, r, s)


def g_polynomial(v: AngleVector) -> IntPolynomial:
    """Numerator ``G = [2,2,3,4,6] / f_S`` of the inverse growth function."""
    t = IntPolynomial.monomial
    return (
        FULL_BRACKET
        - t(1, v.n) * bracket_product([2, 3, 4, 6])
        + t(2, v.p) * bracket_product([3, 4, 6])
        + t(3, v.q) * bracket_product([2, 4, 6])
        + t(4, v.r) * bracket_product([2, 3, 6])
        + t(6, v.s) * bracket_product([2, 3, 4])
    )


# H(t) = G(t)/(t-1) coefficient by coefficient: constant, then weights of a, b, c, d
H_EXPANSION: Tuple[Tuple[int, int, int, int, int], ...] = (
    (-1, 0, 0, 0, 0),
    (-4, 1, 1, 1, 1),
    (-9, 3, 5, 5, 5),
    (-15, 6, 11, 14, 14),
    (-20, 9, 17, 25, 29),
    (-23, 11, 22, 33, 49),
    (-23, 12, 24, 36, 66),
    (-20, 11, 23, 35, 71),
    (-15, 9, 19, 31, 61),
    (-9, 6, 13, 22, 40),
    (-4, 3, 7, 11, 19),
    (-1, 1, 2, 3, 5),
)


def h_from_expansion(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> IntPolynomial:
    """H evaluated from the coefficient table; coefficients must come out integral."""
    return IntPolynomial(
        Fraction(k0) + ka * a + kb * b + kc * c + kd * d
        for k0, ka, kb, kc, kd in H_EXPANSION
    )


def h_polynomial(v: AngleVector) -> IntPolynomial:
    """``H = G / (t - 1)``, of degree 11 with constant term -1."""
    return div_exact(g_polynomial(v), T_MINUS_ONE)


def h1_polynomial(n: int) -> IntPolynomial:
    """Lower sandwich polynomial (all of n - 2 placed on the pi/2 weight)."""
    if n < 4:
        raise FacetCountError(f"n must be at least 4, got {n}")
    k = n - 2
    expanded = h_from_expansion(Fraction(k), Fraction(0), Fraction(0), Fraction(0))
    P = IntPolynomial
    factored = (
        P([1, 1]) ** 2
        * P([-1, n - 3])
        * P([1, 0, 1])
        * P([1, -1, 1])
        * P([1, 1, 1]) ** 2
    )
    assert expanded == factored, (n, expanded, factored)
    return expanded


def h2_polynomial(n: int) -> IntPolynomial:
    """Upper sandwich polynomial (all of n - 2 placed on the pi/6 weight)."""
    if n < 4:
        raise FacetCountError(f"n must be at least 4, got {n}")
    k = n - 2
    expanded = h_from_expansion(Fraction(0), Fraction(0), Fraction(0), Fraction(k))
    P = IntPolynomial
    factored = P([1, 1]) ** 2 * P([1, 0, 1]) * P([1, 1, 1]) * h2_kernel(n)
    assert expanded == factored, (n, expanded, factored)
    return expanded


def h2_kernel(n: int) -> IntPolynomial:
    """The degree-5 factor of H2 carrying its root; equals -6/(n-1)^5 at 1/(n-1)."""
    return IntPolynomial([-1, n - 3, 2 * n - 5, 3 * n - 7, 4 * n - 9, 5 * n - 11])


def closed_form_growth(v: AngleVector) -> GrowthFunction:
    """``f_S = [2,2,3,4,6] / G`` in lowest terms."""
    return GrowthFunction(reduce(FULL_BRACKET, g_polynomial(v)))


def reduced_h(f: GrowthFunction) -> IntPolynomial:
    """The factor H of a reduced denominator ``Q = (t - 1) H``."""
    return div_exact(f.denominator, T_MINUS_ONE)


# -- the glued pyramid family ----------------------------------------------


def pyramid_denominator(n: int) -> IntPolynomial:
    """``(t-1)(2(n-3)t^3 + (n-4)t^2 + (n-3)t - 1)``, already with Q(0) = 1."""
    return T_MINUS_ONE * IntPolynomial([-1, n - 3, n - 4, 2 * (n - 3)])


def pyramid_family(m: int) -> Tuple[AngleVector, IntPolynomial]:
    """Angle data and expected denominator for ``m`` glued p = r = 4 pyramids."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"number of pyramid copies must be >= 1, got {m!r}")
    n = m + 4
    return validate(n, n - 1, 0, 2 * n - 6, 0), pyramid_denominator(n)


# -- reference data for the small cases --------------------------------------


class Table1Row(NamedTuple):
    vector: AngleVector
    kind: str
    h: IntPolynomial  # the printed denominator is (t - 1) * h
    rate: str

    @property
    def denominator(self) -> IntPolynomial:
        return T_MINUS_ONE * self.h


def _row(n, pqrs, kind, h_desc, rate):
    return Table1Row(validate(n, *pqrs), kind, IntPolynomial(h_desc[::-1]), rate)


# h given from the top degree down, as printed
TABLE1: Tuple[Table1Row, ...] = (
    _row(4, (2, 2, 0, 2), "simplex", [3, 1, 1, 1, 1, -1], "2.03074"),
    _row(4, (2, 0, 4, 0), "simplex", [3, 1, 1, -1], "2.13040"),
    _row(4, (0, 6, 0, 0), "simplex", [3, 1, -1], "2.30277"),
    _row(5, (4, 2, 0, 2), "pyramid", [4, 1, 2, 1, 2, -1], "2.74738"),
    _row(5, (4, 0, 4, 0), "pyramid", [4, 1, 2, -1], "2.84547"),
    _row(5, (2, 5, 0, 2), "prism", [5, 2, 1, 3, 2, -1], "3.16205"),
)
