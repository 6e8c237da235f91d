"""Growth functions of infinite Coxeter systems via Steinberg's alternating sum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from .coxeter import CoxeterMatrix, finite_parabolics, finite_type_of, solomon_polynomial
from .polyring import (
    ONE,
    IntPolynomial,
    RationalFunction,
    div_exact,
    lcm,
    reduce,
)

MAX_SERIES_TERMS = 10**6


class GrowthError(ValueError):
    pass


class FiniteGroupError(GrowthError):
    """Raised when a finite Coxeter system reaches the infinite-group pipeline.

    ``solomon`` holds the group's growth polynomial.
    """

    def __init__(self, solomon: IntPolynomial):
        self.solomon = solomon
        super().__init__(f"finite Coxeter group; growth polynomial is {solomon}")


class ZeroSteinbergSumError(GrowthError):
    pass


@dataclass(frozen=True)
class GrowthFunction:
    """The growth series ``P(t)/Q(t)`` with ``P(0) = Q(0) = 1``."""

    value: RationalFunction

    def __post_init__(self):
        if self.value.numerator[0] != 1 or self.value.denominator[0] != 1:
            raise GrowthError(f"growth function not normalized: {self.value}")

    @property
    def numerator(self) -> IntPolynomial:
        return self.value.numerator

    @property
    def denominator(self) -> IntPolynomial:
        return self.value.denominator

    def series(self, count: int) -> List[int]:
        return series_coefficients(self, count)


def steinberg_sum(M: CoxeterMatrix) -> RationalFunction:
    """``sum over finite T of (-1)^|T| / f_T(t)``, which equals ``1/f_S(1/t)``."""
    if M.size < 1:
        raise GrowthError("Coxeter system needs at least one generator")
    terms = [(len(T), solomon_polynomial(f)) for T, f in finite_parabolics(M)]
    common = ONE
    for _, f in terms:
        common = lcm(common, f)
    num = IntPolynomial()
    for size, f in terms:
        part = div_exact(common, f)
        num = num - part if size % 2 else num + part
    return reduce(num, common)


def invert_variable(R: RationalFunction) -> RationalFunction:
    """Substitute ``t -> 1/t`` and clear powers of t."""
    num, den = R.numerator, R.denominator
    if not num:
        raise ZeroSteinbergSumError("cannot invert the variable of zero")
    gap = den.degree - num.degree
    top, bottom = num.reverse(), den.reverse()
    if gap >= 0:
        top = top.shift(gap)
    else:
        bottom = bottom.shift(-gap)
    return reduce(top, bottom)


def growth_function(M: CoxeterMatrix) -> GrowthFunction:
    """Growth function of an infinite Coxeter system."""
    factors = finite_type_of(M)
    if factors is not None:
        raise FiniteGroupError(solomon_polynomial(factors))
    R = steinberg_sum(M)
    if not R:
        raise ZeroSteinbergSumError("Steinberg sum vanishes identically")
    inverse_growth = invert_variable(R)
    return GrowthFunction(inverse_growth.reciprocal())


def series_coefficients(
    f: Union[GrowthFunction, RationalFunction], count: int
) -> List[int]:
    """First ``count`` Taylor coefficients, from the recurrence ``Q * f = P``."""
    if isinstance(f, GrowthFunction):
        f = f.value
    if count < 1:
        raise ValueError("count must be positive")
    if count > MAX_SERIES_TERMS:
        raise ValueError(f"count {count} exceeds the cap {MAX_SERIES_TERMS}")
    P, Q = f.numerator, f.denominator
    if Q[0] != 1:
        raise GrowthError("series expansion needs Q(0) = 1")
    q = Q.coeffs
    a: List[int] = []
    for k in range(count):
        acc = P[k]
        for j in range(1, min(k, len(q) - 1) + 1):
            acc -= q[j] * a[k - j]
        a.append(acc)
    return a
