"""Perron certificates, exact root enclosures and bound verdicts.

All decisions here are made by exact sign evaluation at rational points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce as _fold
from math import ceil, floor, gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .coxeter import CoxeterMatrix
from .ideal3 import (
    TABLE1,
    AngleVector,
    T_MINUS_ONE,
    closed_form_growth,
    h_polynomial,
)
from .polyring import InexactDivisionError, IntPolynomial, div_exact, eval_rational
from .steinberg import GrowthFunction, growth_function

DEFAULT_WIDTH = Fraction(1, 10**10)
# at most this many integers q are tried as exact roots 1/q after bisection
_MAX_RATIONAL_CANDIDATES = 64

Interval = Tuple[Fraction, Fraction]


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class PerronCertificate:
    """Outcome of the criterion for ``sum a_k t^k - 1`` with a_k >= 0.

    The criterion is only sufficient: ``applicable=False`` means "not
    certified", not "not Perron".
    """

    applicable: bool
    support_gcd: int
    negative_coefficient_indices: Tuple[int, ...]
    constant_term: int
    degree: int
    reasons: Tuple[str, ...] = ()


def _normalize_constant(h: IntPolynomial) -> IntPolynomial:
    return -h if h[0] == 1 else h


def ku_certificate(h: IntPolynomial) -> PerronCertificate:
    if not h:
        raise CertificateError("zero polynomial")
    g = _normalize_constant(h)
    coeffs = g.coeffs
    negative = tuple(k for k in range(1, len(coeffs)) if coeffs[k] < 0)
    support = [k for k in range(1, len(coeffs)) if coeffs[k]]
    support_gcd = _fold(gcd, support, 0)
    reasons = []
    if g[0] != -1:
        reasons.append(f"constant term is {h[0]}, not -1 or 1")
    if negative:
        reasons.append(f"negative coefficients at t^{list(negative)}")
    if support_gcd != 1:
        reasons.append(f"support gcd is {support_gcd}")
    if g.degree < 2:
        reasons.append(f"degree {g.degree} below 2")
    return PerronCertificate(
        applicable=not reasons,
        support_gcd=support_gcd,
        negative_coefficient_indices=negative,
        constant_term=g[0],
        degree=g.degree,
        reasons=tuple(reasons),
    )


def _linear_admissible(g: IntPolynomial) -> bool:
    # a t - 1 with a >= 2 has the single root 1/a in (0, 1)
    return g.degree == 1 and g[0] == -1 and g[1] >= 2


@dataclass(frozen=True)
class RootEnclosure:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def bisection_steps(g: IntPolynomial) -> Iterator[Tuple[int, int, int]]:
    """Endless exact bisection of (0, 1) for ``g`` with g(0) < 0 < g(1).

    Yields ``(a, b, k)`` meaning the root lies in ``[a/2^k, b/2^k]``; when
    a midpoint is an exact root, yields ``(a, a, k)`` once and stops.
    """
    a, b, k = 0, 1, 0
    while True:
        yield a, b, k
        a, b, k = 2 * a, 2 * b, k + 1
        mid = a + 1
        sign = g.sign_at_dyadic(mid, k)
        if sign == 0:
            yield mid, mid, k
            return
        if sign > 0:
            b = mid
        else:
            a = mid


def _exact_reciprocal_root(g: IntPolynomial, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    # a rational root of g with g(0) = -1 has the form 1/q with q | lc(g)
    q_lo, q_hi = ceil(1 / hi), floor(1 / lo)
    if q_hi - q_lo + 1 > _MAX_RATIONAL_CANDIDATES:
        return None
    lc = g.leading
    for q in range(max(q_lo, 2), q_hi + 1):
        if lc % q == 0 and not eval_rational(g, Fraction(1, q)):
            return Fraction(1, q)
    return None


def isolate_root(h: IntPolynomial, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclose the smallest-modulus root of ``h`` in (0, 1) to within ``width``.

    ``h`` must pass :func:`ku_certificate` (or be ``a t - 1`` with a >= 2).
    Exact rational roots collapse the enclosure to a point.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    g = _normalize_constant(h)
    if not (ku_certificate(h).applicable or _linear_admissible(g)):
        raise CertificateError(f"criterion does not apply to {h}")
    if not (g.sign_at_dyadic(0, 0) < 0 < g.sign_at_dyadic(1, 0)):
        raise AssertionError(f"no sign change of {g} on (0, 1)")  # pragma: no cover
    for a, b, k in bisection_steps(g):
        if a == b:
            x = Fraction(a, 2**k)
            return RootEnclosure(x, x)
        if Fraction(b - a, 2**k) <= width:
            break
    lo, hi = Fraction(a, 2**k), Fraction(b, 2**k)
    exact = _exact_reciprocal_root(g, lo, hi)
    if exact is not None:
        return RootEnclosure(exact, exact)
    return RootEnclosure(lo, hi)


def tau_enclosure(e: RootEnclosure) -> Interval:
    """Growth-rate interval ``[1/hi, 1/lo]`` from a radius-of-convergence enclosure."""
    if e.lo <= 0:
        raise ValueError("enclosure must lie in (0, oo)")
    return (1 / e.hi, 1 / e.lo)


# -- verdicts ------------------------------------------------------------------


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of checking ``n - 3 <= tau <= n - 1``."""

    proved: bool
    method: str  # "sign" or "enclosure"
    lower: bool
    upper: bool
    witnesses: Dict[str, Fraction] = field(default_factory=dict)


def check_bounds(
    n: int,
    h: Optional[IntPolynomial] = None,
    tau: Optional[Interval] = None,
) -> BoundVerdict:
    """Decide ``n - 3 <= tau <= n - 1``.

    For n >= 6 with a certified ``h`` (increasing on t > 0) this uses the
    signs of h at 1/(n-1) and 1/(n-3).  Otherwise the tau enclosure is
    compared against the rational endpoints.
    """
    if n >= 6 and h is not None and ku_certificate(h).applicable:
        g = _normalize_constant(h)
        at_upper = eval_rational(g, Fraction(1, n - 1))
        at_lower = eval_rational(g, Fraction(1, n - 3))
        lower, upper = at_lower >= 0, at_upper <= 0
        return BoundVerdict(
            lower and upper,
            "sign",
            lower,
            upper,
            {"h(1/(n-1))": at_upper, "h(1/(n-3))": at_lower},
        )
    if tau is None:
        return BoundVerdict(False, "enclosure", False, False)
    lower, upper = tau[0] >= n - 3, tau[1] <= n - 1
    return BoundVerdict(
        lower and upper,
        "enclosure",
        lower,
        upper,
        {"tau_lo": tau[0], "tau_hi": tau[1]},
    )


@dataclass(frozen=True)
class GrowthReport:
    subject: Union[AngleVector, CoxeterMatrix]
    n: int
    growth: GrowthFunction
    h: Optional[IntPolynomial]  # the polynomial the certificate was issued for
    perron: Optional[PerronCertificate]
    root: Optional[RootEnclosure]
    tau: Optional[Interval]
    bounds: BoundVerdict
    right_angled_equality: Optional[bool]

    @property
    def certified(self) -> bool:
        return self.perron is not None and self.perron.applicable


def _certify_and_isolate(candidates: Sequence[IntPolynomial], width: Fraction):
    """First candidate that passes the criterion, with its root enclosure."""
    certs = [(h, ku_certificate(h)) for h in candidates]
    for h, cert in certs:
        if cert.applicable:
            return h, cert, isolate_root(h, width)
    for h, cert in certs:
        if _linear_admissible(_normalize_constant(h)):
            return h, cert, isolate_root(h, width)
    h, cert = certs[0]
    return h, cert, None


def report_for_vector(v: AngleVector, width: Fraction = DEFAULT_WIDTH) -> GrowthReport:
    """Closed-form growth report for ideal angle data.

    The certificate is tried on H = G/(t-1) first, then on the factor H of
    the reduced denominator (needed for n = 4, 5, where cancellation with
    the numerator removes the negative coefficients).
    """
    growth = closed_form_growth(v)
    raw = h_polynomial(v)
    red = div_exact(growth.denominator, T_MINUS_ONE)
    h, cert, root = _certify_and_isolate([raw, red], width)
    tau = tau_enclosure(root) if root else None
    bounds = check_bounds(v.n, h, tau)
    equality = None
    if tau is not None:
        equality = (tau[0] == tau[1] == v.n - 3) == v.right_angled
    return GrowthReport(v, v.n, growth, h, cert, root, tau, bounds, equality)


def report_for_matrix(M: CoxeterMatrix, width: Fraction = DEFAULT_WIDTH) -> GrowthReport:
    growth = growth_function(M)
    Q = growth.denominator
    try:
        candidates = [div_exact(Q, T_MINUS_ONE)]
    except InexactDivisionError:
        candidates = []
    candidates.append(Q)
    h, cert, root = _certify_and_isolate(candidates, width)
    tau = tau_enclosure(root) if root else None
    bounds = check_bounds(M.size, h, tau)
    return GrowthReport(M, M.size, growth, h, cert, root, tau, bounds, None)


@dataclass(frozen=True)
class MinimumVerdict:
    passed: bool
    minimizer: Optional[AngleVector]
    tau: Optional[Interval]
    missing: Tuple[AngleVector, ...] = ()
    reasons: Tuple[str, ...] = ()


def minimum_check(reports: Sequence[GrowthReport]) -> MinimumVerdict:
    """Confirm the smallest growth rate over the n = 4, 5 cases is strictly unique.

    Vectors with n >= 6 only need tau >= 3, which the bound verdict gives.
    """
    by_vector = {r.subject: r for r in reports if isinstance(r.subject, AngleVector)}
    missing = tuple(row.vector for row in TABLE1 if row.vector not in by_vector)
    if missing:
        return MinimumVerdict(False, None, None, missing, ("incomplete report set",))
    reasons: List[str] = []
    small = [r for r in by_vector.values() if r.n in (4, 5)]
    if any(r.tau is None for r in small):
        reasons.append("an n <= 5 report has no certified enclosure")
        return MinimumVerdict(False, None, None, (), tuple(reasons))
    best = min(small, key=lambda r: r.tau[1])
    for r in small:
        if r is not best and not best.tau[1] < r.tau[0]:
            reasons.append(f"{r.subject} not separated from {best.subject}")
    for r in by_vector.values():
        if r.n >= 6 and not (r.bounds.lower and r.n - 3 >= 3):
            reasons.append(f"{r.subject}: tau >= 3 not established")
    return MinimumVerdict(not reasons, best.subject, best.tau, (), tuple(reasons))
