"""Dense univariate polynomials over Z and reduced rational functions.

A polynomial is stored as a tuple of Python integers, index ``k`` holding
the coefficient of ``t**k``.  Trailing zeros are stripped on construction,
so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from math import gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class PolynomialError(ArithmeticError):
    pass


class InexactDivisionError(PolynomialError):
    """Raised by :func:`div_exact` when the divisor does not divide evenly.

    ``remainder`` is the remainder of division in Q[t] (an ``IntPolynomial``
    when integral, otherwise a tuple of ``Fraction`` coefficients).
    """

    def __init__(self, remainder, message: Optional[str] = None):
        self.remainder = remainder
        super().__init__(message or f"inexact division, remainder {remainder}")


class ZeroDenominatorError(PolynomialError, ZeroDivisionError):
    pass


class PoleAtZeroError(PolynomialError):
    """The reduced denominator vanishes at t = 0, so Q(0) = 1 is impossible."""


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise TypeError(f"non-integral coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
            out.append(int(c))
        object.__setattr__(self, "coeffs", _strip(out))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPolynomial(res)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return IntPolynomial(res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def reverse(self, degree: Optional[int] = None) -> "IntPolynomial":
        """Return ``t**degree * self(1/t)``; ``degree`` defaults to ``self.degree``."""
        if not self.coeffs:
            return self
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (d - self.degree)
        return IntPolynomial(reversed(padded))

    def content(self) -> int:
        return _fold(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient (zero stays zero)."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPolynomial(x // c for x in self.coeffs)

    def scale_down(self, c: int) -> "IntPolynomial":
        """Divide every coefficient by ``c``, which must divide them exactly."""
        if any(x % c for x in self.coeffs):
            raise InexactDivisionError(None, f"{c} does not divide {self}")
        return IntPolynomial(x // c for x in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x: Number) -> Number:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at_dyadic(self, a: int, k: int) -> int:
        """Sign of ``self(a / 2**k)`` using integer arithmetic only."""
        # homogeneous Horner on sum c_i a^i 2^{k(d-i)} = 2^{kd} self(a/2^k)
        acc = 0
        scale = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * scale
            scale <<= k
        return (acc > 0) - (acc < 0)


IntPolynomialLike = Union[IntPolynomial, Sequence[int]]

ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def _poly(a: IntPolynomialLike) -> IntPolynomial:
    return a if isinstance(a, IntPolynomial) else IntPolynomial(a)


# -- brackets ------------------------------------------------------------


def bracket(n: int) -> IntPolynomial:
    """``[n] = 1 + t + ... + t**(n-1)``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bracket index must be a positive integer, got {n!r}")
    return IntPolynomial([1] * n)


def bracket_product(indices: Iterable[int]) -> IntPolynomial:
    """``[m1, m2, ...] = [m1][m2]...``; the empty product is 1."""
    result = ONE
    for i in indices:
        result = result * bracket(i)
    return result


# -- functional ring API ---------------------------------------------------


def add(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    return _poly(a) + _poly(b)


def sub(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    return _poly(a) - _poly(b)


def mul(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    return _poly(a) * _poly(b)


def divmod_rational(a: IntPolynomialLike, b: IntPolynomialLike):
    """Quotient and remainder in Q[t], as tuples of ``Fraction``."""
    a, b = _poly(a), _poly(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db, lc = b.degree, b.leading
    if len(rem) - 1 < db:
        return (), _strip(rem)
    quo = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / lc
        quo[k - db] = q
        for j, bc in enumerate(b.coeffs):
            rem[k - db + j] -= q * bc
    return _strip(quo), _strip(rem)


def div_exact(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    """Exact quotient ``a / b``; raises :class:`InexactDivisionError` otherwise."""
    a, b = _poly(a), _poly(b)
    quo, rem = divmod_rational(a, b)
    if rem:
        if all(c.denominator == 1 for c in rem):
            rem = IntPolynomial(rem)
        raise InexactDivisionError(rem)
    if any(c.denominator != 1 for c in quo):
        raise InexactDivisionError(
            IntPolynomial(), f"quotient of {a} by {b} is not integral"
        )
    return IntPolynomial(quo)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``prem(a, b)``: remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db, lc = b.degree, b.leading
    if len(r) - 1 < db:
        return a
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [x * lc for x in r]
        if c:
            for j, bc in enumerate(b.coeffs):
                r[k - db + j] -= c * bc
    return IntPolynomial(r)


def poly_gcd(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = _poly(a), _poly(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = a.primitive(), b.primitive()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    return a.primitive()


def lcm(a: IntPolynomialLike, b: IntPolynomialLike) -> IntPolynomial:
    """Primitive least common multiple of two nonzero polynomials."""
    a, b = _poly(a), _poly(b)
    g = poly_gcd(a, b)
    return (div_exact(a.primitive(), g) * b.primitive()).primitive()


def eval_rational(a: IntPolynomialLike, x: Number) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return Fraction(_poly(a)(Fraction(x)))


# -- rational functions ----------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` in lowest terms.

    Build these with :func:`reduce`; the constructor does not normalize.
    The denominator satisfies ``Q(0) = 1`` whenever an integral pair with
    that property exists, and ``Q(0) > 0`` otherwise.
    """

    numerator: IntPolynomial
    denominator: IntPolynomial

    @property
    def normalized(self) -> bool:
        return self.denominator[0] == 1

    def __call__(self, x: Number) -> Fraction:
        d = eval_rational(self.denominator, x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return eval_rational(self.numerator, x) / d

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return reduce(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return reduce(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def reciprocal(self) -> "RationalFunction":
        if not self.numerator:
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return reduce(self.denominator, self.numerator)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def reduce(num: IntPolynomialLike, den: IntPolynomialLike) -> RationalFunction:
    """Reduce ``num/den`` to lowest terms and normalize the denominator."""
    num, den = _poly(num), _poly(den)
    if not den:
        raise ZeroDenominatorError("zero denominator")
    if not num:
        return RationalFunction(ZERO, ONE)
    g = poly_gcd(num, den)
    if g.degree:
        num, den = div_exact(num, g), div_exact(den, g)
    c = gcd(num.content(), den.content())
    if den[0] < 0:
        c = -c
    num, den = num.scale_down(c), den.scale_down(c)
    if not den[0]:
        raise PoleAtZeroError(f"denominator {den} vanishes at t = 0")
    # the pair is now jointly primitive, so a further integral rescaling
    # to Q(0) = 1 exists only when Q(0) is already 1
    return RationalFunction(num, den)


def as_rational_function(p: IntPolynomialLike) -> RationalFunction:
    return RationalFunction(_poly(p), ONE)
