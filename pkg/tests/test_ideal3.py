from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxgrowth.ideal3 import (
    FULL_BRACKET,
    TABLE1,
    AngleDataError,
    FacetCountError,
    NegativeCountError,
    SerreViolationError,
    closed_form_growth,
    g_polynomial,
    h1_polynomial,
    h2_kernel,
    h2_polynomial,
    h_from_expansion,
    h_polynomial,
    pyramid_denominator,
    pyramid_family,
    reduced_h,
    validate,
)
from coxgrowth.polyring import IntPolynomial as P, div_exact, eval_rational

from .oracles import all_serre_vectors, random_serre_vector

t = sympy.Symbol("t")


def sym_bracket(m):
    return sum(t**k for k in range(m))


@st.composite
def serre_vectors(draw, max_n=40):
    n = draw(st.integers(4, max_n))
    rng = draw(st.randoms(use_true_random=False))
    return random_serre_vector(rng, n, exclude_unrealizable=False)


def test_validate_examples():
    v = validate(4, 2, 2, 0, 2)
    assert (v.a, v.b, v.c, v.d) == (1, Fraction(2, 3), 0, Fraction(1, 3))
    assert not v.right_angled
    assert validate(6, 8, 0, 0, 0).right_angled


def test_validate_errors():
    with pytest.raises(SerreViolationError) as info:
        validate(4, 1, 0, 0, 0)
    assert info.value.residual == Fraction(3, 2)
    with pytest.raises(FacetCountError):
        validate(3, 2, 0, 0, 0)
    with pytest.raises(NegativeCountError):
        validate(4, 6, -3, 0, 0)
    with pytest.raises(AngleDataError):
        validate(4, 2.0, 2, 0, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 30), st.integers(0, 60), st.integers(0, 60), st.integers(0, 60), st.integers(0, 60))
def test_serre_identity_iff_g_vanishes_at_one(n, p, q, r, s):
    ok = 6 * p + 4 * q + 3 * r + 2 * s == 12 * (n - 2)
    try:
        v = validate(n, p, q, r, s)
    except SerreViolationError:
        assert not ok
        return
    assert ok
    assert g_polynomial(v)(1) == 0


def test_g_polynomial_against_symbolic_expansion():
    for row in TABLE1:
        n, p, q, r, s = row.vector.n, *row.vector.counts
        b = sym_bracket
        expr = (
            b(2) ** 2 * b(3) * b(4) * b(6)
            - n * t * b(2) * b(3) * b(4) * b(6)
            + p * t**2 * b(3) * b(4) * b(6)
            + q * t**3 * b(2) * b(4) * b(6)
            + r * t**4 * b(2) * b(3) * b(6)
            + s * t**6 * b(2) * b(3) * b(4)
        )
        coeffs = [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), t).all_coeffs())]
        assert g_polynomial(row.vector) == P(coeffs)


@settings(max_examples=300, deadline=None)
@given(serre_vectors())
def test_h_structure(v):
    G = g_polynomial(v)
    H = h_polynomial(v)
    assert G(0) == 1 and G(1) == 0
    assert H.degree == 11 and H(0) == -1
    assert H[11] == Fraction(-1) + v.a + 2 * v.b + 3 * v.c + 5 * v.d
    assert H == h_from_expansion(v.a, v.b, v.c, v.d)
    assert H * P([-1, 1]) == G


@settings(max_examples=300, deadline=None)
@given(serre_vectors(max_n=60))
def test_sandwich_dominance(v):
    H, H1, H2 = h_polynomial(v), h1_polynomial(v.n), h2_polynomial(v.n)
    assert all(H1[k] <= H[k] <= H2[k] for k in range(12))


def test_right_angled_h_is_h1():
    for n in range(6, 40):
        assert h_polynomial(validate(n, 2 * (n - 2), 0, 0, 0)) == h1_polynomial(n)


@pytest.mark.parametrize("n", range(6, 101))
def test_sandwich_values(n):
    assert eval_rational(h1_polynomial(n), Fraction(1, n - 3)) == 0
    x = Fraction(1, n - 1)
    assert eval_rational(h2_kernel(n), x) == Fraction(-6, (n - 1) ** 5)
    assert eval_rational(h2_polynomial(n), x) < 0
    assert eval_rational(h2_polynomial(n), x) == Fraction(-6, (n - 1) ** 5) * (1 + x) ** 2 * (1 + x * x) * (
        1 + x + x * x
    )


def test_sandwich_rejects_small_n():
    with pytest.raises(FacetCountError):
        h1_polynomial(3)
    with pytest.raises(FacetCountError):
        h2_polynomial(2)


def test_closed_form_growth_normalized():
    for row in TABLE1:
        f = closed_form_growth(row.vector)
        assert f.numerator(0) == f.denominator(0) == 1
        assert f.denominator == row.denominator
        assert reduced_h(f) == row.h
        # the value is unchanged by reduction
        x = Fraction(1, 7)
        assert f.value(x) == eval_rational(FULL_BRACKET, x) / eval_rational(g_polynomial(row.vector), x)


def test_small_n_cancellation_leaves_certifiable_factor():
    for n in (4, 5):
        for v in all_serre_vectors(n):
            raw = h_polynomial(v)
            assert raw[1] == n - 6
            red = reduced_h(closed_form_growth(v))
            div_exact(raw, red)


@pytest.mark.parametrize(
    "m, h",
    [(1, [-1, 2, 1, 4]), (4, [-1, 5, 4, 10])],
)
def test_pyramid_examples(m, h):
    v, expected = pyramid_family(m)
    assert expected == P([-1, 1]) * P(h)
    assert closed_form_growth(v).denominator == expected


@pytest.mark.parametrize("m", [1, 2, 3, 10, 57, 400])
def test_pyramid_family_reconstruction(m):
    v, expected = pyramid_family(m)
    assert (v.n, v.p, v.q, v.r, v.s) == (m + 4, m + 3, 0, 2 * m + 2, 0)
    assert closed_form_growth(v).denominator == expected
    assert expected(0) == 1


def test_pyramid_guard():
    with pytest.raises(ValueError):
        pyramid_family(0)
    assert pyramid_denominator(5)(1) == 0


def test_table1_rows_are_valid_and_distinct():
    assert len({row.vector for row in TABLE1}) == 6
    kinds = [row.kind for row in TABLE1]
    assert kinds.count("simplex") == 3 and kinds.count("pyramid") == 2 and kinds.count("prism") == 1
