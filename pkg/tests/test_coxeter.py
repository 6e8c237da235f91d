import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxgrowth.coxeter import (
    INF,
    CoxeterError,
    CoxeterMatrix,
    EnumerationLimitError,
    ReducibleError,
    classify_finite,
    components,
    finite_subsets,
    finite_type,
    finite_type_of,
    group_order,
    restrict,
    simplex_matrix,
    solomon_polynomial,
)
from coxgrowth.polyring import IntPolynomial as P, bracket_product

from .oracles import finite_by_gram, word_length_counts


def path(labels):
    """Linear Coxeter graph with the given consecutive labels."""
    return CoxeterMatrix.from_labels(len(labels) + 1, {(i, i + 1): m for i, m in enumerate(labels)})


def star(arms):
    """Tree with a centre 0 and arms of the given lengths, all labels 3."""
    labels, nxt = {}, 1
    for length in arms:
        prev = 0
        for _ in range(length):
            labels[(prev, nxt)] = 3
            prev, nxt = nxt, nxt + 1
    return CoxeterMatrix.from_labels(nxt, labels)


def test_matrix_validation():
    with pytest.raises(CoxeterError):
        CoxeterMatrix.from_labels(2, {(0, 1): 1})
    with pytest.raises(CoxeterError):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(CoxeterError):
        CoxeterMatrix.from_labels(2, {(0, 0): 3})
    M = CoxeterMatrix.from_labels(3, {(0, 2): INF})
    assert M[2, 0] == INF and M[0, 1] == 2 and M[1, 1] == 1


def test_restrict():
    M = simplex_matrix(2, 2, 0, 2)
    assert restrict(M, range(4)) == M
    assert restrict(M, []).size == 0
    sub = restrict(M, [0, 1])
    assert sub.size == 2 and sub[0, 1] == 2
    with pytest.raises(IndexError):
        restrict(M, [4])


def test_components():
    assert components(CoxeterMatrix.from_labels(3)) == [(0,), (1,), (2,)]
    assert components(CoxeterMatrix.from_labels(2, {(0, 1): 3})) == [(0, 1)]
    assert components(simplex_matrix(2, 2, 0, 2)) == [(0, 1, 2, 3)]


@pytest.mark.parametrize(
    "M, name",
    [
        (CoxeterMatrix.from_labels(1), "A1"),
        (path([3]), "A2"),
        (path([4]), "B2"),
        (path([5]), "I2(5)"),
        (path([6]), "I2(6)"),
        (path([3, 3]), "A3"),
        (path([4, 3]), "B3"),
        (path([3, 5]), "H3"),
        (path([3, 3, 5]), "H4"),
        (path([3, 4, 3]), "F4"),
        (path([3, 3, 3, 4]), "B5"),
        (star([1, 1, 1]), "D4"),
        (star([1, 1, 3]), "D6"),
        (star([1, 2, 2]), "E6"),
        (star([1, 2, 3]), "E7"),
        (star([1, 2, 4]), "E8"),
    ],
)
def test_classify_finite_types(M, name):
    assert classify_finite(M).name == name


@pytest.mark.parametrize(
    "M",
    [
        CoxeterMatrix.from_labels(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}),  # affine triangle
        path([3, 6]),  # (2, 3, 6) triangle
        path([4, 4]),
        path([5, 5]),
        path([3, 3, 3, 5]),
        path([4, 3, 4]),
        path([3, 4, 3, 3]),  # affine F4
        path([INF]),
        star([2, 2, 2]),  # affine E6
        star([1, 3, 3]),  # affine E7
        star([1, 2, 5]),  # affine E8
        star([1, 1, 1, 1]),  # affine D4
    ],
)
def test_classify_infinite(M):
    assert classify_finite(M) is None


def test_classify_rejects_reducible():
    with pytest.raises(ReducibleError):
        classify_finite(CoxeterMatrix.from_labels(2))


def test_dihedral_exponents():
    ft = classify_finite(path([6]))
    assert ft.exponents == (1, 5)
    assert ft.order == 12


@pytest.mark.parametrize(
    "family, ranks",
    [("A", range(1, 9)), ("B", range(2, 9)), ("D", range(4, 9)), ("E", (6, 7, 8)),
     ("F", (4,)), ("H", (3, 4))],
)
def test_exponent_table_order_identity(family, ranks):
    for k in ranks:
        ft = finite_type(family, k)
        assert len(ft.exponents) == k
        assert ft.order == group_order(family, k)


@pytest.mark.parametrize("m", range(3, 13))
def test_dihedral_order_identity(m):
    assert finite_type("I", 2, m).order == 2 * m


@pytest.mark.parametrize(
    "M",
    [path([3]), path([5]), path([3, 3]), path([4, 3]), path([3, 5]), star([1, 1, 1]),
     CoxeterMatrix.from_labels(3, {(0, 1): 3})],
)
def test_solomon_polynomial_matches_brute_force(M):
    counts = word_length_counts(M)
    assert solomon_polynomial(finite_type_of(M)) == P(counts)


def test_solomon_examples():
    assert solomon_polynomial([]) == P([1])
    assert solomon_polynomial(finite_type("A", 1)) == P([1, 1])
    assert solomon_polynomial(finite_type("B", 2)) == bracket_product([2, 4])
    assert solomon_polynomial(finite_type("H", 3))(1) == 120


labels = st.sampled_from([2, 2, 3, 3, 4, 5, 6, INF])


@st.composite
def coxeter_matrices(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    lab = {(i, j): draw(labels) for i in range(n) for j in range(i + 1, n)}
    return CoxeterMatrix.from_labels(n, lab)


@settings(max_examples=300, deadline=None)
@given(coxeter_matrices())
def test_finiteness_matches_gram_matrix(M):
    assert (finite_type_of(M) is not None) == finite_by_gram(M)


@settings(max_examples=100, deadline=None)
@given(coxeter_matrices(), st.randoms(use_true_random=False))
def test_classification_invariant_under_relabeling(M, rnd):
    perm = list(range(M.size))
    rnd.shuffle(perm)
    N = restrict(M, perm)
    before, after = finite_type_of(M), finite_type_of(N)
    if before is None:
        assert after is None
    else:
        assert sorted(f.name for f in before) == sorted(f.name for f in after)


@settings(max_examples=100, deadline=None)
@given(coxeter_matrices())
def test_finite_solomon_polynomial_at_one_is_order(M):
    factors = finite_type_of(M)
    if factors is not None:
        assert solomon_polynomial(factors)(1) == math.prod(group_order(f.family, f.rank, f.m) for f in factors)


def test_finite_subsets_right_angled():
    M = CoxeterMatrix.from_labels(5)
    assert len(finite_subsets(M)) == 2**5


def test_finite_subsets_simplex():
    F = finite_subsets(simplex_matrix(2, 2, 0, 2))
    assert len(F) == 1 + 4 + 6
    assert all(len(T) <= 2 for T in F)


def test_finite_subsets_infinite_dihedral():
    assert finite_subsets(path([INF])) == [(), (0,), (1,)]


def test_finite_subsets_guard():
    with pytest.raises(EnumerationLimitError):
        finite_subsets(CoxeterMatrix.from_labels(26, {(i, i + 1): INF for i in range(25)}))


@settings(max_examples=60, deadline=None)
@given(coxeter_matrices(max_size=6))
def test_finite_subsets_downward_closed_and_complete(M):
    F = set(finite_subsets(M))
    for T in F:
        for k in range(len(T)):
            assert T[:k] + T[k + 1 :] in F
    # the pruned enumeration agrees with classifying every subset
    for k in range(M.size + 1):
        for T in itertools.combinations(range(M.size), k):
            assert (T in F) == finite_by_gram(restrict(M, T))


@pytest.mark.parametrize("pqrs", [(2, 2, 0, 2), (2, 0, 4, 0), (0, 6, 0, 0)])
def test_simplex_vertex_links_are_euclidean(pqrs):
    M = simplex_matrix(*pqrs)
    for triple in itertools.combinations(range(4), 3):
        angles = [1 / M[i, j] for i, j in itertools.combinations(triple, 2)]
        assert math.isclose(sum(angles), 1.0)
    counts = [0, 0, 0, 0]
    for (i, j), m in {(i, j): M[i, j] for i, j in itertools.combinations(range(4), 2)}.items():
        counts[{2: 0, 3: 1, 4: 2, 6: 3}[m]] += 1
    assert tuple(counts) == pqrs
