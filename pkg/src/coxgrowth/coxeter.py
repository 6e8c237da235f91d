"""Coxeter matrices, finite-type recognition and Solomon polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .polyring import IntPolynomial, bracket_product

INF = math.inf
Label = Union[int, float]

MAX_ENUMERATION_SIZE = 25


class CoxeterError(ValueError):
    pass


class ReducibleError(CoxeterError):
    pass


class EnumerationLimitError(CoxeterError):
    pass


def _check_label(m) -> Label:
    if m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int):
        raise CoxeterError(f"label must be an integer >= 2 or INF, got {m!r}")
    if m < 2:
        raise CoxeterError(f"off-diagonal label must be >= 2, got {m}")
    return m


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric Coxeter matrix; ``entries[i][j]`` is m_ij, with 1 on the diagonal."""

    entries: Tuple[Tuple[Label, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise CoxeterError("Coxeter matrix must be square")
            if row[i] != 1:
                raise CoxeterError(f"diagonal entry m_{i}{i} must be 1")
            for j in range(i + 1, n):
                _check_label(row[j])
                if self.entries[j][i] != row[j]:
                    raise CoxeterError(f"matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_labels(
        cls, size: int, labels: Mapping[Tuple[int, int], Label] = ()
    ) -> "CoxeterMatrix":
        """Build from off-diagonal labels; unspecified pairs default to 2."""
        if size < 0:
            raise CoxeterError("size must be non-negative")
        rows = [[1 if i == j else 2 for j in range(size)] for i in range(size)]
        for (i, j), m in dict(labels).items():
            if not (0 <= i < size and 0 <= j < size) or i == j:
                raise CoxeterError(f"bad generator pair ({i}, {j}) for size {size}")
            m = _check_label(m)
            rows[i][j] = rows[j][i] = m
        return cls(tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> Label:
        i, j = ij
        return self.entries[i][j]

    def labels(self) -> Dict[Tuple[int, int], Label]:
        """Off-diagonal labels different from 2, keyed by ``(i, j)`` with i < j."""
        n = self.size
        return {
            (i, j): self.entries[i][j]
            for i in range(n)
            for j in range(i + 1, n)
            if self.entries[i][j] != 2
        }


def restrict(M: CoxeterMatrix, T: Iterable[int]) -> CoxeterMatrix:
    """Principal submatrix on the generators ``T`` (kept in the given order)."""
    T = tuple(T)
    for i in T:
        if not 0 <= i < M.size:
            raise IndexError(f"generator {i} out of range for size {M.size}")
    if len(set(T)) != len(T):
        raise CoxeterError("repeated generator in subset")
    return CoxeterMatrix(tuple(tuple(M.entries[i][j] for j in T) for i in T))


def components(M: CoxeterMatrix) -> List[Tuple[int, ...]]:
    """Connected components of the Coxeter graph (edges where m_ij >= 3)."""
    n = M.size
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if not seen[w] and w != v and M.entries[v][w] != 2:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


# -- the finite classification ---------------------------------------------


@dataclass(frozen=True)
class FiniteType:
    family: str  # "A", "B", "D", "E", "F", "H" or "I"
    rank: int
    exponents: Tuple[int, ...]
    m: Optional[int] = None  # dihedral label, family "I" only

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        return math.prod(e + 1 for e in self.exponents)

    def __str__(self) -> str:
        return self.name


_EXCEPTIONAL = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
}


def finite_type(family: str, rank: int, m: Optional[int] = None) -> FiniteType:
    """Look up the exponents of an irreducible finite Coxeter group."""
    if family == "A" and rank >= 1:
        exps = tuple(range(1, rank + 1))
    elif family == "B" and rank >= 2:
        exps = tuple(range(1, 2 * rank, 2))
    elif family == "D" and rank >= 4:
        exps = tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    elif family == "I" and rank == 2 and m is not None and m >= 3:
        exps = (1, m - 1)
    elif (family, rank) in _EXCEPTIONAL:
        exps = _EXCEPTIONAL[family, rank]
    else:
        raise CoxeterError(f"no finite Coxeter type {family}{rank}")
    return FiniteType(family, rank, exps, m if family == "I" else None)


def group_order(family: str, rank: int, m: Optional[int] = None) -> int:
    """Group orders from the classification, independent of the exponents."""
    k = rank
    if family == "A":
        return math.factorial(k + 1)
    if family == "B":
        return 2**k * math.factorial(k)
    if family == "D":
        return 2 ** (k - 1) * math.factorial(k)
    if family == "I":
        return 2 * m
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("H", 3): 120,
        ("H", 4): 14400,
    }[family, rank]


def _path_order(k: int, adj: Dict[int, List[int]]) -> Optional[List[int]]:
    ends = [v for v in range(k) if len(adj[v]) == 1]
    if len(ends) != 2:
        return None
    order, prev = [ends[0]], None
    while len(order) < k:
        v = order[-1]
        nxt = [w for w in adj[v] if w != prev]
        prev = v
        order.append(nxt[0])
    return order


def classify_finite(M: CoxeterMatrix) -> Optional[FiniteType]:
    """Recognize an irreducible Coxeter matrix as a finite type, or return None.

    Works by matching the labelled Coxeter graph against the finite
    classification; no cosine matrices are formed.
    """
    if len(components(M)) != 1:
        raise ReducibleError("classify_finite expects an irreducible matrix")
    k = M.size
    if k == 1:
        return finite_type("A", 1)
    edges = [(i, j, m) for (i, j), m in M.labels().items()]
    if any(m == INF for _, _, m in edges):
        return None
    if k == 2:
        m = edges[0][2]
        if m == 3:
            return finite_type("A", 2)
        if m == 4:
            return finite_type("B", 2)
        return finite_type("I", 2, m)
    if len(edges) != k - 1:
        return None  # contains a cycle
    if any(m > 5 for _, _, m in edges):
        return None
    heavy = [(i, j, m) for i, j, m in edges if m > 3]
    if len(heavy) > 1:
        return None
    adj: Dict[int, List[int]] = {v: [] for v in range(k)}
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    degrees = [len(adj[v]) for v in range(k)]

    if heavy:
        if max(degrees) > 2:
            return None
        i, j, m = heavy[0]
        at_end = degrees[i] == 1 or degrees[j] == 1
        if m == 4:
            if at_end:
                return finite_type("B", k)
            return finite_type("F", 4) if k == 4 else None
        # m == 5
        if at_end and k in (3, 4):
            return finite_type("H", k)
        return None

    branch = [v for v in range(k) if degrees[v] >= 3]
    if not branch:
        return finite_type("A", k) if _path_order(k, adj) else None
    if len(branch) > 1 or degrees[branch[0]] != 3:
        return None
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, v = 1, centre, start
        while True:
            nxt = [w for w in adj[v] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, v = v, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return finite_type("D", k)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return finite_type("E", k)
    return None


def finite_type_of(M: CoxeterMatrix) -> Optional[List[FiniteType]]:
    """Irreducible finite factors of ``M``, or None if the group is infinite."""
    factors = []
    for comp in components(M):
        ft = classify_finite(restrict(M, comp))
        if ft is None:
            return None
        factors.append(ft)
    return factors


def is_finite(M: CoxeterMatrix) -> bool:
    return finite_type_of(M) is not None


def solomon_polynomial(types: Union[FiniteType, Iterable[FiniteType]]) -> IntPolynomial:
    """Growth polynomial ``[m1+1, ..., mk+1]`` of a finite Coxeter group.

    Accepts a single irreducible type or an iterable of factors; the empty
    iterable is the trivial group and gives 1.
    """
    if isinstance(types, FiniteType):
        types = [types]
    return bracket_product(e + 1 for ft in types for e in ft.exponents)


def finite_subsets(M: CoxeterMatrix) -> List[Tuple[int, ...]]:
    """All generator subsets spanning a finite parabolic subgroup.

    Subsets are produced level by level; a candidate is only classified if
    every subset obtained by dropping one generator is already finite.
    Ordered by size, then lexicographically.
    """
    return [T for T, _ in finite_parabolics(M)]


def finite_parabolics(M: CoxeterMatrix) -> List[Tuple[Tuple[int, ...], List[FiniteType]]]:
    """Like :func:`finite_subsets` but also returns each subset's factors."""
    n = M.size
    if n > MAX_ENUMERATION_SIZE:
        raise EnumerationLimitError(
            f"{n} generators exceeds the enumeration limit {MAX_ENUMERATION_SIZE}"
        )
    result: List[Tuple[Tuple[int, ...], List[FiniteType]]] = [((), [])]
    level = [()]
    while level:
        known = set(level)
        nxt = []
        for T in level:
            start = T[-1] + 1 if T else 0
            for g in range(start, n):
                cand = T + (g,)
                if any(cand[:i] + cand[i + 1 :] not in known for i in range(len(cand))):
                    continue
                factors = finite_type_of(restrict(M, cand))
                if factors is not None:
                    nxt.append(cand)
                    result.append((cand, factors))
        level = nxt
    return result


def simplex_matrix(p: int, q: int, r: int, s: int) -> CoxeterMatrix:
    """Coxeter matrices for the three ideal simplices with the given angle counts.

    Generators are numbered 0..3.  Only (2,2,0,2), (2,0,4,0) and (0,6,0,0)
    are available.
    """
    table = {
        (2, 2, 0, 2): {(0, 1): 2, (2, 3): 2, (0, 2): 3, (1, 3): 3, (0, 3): 6, (1, 2): 6},
        (2, 0, 4, 0): {(0, 1): 2, (2, 3): 2, (0, 2): 4, (1, 3): 4, (0, 3): 4, (1, 2): 4},
        (0, 6, 0, 0): {pair: 3 for pair in combinations(range(4), 2)},
    }
    try:
        labels = table[p, q, r, s]
    except KeyError:
        raise CoxeterError(f"no simplex matrix for angle counts {(p, q, r, s)}") from None
    return CoxeterMatrix.from_labels(4, labels)
