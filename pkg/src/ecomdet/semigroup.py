"""Finite semigroups given by multiplication table, and their first-order
structure: idempotents, Green's relations, and the necessary conditions for
a non-vanishing determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .errors import NotAssociative, OutOfRange
from .linalg import solve_rational


class MulTable:
    """An associative n x n multiplication table on element ids 0..n-1.

    The row order of ``prod`` is the canonical basis order used by every
    matrix and determinant built from this semigroup.  ``labels`` name the
    elements (they show up as polynomial variable names).
    """

    def __init__(self, prod: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        n = len(prod)
        if n < 1:
            raise OutOfRange("a semigroup needs at least one element")
        rows = []
        for i, row in enumerate(prod):
            if len(row) != n:
                raise OutOfRange(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise OutOfRange(f"entry ({i}, {j}) = {v!r} outside 0..{n - 1}")
            rows.append(tuple(row))
        self.n = n
        self.prod = tuple(rows)
        if labels is None:
            labels = [f"e{i}" for i in range(n)]
        if len(labels) != n:
            raise OutOfRange(f"{len(labels)} labels for {n} elements")
        if len(set(labels)) != n:
            raise OutOfRange("element labels must be distinct")
        self.labels = tuple(labels)
        bad = find_nonassociative(self.prod)
        if bad is not None:
            raise NotAssociative(bad)
        self.zero = _detect_zero(self.prod)

    def mul(self, a: int, b: int) -> int:
        return self.prod[a][b]

    def mul_many(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.prod[acc][x]
        return acc

    @property
    def elements(self) -> range:
        return range(self.n)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __eq__(self, other) -> bool:
        return isinstance(other, MulTable) and self.prod == other.prod and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.prod, self.labels))

    def __repr__(self) -> str:
        return f"MulTable(n={self.n}, zero={self.zero})"

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.n) if self.prod[e][e] == e)


def build_table(entries: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> MulTable:
    return MulTable(entries, labels)


def find_nonassociative(prod: Sequence[Sequence[int]]):
    """First triple (a, b, c) with (ab)c != a(bc), or None."""
    n = len(prod)
    for a in range(n):
        ra = prod[a]
        for b in range(n):
            ab = prod[ra[b]]
            rb = prod[b]
            for c in range(n):
                if ab[c] != ra[rb[c]]:
                    return (a, b, c)
    return None


def is_associative(prod: Sequence[Sequence[int]]) -> bool:
    return find_nonassociative(prod) is None


def _detect_zero(prod) -> int | None:
    n = len(prod)
    for z in range(n):
        if all(prod[z][s] == z and prod[s][z] == z for s in range(n)):
            return z
    return None


def idempotents(S: MulTable) -> tuple[int, ...]:
    return S.idempotents


def is_ecom(S: MulTable) -> bool:
    """True iff all idempotents pairwise commute."""
    E = S.idempotents
    for e, f in product(E, repeat=2):
        if S.prod[e][f] != S.prod[f][e]:
            return False
    Eset = set(E)
    # commuting idempotents multiply to idempotents
    assert all(S.prod[e][f] in Eset for e, f in product(E, repeat=2)), "E(S) not closed"
    return True


def has_central_idempotents(S: MulTable) -> bool:
    return all(S.prod[e][s] == S.prod[s][e] for e in S.idempotents for s in S.elements)


def is_commutative(S: MulTable) -> bool:
    return all(S.prod[a][b] == S.prod[b][a] for a in S.elements for b in range(a))


def is_monoid(S: MulTable) -> int | None:
    """The identity element, if there is one."""
    for e in S.idempotents:
        if all(S.prod[e][s] == s == S.prod[s][e] for s in S.elements):
            return e
    return None


# -- Green's relations ------------------------------------------------------


@dataclass(frozen=True)
class GreenData:
    rClass: tuple[int, ...]
    lClass: tuple[int, ...]
    hClass: tuple[int, ...]
    jClass: tuple[int, ...]
    regular: tuple[bool, ...]

    def r_class(self, a: int) -> frozenset[int]:
        return _members(self.rClass, a)

    def l_class(self, a: int) -> frozenset[int]:
        return _members(self.lClass, a)

    def h_class(self, a: int) -> frozenset[int]:
        return _members(self.hClass, a)

    def j_class(self, a: int) -> frozenset[int]:
        return _members(self.jClass, a)


def _members(labels, a) -> frozenset[int]:
    return frozenset(i for i, lab in enumerate(labels) if lab == labels[a])


def _partition_labels(keys) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(k, len(seen)) for k in keys)


def right_ideal(S: MulTable, a: int) -> frozenset[int]:
    """aS^1"""
    return frozenset(S.prod[a]) | {a}


def left_ideal(S: MulTable, a: int) -> frozenset[int]:
    """S^1 a"""
    return frozenset(S.prod[s][a] for s in S.elements) | {a}


def two_sided_ideal(S: MulTable, a: int) -> frozenset[int]:
    """S^1 a S^1"""
    left = left_ideal(S, a)
    return frozenset(S.prod[x][s] for x in left for s in S.elements) | left


def green(S: MulTable) -> GreenData:
    ra = [right_ideal(S, a) for a in S.elements]
    la = [left_ideal(S, a) for a in S.elements]
    ja = [two_sided_ideal(S, a) for a in S.elements]
    regular = tuple(any(S.prod[S.prod[a][t]][a] == a for t in S.elements) for a in S.elements)
    return GreenData(
        rClass=_partition_labels(ra),
        lClass=_partition_labels(la),
        hClass=_partition_labels(zip(ra, la)),
        jClass=_partition_labels(ja),
        regular=regular,
    )


def local_monoid(S: MulTable, e: int) -> frozenset[int]:
    """eSe"""
    return frozenset(S.prod[S.prod[e][s]][e] for s in S.elements)


def maximal_subgroup(S: MulTable, e: int) -> frozenset[int]:
    """Group of units G_e of the monoid eSe."""
    M = local_monoid(S, e)
    return frozenset(x for x in M if any(S.prod[x][y] == e == S.prod[y][x] for y in M))


# -- necessary conditions ----------------------------------------------------


def check_s2(S: MulTable) -> bool:
    return len({v for row in S.prod for v in row}) == S.n


def check_star(S: MulTable) -> bool:
    """Each s fixes as many elements by left as by right multiplication."""
    for s in S.elements:
        left = sum(1 for t in S.elements if S.prod[s][t] == t)
        right = sum(1 for t in S.elements if S.prod[t][s] == t)
        if left != right:
            return False
    return True


def unital_check(S: MulTable) -> dict[int, Fraction] | None:
    """Identity of the semigroup algebra QS as {element: coefficient}, or None.

    Solves (sum c_t t) s = s = s (sum c_t t) for every s exactly.  The
    identity of an algebra is unique, so the answer does not depend on the
    elimination order.
    """
    n = S.n
    rows, rhs = [], []
    for s in S.elements:
        for u in S.elements:
            rows.append([int(S.prod[t][s] == u) for t in S.elements])
            rhs.append(int(u == s))
            rows.append([int(S.prod[s][t] == u) for t in S.elements])
            rhs.append(int(u == s))
    sol = solve_rational(rows, rhs)
    if sol is None:
        return None
    return {t: c for t, c in zip(range(n), sol) if c}


class Star2(NamedTuple):
    s2: bool
    star: bool
    unital: bool

    def all(self) -> bool:
        return self.s2 and self.star and self.unital

    def failing(self) -> list[str]:
        names = {"s2": "S^2 = S", "star": "condition (*)", "unital": "unital algebra"}
        return [names[k] for k, v in self._asdict().items() if not v]


def check_star2(S: MulTable) -> Star2:
    return Star2(check_s2(S), check_star(S), unital_check(S) is not None)


def relabel(S: MulTable, perm: Sequence[int]) -> MulTable:
    """Isomorphic copy where old element ``i`` becomes new element ``perm[i]``."""
    n = S.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    prod = [[perm[S.prod[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    labels = [S.labels[inv[a]] for a in range(n)]
    return MulTable(prod, labels)
