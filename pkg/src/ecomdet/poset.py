"""Finite posets with zeta and Moebius functions (integer arithmetic only)."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotAntisymmetric, NotReflexive, NotTransitive


class Poset:
    """A partial order on 0..m-1; ``leq[x][y]`` is True iff x <= y."""

    def __init__(self, leq: Sequence[Sequence[bool]]):
        m = len(leq)
        self.m = m
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        for x in range(m):
            if len(self.leq[x]) != m:
                raise ValueError("relation must be square")
            if not self.leq[x][x]:
                raise NotReflexive(f"{x} is not <= itself")
        for x in range(m):
            for y in range(x + 1, m):
                if self.leq[x][y] and self.leq[y][x]:
                    raise NotAntisymmetric(f"{x} <= {y} and {y} <= {x}")
        for x in range(m):
            for y in range(m):
                if not self.leq[x][y]:
                    continue
                for z in range(m):
                    if self.leq[y][z] and not self.leq[x][z]:
                        raise NotTransitive(f"{x} <= {y} <= {z} but not {x} <= {z}")

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def below(self, y: int) -> list[int]:
        """Principal down-set {x : x <= y}."""
        return [x for x in range(self.m) if self.leq[x][y]]

    def above(self, x: int) -> list[int]:
        return [y for y in range(self.m) if self.leq[x][y]]

    def minimal(self, xs: Iterable[int] | None = None) -> list[int]:
        xs = list(range(self.m)) if xs is None else list(xs)
        return [x for x in xs if not any(self.lt(y, x) for y in xs)]

    @cached_property
    def linear_extension(self) -> list[int]:
        """Elements sorted so that x < y implies x comes first."""
        return sorted(range(self.m), key=lambda y: sum(self.leq[x][y] for x in range(self.m)))

    def zeta(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.leq]

    def moebius(self) -> "MoebiusTable":
        return moebius(self)


def build_poset(leq: Sequence[Sequence[bool]]) -> Poset:
    return Poset(leq)


class MoebiusTable:
    def __init__(self, mu: list[list[int]]):
        self.mu = mu

    def __call__(self, x: int, y: int) -> int:
        return self.mu[x][y]


def convolve(P: Poset, f: Sequence[Sequence[int]], g: Sequence[Sequence[int]]) -> list[list[int]]:
    """(f * g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)."""
    m = P.m
    out = [[0] * m for _ in range(m)]
    for x in range(m):
        for y in range(m):
            if P.leq[x][y]:
                out[x][y] = sum(f[x][z] * g[z][y] for z in range(m) if P.leq[x][z] and P.leq[z][y])
    return out


def delta(m: int) -> list[list[int]]:
    return [[int(x == y) for y in range(m)] for x in range(m)]


def moebius(P: Poset) -> MoebiusTable:
    """mu(x, x) = 1 and mu(x, y) = -sum_{x <= z < y} mu(x, z) by interval recursion."""
    m = P.m
    order = P.linear_extension
    mu = [[0] * m for _ in range(m)]
    for x in range(m):
        mu[x][x] = 1
        for y in order:
            if y == x or not P.leq[x][y]:
                continue
            mu[x][y] = -sum(mu[x][z] for z in order if z != y and P.leq[x][z] and P.leq[z][y])
    zeta = P.zeta()
    d = delta(m)
    assert convolve(P, zeta, mu) == d and convolve(P, mu, zeta) == d, "zeta*mu != delta"
    return MoebiusTable(mu)


def meet(P: Poset, xs: Iterable[int]) -> int | None:
    """Greatest lower bound of ``xs``, or None if it does not exist."""
    xs = list(xs)
    if not xs:
        return None
    lower = [z for z in range(P.m) if all(P.leq[z][x] for x in xs)]
    tops = [z for z in lower if all(P.leq[w][z] for w in lower)]
    return tops[0] if tops else None


def meet_semilattice_of_idempotents(S) -> tuple[Poset, list[int]]:
    """(E(S), <=) with e <= f iff ef = e, indexed by position in ``S.idempotents``.

    Returns the poset and the list mapping poset index -> element id.
    """
    E = list(S.idempotents)
    leq = [[S.prod[e][f] == e and S.prod[f][e] == e for f in E] for e in E]
    return Poset(leq), E
