"""The zeta transform over the order << and the product that makes it an
algebra isomorphism.

Algebra elements are plain dicts ``{element id: integer coefficient}``
without zero entries (``AlgVec``).  ``Z(s)`` is the sum of everything
below s in <<; ``star`` is the product transported along Z, so that
``Z(a) * Z(b)`` (star) equals ``Z(ab)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

from .errors import NonTermination, StarMismatch
from .linalg import int_det
from .poset import moebius
from .structure import EcomProfile, idem_lt

AlgVec = dict[int, int]


# -- vector helpers -----------------------------------------------------------


def vec_add(*vs: Mapping[int, int], scale: Iterable[int] | None = None) -> AlgVec:
    out: AlgVec = {}
    scales = list(scale) if scale is not None else [1] * len(vs)
    for v, c in zip(vs, scales):
        for k, a in v.items():
            out[k] = out.get(k, 0) + c * a
    return {k: a for k, a in out.items() if a}


def vec_scale(v: Mapping[int, int], c: int) -> AlgVec:
    return {k: c * a for k, a in v.items()} if c else {}


def vec_mul(S, a: Mapping[int, int], b: Mapping[int, int]) -> AlgVec:
    """Product in the semigroup algebra."""
    out: AlgVec = {}
    for s, x in a.items():
        row = S.prod[s]
        for t, y in b.items():
            u = row[t]
            out[u] = out.get(u, 0) + x * y
    return {k: v for k, v in out.items() if v}


def drop(v: Mapping[int, int], ids: Iterable[int]) -> AlgVec:
    ids = set(ids)
    return {k: a for k, a in v.items() if k not in ids}


def format_vec(v: Mapping[int, int], labels) -> str:
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        c = v[k]
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        body = mag + labels[k]
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


# -- Z transform ---------------------------------------------------------------


@dataclass(frozen=True)
class ZMap:
    """Zeta transform over (S, <<) and its Moebius inverse, column by column."""

    columns: tuple[AlgVec, ...]
    inverse: tuple[AlgVec, ...]
    mu: tuple[tuple[int, ...], ...]

    def apply(self, v: Mapping[int, int]) -> AlgVec:
        return vec_add(*(self.columns[s] for s in v), scale=list(v.values()))

    def apply_inverse(self, v: Mapping[int, int]) -> AlgVec:
        return vec_add(*(self.inverse[s] for s in v), scale=list(v.values()))

    def matrix(self) -> list[list[int]]:
        n = len(self.columns)
        return [[self.columns[s].get(t, 0) for s in range(n)] for t in range(n)]

    def inverse_matrix(self) -> list[list[int]]:
        n = len(self.columns)
        return [[self.inverse[s].get(t, 0) for s in range(n)] for t in range(n)]


def z_matrix(profile: EcomProfile) -> ZMap:
    P = profile.ll_relation
    n = P.m
    mu = moebius(P).mu
    cols = tuple({t: 1 for t in range(n) if P.leq[t][s]} for s in range(n))
    inv = tuple({t: mu[t][s] for t in range(n) if mu[t][s]} for s in range(n))
    Z = ZMap(cols, inv, tuple(tuple(r) for r in mu))
    zm, zi = Z.matrix(), Z.inverse_matrix()
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    prodm = [[sum(zm[i][k] * zi[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prodm == ident, "Z * Z^-1 != I"
    assert int_det(zm) in (1, -1), "Z is not unimodular"
    return Z


# -- epsilon ---------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonResult:
    eps: int
    steps: int
    trace: tuple[tuple[int, int], ...]  # (s_n, t_n) for n = 0..steps


def epsilon(profile: EcomProfile, s: int, t: int) -> EpsilonResult:
    """Iterate s_{n+1} = s_n t_n^{+l}, t_{n+1} = s_n^{+r} t_n until t_n^{+l} = s_n^{+r}."""
    S, pR, pL = profile.S, profile.plusR, profile.plusL
    cap = len(S.idempotents) + 1
    sn, tn = s, t
    trace = [(sn, tn)]
    steps = 0
    while pL[tn] != pR[sn]:
        if steps >= cap:
            raise NonTermination(f"epsilon({S.labels[s]}, {S.labels[t]}) did not stabilise")
        sn, tn = S.prod[sn][pL[tn]], S.prod[pR[sn]][tn]
        steps += 1
        trace.append((sn, tn))
    return EpsilonResult(pR[sn], steps, tuple(trace))


@dataclass(frozen=True)
class EpsilonTable:
    eps: tuple[tuple[int, ...], ...]
    steps: tuple[tuple[int, ...], ...]


def epsilon_table(profile: EcomProfile) -> EpsilonTable:
    n = profile.S.n
    res = [[epsilon(profile, s, t) for t in range(n)] for s in range(n)]
    return EpsilonTable(
        tuple(tuple(r.eps for r in row) for row in res),
        tuple(tuple(r.steps for r in row) for row in res),
    )


def e_st(profile: EcomProfile, s: int, t: int) -> frozenset[int]:
    """E^{st} = {e in E(S) : set = st}."""
    S = profile.S
    st = S.prod[s][t]
    return frozenset(e for e in S.idempotents if S.prod[S.prod[s][e]][t] == st)


# -- guarded products ----------------------------------------------------------


def _sharp_guard(profile: EcomProfile, s: int, t: int) -> bool:
    pR, pL = profile.plusR, profile.plusL
    st = profile.S.prod[s][t]
    return pL[s] == pL[st] and pR[t] == pR[st] and pR[s] == pL[t]


def sharp(profile: EcomProfile, s: int, t: int) -> AlgVec:
    return {profile.S.prod[s][t]: 1} if _sharp_guard(profile, s, t) else {}


def sharp_e(profile: EcomProfile, s: int, t: int, e: int) -> AlgVec:
    if profile.plusR[s] != e:
        return {}
    return sharp(profile, s, t)


def sharp_vec(profile: EcomProfile, a: Mapping[int, int], b: Mapping[int, int]) -> AlgVec:
    """Bilinear extension of the guarded product."""
    out: AlgVec = {}
    for s, x in a.items():
        for t, y in b.items():
            for u, c in sharp(profile, s, t).items():
                out[u] = out.get(u, 0) + c * x * y
    return {k: v for k, v in out.items() if v}


def star_on_Z(profile: EcomProfile, eps: EpsilonTable, Z: ZMap, s: int, t: int) -> AlgVec:
    """Z(s) star Z(t) by its defining double sum; must equal Z(st)."""
    S, pR, pL = profile.S, profile.plusR, profile.plusL
    out: AlgVec = {}
    for s1 in Z.columns[s]:
        left = S.prod[pL[s1]][s]
        for t1 in Z.columns[t]:
            right = S.prod[t][pR[t1]]
            e = eps.eps[left][right]
            for u, c in sharp_e(profile, s1, t1, e).items():
                out[u] = out.get(u, 0) + c
    out = {k: v for k, v in out.items() if v}
    expected = Z.columns[S.prod[s][t]]
    if out != expected:
        raise StarMismatch(f"Z({S.labels[s]})*Z({S.labels[t]}) != Z({S.labels[S.prod[s][t]]})")
    return out


# -- the star product on the standard basis -------------------------------------


class StarTable:
    """Structure constants of star on the basis S: ``entry(u, v)`` is u star v."""

    def __init__(self, profile: EcomProfile, Z: ZMap | None = None):
        self.profile = profile
        self.S = profile.S
        self.Z = Z or z_matrix(profile)
        n = self.S.n
        inv = self.Z.inverse
        self.entries: tuple[tuple[AlgVec, ...], ...] = tuple(
            tuple(self.Z.apply(vec_mul(self.S, inv[u], inv[v])) for v in range(n)) for u in range(n)
        )

    def entry(self, u: int, v: int) -> AlgVec:
        return self.entries[u][v]

    def mul(self, a: Mapping[int, int], b: Mapping[int, int]) -> AlgVec:
        out: AlgVec = {}
        for u, x in a.items():
            row = self.entries[u]
            for v, y in b.items():
                for w, c in row[v].items():
                    out[w] = out.get(w, 0) + c * x * y
        return {k: v for k, v in out.items() if v}

    @property
    def basis(self) -> list[int]:
        return list(self.S.elements)

    @cached_property
    def contracted_basis(self) -> list[int]:
        return [s for s in self.S.elements if s != self.S.zero]

    def contracted_entry(self, u: int, v: int) -> AlgVec:
        """u star v in the contracted algebra (zero element identified with 0)."""
        z = self.S.zero
        return drop(self.entries[u][v], [] if z is None else [z])

    def associativity_failure(self) -> tuple[int, int, int] | None:
        n = self.S.n
        for u, v, w in product(range(n), repeat=3):
            if self.mul(self.entries[u][v], {w: 1}) != self.mul({u: 1}, self.entries[v][w]):
                return (u, v, w)
        return None


def star_basis(profile: EcomProfile, u: int, v: int, Z: ZMap | None = None) -> AlgVec:
    """u star v = Z(Z^-1(u) Z^-1(v))."""
    Z = Z or z_matrix(profile)
    return Z.apply(vec_mul(profile.S, Z.inverse[u], Z.inverse[v]))


def check_diamond(table: StarTable) -> tuple[bool, tuple[int, int] | None]:
    """True iff u star v = 0 whenever u^{+r} != v^{+l}; otherwise the first witness."""
    pR, pL = table.profile.plusR, table.profile.plusL
    for u in table.basis:
        for v in table.basis:
            if pR[u] != pL[v] and table.entries[u][v]:
                return False, (u, v)
    return True, None


@dataclass(frozen=True)
class ConjectureVerdict:
    counterexample: bool
    premise_witness: tuple[int, int] | None

    def __str__(self) -> str:
        return "COUNTEREXAMPLE" if self.counterexample else "CONSISTENT"


def conjecture_uu(table: StarTable, theta_nonzero: bool) -> ConjectureVerdict:
    """Counterexample iff some u star v != 0 with u^{+r} != v^{+l} while theta != 0."""
    holds, witness = check_diamond(table)
    return ConjectureVerdict((not holds) and theta_nonzero, witness)


def open_problem_set(profile: EcomProfile) -> list[tuple[int, int, int]]:
    """All (s, t, e): st = set, s sharp t != 0 and e < s^{+r}."""
    S = profile.S
    out = []
    for s in S.elements:
        for t in S.elements:
            if not _sharp_guard(profile, s, t):
                continue
            st = S.prod[s][t]
            for e in S.idempotents:
                if idem_lt(S, e, profile.plusR[s]) and S.prod[S.prod[s][e]][t] == st:
                    out.append((s, t, e))
    return out
