"""Idempotent-stabiliser structure of a semigroup with commuting idempotents.

For each element s the sets phi_r(s) = {e : se = s} and phi_l(s) =
{e : es = s} are closed under products of idempotents, so each has a least
element, written s^{+r} / s^{+l} here as ``plusR[s]`` / ``plusL[s]``.
Everything else (tilde classes, the order <<, the slices I^r_e / I^l_e)
is read off these two maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from .errors import EmptyPhi, MeetOutsidePhi, NotEcom
from .poset import Poset, meet, meet_semilattice_of_idempotents
from .semigroup import MulTable, is_ecom

Side = Literal["left", "right"]


def phi(S: MulTable, s: int, side: Side) -> frozenset[int]:
    if side == "right":
        return frozenset(e for e in S.idempotents if S.prod[s][e] == s)
    if side == "left":
        return frozenset(e for e in S.idempotents if S.prod[e][s] == s)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def idem_leq(S: MulTable, e: int, f: int) -> bool:
    """e <= f in the semilattice E(S)."""
    return S.prod[e][f] == e


def idem_lt(S: MulTable, e: int, f: int) -> bool:
    return e != f and S.prod[e][f] == e


def plus(S: MulTable, s: int, side: Side, semilattice: tuple[Poset, list[int]] | None = None) -> int:
    """Least idempotent of phi(s, side)."""
    ph = phi(S, s, side)
    if not ph:
        raise EmptyPhi(f"phi_{side[0]}({S.labels[s]}) is empty")
    E_poset, E = semilattice or meet_semilattice_of_idempotents(S)
    pos = {e: i for i, e in enumerate(E)}
    m = meet(E_poset, [pos[e] for e in ph])
    if m is None or E[m] not in ph:
        raise MeetOutsidePhi(f"meet of phi_{side[0]}({S.labels[s]}) is not in the set")
    return E[m]


@dataclass(frozen=True)
class EcomProfile:
    S: MulTable
    plusR: tuple[int, ...]
    plusL: tuple[int, ...]

    # -- tilde classes ----------------------------------------------------

    def tilde_L(self, e: int) -> list[int]:
        """L~_e = {s : s^{+r} = e}."""
        return [s for s in self.S.elements if self.plusR[s] == e]

    def tilde_R(self, e: int) -> list[int]:
        """R~_e = {s : s^{+l} = e}."""
        return [s for s in self.S.elements if self.plusL[s] == e]

    def tilde_H(self, s: int) -> list[int]:
        return [t for t in self.S.elements if self.plusR[t] == self.plusR[s] and self.plusL[t] == self.plusL[s]]

    @cached_property
    def tilde_classes(self) -> dict[str, list[frozenset[int]]]:
        """Partitions of S by ~_r, ~_l and ~ (classes in order of first element)."""
        return {
            "r": _partition(self.S.n, lambda s: self.plusR[s]),
            "l": _partition(self.S.n, lambda s: self.plusL[s]),
            "h": _partition(self.S.n, lambda s: (self.plusR[s], self.plusL[s])),
        }

    # -- the order << ----------------------------------------------------

    def ll(self, s: int, t: int) -> bool:
        """s << t  iff  s = s^{+l} t s^{+r}."""
        p = self.S.prod
        return s == p[p[self.plusL[s]][t]][self.plusR[s]]

    @cached_property
    def ll_relation(self) -> Poset:
        n = self.S.n
        return Poset([[self.ll(s, t) for t in range(n)] for s in range(n)])

    def ll_below(self, s: int) -> list[int]:
        return [t for t in self.S.elements if self.ll(t, s)]

    # -- slices ------------------------------------------------------------

    def i_slice(self, e: int, side: Side) -> frozenset[int]:
        plusmap = self.plusR if side == "right" else self.plusL
        return frozenset(s for s in self.S.elements if idem_lt(self.S, plusmap[s], e))

    @property
    def iSliceR(self) -> dict[int, frozenset[int]]:
        return {e: self.i_slice(e, "right") for e in self.S.idempotents}

    @property
    def iSliceL(self) -> dict[int, frozenset[int]]:
        return {e: self.i_slice(e, "left") for e in self.S.idempotents}

    # -- sigma permutation -----------------------------------------------

    def sigma_search(self) -> tuple[list[int], tuple[int, ...]] | None:
        return sigma_search(self)


def _partition(n, key) -> list[frozenset[int]]:
    groups: dict = {}
    for s in range(n):
        groups.setdefault(key(s), []).append(s)
    return [frozenset(g) for g in groups.values()]


def build_profile(S: MulTable) -> EcomProfile:
    """Compute the + maps; needs commuting idempotents and non-empty phi sets."""
    if not is_ecom(S):
        raise NotEcom("idempotents do not commute")
    semilattice = meet_semilattice_of_idempotents(S)
    plusR = tuple(plus(S, s, "right", semilattice) for s in S.elements)
    plusL = tuple(plus(S, s, "left", semilattice) for s in S.elements)
    return EcomProfile(S, plusR, plusL)


def tilde_classes(profile: EcomProfile) -> dict[str, list[frozenset[int]]]:
    return profile.tilde_classes


def ll(profile: EcomProfile, s: int, t: int) -> bool:
    return profile.ll(s, t)


def i_slice(profile: EcomProfile, e: int, side: Side) -> frozenset[int]:
    return profile.i_slice(e, side)


# -- the two-step definitions, kept for cross-checking --------------------


def leq_r(S: MulTable, s: int, t: int) -> bool:
    """s <=^r t  iff  s = te for some idempotent e."""
    return any(S.prod[t][e] == s for e in S.idempotents)


def leq_l(S: MulTable, s: int, t: int) -> bool:
    return any(S.prod[e][t] == s for e in S.idempotents)


def ll_two_step(S: MulTable, s: int, t: int) -> bool:
    """s << t via an intermediate u: s <=^r u <=^l t or s <=^l u <=^r t."""
    return any(
        (leq_r(S, s, u) and leq_l(S, u, t)) or (leq_l(S, s, u) and leq_r(S, u, t))
        for u in S.elements
    )


def sigma_search(profile: EcomProfile) -> tuple[list[int], tuple[int, ...]] | None:
    """Permutation sigma of S' = {s : s^{+r} != s^{+l}} with s_i^{+l} = s_sigma(i)^{+r}.

    S' is listed in ingestion order.  The second requirement,
    s_i^{+r} = s_{sigma^-1(i)}^{+l}, is the first one read at sigma^-1(i), so a
    sigma exists iff both + maps take the same multiset of values on S'.
    Returns (S', sigma as 0-based images) with the lexicographically least
    sigma, or None.
    """
    sp = [s for s in profile.S.elements if profile.plusR[s] != profile.plusL[s]]
    used = [False] * len(sp)
    sigma = []
    for s in sp:
        target = profile.plusL[s]
        j = next((j for j, t in enumerate(sp) if not used[j] and profile.plusR[t] == target), None)
        if j is None:
            return None
        used[j] = True
        sigma.append(j)
    return sp, tuple(sigma)


def cycle_notation(sigma: tuple[int, ...]) -> str:
    """1-based cycle notation, fixed points omitted; '()' for the identity."""
    seen = [False] * len(sigma)
    cycles = []
    for i in range(len(sigma)):
        if seen[i] or sigma[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = sigma[j]
        cycles.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"
