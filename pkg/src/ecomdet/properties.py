"""Executable versions of the structural facts the engine relies on.

Each ``prop_*`` function raises ``AssertionError`` with a readable
message when the fact fails on the given semigroup.  ``run_properties``
applies every applicable check and returns the names that failed.
"""

from __future__ import annotations

import random
from typing import Callable

from .det import cayley, check_contracted_identity, contracted_cayley, det_laplace
from .linalg import int_det
from .poset import meet, meet_semilattice_of_idempotents, moebius
from .semigroup import (MulTable, check_star2, green, is_ecom, local_monoid, maximal_subgroup,
                        unital_check)
from .star import StarTable, e_st, epsilon, epsilon_table, star_on_Z, vec_mul, z_matrix
from .structure import EcomProfile, build_profile, idem_leq, leq_l, leq_r, ll_two_step, phi


def _lab(S, *ids):
    return ", ".join(S.labels[i] for i in ids)


# -- semigroup-level ------------------------------------------------------------


def prop_h_class_is_unit_group(S: MulTable) -> None:
    g = green(S)
    for e in S.idempotents:
        assert set(g.h_class(e)) == set(maximal_subgroup(S, e)), f"H-class of {S.labels[e]} != units of eSe"
        assert set(maximal_subgroup(S, e)) <= set(local_monoid(S, e))


def prop_green_refinement(S: MulTable) -> None:
    g = green(S)
    for a in S.elements:
        for b in S.elements:
            if g.hClass[a] == g.hClass[b]:
                assert g.rClass[a] == g.rClass[b] and g.lClass[a] == g.lClass[b]
            if g.rClass[a] == g.rClass[b] or g.lClass[a] == g.lClass[b]:
                assert g.jClass[a] == g.jClass[b]


def prop_unital_gives_nonempty_phi(S: MulTable) -> None:
    if unital_check(S) is None:
        return
    for s in S.elements:
        assert phi(S, s, "right") and phi(S, s, "left"), f"phi({S.labels[s]}) empty though CS is unital"


def prop_semilattice_meets(S: MulTable) -> None:
    P, E = meet_semilattice_of_idempotents(S)
    mu = moebius(P)  # asserts both convolution identities
    assert mu.mu[0][0] == 1
    for i, e in enumerate(E):
        for j, f in enumerate(E):
            m = meet(P, [i, j])
            assert m is not None and E[m] == S.prod[e][f], f"meet({_lab(S, e, f)}) != product"


# -- profile-level ----------------------------------------------------------------


def prop_plus_minimum(p: EcomProfile) -> None:
    S = p.S
    for s in S.elements:
        for side, plus in (("right", p.plusR), ("left", p.plusL)):
            ph = phi(S, s, side)
            assert plus[s] in ph and all(idem_leq(S, plus[s], e) for e in ph)
    for block in p.tilde_classes["r"]:
        assert len([s for s in block if s in S.idempotents]) == 1, "L~ class without a unique idempotent"
    for block in p.tilde_classes["l"]:
        assert len([s for s in block if s in S.idempotents]) == 1, "R~ class without a unique idempotent"


def prop_order_closed_forms(p: EcomProfile) -> None:
    S, pR, pL = p.S, p.plusR, p.plusL
    P = p.ll_relation  # validated as a poset on construction
    for s in S.elements:
        for t in S.elements:
            r, l = leq_r(S, s, t), leq_l(S, s, t)
            # closed forms of the one-sided orders
            assert r == (s == S.prod[t][pR[s]]), f"<=^r closed form fails at {_lab(S, s, t)}"
            assert l == (s == S.prod[pL[s]][t]), f"<=^l closed form fails at {_lab(S, s, t)}"
            # + maps are monotone
            if r or l:
                assert idem_leq(S, pL[s], pL[t]) and idem_leq(S, pR[s], pR[t]), f"+ maps not monotone along <=^r/<=^l at {_lab(S, s, t)}"
            # closed form of <<
            assert p.ll(s, t) == ll_two_step(S, s, t), f"<< closed form differs from two-step definition at {_lab(S, s, t)}"
            if p.ll(s, t):
                assert idem_leq(S, pL[s], pL[t]) and idem_leq(S, pR[s], pR[t]), f"+ maps not monotone along << at {_lab(S, s, t)}"
    # << extends <= on idempotents
    for e in S.idempotents:
        for f in S.idempotents:
            assert P.leq[e][f] == idem_leq(S, e, f), f"<< does not extend <= at {_lab(S, e, f)}"


def prop_slice_ideals(p: EcomProfile) -> None:
    S = p.S
    g = green(S)
    for e in S.idempotents:
        Ir, Il = p.i_slice(e, "right"), p.i_slice(e, "left")
        # slices are one-sided ideals
        for s in Ir:
            assert all(S.prod[t][s] in Ir for t in S.elements), f"I^r_{S.labels[e]} is not a left ideal"
        for s in Il:
            assert all(S.prod[s][t] in Il for t in S.elements), f"I^l_{S.labels[e]} is not a right ideal"
        assert (not Ir) == (not Il)
        # an empty slice means Se is one L-class
        Se = {S.prod[s][e] for s in S.elements}
        eS = {S.prod[e][s] for s in S.elements}
        Le, Re = set(g.l_class(e)), set(g.r_class(e))
        assert (not Ir) == (Se == Le == set(p.tilde_L(e))), f"Se / L_e / L~_e mismatch at {S.labels[e]}"
        assert (not Il) == (eS == Re == set(p.tilde_R(e))), f"eS / R_e / R~_e mismatch at {S.labels[e]}"
        # decompositions
        assert Se == set(Ir) | set(p.tilde_L(e)) and not (set(Ir) & set(p.tilde_L(e)))
        assert eS == set(Il) | set(p.tilde_R(e)) and not (set(Il) & set(p.tilde_R(e)))
        EI = [f for f in S.idempotents if f in Ir]
        assert set(Ir) == {s for f in EI for s in p.tilde_L(f)}
        assert set(Il) == {s for f in EI for s in p.tilde_R(f)}


def prop_slice_cardinalities(p: EcomProfile) -> None:
    S = p.S
    for e in S.idempotents:
        Ir, Il = p.i_slice(e, "right"), p.i_slice(e, "left")
        assert {f for f in Ir if f in S.idempotents} == {f for f in Il if f in S.idempotents}
        assert len(Ir) == len(Il), f"|I^r_{S.labels[e]}| != |I^l_{S.labels[e]}|"
        assert len(p.tilde_L(e)) == len(p.tilde_R(e)), f"|L~_{S.labels[e]}| != |R~_{S.labels[e]}|"


def prop_epsilon_sequences(p: EcomProfile) -> None:
    S, pR, pL = p.S, p.plusR, p.plusL
    for s in S.elements:
        for t in S.elements:
            res = epsilon(p, s, t)
            st = S.prod[s][t]
            tr = res.trace
            for n in range(len(tr)):
                sn, tn = tr[n]
                # s_n t_n = st and s_n e t_n = s e t
                assert S.prod[sn][tn] == st, f"s_n t_n != st for ({_lab(S, s, t)}), n={n}"
                for e in S.idempotents:
                    assert S.prod[S.prod[sn][e]][tn] == S.prod[S.prod[s][e]][t]
                if n + 1 < len(tr):
                    s1, t1 = tr[n + 1]
                    # closed forms and descent of the + values
                    assert s1 == S.prod[s][pL[tn]] and t1 == S.prod[pR[sn]][t]
                    for a in (pR[s1], pL[t1]):
                        assert idem_leq(S, a, pR[sn]) and idem_leq(S, a, pL[tn])
            eps = res.eps
            assert pR[S.prod[s][eps]] == eps == pL[S.prod[eps][t]], f"epsilon fixed point at {_lab(S, s, t)}"
            assert S.prod[S.prod[s][eps]][t] == st
            E = e_st(p, s, t)
            assert pR[s] in E and pL[t] in E and eps in E
            assert idem_leq(S, eps, pR[s]) and idem_leq(S, eps, pL[t])


def prop_z_and_star(p: EcomProfile, rng: random.Random | None = None, samples: int = 5) -> None:
    S = p.S
    Z = z_matrix(p)  # asserts Z Z^-1 = I and unimodularity
    assert int_det(Z.matrix()) in (1, -1)
    eps = epsilon_table(p)
    for s in S.elements:
        for t in S.elements:
            star_on_Z(p, eps, Z, s, t)  # raises StarMismatch
    T = StarTable(p, Z)
    bad = T.associativity_failure()
    assert bad is None, f"star not associative at {_lab(S, *bad)}" if bad else ""
    rng = rng or random.Random(0)
    for _ in range(samples):
        a = {i: rng.randint(-3, 3) for i in S.elements}
        b = {i: rng.randint(-3, 3) for i in S.elements}
        a = {k: v for k, v in a.items() if v}
        b = {k: v for k, v in b.items() if v}
        assert Z.apply(vec_mul(S, a, b)) == T.mul(Z.apply(a), Z.apply(b)), "Z is not multiplicative"


def prop_contracted_identity(S: MulTable) -> None:
    if S.zero is None or S.n > 12:
        return
    full = det_laplace(cayley(S))
    check_contracted_identity(S, full, det_laplace(contracted_cayley(S)))


# -- driver -----------------------------------------------------------------------

SEMIGROUP_PROPS: list[Callable[[MulTable], None]] = [
    prop_h_class_is_unit_group, prop_green_refinement, prop_unital_gives_nonempty_phi,
    prop_contracted_identity,
]
ECOM_PROPS: list[Callable[[MulTable], None]] = [prop_semilattice_meets]
PROFILE_PROPS: list[Callable[[EcomProfile], None]] = [
    prop_plus_minimum, prop_order_closed_forms, prop_slice_ideals, prop_slice_cardinalities, prop_epsilon_sequences, prop_z_and_star,
]


def applicable(S: MulTable) -> EcomProfile | None:
    """Profile when S is ECOM and satisfies the three standing conditions."""
    if not is_ecom(S) or not check_star2(S).all():
        return None
    return build_profile(S)


def run_properties(S: MulTable) -> list[str]:
    """Names of failing checks (empty when all pass)."""
    failed = []

    def run(f, arg):
        try:
            f(arg)
        except AssertionError as exc:
            failed.append(f"{f.__name__}: {exc}")

    for f in SEMIGROUP_PROPS:
        run(f, S)
    if is_ecom(S):
        for f in ECOM_PROPS:
            run(f, S)
    p = applicable(S)
    if p is not None:
        for f in PROFILE_PROPS:
            run(f, p)
    return failed

