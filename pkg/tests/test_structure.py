import pytest

from ecomdet.errors import EmptyPhi, NotEcom
from ecomdet.generate import s7_model
from ecomdet.semigroup import MulTable
from ecomdet.structure import (EcomProfile, build_profile, cycle_notation, i_slice, leq_l, leq_r, ll, ll_two_step, phi,
                               plus, sigma_search, tilde_classes)
from conftest import CHAIN2, LEFT_ZERO, NULL2, TRIVIAL


def lab(S, ids):
    return {S.labels[i] for i in ids}


def test_phi_s1(appendix):
    S = appendix["S1"]
    y = S.index("y")
    assert lab(S, phi(S, y, "right")) == {"t"}
    assert lab(S, phi(S, y, "left")) == {"u", "t"}
    for e in S.idempotents:
        assert e in phi(S, e, "left") and e in phi(S, e, "right")


def test_plus_s1(appendix):
    S = appendix["S1"]
    y = S.index("y")
    assert S.labels[plus(S, y, "right")] == "t"
    assert S.labels[plus(S, y, "left")] == "u"
    p = build_profile(S)
    for e in S.idempotents:
        assert p.plusR[e] == e == p.plusL[e]


S9_PLUS = {"0": ("0", "0"), "y": ("v", "v"), "z": ("q", "q"), "u": ("q", "v"), "t": ("v", "q"),
           "w": ("q", "q"), "v": ("v", "v"), "q": ("q", "q")}


def test_plus_s9_frozen(appendix):
    S = appendix["S9"]
    p = build_profile(S)
    got = {S.labels[s]: (S.labels[p.plusR[s]], S.labels[p.plusL[s]]) for s in S.elements}
    assert got == S9_PLUS


def test_plus_s7():
    S = s7_model()
    p = build_profile(S)
    L = {lab: S.index(lab) for lab in S.labels}
    assert p.plusR[L["s"]] == L["e"] and p.plusL[L["t"]] == L["f"]
    for x in ("st", "t", "et", "ht", "gt"):
        assert p.plusR[L[x]] == L["1"]
    for x in ("st", "s", "sf", "sh", "sg"):
        assert p.plusL[L[x]] == L["1"]


def test_profile_rejections():
    with pytest.raises(NotEcom):
        build_profile(LEFT_ZERO)
    with pytest.raises(EmptyPhi):
        build_profile(MulTable([[0, 0, 0], [0, 0, 0], [0, 0, 2]]))


def test_tilde_classes_s1(appendix):
    S = appendix["S1"]
    tc = tilde_classes(build_profile(S))
    assert {frozenset(lab(S, c)) for c in tc["r"]} == {frozenset({"0"}), frozenset({"y", "t"}), frozenset({"z", "u"})}
    assert all(len(c) == 1 for c in tc["h"]) and len(tc["h"]) == 5


def test_tilde_classes_trivial():
    tc = tilde_classes(build_profile(TRIVIAL))
    assert tc["r"] == tc["l"] == tc["h"] == [frozenset({0})]


def test_ll_s2(appendix):
    S = appendix["S2"]
    p = build_profile(S)
    i = S.index
    assert ll(p, i("t"), i("w")) and ll(p, i("u"), i("w"))
    assert S.prod[i("t")][i("u")] == i("z") and S.prod[i("w")][i("w")] == i("y")
    assert not ll(p, i("z"), i("y"))
    assert all(ll(p, s, s) for s in S.elements)


def test_ll_s3(appendix):
    S = appendix["S3"]
    p = build_profile(S)
    i = S.index
    assert ll(p, i("s'"), i("s")) and ll(p, i("t'"), i("t"))
    a, b = S.prod[i("s'")][i("t'")], S.prod[i("s")][i("t")]
    assert (S.labels[a], S.labels[b]) == ("a", "b")
    assert not ll(p, a, b)


def test_ll_matches_two_step(appendix):
    for S in appendix.values():
        try:
            p = build_profile(S)
        except EmptyPhi:
            continue
        for s in S.elements:
            for t in S.elements:
                assert ll(p, s, t) == ll_two_step(S, s, t)
                assert leq_r(S, s, t) == (s == S.prod[t][p.plusR[s]])
                assert leq_l(S, s, t) == (s == S.prod[p.plusL[s]][t])


def test_i_slices(appendix):
    S1, S6 = appendix["S1"], appendix["S6"]
    p1, p6 = build_profile(S1), build_profile(S6)
    assert lab(S1, i_slice(p1, S1.index("t"), "right")) == {"0", "z", "u"}
    assert i_slice(p1, S1.zero, "right") == frozenset()
    v = S6.index("v")
    assert lab(S6, i_slice(p6, v, "left")) == {"0", "y", "z", "u", "w"}
    assert lab(S6, i_slice(p6, v, "right")) == {"0", "z", "u", "t", "w"}


def test_i_slice_not_always_two_sided(appendix):
    S = appendix["S1"]
    Ir = i_slice(build_profile(S), S.index("t"), "right")
    assert any(S.prod[s][x] not in Ir for s in Ir for x in S.elements)


def test_i_slice_outside_local_monoid(appendix):
    S = appendix["S4"]
    w = S.index("w")
    wSw = {S.prod[S.prod[w][s]][w] for s in S.elements}
    assert not set(i_slice(build_profile(S), w, "right")) <= wSw


def test_sigma_s5_s6(appendix):
    S5, S6 = appendix["S5"], appendix["S6"]
    sp, sigma = sigma_search(build_profile(S5))
    assert lab(S5, sp) == {"u", "t"} and cycle_notation(sigma) == "(1,2)"
    sp, sigma = sigma_search(build_profile(S6))
    assert [S6.labels[s] for s in sp] == ["y", "z", "t"] and cycle_notation(sigma) == "(1,2,3)"


def test_sigma_central():
    sp, sigma = sigma_search(build_profile(CHAIN2))
    assert sp == [] and sigma == () and cycle_notation(sigma) == "()"


def test_sigma_absent():
    # hand-made + maps on S' = {a} whose values cannot be matched
    p = EcomProfile(NULL2, (0, 0), (0, 1))
    assert sigma_search(p) is None
