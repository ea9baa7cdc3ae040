import pytest

from ecomdet.det import cayley, det_laplace, det_probe, theta_exact, theta_tilde
from ecomdet.errors import NotCentral, PreconditionFailed
from ecomdet.factor import factor_central_idempotent, factor_main_theorem, star_cayley
from ecomdet.generate import s7_model
from ecomdet.poly import Poly
from ecomdet.semigroup import MulTable, has_central_idempotents
from ecomdet.star import StarTable
from ecomdet.structure import build_profile
from conftest import C2, CHAIN2, LEFT_ZERO, NULL2, TRIVIAL, xvars

# commutative band {0, a, b, 1} with ab = 0
DIAMOND_BAND = MulTable([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]], ["0", "a", "b", "1"])


def test_star_cayley_s9_entries(appendix):
    S = appendix["S9"]
    T = StarTable(build_profile(S))
    C = star_cayley(T, contracted=True)
    z, w = xvars(S, "z w")
    pos = {s: k for k, s in enumerate(C.row_ids)}
    i = S.index
    assert C[pos[i("w")], pos[i("w")]] == -z
    assert C[pos[i("q")], pos[i("w")]] == w
    full = star_cayley(T)
    assert full[S.zero, S.zero] == Poly.var(S.n, S.zero)


def test_factor_s9(appendix):
    S = appendix["S9"]
    rep = factor_main_theorem(S)
    assert rep.diamond and rep.overall and rep.contracted
    y, z = xvars(S, "y z")
    lab = lambda ids: [S.labels[k] for k in ids]
    blocks = {S.labels[b.idempotent]: b for b in rep.blocks}
    assert lab(blocks["v"].rows) == ["y", "t", "v"] and lab(blocks["v"].cols) == ["y", "u", "v"]
    assert lab(blocks["q"].rows) == ["z", "u", "w", "q"] and lab(blocks["q"].cols) == ["z", "t", "w", "q"]
    assert blocks["v"].det_y in (y * y * z, -(y * y * z))
    assert blocks["q"].det_y in (y * z**3, -(y * z**3))
    assert rep.product_y == theta_tilde(S)
    assert not det_laplace(cayley(S)).is_zero() and det_probe(cayley(S)).nonzero


def test_factor_full_mode_matches_theta(appendix):
    for name in ("S1", "S4", "S9"):
        S = appendix[name]
        rep = factor_main_theorem(S, contracted=False)
        assert rep.product_y == theta_exact(S)
        assert any(b.idempotent == S.zero and b.rows == (S.zero,) for b in rep.blocks)


def test_factor_zero_determinants(appendix):
    for name in ("S3", "S8"):
        rep = factor_main_theorem(appendix[name])
        assert rep.diamond and rep.overall is False


def test_commutative_band_blocks():
    rep = factor_main_theorem(DIAMOND_BAND, contracted=False)
    assert all(len(b.rows) == len(b.cols) == 1 for b in rep.blocks)
    assert rep.overall
    assert rep.product_y == factor_central_idempotent(DIAMOND_BAND) == theta_exact(DIAMOND_BAND)


def test_preconditions(appendix):
    with pytest.raises(PreconditionFailed, match="condition"):
        factor_main_theorem(s7_model())
    with pytest.raises(PreconditionFailed, match="commute"):
        factor_main_theorem(LEFT_ZERO)
    with pytest.raises(PreconditionFailed):
        factor_main_theorem(C2, contracted=True)


def test_central_baseline_small():
    e, f = xvars(CHAIN2, "e f")
    assert factor_central_idempotent(CHAIN2) == e * (f - e)
    assert factor_central_idempotent(TRIVIAL) == Poly.var(1, 0)
    a, b = xvars(C2, "a b")
    assert factor_central_idempotent(C2) == (a + b) * (a - b)


def test_central_baseline_non_unital():
    assert has_central_idempotents(NULL2)
    assert factor_central_idempotent(NULL2).is_zero()


def test_central_rejects(appendix):
    with pytest.raises(NotCentral):
        factor_central_idempotent(appendix["S1"])


def test_central_baseline_on_corpus(corpus):
    count = 0
    for rec in corpus:
        if has_central_idempotents(rec.table):
            assert factor_central_idempotent(rec.table, check=False) == theta_exact(rec.table), rec.id
            count += 1
    assert count > 100
