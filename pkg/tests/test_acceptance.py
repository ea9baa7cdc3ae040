"""Acceptance suite: one PASS/FAIL line per criterion."""

import time

import pytest

from ecomdet import cli
from ecomdet.corpus import appendix_table, format_corpus
from ecomdet.det import (cayley, contracted_cayley, det_bareiss, det_laplace, det_probe, theta_exact,
                         theta_tilde)
from ecomdet.factor import factor_central_idempotent, factor_main_theorem, star_cayley
from ecomdet.generate import standard_corpus
from ecomdet.poly import Poly
from ecomdet.properties import applicable, run_properties
from ecomdet.semigroup import has_central_idempotents
from ecomdet.star import StarTable
from ecomdet.structure import build_profile, cycle_notation, sigma_search


def report(capsys, n, ok, detail=""):
    with capsys.disabled():
        print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def xs(S, names):
    return [Poly.var(S.n, S.index(lab)) for lab in names.split()]


@pytest.fixture(scope="module")
def full_corpus():
    return standard_corpus()


def test_criterion_1_appendix_regression(capsys):
    t0 = time.perf_counter()
    S = {k: appendix_table(f"S{k}") for k in range(1, 10)}
    expected = {}
    y, z = xs(S[1], "y z")
    expected[1] = -(y**2) * z**2
    y, z = xs(S[2], "y z")
    expected[2] = y**3 * z**4
    y, z, u = xs(S[4], "y z u")
    expected[4] = -(y**2) * z**2 * u**2
    y, z = xs(S[5], "y z")
    expected[5] = y**3 * z**3
    y, z, u, t = xs(S[6], "y z u t")
    expected[6] = y**2 * z * (t * z * (u - t) - (u - t) * z * u)
    failures = []
    for k, want in expected.items():
        got = theta_tilde(S[k], "laplace")
        if got != want:
            failures.append(f"S{k}: got {got.format(S[k].labels)}, expected {want.format(S[k].labels)}")
    for k in (3, 7, 8):
        if not theta_exact(S[k]).is_zero():
            failures.append(f"S{k}: theta != 0")
    if theta_exact(S[9]).is_zero():
        failures.append("S9: theta == 0")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s")
    report(capsys, 1, not failures, "; ".join(failures) or f"9 tables in {elapsed:.3f}s")


# basis star table of S9 over the non-zero elements; '.' is 0
S9_STAR = """
y . . . . . y .
z . . . . . . z
u . . . y . . u
t . . z . . t .
w . . . . -z . w
v y . u . . v .
q . z . t w . q
"""


def test_criterion_2_s9_pipeline(capsys):
    t0 = time.perf_counter()
    S = appendix_table("S9")
    failures = []
    C = star_cayley(StarTable(build_profile(S)), contracted=True)
    pos = {s: k for k, s in enumerate(C.row_ids)}
    cols = "y z u t w v q".split()
    for line in S9_STAR.strip().splitlines():
        row, *vals = line.split()
        for col, val in zip(cols, vals):
            want = Poly.zero(S.n) if val == "." else (
                -Poly.var(S.n, S.index(val[1:])) if val.startswith("-") else Poly.var(S.n, S.index(val)))
            if C[pos[S.index(row)], pos[S.index(col)]] != want:
                failures.append(f"entry ({row},{col})")
    rep = factor_main_theorem(S)
    y, z = xs(S, "y z")
    targets = [y * z * y, z * y * z * z]
    dets = [b.det_y for b in rep.blocks]
    if sorted(targets, key=str) != sorted((d if d in targets else -d for d in dets), key=str):
        failures.append("block determinants " + ", ".join(d.format(S.labels) for d in dets))
    direct_laplace = not det_laplace(cayley(S)).is_zero()
    direct_probe = det_probe(cayley(S), seed=0).nonzero
    if not (rep.overall and direct_laplace and direct_probe):
        failures.append(f"verdicts overall={rep.overall} laplace={direct_laplace} probe={direct_probe}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s")
    report(capsys, 2, not failures, "; ".join(failures) or f"49 entries, 2 blocks, NONZERO in {elapsed:.3f}s")


def test_criterion_3_property_suite(capsys, full_corpus):
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for rec in full_corpus:
        if applicable(rec.table) is not None:
            checked += 1
        for f in run_properties(rec.table):
            failures.append(f"{rec.id}: {f}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f}s")
    report(capsys, 3, not failures,
           "; ".join(failures[:5]) or f"{len(full_corpus)} tables, {checked} ECOM with the three conditions, "
                                      f"{elapsed:.1f}s")


def test_criterion_4_conjecture_scan(capsys, full_corpus, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text(format_corpus(full_corpus))
    code = cli.main(["scan", str(path), "--out", str(tmp_path / "scan.jsonl")])
    failures = [] if code == 0 else [f"scan exit code {code}"]
    s5 = sigma_search(build_profile(appendix_table("S5")))
    s6 = sigma_search(build_profile(appendix_table("S6")))
    got = (s5 and cycle_notation(s5[1]), s6 and cycle_notation(s6[1]))
    if got != ("(1,2)", "(1,2,3)"):
        failures.append(f"sigma {got}")
    report(capsys, 4, not failures, "; ".join(failures) or f"0 counterexamples in {len(full_corpus)}, sigma {got}")


def _suite_matrices(corpus):
    for rec in corpus:
        S = rec.table
        yield rec.id, cayley(S)
        if S.zero is not None and S.n > 1:
            yield rec.id, contracted_cayley(S)
        if applicable(S) is not None:
            T = StarTable(build_profile(S))
            C = star_cayley(T)
            yield rec.id, C
            rep = factor_main_theorem(S, table=T, check_direct=False)
            for b in rep.blocks:
                yield rec.id, star_cayley(T, contracted=rep.contracted).submatrix(b.rows, b.cols)


def test_criterion_5_oracle_equivalence(capsys, full_corpus):
    failures = []
    count = central = 0
    for rid, M in _suite_matrices(full_corpus):
        if M.shape[0] > 10:
            continue
        count += 1
        a = det_laplace(M)
        if a != det_bareiss(M):
            failures.append(f"{rid}: laplace != bareiss")
        if det_probe(M).nonzero != (not a.is_zero()):
            failures.append(f"{rid}: probe disagrees")
    for rec in full_corpus:
        if has_central_idempotents(rec.table):
            central += 1
            if factor_central_idempotent(rec.table, check=False) != theta_exact(rec.table):
                failures.append(f"{rec.id}: central baseline")
    report(capsys, 5, not failures, "; ".join(failures[:5]) or f"{count} matrices, {central} central members")


def test_criterion_6_determinism(capsys, full_corpus, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text(format_corpus(full_corpus))
    a, b = tmp_path / "j1.jsonl", tmp_path / "j8.jsonl"
    codes = (cli.main(["scan", str(path), "--jobs", "1", "--out", str(a)]),
             cli.main(["scan", str(path), "--jobs", "8", "--out", str(b)]))
    same = a.read_bytes() == b.read_bytes()
    report(capsys, 6, same and codes == (0, 0), f"byte-identical={same}, exit codes {codes}")
