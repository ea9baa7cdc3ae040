import importlib
import json

import pytest

from ecomdet import cli
from ecomdet.corpus import CorpusRecord, format_corpus, load_appendix, parse_corpus
from ecomdet.errors import CorpusSyntaxError, NotAssociative, OutOfRange, StarMismatch
from ecomdet.generate import order3_records
from ecomdet.scan import ScanResult, analyze, scan
from conftest import TRIVIAL

GOOD = """# two-element semilattice
id chain n 2 labels e f
0 0
0 1

id g2 n 2
0 1
1 0
"""


def test_parse_and_roundtrip():
    recs = parse_corpus(GOOD)
    assert [r.id for r in recs] == ["chain", "g2"]
    assert recs[0].provenance == "two-element semilattice"
    assert recs[1].table.labels == ("e0", "e1")
    again = parse_corpus(format_corpus(recs))
    assert [(r.id, r.table) for r in again] == [(r.id, r.table) for r in recs]


def test_appendix_has_nine():
    assert [r.id for r in load_appendix()] == [f"S{k}" for k in range(1, 10)]


def test_empty():
    assert parse_corpus("") == []
    assert parse_corpus("\n# only a comment\n\n") == []


def test_out_of_range_names_record():
    with pytest.raises(OutOfRange, match="record bad"):
        parse_corpus("id bad n 4\n0 0 0 0\n0 0 0 0\n0 0 5 0\n0 0 0 0\n")


def test_syntax_errors():
    with pytest.raises(CorpusSyntaxError, match="line 1"):
        parse_corpus("ident x n 2\n0 0\n0 0\n")
    with pytest.raises(CorpusSyntaxError, match="line 3"):
        parse_corpus("id x n 2\n0 0\n0 a\n")
    with pytest.raises(CorpusSyntaxError, match="table rows"):
        parse_corpus("id x n 3\n0 0 0\n")
    with pytest.raises(CorpusSyntaxError, match="duplicate"):
        parse_corpus("id x n 1\n0\n\nid x n 1\n0\n")
    with pytest.raises(NotAssociative, match="record x"):
        parse_corpus("id x n 2\n0 1\n0 0\n")


def test_analyze_s9():
    rec = [r for r in load_appendix() if r.id == "S9"][0]
    r = analyze(rec)
    assert r.ecom and r.s2 and r.star and r.unital and r.diamond is True
    assert r.theta_nonzero and r.conjecture_uu == "CONSISTENT" and r.main_theorem is True


def test_analyze_s8_and_trivial():
    rec = [r for r in load_appendix() if r.id == "S8"][0]
    assert analyze(rec).theta_nonzero is False
    r = analyze(CorpusRecord("triv", TRIVIAL))
    assert r.ecom and r.s2 and r.star and r.unital and r.theta == "x_e" and r.theta_nonzero


def test_analyze_skips():
    r = analyze(parse_corpus("id lz n 2\n0 0\n1 1\n")[0])
    assert r.ecom is False and r.diamond == "SKIPPED" and r.conjecture_uu == "SKIPPED"


def test_analyze_is_pure():
    rec = load_appendix()[5]
    assert analyze(rec).to_json() == analyze(rec).to_json()


def test_scan_appendix_and_sweep():
    results, summary = scan(load_appendix())
    assert len(results) == 9 and summary.conjecture_counterexamples == []
    recs = order3_records()
    assert len(recs) == 113
    results, summary = scan(recs)
    assert summary.total == 113 and summary.conjecture_counterexamples == []


def test_scan_empty():
    results, summary = scan([])
    assert results == [] and summary.total == 0 and summary.counts == {}


def test_cli_basic(capsys):
    assert cli.main(["validate", "@appendix"]) == 0
    assert cli.main(["det", "@appendix", "--id", "S1", "--contracted"]) == 0
    assert "S1: -x_y^2*x_z^2" in capsys.readouterr().out
    assert cli.main(["det", "@appendix", "--id", "S3", "--method", "probe", "--seed", "7"]) == 0
    assert "ZERO(p_err" in capsys.readouterr().out
    assert cli.main(["factor", "@appendix", "--id", "S9"]) == 0
    assert "overall NONZERO" in capsys.readouterr().out
    assert cli.main(["analyze", "@appendix", "--id", "S9"]) == 0
    assert json.loads(capsys.readouterr().out)["diamond"] is True


def test_cli_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("id x n 2\n0 1\n0 0\n")
    assert cli.main(["validate", str(bad)]) == 1
    assert cli.main(["validate", str(tmp_path / "missing.txt")]) == 1
    assert cli.main(["det", "@appendix", "--id", "nope"]) == 1
    assert cli.main(["factor", "@appendix", "--id", "S1", "--baseline", "central"]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_theory_violation(monkeypatch, capsys):
    def boom(*a, **k):
        raise StarMismatch("forced")
    monkeypatch.setattr(cli, "factor_main_theorem", boom)
    assert cli.main(["factor", "@appendix", "--id", "S9"]) == 2


def test_cli_scan_counterexample(monkeypatch, tmp_path):
    def fake(rec, seed=0):
        return ScanResult(rec.id, rec.table.n, True, True, True, True, conjecture_uu="COUNTEREXAMPLE")
    # the package re-exports the scan() function under the module's name
    monkeypatch.setattr(importlib.import_module("ecomdet.scan"), "analyze", fake)
    assert cli.main(["scan", "@appendix", "--out", str(tmp_path / "o.jsonl")]) == 3


def test_cli_scan_and_corpus(tmp_path, capsys):
    f = tmp_path / "o3.txt"
    assert cli.main(["corpus", "order3", "--out", str(f)]) == 0
    out1, out8 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert cli.main(["scan", str(f), "--jobs", "1", "--out", str(out1)]) == 0
    assert cli.main(["scan", str(f), "--jobs", "8", "--out", str(out8)]) == 0
    assert out1.read_bytes() == out8.read_bytes()
    lines = out1.read_text().splitlines()
    assert len(lines) == 113 and json.loads(lines[0])["id"] == "o3-000"


def test_cli_selftest(capsys):
    assert cli.main(["selftest"]) == 0
    assert "FAIL" not in capsys.readouterr().out
