"""Regression and property checks runnable without pytest (``ecomdet selftest``)."""

from __future__ import annotations

import time
from typing import Callable

from .corpus import appendix_table, load_appendix
from .det import cayley, contracted_cayley, det_bareiss, det_laplace, det_probe, theta_exact
from .factor import factor_main_theorem
from .generate import standard_corpus
from .poly import Poly
from .properties import run_properties
from .structure import build_profile, cycle_notation

# Frozen engine output on the shipped tables, in ingestion order.  The values
# were cross-checked against an independent sympy determinant.
CONTRACTED = {
    "S1": "-x_y^2*x_z^2",
    "S2": "x_y^3*x_z^4",
    "S3": "0",
    "S4": "-x_y^2*x_z^2*x_u^2",
    "S5": "-x_y^3*x_z^3",
    "S7": "0",
    "S8": "0",
    "S9": "x_y^3*x_z^4",
}
SIGMA = {"S5": "(1,2)", "S6": "(1,2,3)"}


def _appendix_values() -> None:
    for rec in load_appendix():
        S = rec.table
        got = det_laplace(contracted_cayley(S)).format(S.labels)
        if rec.id in CONTRACTED:
            assert got == CONTRACTED[rec.id], f"{rec.id}: {got}"
    S6 = appendix_table("S6")
    x = {lab: Poly.var(S6.n, S6.index(lab)) for lab in ("y", "z", "u", "t")}
    y, z, u, t = x["y"], x["z"], x["u"], x["t"]
    want = y * y * z * (t * z * (u - t) - (u - t) * z * u)
    assert det_laplace(contracted_cayley(S6)) == want, "S6"


def _sigma() -> None:
    for name, want in SIGMA.items():
        found = build_profile(appendix_table(name)).sigma_search()
        assert found is not None and cycle_notation(found[1]) == want, name


def _s9_blocks() -> None:
    S = appendix_table("S9")
    rep = factor_main_theorem(S)
    assert rep.diamond and rep.overall
    dets = sorted(b.det_y.format(S.labels) for b in rep.blocks)
    assert dets == ["-x_y^2*x_z", "x_y*x_z^3"], dets
    assert det_probe(cayley(S)).nonzero and not theta_exact(S).is_zero()


def _oracles() -> None:
    for rec in load_appendix():
        S = rec.table
        for M in (cayley(S), contracted_cayley(S)):
            if M.shape[0] > 10:
                continue
            a, b = det_laplace(M), det_bareiss(M)
            assert a == b, f"{rec.id}: laplace != bareiss"
            assert det_probe(M).nonzero == (not a.is_zero()), f"{rec.id}: probe"


def _corpus_properties() -> None:
    for rec in standard_corpus():
        failed = run_properties(rec.table)
        assert not failed, f"{rec.id}: {failed[0]}"


CHECKS: list[tuple[str, Callable[[], None]]] = [
    ("appendix determinants", _appendix_values),
    ("sigma search", _sigma),
    ("S9 block factorisation", _s9_blocks),
    ("laplace / bareiss / probe agree", _oracles),
    ("corpus properties", _corpus_properties),
]


def run(out=print) -> bool:
    ok = True
    for name, fn in CHECKS:
        t = time.perf_counter()
        try:
            fn()
            status = "ok"
        except AssertionError as exc:
            ok = False
            status = f"FAIL ({exc})"
        out(f"{name:34s} {status}  [{time.perf_counter() - t:.2f}s]")
    return ok
