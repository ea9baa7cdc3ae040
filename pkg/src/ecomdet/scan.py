"""Corpus scanning: run the whole pipeline on each record and emit one JSON
line per record, in input order, plus a summary.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Sequence

from .corpus import CorpusRecord
from .det import LAPLACE_MAX_N, cayley, det_probe, theta_exact
from .errors import EmptyPhi, TheoryViolation
from .factor import factor_main_theorem
from .semigroup import check_star2, is_ecom
from .star import StarTable, conjecture_uu, open_problem_set
from .structure import build_profile, cycle_notation

SKIPPED = "SKIPPED"
EXACT_MAX_N = 17  # exact theta through the contracted table up to this order


@dataclass
class ScanResult:
    id: str
    n: int
    ecom: bool
    s2: bool
    star: bool
    unital: bool
    profile: bool | str = SKIPPED
    diamond: bool | str = SKIPPED
    theta_nonzero: bool = False
    theta_method: str = ""
    theta: str | None = None
    theta_p_err: float | None = None
    main_theorem: bool | str = SKIPPED
    conjecture_uu: str = SKIPPED
    sigma: str | None = None
    open_problem_witnesses: int | str = SKIPPED
    open_problem: str = SKIPPED

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _theta(S, seed: int):
    exact_ok = S.n <= LAPLACE_MAX_N or (S.zero is not None and S.n <= EXACT_MAX_N)
    if exact_ok:
        p = theta_exact(S)
        return not p.is_zero(), "laplace", p.format(S.labels), None
    v = det_probe(cayley(S), seed=seed)
    return v.nonzero, "probe", None, v.error_bound


def analyze(record: CorpusRecord, seed: int = 0) -> ScanResult:
    """Full pipeline on one record; stages whose preconditions fail are SKIPPED."""
    S = record.table
    st = check_star2(S)
    ecom = is_ecom(S)
    res = ScanResult(record.id, S.n, ecom, st.s2, st.star, st.unital)
    res.theta_nonzero, res.theta_method, res.theta, res.theta_p_err = _theta(S, seed)
    if not ecom:
        return res
    try:
        profile = build_profile(S)
    except EmptyPhi:
        res.profile = False
        return res
    res.profile = True
    found = profile.sigma_search()
    res.sigma = None if found is None else cycle_notation(found[1])
    witnesses = open_problem_set(profile)
    res.open_problem_witnesses = len(witnesses)
    res.open_problem = "COUNTEREXAMPLE" if witnesses and res.theta_nonzero else "CONSISTENT"
    if not st.all():
        return res
    table = StarTable(profile)
    verdict = conjecture_uu(table, res.theta_nonzero)
    res.diamond = verdict.premise_witness is None
    res.conjecture_uu = str(verdict)
    if res.diamond:
        report = factor_main_theorem(S, profile=profile, table=table, check_direct=False)
        res.main_theorem = bool(report.overall)
        if res.main_theorem != res.theta_nonzero:
            raise TheoryViolation(f"record {record.id}: block verdict disagrees with theta")
    return res


def _analyze_pair(args):
    rec, seed = args
    return analyze(rec, seed)


@dataclass
class ScanSummary:
    total: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    conjecture_counterexamples: list[str] = field(default_factory=list)
    open_problem_counterexamples: list[str] = field(default_factory=list)

    def add(self, r: ScanResult) -> None:
        self.total += 1
        for key in ("ecom", "diamond", "theta_nonzero", "conjecture_uu", "open_problem"):
            val = str(getattr(r, key))
            bucket = self.counts.setdefault(key, {})
            bucket[val] = bucket.get(val, 0) + 1
        if r.conjecture_uu == "COUNTEREXAMPLE":
            self.conjecture_counterexamples.append(r.id)
        if r.open_problem == "COUNTEREXAMPLE":
            self.open_problem_counterexamples.append(r.id)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def scan(records: Sequence[CorpusRecord] | Iterable[CorpusRecord], jobs: int = 1,
         out: IO[str] | None = None, seed: int = 0) -> tuple[list[ScanResult], ScanSummary]:
    """Analyze every record; results are written (and returned) in input order."""
    records = list(records)
    summary = ScanSummary()
    results: list[ScanResult] = []
    work = [(r, seed) for r in records]
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            it = pool.map(_analyze_pair, work, chunksize=max(1, len(work) // (4 * jobs)))
            for r in it:
                _emit(r, results, summary, out)
    else:
        for w in work:
            _emit(_analyze_pair(w), results, summary, out)
    return results, summary


def _emit(r: ScanResult, results, summary, out) -> None:
    results.append(r)
    summary.add(r)
    if out is not None:
        out.write(r.to_json() + "\n")
        out.flush()
