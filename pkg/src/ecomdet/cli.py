"""Command line entry point.

Exit codes: 0 success, 1 input error, 2 internal theory violation,
3 conjecture counterexample found by ``scan``.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from typing import Sequence

from . import selftest
from .corpus import CorpusRecord, format_corpus, load_appendix, parse_corpus
from .det import DEFAULT_TRIALS, ProbeVerdict, cayley, contracted_cayley, det
from .errors import InputError, TheoryViolation
from .factor import factor_central_idempotent, factor_main_theorem
from .generate import DEFAULT_SEED, order3_records, random_records, standard_corpus
from .scan import analyze, scan

EXIT_OK, EXIT_INPUT, EXIT_THEORY, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
BUILTIN = "@appendix"


def _load(path: str) -> list[CorpusRecord]:
    if path == BUILTIN:
        return load_appendix()
    if path == "-":
        return parse_corpus(sys.stdin)
    try:
        with open(path) as fh:
            return parse_corpus(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _select(records: list[CorpusRecord], rid: str | None) -> list[CorpusRecord]:
    if rid is None:
        return records
    chosen = [r for r in records if r.id == rid]
    if not chosen:
        raise InputError(f"no record with id {rid!r}")
    return chosen


def cmd_validate(args) -> int:
    for rec in _load(args.corpus):
        S = rec.table
        zero = "-" if S.zero is None else S.labels[S.zero]
        print(f"{rec.id}: n={S.n} zero={zero} idempotents={len(S.idempotents)}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    for rec in _select(_load(args.corpus), args.id):
        print(analyze(rec, seed=args.seed).to_json())
    return EXIT_OK


def cmd_det(args) -> int:
    for rec in _select(_load(args.corpus), args.id):
        S = rec.table
        M = contracted_cayley(S) if args.contracted else cayley(S)
        value = det(M, args.method, trials=args.trials, seed=args.seed)
        text = str(value) if isinstance(value, ProbeVerdict) else value.format(S.labels)
        print(f"{rec.id}: {text}")
    return EXIT_OK


def cmd_factor(args) -> int:
    for rec in _select(_load(args.corpus), args.id):
        S = rec.table
        if args.baseline == "central":
            print(f"{rec.id}: {factor_central_idempotent(S).format(S.labels)}")
            continue
        rep = factor_main_theorem(S, contracted=False if args.full else None)
        print(f"{rec.id}:")
        for line in rep.summary().splitlines():
            print("  " + line)
    return EXIT_OK


def cmd_scan(args) -> int:
    records: list[CorpusRecord] = []
    for path in args.corpus:
        records += _load(path)
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        raise InputError("record ids repeat across the input files")
    sink = open(args.out, "w") if args.out else nullcontext(sys.stdout)
    with sink as out:
        _, summary = scan(records, jobs=args.jobs, out=out, seed=args.seed)
    print(summary.to_json(), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_COUNTEREXAMPLE if summary.conjecture_counterexamples else EXIT_OK


def cmd_corpus(args) -> int:
    if args.kind == "appendix":
        recs = load_appendix()
    elif args.kind == "order3":
        recs = order3_records()
    elif args.kind == "random":
        recs = random_records(args.seed, args.count, args.max_order)
    else:
        recs = standard_corpus(args.seed, args.count)
    text = format_corpus(recs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    return EXIT_OK if selftest.run() else EXIT_THEORY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ecomdet", description="Semigroup determinants and block factorisation.")
    sub = p.add_subparsers(dest="command", required=True)
    corpus_help = f"corpus file, '-' for stdin, or {BUILTIN} for the shipped examples"

    v = sub.add_parser("validate", help="parse and validate a corpus file")
    v.add_argument("corpus", help=corpus_help)
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="full pipeline, one JSON line per record")
    a.add_argument("corpus", help=corpus_help)
    a.add_argument("--id")
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("det", help="semigroup determinant")
    d.add_argument("corpus", help=corpus_help)
    d.add_argument("--id")
    d.add_argument("--contracted", action="store_true", help="drop the zero row and column")
    d.add_argument("--method", choices=["auto", "laplace", "bareiss", "probe"], default="auto")
    d.add_argument("--seed", type=int, default=0, help="probe seed")
    d.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="probe trials")
    d.set_defaults(func=cmd_det)

    f = sub.add_parser("factor", help="block factorisation of the determinant")
    f.add_argument("corpus", help=corpus_help)
    f.add_argument("--id")
    f.add_argument("--baseline", choices=["central"], help="product over local pieces (central idempotents)")
    f.add_argument("--full", action="store_true", help="keep the zero element's block")
    f.set_defaults(func=cmd_factor)

    s = sub.add_parser("scan", help="analyze whole corpora")
    s.add_argument("corpus", nargs="+", help=corpus_help)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_scan)

    c = sub.add_parser("corpus", help="write a generated corpus file")
    c.add_argument("kind", choices=["appendix", "order3", "random", "standard"])
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--count", type=int, default=200)
    c.add_argument("--max-order", type=int, default=6)
    c.add_argument("--out")
    c.set_defaults(func=cmd_corpus)

    t = sub.add_parser("selftest", help="regression and property checks")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TheoryViolation, AssertionError) as exc:
        print(f"internal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_THEORY


if __name__ == "__main__":
    sys.exit(main())
