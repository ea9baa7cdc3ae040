"""Plain-text semigroup corpus files.

Records are separated by blank lines.  Each record is a header

    id <label> n <n> [labels <name_0> ... <name_{n-1}>]

followed by n rows of n space-separated 0-based element ids.  Lines
starting with ``#`` are comments; comments inside a record are kept as its
provenance text.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, TextIO

from .errors import CorpusSyntaxError, NotAssociative, OutOfRange
from .semigroup import MulTable


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    table: MulTable
    provenance: str = ""


def _records(lines: Iterable[str]):
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            if block:
                yield block
                block = []
            continue
        block.append((lineno, line))
    if block:
        yield block


def _parse_header(lineno: int, line: str):
    tok = line.split()
    if len(tok) < 4 or tok[0] != "id" or tok[2] != "n":
        raise CorpusSyntaxError(f"line {lineno}: expected 'id <label> n <n> [labels ...]', got {line!r}")
    rid = tok[1]
    try:
        n = int(tok[3])
    except ValueError:
        raise CorpusSyntaxError(f"line {lineno}: record {rid}: n must be an integer") from None
    if n < 1:
        raise CorpusSyntaxError(f"line {lineno}: record {rid}: n must be positive")
    labels = None
    if len(tok) > 4:
        if tok[4] != "labels":
            raise CorpusSyntaxError(f"line {lineno}: record {rid}: unexpected token {tok[4]!r}")
        labels = tok[5:]
        if len(labels) != n:
            raise CorpusSyntaxError(f"line {lineno}: record {rid}: {len(labels)} labels for n = {n}")
    return rid, n, labels


def parse_corpus(stream: TextIO | str) -> list[CorpusRecord]:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out: list[CorpusRecord] = []
    ids: set[str] = set()
    for block in _records(stream):
        notes = [line[1:].strip() for _, line in block if line.startswith("#")]
        body = [(no, line) for no, line in block if not line.startswith("#")]
        if not body:
            continue
        (hno, header), rows = body[0], body[1:]
        rid, n, labels = _parse_header(hno, header)
        if rid in ids:
            raise CorpusSyntaxError(f"line {hno}: duplicate record id {rid!r}")
        ids.add(rid)
        if len(rows) != n:
            raise CorpusSyntaxError(f"line {hno}: record {rid}: {len(rows)} table rows, expected {n}")
        prod = []
        for no, line in rows:
            try:
                row = [int(v) for v in line.split()]
            except ValueError:
                raise CorpusSyntaxError(f"line {no}: record {rid}: non-integer entry") from None
            if len(row) != n:
                raise CorpusSyntaxError(f"line {no}: record {rid}: {len(row)} entries, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise OutOfRange(f"line {no}: record {rid}: entry {v} outside 0..{n - 1}")
            prod.append(row)
        try:
            table = MulTable(prod, labels)
        except NotAssociative as exc:
            raise NotAssociative(exc.triple, f"record {rid} (line {hno}): {exc}") from None
        except OutOfRange as exc:
            raise OutOfRange(f"record {rid} (line {hno}): {exc}") from None
        out.append(CorpusRecord(rid, table, " ".join(notes)))
    return out


def format_record(rec: CorpusRecord) -> str:
    S = rec.table
    lines = []
    if rec.provenance:
        lines.append(f"# {rec.provenance}")
    header = f"id {rec.id} n {S.n}"
    if S.labels != tuple(f"e{i}" for i in range(S.n)):
        header += " labels " + " ".join(S.labels)
    lines.append(header)
    lines.extend(" ".join(map(str, row)) for row in S.prod)
    return "\n".join(lines) + "\n"


def format_corpus(records: Iterable[CorpusRecord]) -> str:
    return "\n".join(format_record(r) for r in records)


def load_appendix() -> list[CorpusRecord]:
    """The nine worked examples S1..S9 shipped with the package."""
    text = resources.files("ecomdet").joinpath("data/appendix.txt").read_text()
    return parse_corpus(text)


def appendix_table(name: str) -> MulTable:
    for rec in load_appendix():
        if rec.id == name:
            return rec.table
    raise KeyError(name)
