"""Semigroup generators: exhaustive small tables, random semigroups of small
order, and the 16-element model of the S7 presentation.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator, Sequence

from .corpus import CorpusRecord, load_appendix
from .semigroup import MulTable, find_nonassociative, relabel


def all_tables(n: int) -> Iterator[MulTable]:
    """Every associative n x n table over the fixed carrier 0..n-1 (n <= 3)."""
    if n > 3:
        raise ValueError("exhaustive generation is limited to order <= 3")
    for flat in product(range(n), repeat=n * n):
        prod = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if find_nonassociative(prod) is None:
            yield MulTable(prod)


def closure(gens: Sequence[tuple], compose) -> list[tuple]:
    """Subsemigroup generated by ``gens`` under ``compose`` (breadth first)."""
    elems = list(dict.fromkeys(gens))
    seen = set(elems)
    i = 0
    while i < len(elems):
        a = elems[i]
        for b in list(elems):
            for c in (compose(a, b), compose(b, a)):
                if c not in seen:
                    seen.add(c)
                    elems.append(c)
        i += 1
    return elems


def table_from_elements(elems: Sequence, compose, labels=None) -> MulTable:
    idx = {x: i for i, x in enumerate(elems)}
    prod = [[idx[compose(a, b)] for b in elems] for a in elems]
    return MulTable(prod, labels)


def _compose_maps(a: tuple, b: tuple) -> tuple:
    """a then b, on partial maps with None for undefined."""
    return tuple(None if x is None else b[x] for x in a)


def _random_map(rng: random.Random, k: int, kind: str) -> tuple:
    if kind == "full":
        return tuple(rng.randrange(k) for _ in range(k))
    if kind == "partial":
        return tuple(rng.choice([None] + list(range(k))) for _ in range(k))
    # partial injection
    dom = [i for i in range(k) if rng.random() < 0.7]
    img = rng.sample(range(k), len(dom))
    f: list = [None] * k
    for d, v in zip(dom, img):
        f[d] = v
    return tuple(f)


def random_semigroup(rng: random.Random, max_order: int = 6, max_tries: int = 10000) -> MulTable:
    """A random semigroup of order <= max_order, found by rejection.

    Draws a few random (full, partial or partial-injective) maps on a small
    set, generates the semigroup they span, optionally adjoins an identity
    or a zero, and rejects results that are too large.  The accepted table
    is randomly relabelled so the ingestion order carries no structure.
    """
    for _ in range(max_tries):
        kind = rng.choice(["full", "partial", "injective", "injective"])
        k = rng.choice([2, 3, 3, 4])
        gens = [_random_map(rng, k, kind) for _ in range(rng.choice([1, 2, 2, 3]))]
        elems = closure(gens, _compose_maps)
        extra = rng.random()
        if extra < 0.25:
            ident = tuple(range(k))
            if ident not in elems:
                elems.append(ident)
        if len(elems) > max_order:
            continue
        S = table_from_elements(elems, _compose_maps)
        if extra > 0.85 and S.zero is None and S.n < max_order:
            S = adjoin_zero(S)
        perm = list(range(S.n))
        rng.shuffle(perm)
        return relabel(S, perm)
    raise RuntimeError("no semigroup found; raise max_tries")


def random_corpus(seed: int, count: int, max_order: int = 6) -> list[MulTable]:
    rng = random.Random(seed)
    return [random_semigroup(rng, max_order) for _ in range(count)]


def adjoin_zero(S: MulTable) -> MulTable:
    n = S.n
    prod = [list(row) + [n] for row in S.prod] + [[n] * (n + 1)]
    return MulTable(prod, list(S.labels) + ["z0"])


def adjoin_identity(S: MulTable) -> MulTable:
    n = S.n
    prod = [list(row) + [i] for i, row in enumerate(S.prod)] + [list(range(n)) + [n]]
    return MulTable(prod, list(S.labels) + ["1"])


# -- S7 ---------------------------------------------------------------------

_S7_UP = {"1": {"1"}, "e": {"1", "e"}, "f": {"1", "f"}, "ef": {"1", "e", "f", "ef"},
          "g": {"1", "e", "f", "ef", "g"}, "h": {"1", "e", "f", "ef", "h"}}


def _idem_meet(a: str, b: str) -> str:
    # semilattice 1 > e, f > ef > g, h > 0 with gh = 0
    if a == "0" or b == "0":
        return "0"
    lower = [x for x, up in _S7_UP.items() if a in up and b in up]
    top = [x for x in lower if all(x in _S7_UP[y] for y in lower)]
    return top[0] if top else "0"


S7_LABELS = ("0", "s", "t", "e", "f", "g", "h", "1", "ef", "sf", "sg", "sh", "et", "gt", "ht", "st")

# element label -> (left letter, middle idempotent, right letter)
_S7_FORMS = {
    "s": ("s", "e", ""), "sf": ("s", "ef", ""), "sg": ("s", "g", ""), "sh": ("s", "h", ""),
    "t": ("", "f", "t"), "et": ("", "ef", "t"), "gt": ("", "g", "t"), "ht": ("", "h", "t"),
    "st": ("s", "ef", "t"),
}


def _s7_mul(a: str, b: str) -> str:
    if a == "1":
        return b
    if b == "1":
        return a
    if a == "0" or b == "0":
        return "0"
    la, ma, ra = _S7_FORMS.get(a, ("", a, ""))
    lb, mb, rb = _S7_FORMS.get(b, ("", b, ""))
    # t followed by anything but 1, or anything but 1 followed by s, is 0
    if ra == "t" or lb == "s":
        return "0"
    m = _idem_meet(ma, mb)
    if m == "0":
        return "0"
    if la == "s" and rb == "t":
        return "st"
    if la == "s":
        m = _idem_meet(m, "e")
        return {"e": "s", "ef": "sf", "g": "sg", "h": "sh"}[m]
    if rb == "t":
        m = _idem_meet(m, "f")
        return {"f": "t", "ef": "et", "g": "gt", "h": "ht"}[m]
    return m


def s7_model() -> MulTable:
    """Finite model of the S7 presentation.

    Generators s, t, e, f, g, h with identity 1 and zero 0; se = s, ft = t,
    the listed idempotent relations, and sgt = sht = st.  Products the
    presentation leaves free (s^2, t^2, ts, s on the left of a
    non-identity, t on the right of a non-identity) are sent to 0, which
    is the smallest choice giving a finite semigroup with the stated
    + values.
    """
    idx = {lab: i for i, lab in enumerate(S7_LABELS)}
    prod = [[idx[_s7_mul(a, b)] for b in S7_LABELS] for a in S7_LABELS]
    return MulTable(prod, S7_LABELS)


# -- named corpora -------------------------------------------------------------

DEFAULT_SEED = 20240601


def order3_records() -> list[CorpusRecord]:
    return [CorpusRecord(f"o3-{i:03d}", S, "exhaustive order-3 sweep") for i, S in enumerate(all_tables(3))]


def random_records(seed: int = DEFAULT_SEED, count: int = 200, max_order: int = 6) -> list[CorpusRecord]:
    return [CorpusRecord(f"rnd-{i:03d}", S, f"random, seed {seed}")
            for i, S in enumerate(random_corpus(seed, count, max_order))]


def standard_corpus(seed: int = DEFAULT_SEED, count: int = 200) -> list[CorpusRecord]:
    """Shipped examples, every associative 3x3 table, and ``count`` random tables."""
    return load_appendix() + order3_records() + random_records(seed, count)
