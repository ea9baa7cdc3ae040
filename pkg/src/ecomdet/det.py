"""Cayley tables of semigroups and exact / probabilistic determinants.

Three determinant routes are provided and cross-checked by the test suite:

* ``laplace``: cofactor expansion memoised over the set of used columns,
  one row at a time, discarding vanishing partial minors;
* ``bareiss``: fraction-free elimination with exact polynomial division;
* ``probe``: evaluation at uniform random residues modulo a 62-bit prime.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import NoZeroElement, NotSquare, TheoryViolation
from .linalg import det_mod_p, left_null_vector_mod_p
from .poly import Poly
from .semigroup import MulTable

PRIME = 4611686018427387847  # largest prime below 2**62
DEFAULT_TRIALS = 20
LAPLACE_MAX_N = 12

Method = Literal["auto", "laplace", "bareiss", "probe"]


@dataclass
class PolyMatrix:
    rows: list[list[Poly]]
    row_ids: list[int]
    col_ids: list[int]
    nvars: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_ids)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def submatrix(self, row_ids: Sequence[int], col_ids: Sequence[int]) -> "PolyMatrix":
        rpos = {r: i for i, r in enumerate(self.row_ids)}
        cpos = {c: j for j, c in enumerate(self.col_ids)}
        rows = [[self.rows[rpos[r]][cpos[c]] for c in col_ids] for r in row_ids]
        return PolyMatrix(rows, list(row_ids), list(col_ids), self.nvars)

    def substitute(self, subs: dict[int, Poly]) -> "PolyMatrix":
        rows = [[p.substitute(subs) for p in row] for row in self.rows]
        return PolyMatrix(rows, list(self.row_ids), list(self.col_ids), self.nvars)

    def format(self, labels: Sequence[str]) -> str:
        cells = [[p.format(labels) if p else "." for p in row] for row in self.rows]
        width = max([len(c) for row in cells for c in row] + [1])
        head = [labels[c] for c in self.col_ids]
        lines = [" " * 6 + " ".join(h.rjust(width) for h in head)]
        for r, row in zip(self.row_ids, cells):
            lines.append(labels[r].rjust(5) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def cayley(S: MulTable) -> PolyMatrix:
    """C(S)[s, t] = x_{st}."""
    n = S.n
    xs = Poly.variables(n)
    rows = [[xs[S.prod[s][t]] for t in range(n)] for s in range(n)]
    return PolyMatrix(rows, list(range(n)), list(range(n)), n)


def contracted_cayley(S: MulTable) -> PolyMatrix:
    """Rows and columns over S minus zero; entry x_{st}, or 0 when st is the zero."""
    z = S.zero
    if z is None:
        raise NoZeroElement("contracted Cayley table needs a zero element")
    n = S.n
    xs = Poly.variables(n)
    zero = Poly.zero(n)
    ids = [s for s in range(n) if s != z]
    rows = [[xs[S.prod[s][t]] if S.prod[s][t] != z else zero for t in ids] for s in ids]
    return PolyMatrix(rows, ids, list(ids), n)


# -- exact determinants ------------------------------------------------------


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _row_order(rows: list[list[Poly]], seed: int = 0) -> list[int]:
    """Expansion order: a numerically dependent set of rows first, then sparse rows.

    The dependency is found at one random point mod p; it only steers the
    order, so exactness does not depend on it.  If the rows are really
    dependent, every partial minor over them vanishes and the expansion
    stops early.
    """
    n = len(rows)
    nvars = rows[0][0].nvars if n else 0
    rng = random.Random(seed)
    point = [rng.randrange(1, PRIME) for _ in range(nvars)]
    num = [[p.eval_mod_p(point, PRIME) for p in row] for row in rows]
    null = left_null_vector_mod_p(num, PRIME)
    nnz = [sum(1 for p in row if p) for row in rows]
    first = [i for i in range(n) if null is not None and null[i]]
    first.sort(key=lambda i: nnz[i])
    rest = sorted((i for i in range(n) if i not in set(first)), key=lambda i: nnz[i])
    return first + rest


def det_laplace(M: PolyMatrix) -> Poly:
    nr, nc = M.shape
    if nr != nc:
        raise NotSquare(f"{nr} x {nc} matrix")
    n = nr
    if n == 0:
        return Poly.const(M.nvars, 1)
    order = _row_order(M.rows)
    states: dict[int, Poly] = {0: Poly.const(M.nvars, 1)}
    for r in order:
        entries = [(j, p) for j, p in enumerate(M.rows[r]) if p]
        new: dict[int, Poly] = {}
        for mask, val in states.items():
            for j, p in entries:
                bit = 1 << j
                if mask & bit:
                    continue
                term = val * p
                if bin(mask >> (j + 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                prev = new.get(key)
                new[key] = term if prev is None else prev + term
        states = {m: v for m, v in new.items() if v}
        if not states:
            return Poly.zero(M.nvars)
    result = states.get((1 << n) - 1, Poly.zero(M.nvars))
    return result if _perm_sign(order) == 1 else -result


def det_bareiss(M: PolyMatrix) -> Poly:
    nr, nc = M.shape
    if nr != nc:
        raise NotSquare(f"{nr} x {nc} matrix")
    n = nr
    if n == 0:
        return Poly.const(M.nvars, 1)
    a = [list(row) for row in M.rows]
    sign = 1
    prev = Poly.const(M.nvars, 1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Poly.zero(M.nvars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.divexact(prev) if num else num
            a[i][k] = Poly.zero(M.nvars)
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


# -- probabilistic -----------------------------------------------------------


@dataclass(frozen=True)
class ProbeVerdict:
    nonzero: bool
    trials: int
    prime: int
    degree_bound: int
    seed: int

    @property
    def error_bound(self) -> float:
        """Chance that a nonzero determinant evaluates to 0 on every trial."""
        if self.nonzero:
            return 0.0
        return (self.degree_bound / self.prime) ** self.trials

    def __str__(self) -> str:
        return "NONZERO" if self.nonzero else f"ZERO(p_err <= {self.error_bound:.3g})"


def det_probe(M: PolyMatrix, trials: int = DEFAULT_TRIALS, seed: int = 0, prime: int = PRIME) -> ProbeVerdict:
    nr, nc = M.shape
    if nr != nc:
        raise NotSquare(f"{nr} x {nc} matrix")
    rng = random.Random(seed)
    deg = max((p.degree() for row in M.rows for p in row), default=0) * nr
    for t in range(trials):
        point = [rng.randrange(prime) for _ in range(M.nvars)]
        num = [[p.eval_mod_p(point, prime) for p in row] for row in M.rows]
        if det_mod_p(num, prime):
            return ProbeVerdict(True, t + 1, prime, max(deg, 1), seed)
    return ProbeVerdict(False, trials, prime, max(deg, 1), seed)


def det(M: PolyMatrix, method: Method = "auto", *, trials: int = DEFAULT_TRIALS, seed: int = 0):
    """Determinant as a Poly (laplace, bareiss) or a ProbeVerdict (probe).

    ``auto`` picks laplace up to 12 x 12 and probe beyond.
    """
    if method == "auto":
        method = "laplace" if M.shape[0] <= LAPLACE_MAX_N else "probe"
    if method == "laplace":
        return det_laplace(M)
    if method == "bareiss":
        return det_bareiss(M)
    if method == "probe":
        return det_probe(M, trials=trials, seed=seed)
    raise ValueError(f"unknown method {method!r}")


def is_nonzero(value) -> bool:
    if isinstance(value, ProbeVerdict):
        return value.nonzero
    return not value.is_zero()


# -- semigroup determinants ---------------------------------------------------


def theta(S: MulTable, method: Method = "auto", **kw):
    return det(cayley(S), method, **kw)


def theta_tilde(S: MulTable, method: Method = "auto", **kw):
    return det(contracted_cayley(S), method, **kw)


def zero_shift(S: MulTable) -> dict[int, Poly]:
    """y_s = x_s - x_0 for every non-zero s."""
    z = S.zero
    if z is None:
        raise NoZeroElement("no zero element")
    xs = Poly.variables(S.n)
    return {s: xs[s] - xs[z] for s in range(S.n) if s != z}


def theta_from_contracted(S: MulTable, contracted: Poly) -> Poly:
    """x_0 * contracted(y) with y_s = x_s - x_0."""
    x0 = Poly.var(S.n, S.zero)
    return x0 * contracted.substitute(zero_shift(S))


def theta_via_contracted(S: MulTable) -> Poly:
    """theta_S through the contracted determinant (needs a zero element)."""
    return theta_from_contracted(S, det_laplace(contracted_cayley(S)))


def check_contracted_identity(S: MulTable, full: Poly, contracted: Poly) -> None:
    if full != theta_from_contracted(S, contracted):
        raise TheoryViolation("theta_S != x_0 * theta~_S(x - x_0)")


def theta_exact(S: MulTable) -> Poly:
    """theta_S as a polynomial, through the contracted table when a zero exists."""
    if S.zero is not None and S.n > 1:
        return theta_via_contracted(S)
    return det_laplace(cayley(S))
