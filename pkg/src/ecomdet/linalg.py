"""Small exact linear algebra over the rationals and over Z/p."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_rational(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """One solution of ``rows @ c = rhs`` over Q (free variables set to 0), or None."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = aug[i][n]
    return sol


def int_det(mat: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free elimination."""
    a = [list(row) for row in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def det_mod_p(mat: list[list[int]], p: int) -> int:
    """Determinant modulo a prime by Gaussian elimination (destroys ``mat``)."""
    n = len(mat)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if mat[i][k] % p), None)
        if piv is None:
            return 0
        if piv != k:
            mat[k], mat[piv] = mat[piv], mat[k]
            det = -det
        pk = mat[k][k] % p
        det = det * pk % p
        inv = pow(pk, p - 2, p)
        rowk = mat[k]
        for i in range(k + 1, n):
            f = mat[i][k] * inv % p
            if f:
                rowi = mat[i]
                for j in range(k, n):
                    rowi[j] = (rowi[j] - f * rowk[j]) % p
    return det % p


def left_null_vector_mod_p(mat: list[list[int]], p: int) -> list[int] | None:
    """A nonzero v with v @ mat == 0 (mod p), or None if mat is invertible mod p."""
    n = len(mat)
    # Row-reduce [mat | I]; a zero row on the left exposes a dependency.
    aug = [[v % p for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], p - 2, p)
        for i in range(r + 1, n):
            f = aug[i][col] * inv % p
            if f:
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        r += 1
    if r == n:
        return None
    return aug[n - 1][n:]
