"""Block factorisation of the semigroup determinant.

When every basis star product u * v with u^{+r} != v^{+l} vanishes, the
star Cayley table becomes block diagonal after grouping rows by
L~_e = {s : s^{+r} = e} and columns by R~_e = {s : s^{+l} = e}.  Its
determinant, read in the variables y_s = sum_{t << s} mu(t, s) x_t, is the
semigroup determinant up to sign, so theta is non-zero iff every block is.

The central-idempotent baseline multiplies contracted determinants of the
local pieces H~_e with zero adjoined, in the same y variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .det import (LAPLACE_MAX_N, PolyMatrix, _perm_sign, contracted_cayley, det, det_laplace,
                  theta_exact)
from .errors import (BlockNotSquare, EmptyPhi, NotCentral, OffBlockNonzero,
                     PreconditionFailed, TheoryViolation)
from .poly import Poly, product
from .semigroup import MulTable, check_star2, has_central_idempotents, is_ecom
from .star import StarTable, ZMap, check_diamond, epsilon_table, z_matrix
from .structure import EcomProfile, build_profile


def star_cayley(table: StarTable, contracted: bool = False) -> PolyMatrix:
    """Entry (s, t) = sum_u c_u x_u where s * t = sum_u c_u u."""
    S = table.S
    n = S.n
    ids = table.contracted_basis if contracted else table.basis
    rows = []
    for s in ids:
        row = []
        for t in ids:
            v = table.contracted_entry(s, t) if contracted else table.entry(s, t)
            row.append(Poly.linear(n, v))
        rows.append(row)
    return PolyMatrix(rows, list(ids), list(ids), n)


def y_substitution(S: MulTable, Z: ZMap, contracted: bool = False) -> dict[int, Poly]:
    """x_s -> y_s = sum_{t << s} mu(t, s) x_t (zero element dropped when contracted)."""
    skip = S.zero if contracted else None
    return {
        s: Poly.linear(S.n, {t: c for t, c in Z.inverse[s].items() if t != skip})
        for s in S.elements
        if s != skip
    }


@dataclass(frozen=True)
class Block:
    idempotent: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    det_x: Poly
    det_y: Poly

    @property
    def nonzero(self) -> bool:
        return not self.det_y.is_zero()


@dataclass
class FactorReport:
    S: MulTable
    contracted: bool
    diamond: bool
    witness: tuple[int, int] | None = None
    blocks: list[Block] = field(default_factory=list)
    sign: int = 1
    overall: bool | None = None
    direct: Poly | None = None

    @property
    def product_y(self) -> Poly | None:
        """sign * prod of Y-form blocks; equals theta (or theta~ when contracted)."""
        if not self.diamond:
            return None
        p = product((b.det_y for b in self.blocks), self.S.n)
        return p if self.sign == 1 else -p

    def summary(self) -> str:
        L = self.S.labels
        if not self.diamond:
            u, v = self.witness
            return f"diamond fails at ({L[u]}, {L[v]}); block factorisation does not apply"
        out = []
        for b in self.blocks:
            rows = ",".join(L[i] for i in b.rows)
            cols = ",".join(L[i] for i in b.cols)
            out.append(f"e={L[b.idempotent]}: rows {{{rows}}} cols {{{cols}}} det {b.det_y.format(L)}")
        out.append("overall " + ("NONZERO" if self.overall else "ZERO"))
        return "\n".join(out)


def _preconditions(S: MulTable) -> None:
    if not is_ecom(S):
        raise PreconditionFailed("idempotents do not commute")
    st = check_star2(S)
    if not st.all():
        raise PreconditionFailed("fails " + ", ".join(st.failing()))


def factor_main_theorem(S: MulTable, contracted: bool | None = None, check_direct: bool = True,
                        profile: EcomProfile | None = None, table: StarTable | None = None) -> FactorReport:
    """Run the block factorisation.

    ``contracted`` defaults to True when S has a zero; the zero's 1x1 block
    is then dropped and the product equals the contracted determinant.
    With ``check_direct`` the signed block product is compared with the
    directly computed determinant (Laplace, small inputs only).
    """
    _preconditions(S)
    if contracted is None:
        contracted = S.zero is not None
    if contracted and S.zero is None:
        raise PreconditionFailed("contracted mode needs a zero element")
    profile = profile or build_profile(S)
    epsilon_table(profile)  # surfaces NonTermination on bad input
    table = table or StarTable(profile)
    holds, witness = check_diamond(table)
    report = FactorReport(S, contracted, holds, witness)
    if not holds:
        return report

    C = star_cayley(table, contracted)
    pos = {s: i for i, s in enumerate(C.row_ids)}
    idems = [e for e in S.idempotents if not (contracted and e == S.zero)]
    row_order: list[int] = []
    col_order: list[int] = []
    spans = []
    for e in idems:
        rows = [s for s in C.row_ids if profile.plusR[s] == e]
        cols = [s for s in C.col_ids if profile.plusL[s] == e]
        if len(rows) != len(cols):
            raise BlockNotSquare(f"e={S.labels[e]}: {len(rows)} rows vs {len(cols)} columns")
        spans.append((e, rows, cols))
        row_order += rows
        col_order += cols
    if sorted(row_order) != sorted(C.row_ids):
        raise TheoryViolation("tilde classes do not cover the basis")

    block_of_row = {s: k for k, (_, rows, _) in enumerate(spans) for s in rows}
    block_of_col = {s: k for k, (_, _, cols) in enumerate(spans) for s in cols}
    for r in C.row_ids:
        for c in C.col_ids:
            if block_of_row[r] != block_of_col[c] and C[pos[r], pos[c]]:
                raise OffBlockNonzero(f"entry ({S.labels[r]}, {S.labels[c]}) off the block diagonal")

    report.sign = _perm_sign([pos[s] for s in row_order]) * _perm_sign([pos[s] for s in col_order])
    subs = y_substitution(S, table.Z, contracted)
    for e, rows, cols in spans:
        dx = det_laplace(C.submatrix(rows, cols))
        report.blocks.append(Block(e, tuple(rows), tuple(cols), dx, dx.substitute(subs)))
    report.overall = all(b.nonzero for b in report.blocks)

    if check_direct and S.n <= LAPLACE_MAX_N + 4:
        if contracted:
            direct = det_laplace(contracted_cayley(S))
        else:
            direct = theta_exact(S)
        report.direct = direct
        if report.product_y != direct:
            raise TheoryViolation("signed block product differs from the direct determinant")
    return report


# -- central idempotents ------------------------------------------------------


def local_pieces(profile: EcomProfile) -> dict[int, list[int]]:
    """H~_e = {s : s^{+r} = s^{+l} = e} for each idempotent e."""
    return {e: profile.tilde_H(e) for e in profile.S.idempotents}


def factor_central_idempotent(S: MulTable, check: bool = True) -> Poly:
    """theta_S as the product over e of the contracted determinants of H~_e^0 in y variables.

    Returns 0 when some phi set is empty: the algebra is then not unital
    and the determinant vanishes.
    """
    if not has_central_idempotents(S):
        raise NotCentral("some idempotent does not commute with every element")
    n = S.n
    try:
        profile = build_profile(S)
    except EmptyPhi:
        result = Poly.zero(n)
    else:
        subs = y_substitution(S, z_matrix(profile))
        factors = []
        for e, piece in local_pieces(profile).items():
            members = set(piece)
            rows = [[Poly.var(n, S.prod[a][b]) if S.prod[a][b] in members else Poly.zero(n)
                     for b in piece] for a in piece]
            d = det(PolyMatrix(rows, piece, piece, n), "laplace")
            factors.append(d.substitute(subs))
        result = product(factors, n)
    if check and result != theta_exact(S):
        raise TheoryViolation("central-idempotent product differs from theta_S")
    return result

