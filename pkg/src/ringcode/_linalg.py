"""Exact Gaussian elimination over a FieldSpec for small dense matrices.

Matrices are lists of rows; rows are lists of raw element indices.  All
routines are pure and return fresh objects.
"""

from __future__ import annotations

from .gf import FieldSpec

__all__ = ["rref", "rank", "parity_check", "kernel_basis", "row_span_equal",
           "solve_dependency", "in_row_span"]


def rref(F: FieldSpec, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(mat):
            break
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = F.inv(mat[r][c])
        if inv != 1:
            mat[r] = [F.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row_r = mat[r]
                mat[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
    return [m for m in mat if any(m)], pivots


def rank(F: FieldSpec, rows) -> int:
    return len(rref(F, rows)[0])


def kernel_basis(F: FieldSpec, rows) -> list[list[int]]:
    """Basis of the right kernel {v : rows . v = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    R, piv = rref(F, rows)
    piv_set = set(piv)
    basis = []
    for free in range(ncols):
        if free in piv_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(R, piv):
            v[pc] = F.neg(row[free])
        basis.append(v)
    return basis


def parity_check(F: FieldSpec, gen_rows) -> list[list[int]]:
    """(n-k) x n matrix H with G . H^T = 0 and full row rank."""
    return kernel_basis(F, gen_rows)


def row_span_equal(F: FieldSpec, rows_a, rows_b) -> bool:
    ra, _ = rref(F, rows_a)
    rb, _ = rref(F, rows_b)
    return ra == rb


def in_row_span(F: FieldSpec, rows, vec) -> bool:
    """True when vec lies in the row space of rows."""
    R, piv = rref(F, rows)
    v = list(vec)
    for row, pc in zip(R, piv):
        if v[pc]:
            f = v[pc]
            v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
    return not any(v)


def solve_dependency(F: FieldSpec, cols) -> list[int] | None:
    """Nonzero v with sum v_j * cols[j] = 0, or None if columns independent.

    Normalized so the first nonzero coefficient is 1.
    """
    w = len(cols)
    mat = [[cols[j][i] for j in range(w)] for i in range(len(cols[0]))]
    ker = kernel_basis(F, mat)
    if not ker:
        return None
    v = ker[0]
    lead = next(x for x in v if x)
    inv = F.inv(lead)
    return [F.mul(inv, x) for x in v]
