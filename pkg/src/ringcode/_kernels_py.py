"""Pure-Python / numpy distance kernels (fallback backend).

Same contract as the compiled ringcode._kernels module:

  exhaustive_scan(rows, add, mul, pair_weight, t_lo, t_hi)
      -> (best_weight, best_codeword bytes, codewords_scanned)
  colrank_first_dependent(hcols, w, add, sub, mul, inv, hi_lo, hi_hi)
      -> tuple of column indices (ascending) or None

Messages are indexed by integers t in [0, q^k); the scan covers the message
SET [t_lo, t_hi) (order is an implementation detail -- the reduction
min-weight / lexicographically-least certificate is order-independent).
The zero message is skipped.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_BLOCK_DIGITS_TARGET = 1 << 14


def exhaustive_scan(rows: np.ndarray, add: np.ndarray, mul: np.ndarray,
                    pair_weight: bool, t_lo: int, t_hi: int):
    """Scan codewords sum_i m_i row_i for messages t in [t_lo, t_hi)."""
    k, n = rows.shape
    q = add.shape[0]
    total = q ** k
    t_hi = min(t_hi, total)
    if t_lo >= t_hi:
        return n + 1, b"", 0

    # split message digits into a low block (tabulated) and a high prefix
    k_lo = 0
    while k_lo < k and q ** (k_lo + 1) <= _BLOCK_DIGITS_TARGET:
        k_lo += 1
    b_sz = q ** k_lo

    # table of all low-block combinations, built q-fold at a time
    low = np.zeros((1, n), dtype=np.uint8)
    for i in range(k_lo):
        scaled = mul[:, rows[i]]                   # q x n: c * row_i
        low = add[np.repeat(scaled, low.shape[0], axis=0),
                  np.tile(low, (q, 1))]
    assert low.shape[0] == b_sz

    best_w = n + 1
    best_vec: bytes = b""
    scanned = 0

    for hi in range(t_lo // b_sz, (t_hi + b_sz - 1) // b_sz):
        # prefix codeword for high digits of hi
        prefix = np.zeros(n, dtype=np.uint8)
        h = hi
        for i in range(k_lo, k):
            d = h % q
            h //= q
            if d:
                prefix = add[prefix, mul[d, rows[i]]]
        lo_start = max(t_lo - hi * b_sz, 0)
        lo_stop = min(t_hi - hi * b_sz, b_sz)
        block = add[prefix[None, :], low[lo_start:lo_stop]]
        # weight per row
        if pair_weight:
            half = n // 2
            nz = (block[:, :half] != 0) | (block[:, half:] != 0)
        else:
            nz = block != 0
        weights = nz.sum(axis=1)
        if hi == 0 and lo_start == 0:
            weights[0] = n + 1   # skip the zero message
        scanned += lo_stop - lo_start
        if hi == 0 and lo_start == 0:
            scanned -= 1   # the zero message is not a scanned codeword
        wmin = int(weights.min()) if weights.size else n + 1
        if wmin < best_w:
            best_w = wmin
            cands = block[weights == wmin]
            best_vec = min(r.tobytes() for r in cands)
        elif wmin == best_w and best_w <= n:
            cands = block[weights == wmin]
            cand = min(r.tobytes() for r in cands)
            if cand < best_vec:
                best_vec = cand
    return best_w, best_vec, scanned


def colrank_first_dependent(hcols: np.ndarray, w: int, add: np.ndarray,
                            sub: np.ndarray, mul: np.ndarray, inv: np.ndarray,
                            hi_lo: int, hi_hi: int):
    """First (colex order) w-subset of columns that is linearly dependent.

    hcols is n x r (one row per column of the parity-check matrix).  The
    outermost (largest) column index ranges over [hi_lo, hi_hi).  Assumes no
    dependent subset of size < w exists, which holds when levels are scanned
    in increasing w.
    """
    n, r = hcols.shape
    if w == 1:
        for c in range(hi_lo, min(hi_hi, n)):
            if not hcols[c].any():
                return (c,)
        return None

    add_l = [list(map(int, row)) for row in add]
    sub_l = [list(map(int, row)) for row in sub]
    mul_l = [list(map(int, row)) for row in mul]
    inv_l = list(map(int, inv))
    cols = [list(map(int, hcols[c])) for c in range(n)]

    # echelon of the currently chosen columns: normalized rows + pivot index
    ech: list[tuple[int, list[int]]] = []

    def reduce_vec(c):
        v = list(cols[c])
        for piv, row in ech:
            f = v[piv]
            if f:
                frow = mul_l[f]
                v = [sub_l[x][frow[y]] for x, y in zip(v, row)]
        return v

    def dfs(depth, upper):
        # choose the depth-th largest column, ascending for colex order
        remaining = w - depth - 1
        for c in range(remaining, upper):
            v = reduce_vec(c)
            piv = next((i for i, x in enumerate(v) if x), None)
            if piv is None:
                return (c,)
            if depth + 1 == w:
                continue
            ivrow = mul_l[inv_l[v[piv]]]
            ech.append((piv, [ivrow[x] for x in v]))
            found = dfs(depth + 1, c)
            ech.pop()
            if found is not None:
                return (c,) + found
        return None

    for c1 in range(max(hi_lo, w - 1), min(hi_hi, n)):
        v = list(cols[c1])
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return (c1,)
        ivrow = mul_l[inv_l[v[piv]]]
        ech.append((piv, [ivrow[x] for x in v]))
        found = dfs(1, c1)
        ech.pop()
        if found is not None:
            return tuple(sorted((c1,) + found))
    return None
