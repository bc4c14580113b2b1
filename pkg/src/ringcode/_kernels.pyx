# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled distance kernels: exhaustive codeword scan and column-rank search.

Same contract as ringcode._kernels_py.  The exhaustive scan walks messages in
radix-q reflected Gray order, so each step updates the running codeword by a
single scaled-row addition; the column-rank search is a colex DFS over column
subsets with an incrementally maintained echelon.
"""

import numpy as np

cimport numpy as cnp

BACKEND_NAME = "cython"


def exhaustive_scan(cnp.ndarray[cnp.uint8_t, ndim=2] rows_in,
                    cnp.ndarray[cnp.uint8_t, ndim=2] add_in,
                    cnp.ndarray[cnp.uint8_t, ndim=2] mul_in,
                    bint pair_weight,
                    unsigned long long t_lo,
                    unsigned long long t_hi):
    cdef int k = rows_in.shape[0]
    cdef int n = rows_in.shape[1]
    cdef int q = add_in.shape[0]
    cdef unsigned long long total = 1
    cdef int i, j, c
    for i in range(k):
        total *= <unsigned long long> q
    if t_hi > total:
        t_hi = total
    if t_lo >= t_hi:
        return n + 1, b"", 0

    cdef cnp.ndarray[cnp.uint8_t, ndim=2] add = np.ascontiguousarray(add_in)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] mul = np.ascontiguousarray(mul_in)
    # sub table from add: sub[a][b] = a + neg(b)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] sub = np.zeros((q, q), dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] neg = np.zeros(q, dtype=np.uint8)
    for i in range(q):
        for j in range(q):
            if add[i, j] == 0:
                neg[i] = <unsigned char> j
                break
    for i in range(q):
        for j in range(q):
            sub[i, j] = add[i, neg[j]]

    # scaled[i*q + c] = c * row_i
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] scaled = np.zeros((k * q, n), dtype=np.uint8)
    for i in range(k):
        for c in range(q):
            for j in range(n):
                scaled[i * q + c, j] = mul[c, rows_in[i, j]]

    cdef cnp.ndarray[cnp.int64_t, ndim=1] digits = np.zeros(k, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] gray = np.zeros(k, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] cw = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] best = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] pair_nz = np.zeros(max(n // 2, 1), dtype=np.int8)

    # initial counter digits for t_lo (little-endian) and their Gray image:
    # the modular Gray code g_i = d_i - d_{i+1} (mod q) changes exactly one
    # digit by +1 (mod q) per counter increment, for any radix
    cdef unsigned long long t = t_lo
    cdef long long gdiff
    for i in range(k):
        digits[i] = <long long> (t % q)
        t //= q
    for i in range(k):
        gdiff = digits[i] - (digits[i + 1] if i + 1 < k else 0)
        if gdiff < 0:
            gdiff += q          # C '%' truncates toward zero; keep it in [0, q)
        gray[i] = gdiff

    cdef int half = n // 2
    cdef int weight = 0
    for i in range(k):
        if gray[i] != 0:
            for j in range(n):
                cw[j] = add[cw[j], scaled[i * q + gray[i], j]]
    if pair_weight:
        for j in range(half):
            pair_nz[j] = 0
            if cw[j] != 0:
                pair_nz[j] += 1
            if cw[half + j] != 0:
                pair_nz[j] += 1
            if pair_nz[j] > 0:
                weight += 1
    else:
        for j in range(n):
            if cw[j] != 0:
                weight += 1

    cdef int best_w = n + 1
    cdef unsigned long long scanned = 0
    cdef unsigned long long step
    cdef int carry_pos, delta, old_g, new_g, pos, was, now
    cdef bint better, tie_smaller

    cdef unsigned long long count = t_hi - t_lo
    t = t_lo
    step = 0
    while True:
        # consider current codeword (skip the all-zero message t = 0)
        if t != 0:
            scanned += 1
            better = weight < best_w
            if not better and weight == best_w:
                tie_smaller = False
                for j in range(n):
                    if cw[j] != best[j]:
                        tie_smaller = cw[j] < best[j]
                        break
                better = tie_smaller
            if better:
                best_w = weight
                for j in range(n):
                    best[j] = cw[j]
        step += 1
        if step >= count:
            break
        # odometer increment; only the Gray digit at the carry stop changes
        t += 1
        carry_pos = 0
        while digits[carry_pos] == q - 1:
            digits[carry_pos] = 0
            carry_pos += 1
        digits[carry_pos] += 1
        old_g = gray[carry_pos]
        new_g = old_g + 1
        if new_g == q:
            new_g = 0
        gray[carry_pos] = new_g
        delta = sub[new_g, old_g]
        if pair_weight:
            for j in range(n):
                pos = j if j < half else j - half
                was = 1 if cw[j] != 0 else 0
                cw[j] = add[cw[j], scaled[carry_pos * q + delta, j]]
                now = 1 if cw[j] != 0 else 0
                if was != now:
                    if pair_nz[pos] > 0 and was:
                        pair_nz[pos] -= 1
                        if pair_nz[pos] == 0:
                            weight -= 1
                    elif now:
                        if pair_nz[pos] == 0:
                            weight += 1
                        pair_nz[pos] += 1
        else:
            for j in range(n):
                was = 1 if cw[j] != 0 else 0
                cw[j] = add[cw[j], scaled[carry_pos * q + delta, j]]
                now = 1 if cw[j] != 0 else 0
                weight += now - was

    if best_w > n:
        return n + 1, b"", int(scanned)
    return best_w, bytes(bytearray(best[:n])), int(scanned)


def colrank_first_dependent(cnp.ndarray[cnp.uint8_t, ndim=2] hcols_in,
                            int w,
                            cnp.ndarray[cnp.uint8_t, ndim=2] add_in,
                            cnp.ndarray[cnp.uint8_t, ndim=2] sub_in,
                            cnp.ndarray[cnp.uint8_t, ndim=2] mul_in,
                            cnp.ndarray[cnp.uint8_t, ndim=1] inv_in,
                            int hi_lo, int hi_hi):
    cdef int n = hcols_in.shape[0]
    cdef int r = hcols_in.shape[1]
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] cols = np.ascontiguousarray(hcols_in)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] add = np.ascontiguousarray(add_in)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] sub = np.ascontiguousarray(sub_in)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] mul = np.ascontiguousarray(mul_in)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] inv = np.ascontiguousarray(inv_in)

    cdef int i, c
    if hi_hi > n:
        hi_hi = n
    if w == 1:
        for c in range(hi_lo, hi_hi):
            for i in range(r):
                if cols[c, i] != 0:
                    break
            else:
                return (c,)
        return None

    # echelon rows (normalized to 1 at their pivot) and the work vector
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] ech = np.zeros((w, r), dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] piv = np.zeros(w, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] choice = np.zeros(w, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] v = np.zeros(r, dtype=np.uint8)

    cdef int depth, f, p, t, c1

    for c1 in range(max(hi_lo, w - 1), hi_hi):
        choice[0] = c1
        depth = 0
        # push column c1 (assumed nonzero after the w = 1 level)
        p = -1
        for i in range(r):
            v[i] = cols[c1, i]
            if p < 0 and v[i] != 0:
                p = i
        if p < 0:
            return (c1,)
        f = inv[v[p]]
        for i in range(r):
            ech[0, i] = mul[f, v[i]]
        piv[0] = p

        depth = 1
        choice[depth] = (w - depth - 1) - 1  # will be incremented on entry
        while depth >= 1:
            choice[depth] += 1
            if choice[depth] >= choice[depth - 1]:
                depth -= 1
                continue
            c = choice[depth]
            # reduce cols[c] against the echelon
            for i in range(r):
                v[i] = cols[c, i]
            for t in range(depth):
                f = v[piv[t]]
                if f != 0:
                    for i in range(r):
                        v[i] = sub[v[i], mul[f, ech[t, i]]]
            p = -1
            for i in range(r):
                if v[i] != 0:
                    p = i
                    break
            if p < 0:
                out = []
                for t in range(depth + 1):
                    out.append(int(choice[t]))
                out.sort()
                return tuple(out)
            if depth + 1 == w:
                continue
            f = inv[v[p]]
            for i in range(r):
                ech[depth, i] = mul[f, v[i]]
            piv[depth] = p
            depth += 1
            choice[depth] = (w - depth - 1) - 1
    return None
