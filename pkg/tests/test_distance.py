"""Distance engines: agreement, certificates, determinism, backend parity."""

from __future__ import annotations

import random

import numpy as np
import pytest

from ringcode import _backend, _kernels_py
from ringcode.codes import (BudgetError, CodeError, LinearCodeF,
                            code_from_exponents, hermitian_dual)
from ringcode.distance import (min_distance_column_rank,
                               min_distance_exhaustive, min_distance_R,
                               min_distance_R_exhaustive)
from ringcode.maps import GrayMatrix, gray_image_code
from ringcode.codes import torsion


def _tor_510(cs_510):
    C = code_from_exponents(cs_510, {5: 2, 3: 2, 1: 0})
    return torsion(hermitian_dual(C))


# -- the worked instances ------------------------------------------------------

def test_510_tor_distance_both_engines(cs_510):
    T = _tor_510(cs_510)
    assert (T.length, T.dimension) == (5, 3)
    r1 = min_distance_exhaustive(T)
    r2 = min_distance_column_rank(T, d_cap=5)
    assert r1.d == r2.d == 3
    assert r1.work == 9 ** 3 - 1
    assert r1.exact and r2.exact
    # certificates are verified members of stated weight
    for r in (r1, r2):
        assert sum(1 for x in r.certificate if x) == 3
        assert T.contains(list(r.certificate))


def test_47_gray_image_distance(cs_47):
    C = code_from_exponents(cs_47, {10: 1, 1: 3, 7: 4})
    M = GrayMatrix.default_compatible(cs_47.field, cs_47.alpha)
    img = gray_image_code(M, hermitian_dual(C))
    res = min_distance_column_rank(img, d_cap=5)
    assert res.d == 4 and res.exact


def test_full_space_distance(F9):
    full = LinearCodeF.from_rows(
        F9, 4, [[1 if i == j else 0 for j in range(4)] for i in range(4)])
    assert min_distance_exhaustive(full, budget=9 ** 4).d == 1
    assert min_distance_column_rank(full).d == 1


def test_budget_and_cap(F9, cs_510):
    T = _tor_510(cs_510)
    with pytest.raises(BudgetError):
        min_distance_exhaustive(T, budget=10)
    res = min_distance_column_rank(T, d_cap=2)
    assert not res.exact and res.d == 3 and res.certificate is None


def test_zero_code_errors(cs_510):
    zero = code_from_exponents(cs_510, {r: 2 for r in cs_510.reps})
    with pytest.raises(CodeError):
        min_distance_R(zero)


def test_min_distance_R_examples(cs_510):
    C = code_from_exponents(cs_510, {5: 2, 3: 2, 1: 0})
    assert min_distance_R(hermitian_dual(C)).d == 3
    u_mod = code_from_exponents(cs_510, {r: 1 for r in cs_510.reps})
    assert min_distance_R(u_mod).d == 1       # Tor is the full space


def test_engine_agreement_random(cs_510, cs_47):
    rng = random.Random(71)
    for cs in (cs_510, cs_47):
        for _ in range(15):
            exps = {r: rng.randint(0, cs.cap) for r in cs.reps}
            C = code_from_exponents(cs, exps)
            T = torsion(C)
            if T.dimension == 0 or cs.field.q ** T.dimension > 1 << 20:
                continue
            r1 = min_distance_exhaustive(T)
            r2 = min_distance_column_rank(T, d_cap=r1.d)
            assert r1.d == r2.d


def test_monotonicity_nested(cs_510):
    """C <= C' (exponentwise) implies d(C) >= d(C')."""
    F = cs_510.field
    lam = cs_510.alpha
    small = LinearCodeF.from_generator_poly(
        F, cs_510.min_polys[3], 5, lam)
    big = LinearCodeF.from_generator_poly(F, (1,), 5, lam)
    assert min_distance_exhaustive(small).d >= min_distance_exhaustive(big).d


def test_jobs_determinism(cs_511, F9):
    from ringcode.cyclo import poly_mul
    by_poly = {cs_511.min_polys[r]: r for r in cs_511.reps}
    f0 = by_poly[(F9.w(2), 1)]
    f4 = by_poly[(F9.from_coeffs((2,)), F9.w(5), 1)]
    D = code_from_exponents(cs_511, {f0: 2, f4: 2})
    T = torsion(D)
    r1 = min_distance_exhaustive(T, jobs=1)
    r2 = min_distance_exhaustive(T, jobs=3)
    assert (r1.d, r1.certificate) == (r2.d, r2.certificate)
    c1 = min_distance_column_rank(T, d_cap=5, jobs=1)
    c2 = min_distance_column_rank(T, d_cap=5, jobs=3)
    assert (c1.d, c1.certificate) == (c2.d, c2.certificate)


def test_R_exhaustive_matches_tor_bridge(cs_510):
    rng = random.Random(72)
    for _ in range(8):
        exps = {r: rng.randint(0, cs_510.cap) for r in cs_510.reps}
        C = code_from_exponents(cs_510, exps)
        if not 0 < C.size_log_q <= 5:
            continue
        direct = min_distance_R_exhaustive(C)
        bridged = min_distance_R(C)
        assert direct.d == bridged.d


# -- backend parity -------------------------------------------------------------

def test_backends_agree(cs_510, F9):
    """Compiled and pure kernels return identical results on the same inputs."""
    T = _tor_510(cs_510)
    rows = np.array(T.gen_rows, dtype=np.uint8)
    add, sub, mul, inv = _backend.field_tables(F9)
    total = F9.q ** T.dimension
    got_py = _kernels_py.exhaustive_scan(rows, add, mul, False, 0, total)
    got_active = _backend.exhaustive_scan(rows, add, mul, False, 0, total)
    assert got_py == got_active
    H = np.array(T.parity_check(), dtype=np.uint8).T.copy()
    for w in (1, 2, 3):
        a = _kernels_py.colrank_first_dependent(H, w, add, sub, mul, inv, 0, 5)
        b = _backend.colrank_first_dependent(H, w, add, sub, mul, inv, 0, 5)
        assert (a is None and b is None) or tuple(a) == tuple(b)


def test_pair_weight_scan(cs_510, F9):
    from ringcode.codes import field_span_rows
    C = code_from_exponents(cs_510, {5: 2, 3: 2, 1: 0})
    rows = np.array(field_span_rows(C), dtype=np.uint8)
    add, sub, mul, inv = _backend.field_tables(F9)
    total = F9.q ** rows.shape[0]
    w_active = _backend.exhaustive_scan(rows, add, mul, True, 0, total)
    w_py = _kernels_py.exhaustive_scan(rows, add, mul, True, 0, total)
    assert w_active == w_py
    # oracle: minimum R-Hamming weight over all codewords by enumeration
    from ringcode.codes import enumerate_codewords
    d_oracle = min(sum(1 for x in v if x)
                   for v in enumerate_codewords(C) if any(v))
    assert w_active[0] == d_oracle


def test_partial_ranges_cover_everything(cs_510, F9):
    T = _tor_510(cs_510)
    rows = np.array(T.gen_rows, dtype=np.uint8)
    add, sub, mul, inv = _backend.field_tables(F9)
    total = F9.q ** T.dimension
    whole = _backend.exhaustive_scan(rows, add, mul, False, 0, total)
    cut = total // 3
    parts = [_backend.exhaustive_scan(rows, add, mul, False, lo, hi)
             for lo, hi in ((0, cut), (cut, 2 * cut), (2 * cut, total))]
    best = min(p[0] for p in parts)
    certs = [p[1] for p in parts if p[0] == best and p[1]]
    assert best == whole[0] and min(certs) == whole[1]
    assert sum(p[2] for p in parts) == whole[2]
