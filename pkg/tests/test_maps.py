"""Gray map, symplectic map, omega/compatibility predicates, trace pairing."""

from __future__ import annotations

import random

import pytest

from conftest import random_ring_vector
from ringcode.codes import (CodeError, code_from_exponents, hermitian_dual)
from ringcode.maps import (GrayMatrix, SplitVector, constacyclic_compatible,
                           gray_image_code, gray_image_rows, gray_map,
                           gray_weight, omega_condition, phi_map,
                           symplectic_weight, trace_inner_product,
                           trace_orthogonality_transfer)
from ringcode.ring import RingElement, ring_u, ring_zero


def _identity(F):
    return GrayMatrix(F, 1, 0, 0, 1)


# -- the Gray map -------------------------------------------------------------

def test_gray_map_identity_example(F4):
    # 1 + u*w with M = I: (q, r+q) = (w, 1+w)
    out = gray_map(_identity(F4), [RingElement(F4, 1, F4.w(1))])
    assert out == [F4.w(1), F4.add(1, F4.w(1))]


def test_gray_map_zero_and_linearity(F4, F9):
    rng = random.Random(41)
    for F in (F4, F9):
        M = _identity(F)
        assert gray_map(M, [ring_zero(F)] * 4) == [0] * 8
        for _ in range(100):
            x = random_ring_vector(F, 4, rng)
            y = random_ring_vector(F, 4, rng)
            k = rng.randrange(F.q)
            kx = [c.scale(k) for c in x]
            s = [a + b for a, b in zip(kx, y)]
            gx, gy, gs = gray_map(M, x), gray_map(M, y), gray_map(M, s)
            assert gs == [F.add(F.mul(k, a), b) for a, b in zip(gx, gy)]


def test_gray_weight_of_u_vector(F4):
    u1 = [RingElement(F4, 0, 1)] * 5
    assert gray_weight(_identity(F4), u1) == 10


def test_gray_matrix_must_be_invertible(F4):
    with pytest.raises(CodeError):
        GrayMatrix(F4, 1, 1, 1, 1)


# -- omega condition ------------------------------------------------------------

def test_omega_examples(F4):
    assert omega_condition(_identity(F4)) == 1
    # the compatible family M = [[w^2, 1], [w, w]]: a s-bar + b t-bar = 1 != 0
    fam = GrayMatrix(F4, F4.w(2), 1, F4.w(1), F4.w(1))
    assert omega_condition(fam) is None
    diag = GrayMatrix(F4, 1, 0, 0, F4.w(1))
    assert omega_condition(diag) == 1          # w * conj(w) = w^3 = 1


def test_omega_and_compatible_can_coexist_f16(F16):
    # over F_16: b = t * w^5 makes the compatible family pass Omega
    alpha = F16.w(6)
    t, b = 1, F16.w(5)
    M = GrayMatrix(F16, F16.mul(t, alpha), b, F16.mul(b, alpha), t)
    assert constacyclic_compatible(M, alpha)
    lam = omega_condition(M)
    assert lam is not None and lam != 0


# -- constacyclic compatibility ---------------------------------------------------

def test_compatible_examples(F4):
    alpha = F4.w(1)
    fam = GrayMatrix(F4, F4.mul(F4.w(1), alpha), 1, alpha, F4.w(1))
    assert constacyclic_compatible(fam, alpha)
    assert not constacyclic_compatible(_identity(F4), alpha)
    # invertible matrix with b == t is never compatible
    M = GrayMatrix(F4, 1, F4.w(1), 0, F4.w(1))
    assert not constacyclic_compatible(M, alpha)


def test_default_matrix_is_compatible(F4, F16):
    for F, alog in ((F4, 1), (F16, 6)):
        alpha = F.w(alog)
        M = GrayMatrix.default_compatible(F, alpha)
        assert constacyclic_compatible(M, alpha)


# -- the commuting square (char 2) -------------------------------------------------

def _sigma_field(F, lam, vec):
    return [F.mul(lam, vec[-1])] + list(vec[:-1])


def test_commuting_square_samples(cs_47, cs_413):
    from ringcode.codes import constacyclic_shift
    rng = random.Random(42)
    for cs in (cs_47, cs_413):
        F = cs.field
        M = GrayMatrix.default_compatible(F, cs.alpha)
        lam2 = F.mul(cs.alpha, cs.alpha)
        for _ in range(100):
            c = random_ring_vector(F, cs.N, rng)
            lhs = _sigma_field(F, lam2, gray_map(M, c))
            rhs = gray_map(M, constacyclic_shift(cs, c))
            assert lhs == rhs


# -- Gray image transport -----------------------------------------------------------

def test_gray_image_matches_span_47(cs_47):
    F = cs_47.field
    M = GrayMatrix.default_compatible(F, cs_47.alpha)
    C = code_from_exponents(cs_47, {10: 1, 1: 3, 7: 4})
    D = hermitian_dual(C)
    img = gray_image_code(M, D)
    assert (img.length, img.dimension) == (20, 15)
    assert img.gen_rows == gray_image_rows(M, D)
    # another in-family matrix (b = w^2, t = 1) gives the same image code
    b2, t2 = F.w(2), 1
    M2 = GrayMatrix(F, F.mul(t2, cs_47.alpha), b2, F.mul(b2, cs_47.alpha), t2)
    assert constacyclic_compatible(M2, cs_47.alpha)
    assert gray_image_rows(M2, D) == img.gen_rows


def test_gray_image_matches_span_various(cs_47, cs_413):
    rng = random.Random(43)
    for cs in (cs_47, cs_413):
        F = cs.field
        M = GrayMatrix.default_compatible(F, cs.alpha)
        for _ in range(5):
            C = code_from_exponents(cs, {r: rng.randint(0, cs.cap)
                                         for r in cs.reps})
            assert gray_image_code(M, C).gen_rows == gray_image_rows(M, C)
        zero = code_from_exponents(cs, {r: cs.cap for r in cs.reps})
        assert gray_image_code(M, zero).dimension == 0
        full = code_from_exponents(cs, {})
        assert gray_image_code(M, full).dimension == 2 * cs.N


def test_gray_image_requires_char2(cs_510):
    M = _identity(cs_510.field)
    C = code_from_exponents(cs_510, {5: 2, 3: 2, 1: 0})
    with pytest.raises(CodeError):
        gray_image_code(M, C)


def test_duality_commutation_omega_matrix(cs_413):
    """Thm: Phi_M(C^perpH) = Phi_M(C)^perpH when M passes Omega (p = 2)."""
    from ringcode import _linalg
    from ringcode.quantum import hermitian_dual_code_F
    F = cs_413.field
    alpha = cs_413.alpha
    t, b = 1, F.w(5)
    M = GrayMatrix(F, F.mul(t, alpha), b, F.mul(b, alpha), t)
    assert omega_condition(M) is not None
    rng = random.Random(44)
    for _ in range(10):
        C = code_from_exponents(cs_413, {r: rng.randint(0, cs_413.cap)
                                         for r in cs_413.reps})
        img_of_dual = gray_image_rows(M, hermitian_dual(C))
        img = gray_image_rows(M, C)
        from ringcode.codes import LinearCodeF
        dual_of_img = hermitian_dual_code_F(
            LinearCodeF.from_rows(F, 2 * cs_413.N, img))
        assert img_of_dual == dual_of_img.gen_rows


# -- phi, symplectic weight, trace pairing --------------------------------------------

def test_phi_examples(F9):
    v = phi_map([RingElement(F9, 1, F9.w(1))])
    assert v.left == (F9.w(1),) and v.right == (1,)
    u = ring_u(F9)
    vec = [RingElement(F9, 0, 3), RingElement(F9, 0, 5)]
    s = phi_map(vec)
    assert s.right == (0, 0)
    z = phi_map([ring_zero(F9)] * 3)
    assert z.left == z.right == (0, 0, 0)


def test_symplectic_weight(F9):
    x = SplitVector(F9, (1, 0, F9.w(1)), (0, 0, F9.w(1)))
    assert symplectic_weight(x) == 2


def test_symplectic_weight_is_hamming_weight(F4, F9, F16):
    rng = random.Random(45)
    for F in (F4, F9, F16):
        for _ in range(200):
            c = random_ring_vector(F, 6, rng)
            assert symplectic_weight(phi_map(c)) == sum(1 for x in c if x)


def test_trace_pairing_diagonal_and_antisymmetry(F9):
    x = SplitVector(F9, (1,), (F9.w(1),))
    v = trace_inner_product(x, x)
    # v = 1*conj(w) - w*conj(1) = w^3 - w = w^2; conj(v) = -v (oracle v^3 = -v)
    assert v == F9.w(2)
    assert F9.pow(v, 3) == F9.neg(v)
    rng = random.Random(46)
    for _ in range(200):
        a = SplitVector(F9, tuple(rng.randrange(9) for _ in range(4)),
                        tuple(rng.randrange(9) for _ in range(4)))
        b = SplitVector(F9, tuple(rng.randrange(9) for _ in range(4)),
                        tuple(rng.randrange(9) for _ in range(4)))
        assert trace_inner_product(a, b) == \
            F9.neg(F9.conj(trace_inner_product(b, a)))
        d = trace_inner_product(a, a)
        assert F9.conj(d) == F9.neg(d)


def test_trace_pairing_length_mismatch(F9):
    a = SplitVector(F9, (1,), (0,))
    b = SplitVector(F9, (1, 0), (0, 0))
    with pytest.raises(CodeError):
        trace_inner_product(a, b)


def test_trace_transfer(cs_510):
    C = code_from_exponents(cs_510, {5: 2, 3: 2, 1: 0})
    ok, witness = trace_orthogonality_transfer(C)
    assert ok and witness is None
    u_module = code_from_exponents(cs_510, {r: 1 for r in cs_510.reps})
    ok, _ = trace_orthogonality_transfer(u_module)
    assert ok
    full = code_from_exponents(cs_510, {})
    ok, witness = trace_orthogonality_transfer(full)
    assert not ok and witness is not None


def test_distance_preservation_random(F4, F9):
    rng = random.Random(47)
    for F in (F4, F9):
        M = GrayMatrix(F, 1, F.w(1), F.w(1), 1)
        if F.sub(F.mul(1, 1), F.mul(F.w(1), F.w(1))) == 0:
            M = _identity(F)
        for _ in range(100):
            x = random_ring_vector(F, 5, rng)
            y = random_ring_vector(F, 5, rng)
            diff = [a - b for a, b in zip(x, y)]
            d_g = sum(gray_weight(M, [c]) for c in diff)
            img_x, img_y = gray_map(M, x), gray_map(M, y)
            d_h = sum(1 for a, b in zip(img_x, img_y) if a != b)
            assert d_g == d_h


def test_gray_matrix_parse_format(F4):
    M = GrayMatrix.parse(F4, "w^2,1;w,w")
    assert (M.a, M.b, M.s, M.t) == (F4.w(2), 1, F4.w(1), F4.w(1))
    assert GrayMatrix.parse(F4, M.format()).format() == M.format()
