"""Cyclotomic cosets, beta, delta, minimal polynomials, and the dagger operator."""

from __future__ import annotations

import pytest

from ringcode.cyclo import (CycloError, beta_from_alpha, build_cosets, dagger,
                            poly_mul, poly_norm)
from ringcode.gf import get_field


# -- beta_from_alpha ----------------------------------------------------------

def test_beta_trivial_when_pe_is_one(F9):
    for k in (0, 2, 4, 6):
        alpha = F9.w(k)
        if F9.mul(alpha, F9.conj(alpha)) == 1:
            assert beta_from_alpha(F9, alpha, 3, 0) == alpha


def test_beta_f16_example(F16):
    # alpha = w^6 (order 5), p = 2, e = 1: 2f = 1 (mod 5) -> f = 3, beta = w^18 = w^3
    beta = beta_from_alpha(F16, F16.w(6), 2, 1)
    assert beta == F16.w(3)
    assert F16.mul(beta, beta) == F16.w(6)     # beta^{p^e} = alpha


def test_beta_f9_example(F9):
    assert beta_from_alpha(F9, F9.w(4), 3, 0) == F9.w(4)


def test_beta_rejects_non_unitary_alpha(F9):
    with pytest.raises(CycloError):
        beta_from_alpha(F9, F9.w(1), 3, 0)     # w * conj(w) = w^4 != 1


# -- coset structure ----------------------------------------------------------

def test_cosets_510(cs_510):
    members = {c.rep: c.members for c in cs_510.cosets}
    assert members == {1: (1, 9), 3: (3, 7), 5: (5,)}
    kinds = {c.rep: (c.kind, c.partner) for c in cs_510.cosets}
    assert kinds == {1: ("asym", 3), 3: ("asym", 1), 5: ("sym", 5)}


def test_coset_of_one_f4_n17(F4):
    cs = build_cosets(F4, F4.w(1), 17, 1)
    c1 = cs.coset(1)
    assert set(c1.members) == {1, 4, 16, 13}
    assert c1.size == 4


def test_r_equal_one_all_residues(F9):
    # alpha = 1: I is all residues mod n; q = 9 = 1 (mod 4) gives singletons,
    # and -3i = i (mod 4) makes every coset symmetric (direct enumeration)
    cs = build_cosets(F9, 1, 4, 0)
    assert [c.members for c in cs.cosets] == [(0,), (1,), (2,), (3,)]
    assert all(c.kind == "sym" for c in cs.cosets)


def test_gcd_precondition(F9):
    with pytest.raises(CycloError):
        build_cosets(F9, F9.w(4), 6, 0)        # gcd(6, 3) != 1


# -- minimal polynomials --------------------------------------------------------

def test_min_polys_510(cs_510, F9):
    assert cs_510.min_polys[5] == (1, 1)                      # x + 1
    quads = {cs_510.min_polys[1], cs_510.min_polys[3]}
    assert quads == {(1, F9.w(5), 1), (1, F9.w(7), 1)}


def test_min_polys_413_roots(cs_413, F16):
    # three linear factors; root set = solutions of z^3 = w^3 = {w, w^6, w^11}
    roots = sorted(F16.neg(cs_413.min_polys[r][0]) for r in cs_413.reps)
    oracle = sorted(z for z in range(1, 16) if F16.pow(z, 3) == F16.w(3))
    assert roots == oracle == sorted([F16.w(1), F16.w(6), F16.w(11)])


@pytest.mark.parametrize("pm,alpha_log,n,e", [
    ((3, 1), 4, 5, 0),
    ((3, 1), 4, 10, 0),
    ((3, 1), 4, 14, 0),
    ((2, 1), 1, 5, 1),
    ((2, 1), 1, 17, 1),
    ((2, 2), 6, 3, 1),
])
def test_product_of_min_polys(pm, alpha_log, n, e):
    F = get_field(*pm)
    cs = build_cosets(F, F.w(alpha_log), n, e)
    prod = (1,)
    for r in cs.reps:
        prod = poly_mul(F, prod, cs.min_polys[r])
    target = [0] * (n + 1)
    target[0] = F.neg(cs.beta)
    target[n] = 1
    assert prod == poly_norm(target)
    assert sum(c.size for c in cs.cosets) == n


# -- dagger --------------------------------------------------------------------

def test_dagger_examples(F9, F4):
    assert dagger(F9, (1, F9.w(5), 1)) == (1, F9.w(7), 1)
    assert dagger(F9, (1, 1)) == (1, 1)
    # over F_4 the conjugate-reciprocal of x^2+x+w^2 is x^2+w^2 x+w^2 (the
    # printed claim that it is dagger-fixed contradicts the definition)
    assert dagger(F4, (F4.w(2), 1, 1)) == (F4.w(2), F4.w(2), 1)


def test_dagger_involution_and_partner(cs_510, cs_511, cs_47, cs_413):
    for cs in (cs_510, cs_511, cs_47, cs_413):
        F = cs.field
        for c in cs.cosets:
            d = dagger(F, cs.min_polys[c.rep])
            assert d == cs.min_polys[c.partner]
            assert dagger(F, d) == cs.min_polys[c.rep]
            # symmetric <=> dagger-fixed
            assert (c.kind == "sym") == (d == cs.min_polys[c.rep])


def test_dagger_rejects_zero_constant(F9):
    from ringcode.gf import FieldError
    with pytest.raises(FieldError):
        dagger(F9, (0, 1))


def test_delta_is_deterministic(F9):
    a = build_cosets(F9, F9.w(4), 5, 0)
    b = build_cosets(F9, F9.w(4), 5, 0)
    assert a.delta == b.delta
    assert a.min_polys == b.min_polys


def test_json_dump_shape(cs_510):
    d = cs_510.to_json_dict()
    assert d["p"] == 3 and d["m"] == 1 and d["r"] == 2
    assert d["alpha"] == "w^4" and d["beta"] == "w^4"
    assert len(d["cosets"]) == len(d["polys"]) == 3
    assert d["cosets"][0].keys() == {"rep", "members", "degree", "kind", "partner"}
