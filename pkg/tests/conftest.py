"""Shared fixtures: the three fields of interest and standard coset instances."""

from __future__ import annotations

import random

import pytest

from ringcode.cyclo import build_cosets
from ringcode.gf import get_field
from ringcode.ring import RingElement


@pytest.fixture(scope="session")
def F4():
    return get_field(2, 1)


@pytest.fixture(scope="session")
def F9():
    return get_field(3, 1)


@pytest.fixture(scope="session")
def F16():
    return get_field(2, 2)


@pytest.fixture(scope="session")
def cs_510(F9):
    """q=9, alpha=w^4, n=5, e=0: the length-5 instance."""
    return build_cosets(F9, F9.w(4), 5, 0)


@pytest.fixture(scope="session")
def cs_511(F9):
    """q=9, alpha=w^4, n=10, e=0: the length-10 instance."""
    return build_cosets(F9, F9.w(4), 10, 0)


@pytest.fixture(scope="session")
def cs_47(F4):
    """q=4, alpha=w, n=5, e=1: the length-10 instance over F_4."""
    return build_cosets(F4, F4.w(1), 5, 1)


@pytest.fixture(scope="session")
def cs_413(F16):
    """q=16, alpha=w^6, n=3, e=1: the length-6 instance over F_16."""
    return build_cosets(F16, F16.w(6), 3, 1)


def random_ring_vector(F, n, rng: random.Random):
    return [RingElement(F, rng.randrange(F.q), rng.randrange(F.q))
            for _ in range(n)]


def random_so_exponents(cs, rng: random.Random):
    """A random exponent vector in the corrected self-orthogonality region."""
    pe = cs.p ** cs.e
    cap = cs.cap
    exps = {}
    for c in cs.cosets:
        if c.kind == "sym":
            exps[c.rep] = rng.randint(pe, cap)
    pairs = {tuple(sorted((c.rep, c.partner)))
             for c in cs.cosets if c.kind == "asym"}
    for a, b in pairs:
        while True:
            va, vb = rng.randint(0, cap), rng.randint(0, cap)
            if va + vb >= 2 * pe:
                exps[a], exps[b] = va, vb
                break
    return exps
