"""Factoring x^n - beta over F_q through q-cyclotomic cosets modulo rn.

The constant alpha (with alpha * conj(alpha) = 1, so ord(alpha) | p^m + 1)
determines beta via beta^{p^e} = alpha.  A primitive rn-th root of unity
delta with delta^n = beta lives in F_{q^l}; each coset C_i of residues
j = 1 (mod r) yields the minimal polynomial M_i(x) = prod_{j in C_i}
(x - delta^j), descended coefficientwise to F_q.

Cosets are classified symmetric (fixed by i -> -p^m i) or grouped in
asymmetric pairs; the dagger operator (monic conjugate-reciprocal) permutes
the M_i along exactly that pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gf import ExtFieldSpec, FieldError, FieldSpec, extend

__all__ = ["Coset", "CosetStructure", "beta_from_alpha", "build_cosets", "dagger"]


class CycloError(ValueError):
    """Invalid coset-structure parameters."""


def multiplicative_order(F: FieldSpec, a: int) -> int:
    return F.order(a)


def beta_from_alpha(F: FieldSpec, alpha: int, p: int, e: int) -> int:
    """beta = alpha^f where p^e f = 1 (mod r); then beta^{p^e} = alpha."""
    if alpha == 0 or F.mul(alpha, F.conj(alpha)) != 1:
        raise CycloError("alpha must satisfy alpha * conj(alpha) = 1")
    r = F.order(alpha)
    if r == 1:
        return alpha
    pe = pow(p, e, r)
    f = pow(pe, -1, r)
    return F.pow(alpha, f)


@dataclass(frozen=True)
class Coset:
    rep: int
    members: tuple[int, ...]
    kind: str           # "sym" | "asym"
    partner: int        # dagger-partner representative (== rep when symmetric)

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class CosetStructure:
    """Cosets, classification, delta, and minimal polynomials for one instance."""

    field: FieldSpec
    alpha: int
    r: int
    n: int
    e: int
    beta: int
    rn: int
    ext: ExtFieldSpec
    delta: tuple
    cosets: list[Coset]
    min_polys: dict[int, tuple[int, ...]]   # rep -> ascending coeffs over F_q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def N(self) -> int:
        return self.p ** self.e * self.n

    @property
    def cap(self) -> int:
        """Maximal exponent on any factor: 2 p^e (see codes module erratum note)."""
        return 2 * self.p ** self.e

    @property
    def reps(self) -> list[int]:
        return [c.rep for c in self.cosets]

    def coset(self, rep: int) -> Coset:
        for c in self.cosets:
            if c.rep == rep:
                return c
        raise CycloError(f"unknown coset representative {rep}")

    def partner(self, rep: int) -> int:
        return self.coset(rep).partner

    def poly_degree(self, rep: int) -> int:
        return len(self.min_polys[rep]) - 1

    def to_json_dict(self) -> dict:
        F = self.field
        return {
            "p": self.p,
            "m": self.m,
            "e": self.e,
            "n": self.n,
            "alpha": F.format_element(self.alpha),
            "r": self.r,
            "beta": F.format_element(self.beta),
            "cosets": [
                {
                    "rep": c.rep,
                    "members": list(c.members),
                    "degree": c.size,
                    "kind": c.kind,
                    "partner": c.partner,
                }
                for c in self.cosets
            ],
            "polys": [F.format_poly(self.min_polys[c.rep]) for c in self.cosets],
        }


def build_cosets(F: FieldSpec, alpha: int, n: int, e: int) -> CosetStructure:
    """Factor x^n - beta via cosets mod rn; deterministic in all choices."""
    p, q = F.p, F.q
    if n < 1 or gcd(n, p) != 1:
        raise CycloError(f"n = {n} must be positive and coprime to p = {p}")
    if e < 0:
        raise CycloError("e must be non-negative")
    if alpha == 0 or F.mul(alpha, F.conj(alpha)) != 1:
        raise CycloError("alpha must be a unit with alpha * conj(alpha) = 1")
    r = F.order(alpha)
    beta = beta_from_alpha(F, alpha, p, e)
    rn = r * n

    # q-cyclotomic cosets on {j : j = 1 (mod r)}; for r = 1 that is all of Z_n
    residues = [j for j in range(rn) if j % r == 1 % r]
    seen: set[int] = set()
    member_lists: list[list[int]] = []
    for j in residues:
        if j in seen:
            continue
        orbit = []
        x = j
        while x not in orbit:
            orbit.append(x)
            x = (x * q) % rn
        orbit.sort()
        member_lists.append(orbit)
        seen.update(orbit)
    member_lists.sort(key=lambda c: c[0])
    rep_of = {j: c[0] for c in member_lists for j in c}

    pm = p ** F.m
    cosets = []
    for c in member_lists:
        i = c[0]
        j = rep_of[(-pm * i) % rn]
        cosets.append(Coset(rep=i, members=tuple(c),
                            kind="sym" if j == i else "asym", partner=j))

    # delta: lexicographically smallest primitive rn-th root with delta^n = beta
    ell = 1
    x = q % rn
    while x != 1 % rn:
        x = (x * q) % rn
        ell += 1
    ext = extend(F, ell)
    gamma = ext.pow(ext.primitive_element(), (ext.Q - 1) // rn)
    beta_e = ext.embed(beta)
    delta = None
    for s in range(1, rn + 1):
        if gcd(s, rn) != 1:
            continue
        cand = ext.pow(gamma, s)
        if ext.pow(cand, n) == beta_e and (
                delta is None or ext.key(cand) < ext.key(delta)):
            delta = cand
    if delta is None:  # impossible when preconditions hold
        raise CycloError("no admissible delta found (internal error)")

    min_polys: dict[int, tuple[int, ...]] = {}
    for c in cosets:
        coeffs = [ext.one()]
        for j in c.members:
            root = ext.pow(delta, j)
            nxt = [ext.zero()] * (len(coeffs) + 1)
            for i, cf in enumerate(coeffs):
                nxt[i + 1] = ext.add(nxt[i + 1], cf)
                nxt[i] = ext.sub(nxt[i], ext.mul(root, cf))
            coeffs = nxt
        desc = []
        for cf in coeffs:
            d = ext.descend(cf)
            if d is None:
                raise CycloError("coefficient descent failed (internal error)")
            desc.append(d)
        min_polys[c.rep] = tuple(desc)

    cs = CosetStructure(field=F, alpha=alpha, r=r, n=n, e=e, beta=beta, rn=rn,
                        ext=ext, delta=delta, cosets=cosets, min_polys=min_polys)
    _verify_product(cs)
    return cs


def _verify_product(cs: CosetStructure) -> None:
    """prod_i M_i(x) must equal x^n - beta exactly."""
    F = cs.field
    prod = (1,)
    for c in cs.cosets:
        prod = poly_mul(F, prod, cs.min_polys[c.rep])
    target = [0] * (cs.n + 1)
    target[0] = F.neg(cs.beta)
    target[cs.n] = 1
    if list(prod) != target:
        raise CycloError("minimal polynomial product != x^n - beta (internal error)")


# -- field polynomial helpers (ascending coefficient tuples of raw indices) --

def poly_norm(f) -> tuple[int, ...]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_add(F: FieldSpec, f, g) -> tuple[int, ...]:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return poly_norm([F.add(a, b) for a, b in zip(f, g)])


def poly_mul(F: FieldSpec, f, g) -> tuple[int, ...]:
    f, g = poly_norm(f), poly_norm(g)
    if not f or not g:
        return ()
    res = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                res[i + j] = F.add(res[i + j], F.mul(a, b))
    return poly_norm(res)


def poly_pow(F: FieldSpec, f, e: int) -> tuple[int, ...]:
    r: tuple[int, ...] = (1,)
    f = poly_norm(f)
    while e:
        if e & 1:
            r = poly_mul(F, r, f)
        f = poly_mul(F, f, f)
        e >>= 1
    return r


def poly_divmod(F: FieldSpec, f, g) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g = poly_norm(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.inv(g[-1])
    rem = list(f)
    quo = [0] * max(0, len(rem) - len(g) + 1)
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        c = F.mul(rem[-1], inv)
        s = len(rem) - len(g)
        quo[s] = F.add(quo[s], c)
        for i, y in enumerate(g):
            rem[s + i] = F.sub(rem[s + i], F.mul(c, y))
    return poly_norm(quo), poly_norm(rem)


def poly_divides(F: FieldSpec, g, f) -> bool:
    return poly_divmod(F, f, g)[1] == ()


def dagger(F: FieldSpec, f) -> tuple[int, ...]:
    """Monic conjugate-reciprocal: reverse, conjugate, normalize to monic.

    Requires a nonzero constant term (true for every divisor of x^n - beta).
    """
    f = poly_norm(f)
    if not f:
        raise FieldError("dagger of the zero polynomial")
    if f[0] == 0:
        raise FieldError("dagger requires a nonzero constant term")
    rev = [F.conj(c) for c in reversed(f)]
    inv = F.inv(rev[-1])
    if inv != 1:
        rev = [F.mul(inv, c) for c in rev]
    return tuple(rev)
