"""Constacyclic codes over R = F_q + uF_q as exponent vectors over cosets.

An alpha(1+u)-constacyclic code of length N = p^e n is an ideal of
R[x]/<x^N - alpha(1+u)>.  Eliminating u via u = alpha^{-1} (x^n - beta)^{p^e}
identifies that quotient with F_q[x]/<(x^n - beta)^{2 p^e}>, so every code is
<prod_i M_i(x)^{a_i}> with 0 <= a_i <= 2 p^e, stored as the map rep -> a_i.

Note the exponent bound: the source theorems print p^{e+1}, which coincides
with 2 p^e only for p = 2; the nilpotency ((x^n - beta)^{p^e})^2 = (alpha u)^2
= 0 forces 2 p^e, and all worked examples validate under that bound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import _linalg
from .cyclo import (CosetStructure, build_cosets, dagger, poly_divmod,
                    poly_divides, poly_mul, poly_norm, poly_pow)
from .gf import FieldSpec, get_field
from .ring import RingElement, ring_one, ring_u, ring_zero

__all__ = [
    "CodeError", "BudgetError", "ConstacyclicCode", "LinearCodeF",
    "RModuleMatrix", "code_from_exponents", "hermitian_dual",
    "is_hermitian_self_orthogonal", "gram_self_orthogonality_check",
    "torsion", "residue", "generator_matrix_F", "standard_form",
    "dual_generator_matrix_R", "membership", "enumerate_codewords",
    "hermitian_inner_product",
]

DEFAULT_BUDGET = 1 << 32


class CodeError(ValueError):
    """Invalid code construction or operation."""


class BudgetError(RuntimeError):
    """Enumeration would exceed the configured budget."""


def enumeration_budget() -> int:
    env = os.environ.get("RINGCODE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# the R-code
# ---------------------------------------------------------------------------

@dataclass
class ConstacyclicCode:
    """An alpha(1+u)-constacyclic code, one exponent per coset."""

    cs: CosetStructure
    exponents: dict[int, int]
    _gen_poly: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def N(self) -> int:
        return self.cs.N

    @property
    def field(self) -> FieldSpec:
        return self.cs.field

    @property
    def size_log_q(self) -> int:
        """log_q |C| = 2N - sum a_i deg M_i."""
        used = sum(a * self.cs.poly_degree(i) for i, a in self.exponents.items())
        return 2 * self.N - used

    @property
    def size(self) -> int:
        return self.field.q ** self.size_log_q

    @property
    def generator_poly(self) -> tuple[int, ...]:
        """prod_i M_i^{a_i} in the field model F_q[x]/<(x^n - beta)^{2p^e}>."""
        if self._gen_poly is None:
            g: tuple[int, ...] = (1,)
            F = self.field
            for i in sorted(self.exponents):
                a = self.exponents[i]
                if a:
                    g = poly_mul(F, g, poly_pow(F, self.cs.min_polys[i], a))
            self._gen_poly = g
        return self._gen_poly

    def exponent_tuple(self) -> tuple[int, ...]:
        return tuple(self.exponents[i] for i in self.cs.reps)

    def to_json_dict(self) -> dict:
        F = self.field
        return {
            "field": {"p": F.p, "m": F.m},
            "alpha": F.format_element(self.cs.alpha),
            "n": self.cs.n,
            "e": self.cs.e,
            "exponents": {str(i): self.exponents[i] for i in self.cs.reps},
            "size_log_q": self.size_log_q,
            "generator_poly": F.format_poly(self.generator_poly),
        }

    def __eq__(self, other):
        return (isinstance(other, ConstacyclicCode)
                and self.cs.field == other.cs.field
                and self.cs.alpha == other.cs.alpha
                and self.cs.n == other.cs.n and self.cs.e == other.cs.e
                and self.exponents == other.exponents)


def code_from_exponents(cs: CosetStructure, exponents: dict[int, int]) -> ConstacyclicCode:
    """Build <prod M_i^{a_i}>; every a_i must lie in [0, 2p^e]."""
    cap = cs.cap
    reps = set(cs.reps)
    exps = {}
    for i, a in exponents.items():
        i = int(i)
        if i not in reps:
            raise CodeError(f"unknown coset representative {i}")
        if not 0 <= a <= cap:
            raise CodeError(f"exponent {a} for coset {i} outside [0, {cap}]")
        exps[i] = int(a)
    for i in reps:
        exps.setdefault(i, 0)
    return ConstacyclicCode(cs=cs, exponents=exps)


def code_from_descriptor(desc: dict) -> ConstacyclicCode:
    """Rebuild a code from its JSON descriptor."""
    F = get_field(int(desc["field"]["p"]), int(desc["field"]["m"]))
    alpha = F.parse_element(desc["alpha"])
    cs = build_cosets(F, alpha, int(desc["n"]), int(desc["e"]))
    return code_from_exponents(cs, {int(k): int(v) for k, v in desc["exponents"].items()})


def hermitian_dual(C: ConstacyclicCode) -> ConstacyclicCode:
    """C^perpH = <prod (M_i^dagger)^{2p^e - a_i}>, i.e. rep j gets 2p^e - a_{partner(j)}."""
    cap = C.cs.cap
    exps = {j: cap - C.exponents[C.cs.partner(j)] for j in C.cs.reps}
    return ConstacyclicCode(cs=C.cs, exponents=exps)


def is_hermitian_self_orthogonal(C: ConstacyclicCode) -> bool:
    """Exponent test: C in C^perpH iff every dual exponent <= the code exponent."""
    dual = hermitian_dual(C)
    return all(dual.exponents[i] <= C.exponents[i] for i in C.cs.reps)


# ---------------------------------------------------------------------------
# the field model R^N <-> F_q[x]/<(x^n - beta)^{2p^e}>
# ---------------------------------------------------------------------------

def _u_image(cs: CosetStructure) -> tuple[int, ...]:
    """alpha^{-1}(x^n - beta)^{p^e}, the image of u in the field model."""
    F = cs.field
    h = [0] * (cs.n + 1)
    h[0] = F.neg(cs.beta)
    h[cs.n] = 1
    h = poly_pow(F, tuple(h), cs.p ** cs.e)
    ainv = F.inv(cs.alpha)
    return tuple(F.mul(ainv, c) for c in h)


def ring_vector_to_field_poly(cs: CosetStructure, vec: list[RingElement]) -> tuple[int, ...]:
    """(r_i + u q_i)_i -> r(x) + alpha^{-1}(x^n-beta)^{p^e} q(x), degree < 2N."""
    F = cs.field
    if len(vec) != cs.N:
        raise CodeError(f"vector length {len(vec)} != N = {cs.N}")
    r = poly_norm([c.a for c in vec])
    qpart = poly_norm([c.b for c in vec])
    return poly_norm(poly_add_(F, r, poly_mul(F, _u_image(cs), qpart)))


def poly_add_(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return [F.add(a, b) for a, b in zip(f, g)]


def field_poly_to_ring_vector(cs: CosetStructure, w) -> list[RingElement]:
    """Inverse of ring_vector_to_field_poly; reduces w mod (x^n-beta)^{2p^e}."""
    F = cs.field
    h = [0] * (cs.n + 1)
    h[0] = F.neg(cs.beta)
    h[cs.n] = 1
    h = poly_pow(F, tuple(h), cs.p ** cs.e)
    if len(w) - 1 >= 2 * cs.N:
        w = poly_divmod(F, w, poly_mul(F, h, h))[1]
    w1, w0 = poly_divmod(F, w, h)
    r = list(w0) + [0] * (cs.N - len(w0))
    qp = [F.mul(cs.alpha, c) for c in w1]
    qp = qp + [0] * (cs.N - len(qp))
    return [RingElement(F, a, b) for a, b in zip(r, qp)]


def constacyclic_shift(cs: CosetStructure, vec: list[RingElement]) -> list[RingElement]:
    """sigma_{alpha(1+u)}: (c_0..c_{N-1}) -> (alpha(1+u) c_{N-1}, c_0, ..)."""
    F = cs.field
    lam = RingElement(F, cs.alpha, cs.alpha)   # alpha(1+u) = alpha + u alpha
    return [lam * vec[-1]] + vec[:-1]


def spanning_rows_R(C: ConstacyclicCode) -> list[list[RingElement]]:
    """{x^j g : 0 <= j < N} as R-vectors; they R-span the code."""
    cs = C.cs
    v = field_poly_to_ring_vector(cs, C.generator_poly)
    rows = []
    for _ in range(cs.N):
        rows.append(v)
        v = constacyclic_shift(cs, v)
    return rows


def phi_coords(vec: list[RingElement]) -> list[int]:
    """phi layout (q | r): u-parts then residues, as raw field indices."""
    return [c.b for c in vec] + [c.a for c in vec]


def field_span_rows(C: ConstacyclicCode) -> list[list[int]]:
    """F_q-basis of phi(C) in F_q^{2N}: phi of {x^j g : j < 2N - deg g}."""
    cs = C.cs
    F = cs.field
    g = C.generator_poly
    dim = 2 * cs.N - (len(g) - 1)
    rows = []
    w = list(g)
    for _ in range(max(dim, 0)):
        rows.append(phi_coords(field_poly_to_ring_vector(cs, poly_norm(w))))
        w = [0] + w   # multiply by x; degree stays < 2N within the loop
    return rows


def membership(C: ConstacyclicCode, vec: list[RingElement]) -> bool:
    """Reduction in the field model: vec is in C iff g(x) divides its image."""
    g = C.generator_poly
    if len(g) == 1:
        return True
    w = ring_vector_to_field_poly(C.cs, vec)
    if w == ():
        return True
    return poly_divides(C.field, g, w)


def enumerate_codewords(C: ConstacyclicCode, budget: int | None = None):
    """Stream all |C| codewords (duplicate-free); refuses beyond the budget."""
    if budget is None:
        budget = enumeration_budget()
    if C.size > budget:
        raise BudgetError(f"|C| = q^{C.size_log_q} exceeds budget {budget}")
    cs, F = C.cs, C.field
    g = C.generator_poly
    dim = 2 * cs.N - (len(g) - 1)
    basis = []
    w = list(g)
    for _ in range(dim):
        basis.append(poly_norm(w))
        w = [0] + w
    # odometer over F_q-combinations
    msg = [0] * dim
    while True:
        acc: list[int] = []
        for c, b in zip(msg, basis):
            if c:
                acc = poly_add_(F, acc, [F.mul(c, x) for x in b])
        yield field_poly_to_ring_vector(cs, poly_norm(acc))
        i = 0
        while i < dim and msg[i] == F.q - 1:
            msg[i] = 0
            i += 1
        if i == dim:
            return
        msg[i] += 1


def hermitian_inner_product(x: list[RingElement], y: list[RingElement]) -> RingElement:
    """<x, y>_H = sum x_i conj(y_i)."""
    acc = ring_zero(x[0].spec)
    for a, b in zip(x, y):
        acc = acc + a * b.conj()
    return acc


# ---------------------------------------------------------------------------
# field-level linear codes
# ---------------------------------------------------------------------------

@dataclass
class LinearCodeF:
    """A linear code over F_q given by a row-reduced generator matrix."""

    field: FieldSpec
    length: int
    gen_rows: list[list[int]]            # RREF, full rank
    shift: int | None = None             # constacyclic lambda, when applicable
    gen_poly: tuple[int, ...] | None = None

    @property
    def dimension(self) -> int:
        return len(self.gen_rows)

    @classmethod
    def from_rows(cls, F: FieldSpec, length: int, rows, shift=None, gen_poly=None):
        red, _ = _linalg.rref(F, rows)
        return cls(field=F, length=length, gen_rows=red, shift=shift,
                   gen_poly=gen_poly)

    @classmethod
    def from_generator_poly(cls, F: FieldSpec, g, n: int, lam: int) -> "LinearCodeF":
        rows = generator_matrix_F(F, g, n, lam)
        red, _ = _linalg.rref(F, rows)
        return cls(field=F, length=n, gen_rows=red, shift=lam, gen_poly=poly_norm(g))

    def parity_check(self) -> list[list[int]]:
        return _linalg.parity_check(self.field, self.gen_rows) if self.gen_rows \
            else [[1 if i == j else 0 for j in range(self.length)]
                  for i in range(self.length)]

    def contains(self, vec) -> bool:
        return _linalg.in_row_span(self.field, self.gen_rows, vec) if self.gen_rows \
            else not any(vec)

    def __eq__(self, other):
        return (isinstance(other, LinearCodeF) and self.field == other.field
                and self.length == other.length and self.gen_rows == other.gen_rows)


def generator_matrix_F(F: FieldSpec, g, n: int, lam: int) -> list[list[int]]:
    """Encoder rows x^j g(x) mod x^n - lam, j < n - deg g; g must divide x^n - lam."""
    g = poly_norm(g)
    if not g:
        raise CodeError("zero generator polynomial")
    xn = [0] * (n + 1)
    xn[0] = F.neg(lam)
    xn[n] = 1
    if not poly_divides(F, g, tuple(xn)):
        raise CodeError("generator polynomial does not divide x^n - lambda")
    k = n - (len(g) - 1)
    rows = []
    cur = list(g) + [0] * (n - len(g))
    for _ in range(k):
        rows.append(list(cur))
        last = cur[-1]
        cur = [F.mul(lam, last)] + cur[:-1]
    return rows


def _tor_res_code(C: ConstacyclicCode, exps: dict[int, int]) -> LinearCodeF:
    cs, F = C.cs, C.field
    g: tuple[int, ...] = (1,)
    for i in sorted(exps):
        if exps[i]:
            g = poly_mul(F, g, poly_pow(F, cs.min_polys[i], exps[i]))
    # alpha-constacyclic of length N: x^N - alpha = (x^n - beta)^{p^e}
    return LinearCodeF.from_generator_poly(F, g, cs.N, cs.alpha)


def torsion(C: ConstacyclicCode) -> LinearCodeF:
    """Tor(C) = {b : ub in C}: alpha-constacyclic with exponents max(a_i - p^e, 0)."""
    pe = C.cs.p ** C.cs.e
    return _tor_res_code(C, {i: max(a - pe, 0) for i, a in C.exponents.items()})


def residue(C: ConstacyclicCode) -> LinearCodeF:
    """Res(C) = C mod u: alpha-constacyclic with exponents min(a_i, p^e)."""
    pe = C.cs.p ** C.cs.e
    return _tor_res_code(C, {i: min(a, pe) for i, a in C.exponents.items()})


# ---------------------------------------------------------------------------
# R-module generator matrices in standard form (Prop 2.1 shape)
# ---------------------------------------------------------------------------

@dataclass
class RModuleMatrix:
    """Standard-form generator matrix over R with its column permutation.

    Rows are in the permuted coordinates: columns [0, k0) carry I_{k0},
    columns [k0, k0+k1) carry u I_{k1}.  perm[new] = old coordinate.
    """

    field: FieldSpec
    rows: list[list[RingElement]]
    k0: int
    k1: int
    perm: list[int]

    @property
    def N(self) -> int:
        return len(self.perm)

    def unpermuted_rows(self) -> list[list[RingElement]]:
        out = []
        for row in self.rows:
            orig = [None] * self.N
            for new, old in enumerate(self.perm):
                orig[old] = row[new]
            out.append(orig)
        return out


def standard_form(F: FieldSpec, rows: list[list[RingElement]]) -> RModuleMatrix:
    """Row-reduce R-rows to the [[I A B], [0 uI uD]] shape (plus permutation)."""
    if not rows:
        raise CodeError("no rows")
    n = len(rows[0])
    mat = [list(r) for r in rows]
    unit_pivots: list[int] = []
    unit_rows: list[list[RingElement]] = []
    # phase 1: unit pivots, fully eliminated everywhere else
    for col in range(n):
        pr = next((i for i, r in enumerate(mat) if r[col].is_unit), None)
        if pr is None:
            continue
        row = mat.pop(pr)
        inv = row[col].inv()
        row = [inv * x for x in row]
        for other in mat:
            c = other[col]
            if c:
                for j in range(n):
                    other[j] = other[j] - c * row[j]
        for other in unit_rows:
            c = other[col]
            if c:
                for j in range(n):
                    other[j] = other[j] - c * row[j]
        unit_rows.append(row)
        unit_pivots.append(col)
    # phase 2: leftovers lie in <u>; reduce their residue parts over F_q
    res_rows = []
    for r in mat:
        if any(x.a for x in r):
            raise CodeError("standard form failed (internal error)")
        vec = [x.b for x in r]
        if any(vec):
            res_rows.append(vec)
    red, u_pivots = _linalg.rref(F, res_rows)
    u_rows = [[RingElement(F, 0, c) for c in row] for row in red]
    # clear u-parts of unit rows at u-pivot columns
    for row in unit_rows:
        for urow, pc in zip(u_rows, u_pivots):
            c = row[pc].b
            if c:
                for j in range(n):
                    row[j] = row[j] - urow[j].scale(c)
    k0, k1 = len(unit_rows), len(u_rows)
    perm = unit_pivots + u_pivots + [c for c in range(n)
                                     if c not in set(unit_pivots) | set(u_pivots)]
    out_rows = [[row[c] for c in perm] for row in unit_rows + u_rows]
    return RModuleMatrix(field=F, rows=out_rows, k0=k0, k1=k1, perm=perm)


def gram_matrix(M: RModuleMatrix) -> list[list[RingElement]]:
    """G conj(G)^T over R."""
    rows = M.rows
    out = []
    for x in rows:
        out.append([hermitian_inner_product(x, y) for y in rows])
    return out


def gram_self_orthogonality_check(C: ConstacyclicCode) -> bool:
    """Matrix oracle (independent of the exponent test): G conj(G)^T = 0."""
    M = standard_form_of_code(C)
    if M is None:
        return True   # zero code
    return all(not v for row in gram_matrix(M) for v in row)


def standard_form_of_code(C: ConstacyclicCode) -> RModuleMatrix | None:
    rows = spanning_rows_R(C)
    u = ring_u(C.field)
    rows = rows + [[u * x for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return None
    return standard_form(C.field, rows)


def dual_generator_matrix_R(M: RModuleMatrix) -> RModuleMatrix:
    """Hermitian-dual generator blocks from the standard form.

    [[ conj(D)^T conj(A)^T - conj(B)^T , -conj(D)^T , I ],
     [ -u conj(A)^T                    ,  u I       , 0 ]]
    (sign-corrected for odd characteristic; collapses to the char-2 display).
    """
    F = M.field
    k0, k1, n = M.k0, M.k1, M.N
    k2 = n - k0 - k1
    zero, one = ring_zero(F), ring_one(F)

    def entry(i, j):
        return M.rows[i][j]

    # blocks of the primal: A = unit rows x u-pivot cols (F_q entries as R),
    # B = unit rows x free cols, D = residue of u-rows x free cols
    A = [[entry(i, k0 + j) for j in range(k1)] for i in range(k0)]
    B = [[entry(i, k0 + k1 + j) for j in range(k2)] for i in range(k0)]
    D = [[RingElement(F, entry(k0 + i, k0 + k1 + j).b, 0) for j in range(k2)]
         for i in range(k1)]

    def cj(Mx):
        return [[x.conj() for x in row] for row in Mx]

    def tr(Mx, nrows, ncols):
        return [[Mx[i][j] for i in range(nrows)] for j in range(ncols)]

    def matmul(X, Y, nrows, inner, ncols):
        out = []
        for i in range(nrows):
            row = []
            for j in range(ncols):
                acc = zero
                for t in range(inner):
                    acc = acc + X[i][t] * Y[t][j]
                row.append(acc)
            out.append(row)
        return out

    At = tr(cj(A), k0, k1)              # conj(A)^T : k1 x k0
    Bt = tr(cj(B), k0, k2)              # conj(B)^T : k2 x k0
    Dt = tr(cj(D), k1, k2)              # conj(D)^T : k2 x k1
    DtAt = matmul(Dt, At, k2, k1, k0)   # k2 x k0

    rows = []
    for i in range(k2):
        left = [DtAt[i][j] - Bt[i][j] for j in range(k0)]
        mid = [-Dt[i][j] for j in range(k1)]
        right = [one if j == i else zero for j in range(k2)]
        rows.append(left + mid + right)
    u = ring_u(F)
    for i in range(k1):
        left = [-(u * At[i][j]) for j in range(k0)]
        mid = [u if j == i else zero for j in range(k1)]
        right = [zero] * k2
        rows.append(left + mid + right)
    if not rows:
        # dual of the full free module is the zero code
        return RModuleMatrix(field=F, rows=[], k0=0, k1=0, perm=list(M.perm))
    red = standard_form(F, rows)
    # keep the same coordinate meaning: compose permutations
    composed = [M.perm[c] for c in red.perm]
    return RModuleMatrix(field=F, rows=red.rows, k0=red.k0, k1=red.k1,
                         perm=composed)


def r_span_coords(F: FieldSpec, rows: list[list[RingElement]]) -> list[list[int]]:
    """Canonical F_q-span of an R-row set in phi coordinates (RREF)."""
    u = ring_u(F)
    allrows = [phi_coords(r) for r in rows] + [phi_coords([u * x for x in r]) for r in rows]
    red, _ = _linalg.rref(F, [r for r in allrows if any(r)])
    return red
