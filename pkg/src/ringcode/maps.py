"""The Gray map Phi_M, the symplectic map phi, and their weight machinery.

Phi_M sends r + uq to (q, r+q)M coordinatewise, interleaving the two output
symbols into a left block and a right block of length N each.  phi drops the
matrix and sends r + uq to (q, r); symplectic weight counts coordinate pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .codes import CodeError, ConstacyclicCode, LinearCodeF, spanning_rows_R
from .gf import FieldSpec
from .ring import RingElement

__all__ = [
    "GrayMatrix", "SplitVector", "gray_map", "gray_weight", "omega_condition",
    "constacyclic_compatible", "gray_image_code", "phi_map",
    "symplectic_weight", "trace_inner_product", "trace_orthogonality_transfer",
]


@dataclass(frozen=True)
class GrayMatrix:
    """M = [[a, b], [s, t]] in GL_2(F_q)."""

    field: FieldSpec
    a: int
    b: int
    s: int
    t: int

    def __post_init__(self):
        F = self.field
        det = F.sub(F.mul(self.a, self.t), F.mul(self.b, self.s))
        if det == 0:
            raise CodeError("Gray matrix must be invertible")
        object.__setattr__(self, "det", det)

    @classmethod
    def parse(cls, F: FieldSpec, text: str) -> "GrayMatrix":
        """Parse the CLI syntax "a,b;s,t" in gf element notation."""
        try:
            top, bottom = text.split(";")
            a, b = (F.parse_element(x) for x in top.split(","))
            s, t = (F.parse_element(x) for x in bottom.split(","))
        except ValueError:
            raise CodeError(f"cannot parse Gray matrix {text!r}") from None
        return cls(F, a, b, s, t)

    @classmethod
    def default_compatible(cls, F: FieldSpec, alpha: int) -> "GrayMatrix":
        """The pipeline default: b = 1, t = eta, a = t alpha, s = b alpha."""
        b, t = 1, F.w(1)
        return cls(F, F.mul(t, alpha), b, F.mul(b, alpha), t)

    def format(self) -> str:
        F = self.field
        return (f"{F.format_element(self.a)},{F.format_element(self.b)};"
                f"{F.format_element(self.s)},{F.format_element(self.t)}")


def gray_map(M: GrayMatrix, vec: list[RingElement]) -> list[int]:
    """Phi_M(c): position i gets a q_i + s(r_i+q_i), position N+i gets b q_i + t(r_i+q_i)."""
    F = M.field
    n = len(vec)
    out = [0] * (2 * n)
    for i, c in enumerate(vec):
        r, q = c.a, c.b
        rq = F.add(r, q)
        out[i] = F.add(F.mul(M.a, q), F.mul(M.s, rq))
        out[n + i] = F.add(F.mul(M.b, q), F.mul(M.t, rq))
    return out


def gray_weight(M: GrayMatrix, vec: list[RingElement]) -> int:
    """Sum over coordinates of the Hamming weight of each coordinate's image."""
    return sum(1 for x in gray_map(M, vec) if x)


def omega_condition(M: GrayMatrix) -> int | None:
    """lambda with M conj(M)^T = lambda I (nonzero), else None."""
    F = M.field
    cross = F.add(F.mul(M.a, F.conj(M.s)), F.mul(M.b, F.conj(M.t)))
    if cross != 0:
        return None
    lam1 = F.add(F.mul(M.a, F.conj(M.a)), F.mul(M.b, F.conj(M.b)))
    lam2 = F.add(F.mul(M.s, F.conj(M.s)), F.mul(M.t, F.conj(M.t)))
    if lam1 != lam2 or lam1 == 0:
        return None
    return lam1


def constacyclic_compatible(M: GrayMatrix, alpha: int) -> bool:
    """a = t alpha, s = b alpha, b != t: the shift-commutation condition."""
    F = M.field
    return (M.a == F.mul(M.t, alpha) and M.s == F.mul(M.b, alpha)
            and M.b != M.t)


def gray_image_code(M: GrayMatrix, C: ConstacyclicCode) -> LinearCodeF:
    """Phi_M(C) as an alpha^2-constacyclic code of length 2N over F_q.

    The image's generator polynomial is C's own field-model generator read in
    F_q[x]/<x^{2N} - alpha^2> (x^{2N} - alpha^2 = (x^n - beta)^{2 p^e}, so the
    exponent vector carries over unchanged).  Requires p = 2 and a
    constacyclic-compatible M; tests verify the transport against the literal
    image span.
    """
    F = C.field
    if F.p != 2:
        raise CodeError("Gray image transport is only asserted for p = 2")
    if not constacyclic_compatible(M, C.cs.alpha):
        raise CodeError("Gray matrix is not constacyclic-compatible with alpha")
    lam2 = F.mul(C.cs.alpha, C.cs.alpha)
    return LinearCodeF.from_generator_poly(F, C.generator_poly, 2 * C.N, lam2)


def gray_image_rows(M: GrayMatrix, C: ConstacyclicCode) -> list[list[int]]:
    """Literal image span: Phi_M of an F_q-spanning set of C (for verification)."""
    rows = []
    u = RingElement(C.field, 0, 1)
    for r in spanning_rows_R(C):
        rows.append(gray_map(M, r))
        rows.append(gray_map(M, [u * x for x in r]))
    red, _ = _linalg.rref(C.field, [r for r in rows if any(r)])
    return red


@dataclass(frozen=True)
class SplitVector:
    """(a | b): left and right length-N blocks over F_q (raw indices)."""

    field: FieldSpec
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise CodeError("split vector blocks differ in length")

    @property
    def n(self) -> int:
        return len(self.left)

    def coords(self) -> list[int]:
        return list(self.left) + list(self.right)


def phi_map(vec: list[RingElement]) -> SplitVector:
    """phi: r + uq -> (q, r), coordinatewise."""
    F = vec[0].spec
    return SplitVector(F, tuple(c.b for c in vec), tuple(c.a for c in vec))


def symplectic_weight(x: SplitVector) -> int:
    """Number of positions i with (left_i, right_i) != (0, 0)."""
    return sum(1 for a, b in zip(x.left, x.right) if a or b)


def trace_inner_product(x: SplitVector, y: SplitVector) -> int:
    """<(a|b), (a'|b')>_T = a . conj(b') - b . conj(a')."""
    if x.n != y.n:
        raise CodeError("length mismatch")
    F = x.field
    acc = 0
    for a, bp in zip(x.left, y.right):
        acc = F.add(acc, F.mul(a, F.conj(bp)))
    for b, ap in zip(x.right, y.left):
        acc = F.sub(acc, F.mul(b, F.conj(ap)))
    return acc


def trace_orthogonality_transfer(C: ConstacyclicCode):
    """Check <phi(c1), phi(c2)>_T = 0 over an F_q-spanning set of C.

    The pairing is sesquilinear, so vanishing on spanning pairs means phi(C)
    is trace self-orthogonal.  Returns (True, None) on success, else
    (False, (c1, c2)) with a violating pair.
    """
    u = RingElement(C.field, 0, 1)
    base = spanning_rows_R(C)
    rows = base + [[u * x for x in r] for r in base]
    rows = [r for r in rows if any(r)]
    images = [phi_map(r) for r in rows]
    for i, x in enumerate(images):
        for j, y in enumerate(images):
            if trace_inner_product(x, y) != 0:
                return False, (rows[i], rows[j])
    return True, None
