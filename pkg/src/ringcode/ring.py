"""Arithmetic in the chain ring R = F_q + uF_q with u^2 = 0.

A ring element a + ub is a pair of field indices; the units are exactly
the elements with a != 0, and conjugation is a + ub -> conj(a) - u conj(b).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldError, FieldSpec

__all__ = ["RingElement", "RingPoly", "ring_zero", "ring_one", "ring_u"]


class RingError(ValueError):
    """Invalid ring operation (non-unit inverse, bad divisor, ...)."""


@dataclass(frozen=True)
class RingElement:
    """a + u*b over the spec's field; a and b are raw field indices."""

    spec: FieldSpec
    a: int
    b: int

    def _check(self, other: "RingElement") -> None:
        if self.spec != other.spec:
            raise FieldError("operands belong to different rings")

    def __add__(self, other):
        self._check(other)
        F = self.spec
        return RingElement(F, F.add(self.a, other.a), F.add(self.b, other.b))

    def __sub__(self, other):
        self._check(other)
        F = self.spec
        return RingElement(F, F.sub(self.a, other.a), F.sub(self.b, other.b))

    def __neg__(self):
        F = self.spec
        return RingElement(F, F.neg(self.a), F.neg(self.b))

    def __mul__(self, other):
        # (a+ub)(c+ud) = ac + u(ad + bc); the u^2 term vanishes
        self._check(other)
        F = self.spec
        a, b, c, d = self.a, self.b, other.a, other.b
        return RingElement(F, F.mul(a, c), F.add(F.mul(a, d), F.mul(b, c)))

    def conj(self) -> "RingElement":
        """a + ub -> conj(a) - u conj(b)."""
        F = self.spec
        return RingElement(F, F.conj(self.a), F.neg(F.conj(self.b)))

    @property
    def is_unit(self) -> bool:
        return self.a != 0

    def inv(self) -> "RingElement":
        """(a+ub)^{-1} = a^{-1} - u b a^{-2}; requires a unit."""
        if not self.is_unit:
            raise RingError(f"{self} lies in the maximal ideal <u>; not invertible")
        F = self.spec
        ai = F.inv(self.a)
        return RingElement(F, ai, F.neg(F.mul(self.b, F.mul(ai, ai))))

    def scale(self, c: int) -> "RingElement":
        F = self.spec
        return RingElement(F, F.mul(c, self.a), F.mul(c, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        F = self.spec
        if self.b == 0:
            return F.format_element(self.a)
        return f"{F.format_element(self.a)} + u*{F.format_element(self.b)}"

    def __repr__(self):
        return f"<{self}>"


def ring_zero(F: FieldSpec) -> RingElement:
    return RingElement(F, 0, 0)


def ring_one(F: FieldSpec) -> RingElement:
    return RingElement(F, 1, 0)


def ring_u(F: FieldSpec) -> RingElement:
    return RingElement(F, 0, 1)


def parse_ring_element(F: FieldSpec, text: str) -> RingElement:
    """Parse "A + u*B" (either part optional) in the gf element syntax."""
    text = text.strip()
    a, b = 0, 0
    for part in text.split("+"):
        part = part.strip()
        if part.startswith("u*"):
            b = F.add(b, F.parse_element(part[2:]))
        elif part == "u":
            b = F.add(b, 1)
        else:
            a = F.add(a, F.parse_element(part))
    return RingElement(F, a, b)


class RingPoly:
    """Polynomial over R, ascending coefficients, normalized (no zero tail)."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @classmethod
    def from_field_coeffs(cls, spec: FieldSpec, coeffs) -> "RingPoly":
        return cls(spec, [RingElement(spec, c, 0) for c in coeffs])

    @classmethod
    def x_pow(cls, spec: FieldSpec, k: int) -> "RingPoly":
        return cls(spec, [ring_zero(spec)] * k + [ring_one(spec)])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ring_one(self.spec)

    @property
    def leading_is_unit(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_unit

    def __eq__(self, other):
        return (isinstance(other, RingPoly) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __add__(self, other):
        z = ring_zero(self.spec)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return RingPoly(self.spec, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return RingPoly(self.spec, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return RingPoly(self.spec, [])
        z = ring_zero(self.spec)
        res = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                res[i + j] = res[i + j] + x * y
        return RingPoly(self.spec, res)

    def scale(self, c: RingElement) -> "RingPoly":
        return RingPoly(self.spec, [x * c for x in self.coeffs])

    def __pow__(self, e: int):
        r = RingPoly.from_field_coeffs(self.spec, [1])
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def divmod(self, g: "RingPoly") -> tuple["RingPoly", "RingPoly"]:
        """Division with remainder; g must have an invertible leading coefficient."""
        if not g.coeffs:
            raise RingError("division by zero polynomial")
        if not g.leading_is_unit:
            raise RingError("divisor leading coefficient is not a unit")
        z = ring_zero(self.spec)
        inv = g.coeffs[-1].inv()
        rem = list(self.coeffs)
        quo = [z] * max(0, len(rem) - len(g.coeffs) + 1)
        while True:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) < len(g.coeffs):
                break
            c = rem[-1] * inv
            s = len(rem) - len(g.coeffs)
            quo[s] = quo[s] + c
            for i, y in enumerate(g.coeffs):
                rem[s + i] = rem[s + i] - c * y
        return RingPoly(self.spec, quo), RingPoly(self.spec, rem)

    def __mod__(self, g: "RingPoly"):
        return self.divmod(g)[1]

    def conj(self) -> "RingPoly":
        """Coefficientwise ring conjugation."""
        return RingPoly(self.spec, [c.conj() for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if "+" in cs:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(terms)

    def __repr__(self):
        return f"RingPoly({self})"
