"""Exact arithmetic in F_p, F_{p^{2m}}, and extensions F_{(p^{2m})^l}.

Elements of a base field are integers in [0, q): the base-p digits of the
integer are the coefficients (ascending) of the element's polynomial
representation over F_p.  Every nonzero element also has a discrete-log
representation eta^k; both round-trip through :class:`FieldElement`.

Base fields (q <= 2^16) carry full log/antilog tables, so multiplication
and inversion are table lookups.  Extension fields used to host roots of
unity keep coefficient vectors over the base field instead; they are only
touched while factoring x^n - beta, never in distance searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "ExtFieldSpec",
    "field_create",
    "extend",
    "BUILTIN_MODULI",
]

TABLE_LIMIT = 1 << 16

# Defining relations pinned to the paper's presentations:
#   F_4:  w^2 = 1 + w        F_9:  w^2 = w + 1        F_16: w^4 = w + 1
# stored as ascending coefficient tuples of the monic modulus over F_p.
BUILTIN_MODULI = {
    (2, 1): (1, 1, 1),          # x^2 + x + 1
    (3, 1): (2, 2, 1),          # x^2 + 2x + 2  ==  x^2 - x - 1
    (2, 2): (1, 1, 0, 0, 1),    # x^4 + x + 1
}


class FieldError(ValueError):
    """Invalid field construction or operation (reducible modulus, zero inverse, ...)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# reference coefficient-vector arithmetic over F_p (tables are built from it,
# and tests use it as the independent oracle for the table path)
# ---------------------------------------------------------------------------

def _vec_add(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((x + y) % p for x, y in zip(a, b))


def _vec_mul_mod(p: int, d: int, modulus: tuple[int, ...],
                 a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    res = [0] * (2 * d - 1) if d > 1 else [0]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d + 1):
                res[i - d + j] = (res[i - d + j] - c * modulus[j]) % p
    return tuple(res[:d])


def _poly_is_irreducible_fp(p: int, modulus: tuple[int, ...]) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    d = len(modulus) - 1
    if d < 1 or modulus[-1] != 1:
        return False

    def mulmod(f, g):
        res = [0] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x:
                for j, y in enumerate(g):
                    res[i + j] = (res[i + j] + x * y) % p
        # reduce by modulus
        for i in range(len(res) - 1, d - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(d + 1):
                    res[i - d + j] = (res[i - d + j] - c * modulus[j]) % p
        out = res[:d]
        while out and out[-1] == 0:
            out.pop()
        return out or [0]

    def powmod_x(e: int):
        result, base = [1], [0, 1]
        while e:
            if e & 1:
                result = mulmod(result, base)
            base = mulmod(base, base)
            e >>= 1
        return result

    def gcd(f, g):
        f, g = list(f), list(g)
        while any(g):
            # remainder of f by g
            g_n = list(g)
            while g_n and g_n[-1] == 0:
                g_n.pop()
            inv = pow(g_n[-1], -1, p)
            r = list(f)
            while True:
                while r and r[-1] == 0:
                    r.pop()
                if len(r) < len(g_n):
                    break
                c = (r[-1] * inv) % p
                s = len(r) - len(g_n)
                for i, y in enumerate(g_n):
                    r[s + i] = (r[s + i] - c * y) % p
            f, g = g_n, r or [0]
        return f

    xq_d = powmod_x(p ** d)
    diff = list(xq_d) + [0] * max(0, 2 - len(xq_d))
    diff[1] = (diff[1] - 1) % p
    if any(diff):
        return False
    for r in _prime_factors(d):
        xq_e = powmod_x(p ** (d // r))
        diff = list(xq_e) + [0] * max(0, 2 - len(xq_e))
        diff[1] = (diff[1] - 1) % p
        g = gcd(list(modulus), diff)
        while g and g[-1] == 0:
            g.pop()
        if len(g) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# base field
# ---------------------------------------------------------------------------

class FieldSpec:
    """The field F_{p^{2m}} with log/antilog tables and Frobenius conjugation.

    Parameters
    ----------
    p : prime characteristic
    m : half-degree, so the field has q = p^{2m} elements
    modulus : ascending monic coefficient tuple of degree 2m over F_p
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        if not _is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if m < 1:
            raise FieldError(f"m must be positive, got {m}")
        d = 2 * m
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1:
            raise FieldError(f"modulus degree {len(modulus) - 1} != 2m = {d}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not _poly_is_irreducible_fp(p, modulus):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.degree = d
        self.q = p ** d
        if self.q > TABLE_LIMIT:
            raise FieldError(f"q = {self.q} exceeds the supported limit 2^16")
        self.modulus = modulus
        self._build_tables()

    # -- table construction ------------------------------------------------

    def _build_tables(self) -> None:
        p, d, q = self.p, self.degree, self.q

        def to_vec(idx: int) -> tuple[int, ...]:
            v = []
            for _ in range(d):
                v.append(idx % p)
                idx //= p
            return tuple(v)

        def to_idx(vec: tuple[int, ...]) -> int:
            n = 0
            for c in reversed(vec):
                n = n * p + c
            return n

        self._to_vec, self._to_idx = to_vec, to_idx

        def vec_pow(v, e):
            r = to_vec(1)
            while e:
                if e & 1:
                    r = _vec_mul_mod(p, d, self.modulus, r, v)
                v = _vec_mul_mod(p, d, self.modulus, v, v)
                e >>= 1
            return r

        # primitive element: first index whose order is exactly q - 1
        facs = _prime_factors(q - 1)
        one = to_vec(1)
        eta = None
        for cand in range(1, q):
            v = to_vec(cand)
            if all(vec_pow(v, (q - 1) // f) != one for f in facs):
                eta = cand
                break
        assert eta is not None
        self.eta = eta
        self._verify_primitive(eta)

        exp = [0] * (q - 1)
        log: list[int | None] = [None] * q
        x = one
        g = to_vec(eta)
        for k in range(q - 1):
            xi = to_idx(x)
            exp[k] = xi
            log[xi] = k
            x = _vec_mul_mod(p, d, self.modulus, x, g)
        self._exp, self._log = exp, log

        self._neg = [to_idx(tuple((-c) % p for c in to_vec(i))) for i in range(q)]
        pm = p ** self.m
        self._conj = [0] * q
        for i in range(1, q):
            self._conj[i] = exp[(log[i] * pm) % (q - 1)]

        self._add_rows: list[list[int]] | None = None
        if q <= 1024:
            self._add_rows = [
                [to_idx(_vec_add(p, to_vec(i), to_vec(j))) for j in range(q)]
                for i in range(q)
            ]

    def _verify_primitive(self, idx: int) -> None:
        """Check ord(idx) = q - 1 via eta^((q-1)/rho) != 1 for prime rho | q - 1."""
        for rho in _prime_factors(self.q - 1):
            if self._pow_slow(idx, (self.q - 1) // rho) == 1:
                raise FieldError(f"element {idx} is not primitive")

    def _pow_slow(self, idx: int, e: int) -> int:
        v = self._to_vec(idx)
        r = self._to_vec(1)
        while e:
            if e & 1:
                r = _vec_mul_mod(self.p, self.degree, self.modulus, r, v)
            v = _vec_mul_mod(self.p, self.degree, self.modulus, v, v)
            e >>= 1
        return self._to_idx(r)

    # -- scalar ops on raw indices (hot path) ------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_rows is not None:
            return self._add_rows[a][b]
        return self._to_idx(_vec_add(self.p, self._to_vec(a), self._to_vec(b)))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero is not invertible")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative e inverts first."""
        if a == 0:
            if e <= 0:
                raise FieldError("0^e undefined for e <= 0")
            return 0
        if e < 0:
            a, e = self.inv(a), -e
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def conj(self, a: int) -> int:
        """Frobenius conjugation x -> x^{p^m}."""
        return self._conj[a]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k = self._log[a]
        from math import gcd
        return (self.q - 1) // gcd(k, self.q - 1)

    def w(self, k: int) -> int:
        """The element eta^k."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int | None:
        """Discrete log of a (None for zero)."""
        return self._log[a]

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector over F_p, ascending."""
        return self._to_vec(a)

    def from_coeffs(self, vec) -> int:
        vec = tuple(int(c) % self.p for c in vec)
        if len(vec) > self.degree:
            raise FieldError("coefficient vector longer than field degree")
        vec = vec + (0,) * (self.degree - len(vec))
        return self._to_idx(vec)

    def elements(self) -> range:
        return range(self.q)

    # -- element syntax: "0", "1", "w^k" ------------------------------------

    def format_element(self, a: int) -> str:
        if a == 0:
            return "0"
        k = self._log[a]
        if k == 0:
            return "1"
        if k == 1:
            return "w"
        return f"w^{k}"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text == "w":
            return self.w(1)
        if text.startswith("w^"):
            return self.w(int(text[2:]))
        try:
            n = int(text)
        except ValueError:
            raise FieldError(f"cannot parse field element {text!r}") from None
        # integer literals mean n * 1 in the prime subfield
        return self.from_coeffs((n % self.p,))

    def format_poly(self, coeffs) -> str:
        return ",".join(self.format_element(c) for c in coeffs)

    def parse_poly(self, text: str) -> tuple[int, ...]:
        return tuple(self.parse_element(t) for t in text.split(","))

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.degree}), modulus={self.modulus})"

    def element(self, a: int) -> "FieldElement":
        return FieldElement(self, int(a))


@dataclass(frozen=True)
class FieldElement:
    """A field element: owning spec plus coefficient-index value."""

    spec: FieldSpec
    idx: int

    def _check(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.add(self.idx, other.idx))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.idx, other.idx))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.idx, other.idx))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.idx))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.idx, e))

    def inv(self):
        return FieldElement(self.spec, self.spec.inv(self.idx))

    def conj(self):
        return FieldElement(self.spec, self.spec.conj(self.idx))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.idx)

    @property
    def log(self) -> int | None:
        return self.spec.log(self.idx)

    def __bool__(self):
        return self.idx != 0

    def __str__(self):
        return self.spec.format_element(self.idx)

    def __repr__(self):
        return f"<{self} in GF({self.spec.q})>"


def field_create(p: int, m: int, modulus="builtin") -> FieldSpec:
    """Build F_{p^{2m}}; modulus='builtin' uses the pinned defining relations."""
    if modulus == "builtin":
        try:
            modulus = BUILTIN_MODULI[(p, m)]
        except KeyError:
            raise FieldError(
                f"no builtin modulus for (p, m) = ({p}, {m}); supply one"
            ) from None
    return FieldSpec(p, m, tuple(modulus))


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def get_field(p: int, m: int, modulus="builtin") -> FieldSpec:
    """Cached variant of field_create (table construction is not free)."""
    if modulus == "builtin":
        if (p, m) not in BUILTIN_MODULI:
            raise FieldError(f"no builtin modulus for (p, m) = ({p}, {m})")
        modulus = BUILTIN_MODULI[(p, m)]
    return _cached_field(p, m, tuple(modulus))


# ---------------------------------------------------------------------------
# extension fields F_{q^l}: coefficient tuples over the base field
# ---------------------------------------------------------------------------

class ExtFieldSpec:
    """F_{q^l} over a base FieldSpec; elements are l-tuples of base indices.

    The embedded copy of F_q is the set of constant tuples; descent back to
    the base field checks the Frobenius fixed-point condition y^q = y.
    """

    def __init__(self, base: FieldSpec, ell: int):
        if ell < 1:
            raise FieldError("extension degree must be >= 1")
        self.base = base
        self.ell = ell
        self.Q = base.q ** ell
        self.modulus = None if ell == 1 else self._find_irreducible(ell)
        self._eta = None  # computed lazily

    # -- modulus search (deterministic: first monic irreducible in key order)

    def _find_irreducible(self, ell: int) -> tuple[int, ...]:
        base = self.base
        for n in range(base.q ** ell):
            coeffs = []
            mm = n
            for _ in range(ell):
                coeffs.append(mm % base.q)
                mm //= base.q
            h = tuple(coeffs) + (1,)
            if self._is_irreducible(h):
                return h
        raise FieldError("no irreducible modulus found")  # pragma: no cover

    def _is_irreducible(self, h: tuple[int, ...]) -> bool:
        base = self.base
        ell = len(h) - 1

        def mulmod(f, g):
            res = [0] * (len(f) + len(g) - 1)
            for i, x in enumerate(f):
                if x:
                    for j, y in enumerate(g):
                        res[i + j] = base.add(res[i + j], base.mul(x, y))
            for i in range(len(res) - 1, ell - 1, -1):
                c = res[i]
                if c:
                    res[i] = 0
                    for j in range(ell + 1):
                        res[i - ell + j] = base.sub(res[i - ell + j], base.mul(c, h[j]))
            out = res[:ell]
            while out and out[-1] == 0:
                out.pop()
            return out or [0]

        def powmod_x(e):
            result, b = [1], [0, 1]
            while e:
                if e & 1:
                    result = mulmod(result, b)
                b = mulmod(b, b)
                e >>= 1
            return result

        def polygcd(f, g):
            f, g = list(f), list(g)
            while any(g):
                gn = [c for c in g]
                while gn and gn[-1] == 0:
                    gn.pop()
                inv = base.inv(gn[-1])
                r = list(f)
                while True:
                    while r and r[-1] == 0:
                        r.pop()
                    if len(r) < len(gn):
                        break
                    c = base.mul(r[-1], inv)
                    s = len(r) - len(gn)
                    for i, y in enumerate(gn):
                        r[s + i] = base.sub(r[s + i], base.mul(c, y))
                f, g = gn, r or [0]
            return f

        xq = powmod_x(base.q ** ell)
        diff = list(xq) + [0] * max(0, 2 - len(xq))
        diff[1] = base.sub(diff[1], 1)
        if any(diff):
            return False
        for r in _prime_factors(ell):
            xq_e = powmod_x(base.q ** (ell // r))
            diff = list(xq_e) + [0] * max(0, 2 - len(xq_e))
            diff[1] = base.sub(diff[1], 1)
            g = polygcd(list(h), diff)
            while g and g[-1] == 0:
                g.pop()
            if len(g) - 1 > 0:
                return False
        return True

    # -- element ops (tuples of base indices) -------------------------------

    def zero(self):
        return (0,) * self.ell

    def one(self):
        return (1,) + (0,) * (self.ell - 1)

    def embed(self, a: int):
        """Canonical embedding F_q -> F_{q^l}."""
        return (a,) + (0,) * (self.ell - 1)

    def descend(self, x) -> int | None:
        """Preimage in F_q, or None if x is outside the embedded copy."""
        if self.pow(x, self.base.q) != x:
            return None
        return x[0]

    def add(self, x, y):
        b = self.base
        return tuple(b.add(a, c) for a, c in zip(x, y))

    def neg(self, x):
        return tuple(self.base.neg(a) for a in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        b, ell = self.base, self.ell
        if ell == 1:
            return (b.mul(x[0], y[0]),)
        res = [0] * (2 * ell - 1)
        for i, a in enumerate(x):
            if a:
                for j, c in enumerate(y):
                    res[i + j] = b.add(res[i + j], b.mul(a, c))
        for i in range(2 * ell - 2, ell - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(ell + 1):
                    res[i - ell + j] = b.sub(res[i - ell + j], b.mul(c, self.modulus[j]))
        return tuple(res[:ell])

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        r = self.one()
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x):
        if x == self.zero():
            raise FieldError("zero is not invertible")
        return self.pow(x, self.Q - 2)

    def key(self, x) -> int:
        """Canonical integer for element ordering (deterministic choices)."""
        n = 0
        for c in reversed(x):
            n = n * self.base.q + c
        return n

    def from_key(self, n: int):
        v = []
        for _ in range(self.ell):
            v.append(n % self.base.q)
            n //= self.base.q
        return tuple(v)

    def primitive_element(self):
        """First element in key order generating the multiplicative group."""
        if self._eta is None:
            facs = _prime_factors(self.Q - 1)
            one = self.one()
            for n in range(1, self.Q):
                x = self.from_key(n)
                if all(self.pow(x, (self.Q - 1) // f) != one for f in facs):
                    self._eta = x
                    break
        return self._eta

    def element_order(self, x) -> int:
        if x == self.zero():
            raise FieldError("zero has no multiplicative order")
        order = self.Q - 1
        for f in _prime_factors(self.Q - 1):
            while order % f == 0 and self.pow(x, order // f) == self.one():
                order //= f
        return order

    def __repr__(self):
        return f"ExtFieldSpec(GF({self.base.q}^{self.ell}))"


def extend(base: FieldSpec, ell: int) -> ExtFieldSpec:
    return ExtFieldSpec(base, ell)
