"""Quantum code parameters from self-orthogonal classical codes.

Hermitian construction: an [n, k] code D over F_{q^2} with D in D^perpH
yields an [[n, n - 2k, >= d(D^perpH)]]_q quantum code.  Symplectic
construction: a Hermitian self-orthogonal alpha(1+u)-constacyclic code C
over R yields [[N, N - k, d]]_{p^m} with k = log_q |C| and d the Hamming
distance of Tor(C^perpH).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .codes import (CodeError, ConstacyclicCode, LinearCodeF, hermitian_dual,
                    is_hermitian_self_orthogonal)
from .distance import min_distance_auto, min_distance_R
from .gf import FieldSpec
from .maps import trace_orthogonality_transfer

__all__ = ["QuantumParams", "NotSelfOrthogonalError", "hermitian_construction",
           "symplectic_construction", "singleton_check", "singleton_slack",
           "hermitian_dual_code_F", "hermitian_gram_is_zero"]


class NotSelfOrthogonalError(CodeError):
    """Input code is not self-orthogonal; carries a witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class QuantumParams:
    """[[n, k, d]]_q with an exactness flag for d and Singleton bookkeeping."""

    n: int
    k: int
    d: int
    d_exact: bool
    q_base: int
    construction: str            # "hermitian" | "symplectic"
    source: dict                 # code descriptor that produced it
    mds: bool = False
    two_d_eq_n_minus_k: bool = False

    def __post_init__(self):
        slack, mds = singleton_slack(self.n, self.k, self.d)
        self.mds = mds and self.d_exact
        self.two_d_eq_n_minus_k = 2 * self.d == self.n - self.k

    def to_json_dict(self) -> dict:
        return {
            "construction": self.construction,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_exact": self.d_exact,
            "q": self.q_base,
            "mds": self.mds,
            "two_d_eq_n_minus_k": self.two_d_eq_n_minus_k,
            "source": self.source,
        }

    def params_str(self) -> str:
        ge = "" if self.d_exact else ">="
        return f"[[{self.n},{self.k},{ge}{self.d}]]_{self.q_base}"


def singleton_slack(n: int, k: int, d: int) -> tuple[int, bool]:
    """(slack, mds) for the quantum Singleton bound k <= n - 2d + 2."""
    slack = (n - 2 * d + 2) - k
    if slack < 0:
        raise CodeError(f"Singleton bound violated by [[{n},{k},{d}]]: "
                        "upstream computation bug")
    return slack, slack == 0


def singleton_check(qp: QuantumParams) -> dict:
    """Singleton slack, MDS flag, and the 2d = n - k saturation report."""
    slack, mds = singleton_slack(qp.n, qp.k, qp.d)
    return {"slack": slack, "mds": mds and qp.d_exact,
            "two_d_eq_n_minus_k": 2 * qp.d == qp.n - qp.k}


def hermitian_gram_is_zero(F: FieldSpec, rows) -> tuple[bool, tuple | None]:
    """G conj(G)^T = 0 over F_q, with a witness pair on failure."""
    for i, x in enumerate(rows):
        for j, y in enumerate(rows):
            acc = 0
            for a, b in zip(x, y):
                acc = F.add(acc, F.mul(a, F.conj(b)))
            if acc != 0:
                return False, (x, y)
    return True, None


def hermitian_dual_code_F(D: LinearCodeF) -> LinearCodeF:
    """D^perpH = Euclidean kernel of the conjugated generator matrix."""
    F = D.field
    if not D.gen_rows:
        rows = [[1 if i == j else 0 for j in range(D.length)]
                for i in range(D.length)]
        return LinearCodeF.from_rows(F, D.length, rows, shift=D.shift)
    conj_rows = [[F.conj(x) for x in row] for row in D.gen_rows]
    basis = _linalg.kernel_basis(F, conj_rows)
    return LinearCodeF.from_rows(F, D.length, basis, shift=D.shift)


def hermitian_construction(D: LinearCodeF, budget=None, d_cap=8,
                           jobs: int = 1, source: dict | None = None) -> QuantumParams:
    """[[n, n-2k, d(D^perpH)]]_{sqrt q} from a Gram-verified self-orthogonal D."""
    F = D.field
    ok, witness = hermitian_gram_is_zero(F, D.gen_rows)
    if not ok:
        raise NotSelfOrthogonalError(
            "code is not Hermitian self-orthogonal over F_q", witness)
    dual = hermitian_dual_code_F(D)
    res = min_distance_auto(dual, budget=budget, d_cap=d_cap, jobs=jobs)
    q_base = F.p ** F.m
    return QuantumParams(n=D.length, k=D.length - 2 * D.dimension, d=res.d,
                         d_exact=res.exact, q_base=q_base,
                         construction="hermitian", source=source or {})


def symplectic_construction(C: ConstacyclicCode, budget=None, d_cap=8,
                            jobs: int = 1) -> QuantumParams:
    """[[N, N-k, d(Tor(C^perpH))]]_{p^m} from a Hermitian self-orthogonal C."""
    if not is_hermitian_self_orthogonal(C):
        dual = hermitian_dual(C)
        bad = sorted(i for i in C.cs.reps
                     if dual.exponents[i] > C.exponents[i])
        raise NotSelfOrthogonalError(
            "code is not Hermitian self-orthogonal (exponent test fails "
            f"at coset representative(s) {bad})", bad)
    ok, witness = trace_orthogonality_transfer(C)
    if not ok:
        raise NotSelfOrthogonalError(
            "trace self-orthogonality transfer failed", witness)
    # k = log_q |C| = 2N - sum a_i deg M_i (equals 2 k0 + k1 of the standard form)
    k = C.size_log_q
    res = min_distance_R(hermitian_dual(C), budget=budget, d_cap=d_cap, jobs=jobs)
    F = C.field
    return QuantumParams(n=C.N, k=C.N - k, d=res.d,
                         d_exact=res.exact, q_base=F.p ** F.m,
                         construction="symplectic", source=C.to_json_dict())
