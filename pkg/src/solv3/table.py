"""Reproduction of the table of positive indices of symmetry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import AlgebraType, EPS_CLASS, Triple, classify, validate_triple
from .curvature import GENERIC_TOL
from .index import SubspaceBasis, index, nullspace, same_span
from .killing import FieldSpec, P_matrix, P_right, g1_field

SAMPLE_LOW, SAMPLE_HIGH = 0.5, 2.0


def parallel_span_oracle(t: Triple, fields: Sequence[FieldSpec]) -> SubspaceBasis:
    """Identity values of every combination ``sum alpha_j R_j + sum beta X`` with P = 0.

    ``fields`` must vanish at e.  Solves the 9 x (3 + n) linear system
    directly, independent of any closed-form solution.
    """
    cols = [P_right(t, j).ravel() for j in (1, 2, 3)]
    cols += [P_matrix(t, X).ravel() for X in fields]
    ker = nullspace(np.column_stack(cols))
    return SubspaceBasis.span(ker[:, :3]) if ker.size else SubspaceBasis.span(np.zeros((0, 3)))


E1, E3 = np.array([[1.0, 0, 0]]), np.array([[0, 0, 1.0]])
E2_MINUS_E3 = np.array([[0, 1.0, -1.0]])
FULL = np.eye(3)


@dataclass(frozen=True)
class TableRow:
    number: int
    algebra: str
    triple_pattern: str
    expected_index: int
    make: Callable[[np.random.Generator], tuple[float, float, float]]
    expected_span: Callable[[Triple], np.ndarray]
    algebra_check: Callable[[Triple], bool]

    @property
    def description(self) -> str:
        return f"{self.algebra}, {self.triple_pattern}"


def _u(rng, lo=SAMPLE_LOW, hi=SAMPLE_HIGH):
    return float(rng.uniform(lo, hi))


def _is(kind: AlgebraType, K: Callable[[float], bool] | None = None):
    def check(t: Triple) -> bool:
        cls = classify(t)
        if cls.kind is not kind:
            return False
        return K is None or K(cls.K)
    return check


def _bb(lo, hi):
    """(a, b, b) with K = b^2/a^2 drawn from [lo, hi]."""
    def make(rng):
        a, K = _u(rng), _u(rng, lo, hi)
        return (a, a * np.sqrt(K), a * np.sqrt(K))
    return make


def _sqrt_row(lo, hi):
    """(a, a + a sqrt(1-K), a - a sqrt(1-K)) with K drawn from [lo, hi]."""
    def make(rng):
        a, K = _u(rng), _u(rng, lo, hi)
        r = a * np.sqrt(1 - K)
        return (a, a + r, a - r)
    return make


def _g1_asymmetric(rng):
    a = _u(rng, SAMPLE_LOW, 1.5)
    b = a * _u(rng, 1.2, 2.0)
    return (a, b, a * a / b)


def _hyperbolic(rng):
    a, K = _u(rng), -_u(rng)
    return (a, a * np.sqrt(-K), -a * np.sqrt(-K))


def _g1_symmetric(rng):
    a = _u(rng)
    return (a, a, a)


def _g0(rng):
    a = _u(rng)
    return (a, 2 * a, 0.0)


def _e11(rng):
    b = _u(rng)
    return (0.0, b, b)


def _e2(rng):
    b = _u(rng)
    return (0.0, b, -b)


TABLE1 = [
    TableRow(1, "g(K), K>1", "(a,b,b), a>0", 1, _bb(1.1, 2.0),
             lambda t: E1, _is(AlgebraType.GK, lambda K: K > 1)),
    TableRow(2, "g(1)", "(a,b,b), a>0", 3, _g1_symmetric,
             lambda t: FULL, _is(AlgebraType.GK, lambda K: abs(K - 1) < 1e-12)),
    TableRow(3, "g(1)", "(a,b,c), a>0, b!=c", 1, _g1_asymmetric,
             lambda t: parallel_span_oracle(t, [g1_field(t)]).vectors,
             _is(AlgebraType.GK, lambda K: abs(K - 1) < 1e-12)),
    TableRow(4, "g(K), 0<K<1", "(a,b,b), a>0", 1, _bb(0.5, 0.95),
             lambda t: E1, _is(AlgebraType.GK, lambda K: 0 < K < 1)),
    TableRow(5, "g(K), 0<K<1", "(a,a+a*sqrt(1-K),a-a*sqrt(1-K)), a>0", 1, _sqrt_row(0.5, 0.95),
             lambda t: E2_MINUS_E3, _is(AlgebraType.GK, lambda K: 0 < K < 1)),
    TableRow(6, "g(0)", "(a,2a,0), a>0", 1, _g0,
             lambda t: E2_MINUS_E3, _is(AlgebraType.GK, lambda K: K == 0)),
    TableRow(7, "g(K), K<0", "(a,b,-b), a>0", 3, _hyperbolic,
             lambda t: FULL, _is(AlgebraType.GK, lambda K: K < 0)),
    TableRow(8, "g(K), K<0", "(a,a+a*sqrt(1-K),a-a*sqrt(1-K)), a>0", 1, _sqrt_row(-2.0, -0.5),
             lambda t: E2_MINUS_E3, _is(AlgebraType.GK, lambda K: K < 0)),
    TableRow(9, "g_I", "(a,0,0), a>0", 3, lambda rng: (_u(rng), 0.0, 0.0),
             lambda t: FULL, _is(AlgebraType.GI)),
    TableRow(10, "e(1,1)", "(0,b,b), b>0", 1, _e11,
             lambda t: E1, _is(AlgebraType.E11)),
    TableRow(11, "Heisenberg algebra", "(0,b,0), b>0", 1, lambda rng: (0.0, _u(rng), 0.0),
             lambda t: E3, _is(AlgebraType.HEISENBERG)),
    TableRow(12, "e(2)", "(0,b,-b), b>0", 3, _e2,
             lambda t: FULL, _is(AlgebraType.E2)),
    TableRow(13, "abelian algebra", "(0,0,0)", 3, lambda rng: (0.0, 0.0, 0.0),
             lambda t: FULL, _is(AlgebraType.ABELIAN)),
]


@dataclass(frozen=True)
class TableRecord:
    row: int
    description: str
    sample: int
    triple: Triple
    expected_index: int
    computed_index: int
    expected_basis: SubspaceBasis
    computed_basis: SubspaceBasis
    algebra_ok: bool

    @property
    def match(self) -> bool:
        return (self.algebra_ok and self.expected_index == self.computed_index
                and self.expected_basis.dim == self.expected_index
                and same_span(self.expected_basis.vectors, self.computed_basis.vectors))


def table1(samples_per_row: int = 2, seed: int = 42, tol: float = GENERIC_TOL) -> list[TableRecord]:
    """Instantiate every row ``samples_per_row`` times and compare with the index engine."""
    if samples_per_row < 1:
        raise ValueError("samples_per_row must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for row in TABLE1:
        for k in range(samples_per_row):
            t = validate_triple(*row.make(rng), eps=EPS_CLASS)
            ind, basis = index(t, tol)
            out.append(TableRecord(
                row=row.number, description=row.description, sample=k, triple=t,
                expected_index=row.expected_index, computed_index=ind,
                expected_basis=SubspaceBasis.span(row.expected_span(t)),
                computed_basis=basis, algebra_ok=row.algebra_check(t),
            ))
    return out
