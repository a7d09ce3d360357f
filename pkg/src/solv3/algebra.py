"""Defining triples, structure constants, brackets and Lie algebra type.

A solvable metric Lie algebra is fixed by a triple ``(a, b, c)`` with
``a >= 0`` and ``b >= |c|``; in the orthonormal basis ``e1, e2, e3``

    [e1, e2] = a e2 + b e3,   [e1, e3] = c e2 + a e3,   [e2, e3] = 0.

Indices in code are 0-based: ``c[k, i, j]`` is the structure constant
``c^{k+1}_{i+1, j+1}``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EPS_CLASS = 1e-12


@dataclass(frozen=True)
class Triple:
    """Defining data of a solvable metric Lie algebra.

    Use :func:`validate_triple` to construct checked instances; values are
    stored exactly as given.
    """

    a: float
    b: float
    c: float

    @property
    def A(self) -> np.ndarray:
        """The 2x2 matrix ``[[a, c], [b, a]]``."""
        return np.array([[self.a, self.c], [self.b, self.a]], dtype=float)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


def validate_triple(a: float, b: float, c: float, eps: float = EPS_CLASS) -> Triple:
    """Return a :class:`Triple` if ``a >= 0`` and ``b >= |c|`` (up to ``eps``).

    Values violating a constraint by less than ``eps`` are clamped onto the
    boundary.
    """
    a, b, c = float(a), float(b), float(c)
    if not all(np.isfinite((a, b, c))):
        raise DomainError("triple entries must be finite")
    if a < -eps:
        raise DomainError("constraint a >= 0 violated")
    if b < abs(c) - eps:
        raise DomainError("constraint b >= |c| violated")
    a, b = max(a, 0.0), max(b, 0.0)
    if abs(c) > b:
        c = math.copysign(b, c)
    return Triple(a, b, c)


def structure_constants(t: Triple) -> np.ndarray:
    """3x3x3 array ``c[k, i, j]`` with ``[e_i, e_j] = c[k, i, j] e_k``."""
    c = np.zeros((3, 3, 3))
    c[1, 0, 1] = t.a
    c[2, 0, 1] = t.b
    c[1, 0, 2] = t.c
    c[2, 0, 2] = t.a
    return c - c.transpose(0, 2, 1)


def bracket(t: Triple, x, y) -> np.ndarray:
    """Lie bracket of two vectors given in the basis ``e1, e2, e3``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    w = np.array([x[0] * y[1] - y[0] * x[1], x[0] * y[2] - y[0] * x[2]])
    z = np.zeros(3)
    z[1:] = t.A @ w
    return z


def milnor_K(t: Triple, eps: float = EPS_CLASS) -> float:
    """Milnor invariant ``K = bc / a^2``; only defined for ``a > 0``."""
    if t.a <= eps:
        raise DomainError("Milnor invariant K requires a > 0")
    return t.b * t.c / t.a**2


class AlgebraType(enum.Enum):
    ABELIAN = "abelian"
    HEISENBERG = "Heisenberg"
    E11 = "e(1,1)"
    E2 = "e(2)"
    GI = "g_I"
    GK = "g(K)"


@dataclass(frozen=True)
class LieAlgebraClass:
    kind: AlgebraType
    K: float | None = None

    def __str__(self) -> str:
        if self.kind is AlgebraType.GK:
            return f"g(K), K = {self.K:.17g}"
        return self.kind.value


def classify(t: Triple, eps: float = EPS_CLASS) -> LieAlgebraClass:
    """Underlying Lie algebra of the triple (Milnor / May-Wears catalog)."""
    if t.a <= eps:
        if t.c > eps:
            return LieAlgebraClass(AlgebraType.E11)
        if t.c < -eps:
            return LieAlgebraClass(AlgebraType.E2)
        if t.b > eps:
            return LieAlgebraClass(AlgebraType.HEISENBERG)
        return LieAlgebraClass(AlgebraType.ABELIAN)
    if t.b <= eps:
        return LieAlgebraClass(AlgebraType.GI)
    return LieAlgebraClass(AlgebraType.GK, milnor_K(t, eps))
