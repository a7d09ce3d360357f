"""The simply connected group G(A) in global coordinates ``(x1, x2, x3)``.

Frames are 3x3 arrays; row ``i`` is the i-th frame vector expanded in the
coordinate basis (or, for :func:`right_in_left`, in the left frame).
"""

from __future__ import annotations

import numpy as np

from .algebra import EPS_CLASS, Triple

IDENTITY = np.zeros(3)


def exp_M(t: Triple, s: float, eps: float = EPS_CLASS) -> np.ndarray:
    """Closed-form ``exp(A s)`` for ``A = [[a, c], [b, a]]``."""
    a, b, c = t.a, t.b, t.c
    g = np.exp(a * s)
    if c > eps:
        lam = np.sqrt(c / b)
        ch, sh = np.cosh(b * lam * s), np.sinh(b * lam * s)
        return g * np.array([[ch, lam * sh], [sh / lam, ch]])
    if c < -eps:
        lam = np.sqrt(-c / b)
        co, si = np.cos(b * lam * s), np.sin(b * lam * s)
        return g * np.array([[co, -lam * si], [si / lam, co]])
    # also covers b = 0
    return g * np.array([[1.0, 0.0], [b * s, 1.0]])


def multiply(t: Triple, g, h) -> np.ndarray:
    g = np.asarray(g, dtype=float)
    h = np.asarray(h, dtype=float)
    z = np.empty(3)
    z[0] = g[0] + h[0]
    z[1:] = g[1:] + exp_M(t, g[0]) @ h[1:]
    return z


def inverse(t: Triple, g) -> np.ndarray:
    g = np.asarray(g, dtype=float)
    z = np.empty(3)
    z[0] = -g[0]
    z[1:] = -exp_M(t, -g[0]) @ g[1:]
    return z


def left_frame(t: Triple, p) -> np.ndarray:
    """Left-invariant orthonormal frame ``L_i`` in coordinate components."""
    F = np.zeros((3, 3))
    F[0, 0] = 1.0
    F[1:, 1:] = exp_M(t, p[0]).T
    return F


def coord_from_left(t: Triple, p) -> np.ndarray:
    """Coordinate fields ``d/dx_i`` expanded in the left frame."""
    F = np.zeros((3, 3))
    F[0, 0] = 1.0
    F[1:, 1:] = exp_M(t, -p[0]).T
    return F


def right_frame(t: Triple, p) -> np.ndarray:
    """Right-invariant frame ``R_i`` in coordinate components."""
    F = np.eye(3)
    F[0, 1:] = t.A @ np.asarray(p[1:], dtype=float)
    return F


def right_in_left(t: Triple, p) -> np.ndarray:
    """Right-invariant frame expanded in the left frame, by change of basis."""
    return right_frame(t, p) @ coord_from_left(t, p)


def right_in_left_alt_sign(t: Triple, p) -> np.ndarray:
    """Closed form of the right frame in the left frame with ``exp(+2 a x1)`` in ``R_3``.

    Kept only as a comparison for :func:`right_in_left`: the change of basis
    gives ``exp(-2 a x1)`` in that slot, so the two disagree whenever
    ``a c x1 != 0``.
    """
    a, b, c = t.a, t.b, t.c
    x1, x2, x3 = (float(v) for v in p)
    m = exp_M(t, x1)
    m11, m21, m12 = m[0, 0], m[1, 0], m[0, 1]
    # c/b * m21 == m12, which also stays finite when b = 0
    u, v = a * x2 + c * x3, b * x2 + a * x3
    em = np.exp(-2 * a * x1)
    return np.array([
        [1.0, em * (m11 * u - m12 * v), em * (-m21 * u + m11 * v)],
        [0.0, em * m11, -em * m21],
        [0.0, -np.exp(2 * a * x1) * m12, em * m11],
    ])
