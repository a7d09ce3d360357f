"""Ricci curvature at the identity and the genericity predicate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Triple, structure_constants
from .killing import christoffel

GENERIC_TOL = 1e-9

# Curvature convention R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
# Ric(Y,Z) = tr(X -> R(X,Y)Z).  With this sign the oracle reproduces the
# closed-form Ricci matrix (checked on (1,1,1) and random triples).
CURVATURE_SIGN = 1.0


@dataclass(frozen=True)
class RicciData:
    R: np.ndarray
    theta: float
    R_d: np.ndarray
    diag: np.ndarray
    generic: bool


def ricci_matrix(t: Triple) -> np.ndarray:
    a, b, c = t.a, t.b, t.c
    return np.array([
        [-2 * a * a - 0.5 * (b + c) ** 2, 0.0, 0.0],
        [0.0, -2 * a * a - 0.5 * (b * b - c * c), -a * (b + c)],
        [0.0, -a * (b + c), -2 * a * a - 0.5 * (c * c - b * b)],
    ])


def riemann_tensor(t: Triple) -> np.ndarray:
    """``Rm[m, j, k, i]``: the e_m component of ``R(e_k, e_i) e_j``."""
    G = christoffel(t)
    c = structure_constants(t)
    # N[k] is nabla_{e_k} acting on frame coefficients: (N[k])[j, i] = Gamma^j_{ki}
    N = np.transpose(G, (1, 0, 2))
    NN = np.einsum("kml,ilj->kimj", N, N)           # (N_k N_i)[m, j]
    brk = np.einsum("lki,lmj->kimj", c, N)          # sum_l c^l_{ki} N_l[m, j]
    Rm = NN - np.transpose(NN, (1, 0, 2, 3)) - brk  # indexed [k, i, m, j]
    return CURVATURE_SIGN * np.transpose(Rm, (2, 3, 0, 1))


def ricci_from_connection(t: Triple) -> np.ndarray:
    """Ricci matrix traced from the curvature of the Levi-Civita connection."""
    return np.einsum("kjki->ij", riemann_tensor(t))


def sectional_curvatures(t: Triple) -> np.ndarray:
    """Curvatures of the planes (e1,e2), (e1,e3), (e2,e3)."""
    Rm = riemann_tensor(t)
    return np.array([Rm[i, j, i, j] for i, j in ((0, 1), (0, 2), (1, 2))])


def diag_angle(t: Triple) -> float:
    """Rotation angle in [0, pi/2) with ``tan(2 theta) = 2a / (b - c)``."""
    if t.a == 0 and t.b == t.c:
        return 0.0
    return 0.5 * float(np.arctan2(2 * t.a, t.b - t.c))


def rotation(theta: float) -> np.ndarray:
    """Rotation of the e2 e3 plane."""
    co, si = np.cos(theta), np.sin(theta)
    return np.array([[1.0, 0.0, 0.0], [0.0, co, -si], [0.0, si, co]])


def ricci_diagonal(t: Triple) -> np.ndarray:
    """Closed-form diagonal entries; the second carries the negative root."""
    a, b, c = t.a, t.b, t.c
    root = np.sqrt(4 * a * a + (b - c) ** 2)
    s = 0.5 * (b + c)
    return np.array([-2 * a * a - 0.5 * (b + c) ** 2, -2 * a * a - s * root, -2 * a * a + s * root])


def is_generic(t: Triple, tol: float = GENERIC_TOL) -> bool:
    a, b, c = t.a, t.b, t.c
    if abs(b + c) < tol:
        return False
    if abs(a * a - b * c) < tol:
        return False
    if abs(a) < tol and abs(b - c) < tol:
        return False
    return True


def diagonalize_ricci(t: Triple, tol: float = GENERIC_TOL) -> RicciData:
    R = ricci_matrix(t)
    theta = diag_angle(t)
    r = rotation(theta)
    R_d = r.T @ R @ r
    return RicciData(R=R, theta=theta, R_d=R_d, diag=ricci_diagonal(t), generic=is_generic(t, tol))
