"""Levi-Civita connection, the Killing operator and parallelism at e.

Vector fields are given by their components ``X^k`` in the left-invariant
frame ``L_k``.  With ``D(X)_{jk} = L_j X^k`` a field is Killing iff
``D + D^T + C(X) = 0`` everywhere, and a Killing field is parallel at the
identity iff ``P(X) = D(X)^T|_e + Gamma(X) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import EPS_CLASS, Triple, structure_constants
from .errors import DomainError, NumericalError
from .group import IDENTITY, left_frame, right_in_left

FD_STEP = 1e-5


def christoffel(t: Triple) -> np.ndarray:
    """``G[j, k, i] = Gamma^j_{ki}`` where ``nabla_{L_k} L_i = Gamma^j_{ki} L_j``."""
    c = structure_constants(t)
    # Koszul formula for an orthonormal left-invariant frame
    return 0.5 * (c - np.einsum("kij->jki", c) + np.einsum("ijk->jki", c))


def C_matrix(t: Triple, Xe) -> np.ndarray:
    a, b, c = t.a, t.b, t.c
    x1, x2, x3 = (float(v) for v in Xe)
    p, q = a * x2 + c * x3, b * x2 + a * x3
    return np.array([
        [0.0, p, q],
        [p, -2 * a * x1, -(b + c) * x1],
        [q, -(b + c) * x1, -2 * a * x1],
    ])


def gamma_matrix(t: Triple, Xe) -> np.ndarray:
    """``Gamma(X)_{ki} = X^j Gamma^k_{ij}`` written out entrywise."""
    a, b, c = t.a, t.b, t.c
    x1, x2, x3 = (float(v) for v in Xe)
    s, d = 0.5 * (b + c), 0.5 * (b - c)
    return np.array([
        [0.0, a * x2 + s * x3, s * x2 + a * x3],
        [-d * x3, -a * x1, -s * x1],
        [d * x2, -s * x1, -a * x1],
    ])


def gamma_contraction(t: Triple, Xe) -> np.ndarray:
    """Same matrix as :func:`gamma_matrix`, contracted from the Christoffel symbols."""
    return np.einsum("kij,j->ki", christoffel(t), np.asarray(Xe, dtype=float))


@dataclass(frozen=True)
class FieldSpec:
    """A vector field ``X = X^k L_k`` on G.

    ``components(p)`` returns ``(X^1, X^2, X^3)`` at the coordinate point
    ``p``; ``partials(p)``, when given, returns ``J[k, m] = dX^k/dx_m``.
    """

    name: str
    components: Callable[[np.ndarray], np.ndarray]
    partials: Callable[[np.ndarray], np.ndarray] | None = None

    def __call__(self, p) -> np.ndarray:
        return np.asarray(self.components(np.asarray(p, dtype=float)), dtype=float)


def linear_combination(terms: Sequence[tuple[float, FieldSpec]], name: str | None = None) -> FieldSpec:
    """The field ``sum(coef * X)``; partials exist iff every term has them."""
    terms = [(float(k), f) for k, f in terms]
    if name is None:
        name = " + ".join(f"{k:g}*{f.name}" for k, f in terms)

    def comps(p):
        return sum(k * f(p) for k, f in terms)

    partials = None
    if all(f.partials is not None for _, f in terms):
        def partials(p):
            return sum(k * f.partials(p) for k, f in terms)

    return FieldSpec(name, comps, partials)


def fd_jacobian(f: Callable[[np.ndarray], np.ndarray], p, h: float = FD_STEP) -> np.ndarray:
    """Central-difference Jacobian ``J[k, m] = df_k/dx_m``."""
    p = np.asarray(p, dtype=float)
    cols = []
    for m in range(p.size):
        e = np.zeros_like(p)
        e[m] = h
        cols.append((np.asarray(f(p + e)) - np.asarray(f(p - e))) / (2 * h))
    return np.column_stack(cols)


def fd_jacobian_checked(f, p, h: float = FD_STEP, ratio_tol: float = 2.0) -> np.ndarray:
    """Central differences with a step-halving convergence test.

    Successive differences at ``h, h/2, h/4`` must shrink by a factor close
    to 4.  Differences already at rounding level pass unconditionally.
    """
    p = np.asarray(p, dtype=float)
    J1, J2, J4 = (fd_jacobian(f, p, s) for s in (h, h / 2, h / 4))
    d1 = np.max(np.abs(J1 - J2))
    d2 = np.max(np.abs(J2 - J4))
    scale = max(1.0, float(np.max(np.abs(f(p)))), float(np.max(np.abs(J4))))
    floor = 1e3 * np.finfo(float).eps * scale / (h / 4)
    if max(d1, d2) > floor:
        ratio = d1 / d2 if d2 > 0 else np.inf
        if abs(ratio - 4.0) > ratio_tol:
            raise NumericalError(
                f"finite differences not converging at O(h^2): ratio {ratio:.3g} at p={p.tolist()}"
            )
    return J4


def D_matrix(t: Triple, X: FieldSpec, p, h: float | None = None, analytic: bool = True) -> np.ndarray:
    """``D[j, k] = L_j X^k`` at ``p``.

    Uses ``X.partials`` when present and ``analytic`` is set, otherwise
    checked central differences with step ``h``.
    """
    p = np.asarray(p, dtype=float)
    if analytic and X.partials is not None:
        J = np.asarray(X.partials(p), dtype=float)
    else:
        J = fd_jacobian_checked(X, p, FD_STEP if h is None else h)
    return left_frame(t, p) @ J.T


def killing_residual(t: Triple, X: FieldSpec, p, h: float | None = None, analytic: bool = True) -> np.ndarray:
    """``D(X) + D(X)^T + C(X)`` at ``p``; vanishes everywhere iff X is Killing."""
    D = D_matrix(t, X, p, h, analytic)
    return D + D.T + C_matrix(t, X(p))


def P_matrix(t: Triple, X: FieldSpec, h: float | None = None, analytic: bool = True) -> np.ndarray:
    """``P(X)_{ki} = (L_i X^k + X^j Gamma^k_{ij})|_e``."""
    D = D_matrix(t, X, IDENTITY, h, analytic)
    return D.T + gamma_contraction(t, X(IDENTITY))


def P_right(t: Triple, j: int) -> np.ndarray:
    """Closed-form ``P(R_j)`` for the right-invariant fields, ``j`` in 1..3."""
    a = t.a
    s, d = 0.5 * (t.b + t.c), 0.5 * (t.b - t.c)
    if j == 1:
        return np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -d], [0.0, d, 0.0]])
    if j == 2:
        return np.array([[0.0, a, s], [-a, 0.0, 0.0], [-s, 0.0, 0.0]])
    if j == 3:
        return np.array([[0.0, s, a], [-s, 0.0, 0.0], [-a, 0.0, 0.0]])
    raise ValueError(f"right-invariant field index must be 1, 2 or 3, got {j}")


def right_invariant_field(t: Triple, j: int) -> FieldSpec:
    """``R_j`` as a field, components taken from the composed change of frame."""
    if j not in (1, 2, 3):
        raise ValueError(f"right-invariant field index must be 1, 2 or 3, got {j}")
    return FieldSpec(f"R{j}", lambda p: right_in_left(t, p)[j - 1])


# Special Killing fields, one family per nongeneric stratum (most vanish at e).

def g1_field(t: Triple) -> FieldSpec:
    """Killing field vanishing at e on ``a^2 = bc`` (``a, b > 0``); c is taken as a^2/b."""
    a, b = t.a, t.b
    if a <= 0 or b <= 0:
        raise DomainError("the g(1) field needs a > 0 and b > 0")
    k2, k3 = (a * a - 3 * b * b) / a, (b * b - 3 * a * a) / a
    r2, r3 = 2 * (b * b - a * a) / a, 2 * (a * a - b * b) / a

    def comps(p):
        x1, x2, x3 = p
        u = b * x2 + a * x3
        em, ep = np.exp(-2 * a * x1), np.exp(2 * a * x1)
        Y = 4 * a * u * u + (a * a + b * b) / a
        return np.array([
            u,
            (em * Y + ep * k2 + r2) / (8 * b),
            (em * Y + ep * k3 + r3) / (8 * a),
        ])

    def partials(p):
        x1, x2, x3 = p
        u = b * x2 + a * x3
        em, ep = np.exp(-2 * a * x1), np.exp(2 * a * x1)
        Y = 4 * a * u * u + (a * a + b * b) / a
        return np.array([
            [0.0, b, a],
            [(-2 * a * em * Y + 2 * a * ep * k2) / (8 * b), em * a * u, em * a * a * u / b],
            [(-2 * a * em * Y + 2 * a * ep * k3) / (8 * a), em * b * u, em * a * u],
        ])

    return FieldSpec("X_g1", comps, partials)


def hyperbolic_fields(t: Triple) -> list[FieldSpec]:
    """Three Killing fields on ``b + c = 0``, ``a > 0`` (constant curvature -a^2)."""
    a, b = t.a, t.b
    if a <= 0:
        raise DomainError("the hyperbolic fields need a > 0")

    def trig(p):
        x1, x2, x3 = p
        return (np.cos(b * x1), np.sin(b * x1), np.exp(-a * x1), np.exp(a * x1),
                x3 * x3 - x2 * x2, 2 * x2 * x3)

    def x1_comps(p):
        cs, sn, em, ep, q, w = trig(p)
        return np.array([
            -2 * p[1] / a,
            em * (cs * q - sn * w) + ep * cs / a**2,
            em * (-sn * q - cs * w) - ep * sn / a**2,
        ])

    def x1_partials(p):
        _, x2, x3 = p
        cs, sn, em, ep, q, w = trig(p)
        f2, f3 = cs * q - sn * w, -sn * q - cs * w
        return np.array([
            [0.0, -2 / a, 0.0],
            [em * (-a * f2 + b * f3) + ep * (a * cs - b * sn) / a**2,
             em * (-2 * x2 * cs - 2 * x3 * sn), em * (2 * x3 * cs - 2 * x2 * sn)],
            [em * (-a * f3 - b * f2) - ep * (a * sn + b * cs) / a**2,
             em * (2 * x2 * sn - 2 * x3 * cs), em * (-2 * x3 * sn - 2 * x2 * cs)],
        ])

    def x2_comps(p):
        cs, sn, em, ep, q, w = trig(p)
        return np.array([
            2 * p[2] / a,
            em * (sn * q + cs * w) - ep * sn / a**2,
            em * (cs * q - sn * w) - ep * cs / a**2,
        ])

    def x2_partials(p):
        _, x2, x3 = p
        cs, sn, em, ep, q, w = trig(p)
        f2, f3 = sn * q + cs * w, cs * q - sn * w
        return np.array([
            [0.0, 0.0, 2 / a],
            [em * (-a * f2 + b * f3) - ep * (a * sn + b * cs) / a**2,
             em * (-2 * x2 * sn + 2 * x3 * cs), em * (2 * x3 * sn + 2 * x2 * cs)],
            [em * (-a * f3 - b * f2) - ep * (a * cs - b * sn) / a**2,
             em * (-2 * x2 * cs - 2 * x3 * sn), em * (2 * x3 * cs - 2 * x2 * sn)],
        ])

    def x3_comps(p):
        _, x2, x3 = p
        cs, sn, em, *_ = trig(p)
        return np.array([0.0, em * (-2 * x3 * cs + 2 * x2 * sn), em * (2 * x3 * sn + 2 * x2 * cs)])

    def x3_partials(p):
        _, x2, x3 = p
        cs, sn, em, *_ = trig(p)
        f2, f3 = -2 * x3 * cs + 2 * x2 * sn, 2 * x3 * sn + 2 * x2 * cs
        return np.array([
            [0.0, 0.0, 0.0],
            [em * (-a * f2 + b * f3), em * 2 * sn, -em * 2 * cs],
            [em * (-a * f3 - b * f2), em * 2 * cs, em * 2 * sn],
        ])

    return [
        FieldSpec("X1_hyp", x1_comps, x1_partials),
        FieldSpec("X2_hyp", x2_comps, x2_partials),
        FieldSpec("X3_hyp", x3_comps, x3_partials),
    ]


def heisenberg_field(t: Triple) -> FieldSpec:
    """Killing field vanishing at e for the Heisenberg triple ``(0, b, 0)``."""
    b = t.b

    def comps(p):
        x1, x2, _ = p
        return np.array([x2, -x1, 0.5 * b * (x1 * x1 + x2 * x2)])

    def partials(p):
        x1, x2, _ = p
        return np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [b * x1, b * x2, 0.0]])

    return FieldSpec("X_heis", comps, partials)


def flat_field(t: Triple) -> FieldSpec:
    """Killing field vanishing at e for the flat triple ``(0, b, -b)``."""
    b = t.b

    def comps(p):
        x1, x2, x3 = p
        cs, sn = np.cos(b * x1), np.sin(b * x1)
        return np.array([0.0, x3 * cs - x2 * sn, -x3 * sn - x2 * cs])

    def partials(p):
        x1, x2, x3 = p
        cs, sn = np.cos(b * x1), np.sin(b * x1)
        return np.array([
            [0.0, 0.0, 0.0],
            [b * (-x3 * sn - x2 * cs), -sn, cs],
            [b * (-x3 * cs + x2 * sn), -cs, -sn],
        ])

    return FieldSpec("X_flat", comps, partials)


def special_fields(t: Triple, tol: float = EPS_CLASS) -> list[FieldSpec]:
    """The known Killing fields vanishing at e that apply to ``t``'s stratum."""
    a, b, c = t.a, t.b, t.c
    out: list[FieldSpec] = []
    if a > tol:
        if abs(a * a - b * c) < tol and b > tol:
            out.append(g1_field(t))
        if abs(b + c) < tol:
            out.extend(hyperbolic_fields(t))
    elif b > tol:
        if abs(c) < tol:
            out.append(heisenberg_field(t))
        elif abs(b + c) < tol:
            out.append(flat_field(t))
    return out
