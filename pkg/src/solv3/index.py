"""Subindex and index of symmetry.

The subindex comes from the nullspace of ``alpha -> sum_j alpha_j P(R_j)``.
The index equals the subindex for generic triples; on the nongeneric strata
it is read from a fixed catalog, and every claimed direction is backed by an
explicit Killing field parallel at e (a "witness") whose P-matrix is checked
numerically.  That no further directions exist is not re-proved here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .algebra import EPS_CLASS, LieAlgebraClass, Triple, classify
from .curvature import GENERIC_TOL, RicciData, diagonalize_ricci, is_generic
from .errors import StratumError
from .killing import (
    FieldSpec,
    P_matrix,
    P_right,
    flat_field,
    g1_field,
    heisenberg_field,
    hyperbolic_fields,
)

NULLSPACE_RTOL = 1e-9
WITNESS_TOL = 1e-8


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a subspace of g, rows in the basis e1, e2, e3."""

    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[0])

    @classmethod
    def span(cls, vectors, tol: float = 1e-10) -> "SubspaceBasis":
        return cls(rref(np.asarray(vectors, dtype=float).reshape(-1, 3), tol))

    def __str__(self) -> str:
        if self.dim == 0:
            return "{0}"
        return "span(" + ", ".join(format_vector(v) for v in self.vectors) + ")"


def rref(vectors: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Reduced row echelon form with zero rows dropped.

    Each surviving row has leading coefficient 1, so equal spans give
    identical arrays.
    """
    M = np.array(vectors, dtype=float).reshape(-1, 3)
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    rows, pivot_row = M.shape[0], 0
    for col in range(3):
        if pivot_row >= rows:
            break
        k = pivot_row + int(np.argmax(np.abs(M[pivot_row:, col])))
        if abs(M[k, col]) <= tol * scale:
            M[pivot_row:, col] = 0.0
            continue
        M[[pivot_row, k]] = M[[k, pivot_row]]
        M[pivot_row] /= M[pivot_row, col]
        for r in range(rows):
            if r != pivot_row:
                M[r] -= M[r, col] * M[pivot_row]
        pivot_row += 1
    M = M[:pivot_row]
    M[np.abs(M) <= tol * scale] = 0.0
    return M


def format_vector(v) -> str:
    parts = []
    for i, x in enumerate(v):
        if x == 0:
            continue
        name = f"e{i + 1}"
        mag = abs(x)
        coef = "" if np.isclose(mag, 1.0, rtol=0, atol=1e-12) else f"{mag:.6g}*"
        sign = "-" if x < 0 else "+"
        if not parts:
            parts.append(("-" if x < 0 else "") + coef + name)
        else:
            parts.append(f"{sign} {coef}{name}")
    return " ".join(parts) if parts else "0"


def nullspace(M: np.ndarray, rtol: float = NULLSPACE_RTOL) -> np.ndarray:
    """Orthonormal rows spanning ``ker M``; rank cut at ``rtol * max|M_ij|``."""
    M = np.asarray(M, dtype=float)
    scale = float(np.max(np.abs(M))) if M.size else 0.0
    if scale == 0.0:
        return np.eye(M.shape[1])
    # normalize first so tiny (even subnormal) scales do not underflow the cutoff
    _, s, vt = np.linalg.svd(M / scale)
    return vt[int(np.sum(s > rtol)):]


def same_span(u, v, tol: float = 1e-10) -> bool:
    """Rank test: do the row sets ``u`` and ``v`` span the same subspace?"""
    def rank(rows):
        rows = np.asarray(rows, dtype=float).reshape(-1, 3)
        if rows.shape[0] == 0:
            return 0
        rows = rows / np.maximum(np.linalg.norm(rows, axis=1, keepdims=True), 1e-300)
        return int(np.sum(np.linalg.svd(rows, compute_uv=False) > tol))

    ru, rv = rank(u), rank(v)
    both = np.vstack([np.asarray(u, float).reshape(-1, 3), np.asarray(v, float).reshape(-1, 3)])
    return ru == rv == rank(both)


def subindex(t: Triple, rtol: float = NULLSPACE_RTOL) -> SubspaceBasis:
    """Identity values of right-invariant fields parallel at e."""
    system = np.column_stack([P_right(t, j).ravel() for j in (1, 2, 3)])
    return SubspaceBasis.span(nullspace(system, rtol))


class Stratum(enum.Enum):
    GENERIC = "generic"
    ABELIAN = "abelian"
    HYPERBOLIC = "a > 0, b + c = 0"
    G1_SYMMETRIC = "a^2 = bc, b = c"
    G1 = "a^2 = bc, b != c"
    E11 = "a = 0, b = c"
    HEISENBERG = "a = c = 0"
    FLAT = "a = 0, b + c = 0"


_CATALOG_INDEX = {
    Stratum.ABELIAN: 3,
    Stratum.HYPERBOLIC: 3,
    Stratum.G1_SYMMETRIC: 3,
    Stratum.G1: 1,
    Stratum.E11: 1,
    Stratum.HEISENBERG: 1,
    Stratum.FLAT: 3,
}


def _catalog_matches(t: Triple, tol: float) -> list[Stratum]:
    a, b, c = t.a, t.b, t.c
    out = []
    if abs(a) < tol:
        if abs(b) < tol:
            out.append(Stratum.ABELIAN)
        else:
            if abs(b - c) < tol:
                out.append(Stratum.E11)
            if abs(c) < tol:
                out.append(Stratum.HEISENBERG)
            if abs(b + c) < tol:
                out.append(Stratum.FLAT)
    else:
        if abs(b + c) < tol:
            out.append(Stratum.HYPERBOLIC)
        if abs(a * a - b * c) < tol:
            out.append(Stratum.G1_SYMMETRIC if abs(b - c) < tol else Stratum.G1)
    return out


def stratum(t: Triple, tol: float = GENERIC_TOL) -> Stratum:
    """Which branch of the index computation applies to ``t``."""
    if is_generic(t, tol):
        return Stratum.GENERIC
    matches = _catalog_matches(t, tol)
    if not matches:
        raise StratumError(f"triple {t.as_tuple()} is nongeneric within tol={tol:g} "
                           "but matches no catalog stratum; tighten the tolerance")
    if len({_CATALOG_INDEX[s] for s in matches}) > 1:
        names = "; ".join(s.value for s in matches)
        raise StratumError(f"triple {t.as_tuple()} is within tol={tol:g} of incompatible strata "
                           f"({names}); tighten the tolerance")
    return matches[0]


def g1_direction(t: Triple) -> np.ndarray:
    """``(0, alpha_2, alpha_3)`` solving the parallel condition with beta = 1 on a^2 = bc."""
    a, b = t.a, t.b
    s = (a * a + b * b) / (2 * b)
    D = a * a - s * s
    if abs(D) < GENERIC_TOL * max(1.0, s * s):
        # a = b here: the symmetric stratum a = b = c, up to tolerance
        raise StratumError(f"triple {t.as_tuple()} is within tolerance of a = b = c; tighten the tolerance")
    return np.array([0.0, (-a * b + a * s) / D, (-a * a + b * s) / D])


def index(t: Triple, tol: float = GENERIC_TOL) -> tuple[int, SubspaceBasis]:
    """Index of symmetry and a canonical basis of S_e."""
    st = stratum(t, tol)
    if st is Stratum.GENERIC:
        sbar = subindex(t)
        return sbar.dim, sbar
    if _CATALOG_INDEX[st] == 3:
        basis = SubspaceBasis.span(np.eye(3))
    elif st is Stratum.G1:
        basis = SubspaceBasis.span(g1_direction(t))
    elif st is Stratum.E11:
        basis = SubspaceBasis.span([1.0, 0.0, 0.0])
    else:
        basis = SubspaceBasis.span([0.0, 0.0, 1.0])
    return basis.dim, basis


@dataclass(frozen=True)
class Witness:
    """A Killing field ``sum_j alpha_j R_j + sum beta_X X`` claimed parallel at e."""

    name: str
    alpha: tuple[float, float, float]
    specials: tuple[tuple[float, FieldSpec], ...]
    P: np.ndarray
    value: np.ndarray

    @property
    def residual(self) -> float:
        return float(np.linalg.norm(self.P))


def make_witness(t: Triple, name: str, alpha, specials=()) -> Witness:
    alpha = tuple(float(x) for x in alpha)
    P = sum(al * P_right(t, j) for j, al in zip((1, 2, 3), alpha))
    value = np.array(alpha, dtype=float)
    for beta, X in specials:
        P = P + beta * P_matrix(t, X)
        value = value + beta * X(np.zeros(3))
    return Witness(name, alpha, tuple(specials), np.asarray(P, dtype=float), value)


def cross_check_parallel_fields(t: Triple, tol: float = GENERIC_TOL) -> list[Witness]:
    """Explicit Killing fields parallel at e proving ``dim S_e`` is at least the catalog value."""
    st = stratum(t, tol)
    a, b = t.a, t.b
    if st is Stratum.GENERIC:
        raise StratumError("generic triple: no catalog witnesses (S_e equals the subindex space)")
    if st is Stratum.ABELIAN:
        return [make_witness(t, f"R{j}", np.eye(3)[j - 1]) for j in (1, 2, 3)]
    if st is Stratum.HYPERBOLIC:
        X1, X2, X3 = hyperbolic_fields(t)
        return [
            make_witness(t, "X1_hyp + R2/a^2", (0, 1 / a**2, 0), [(1.0, X1)]),
            make_witness(t, "X2_hyp - R3/a^2", (0, 0, -1 / a**2), [(1.0, X2)]),
            make_witness(t, "(b/2) X3_hyp - R1", (-1, 0, 0), [(b / 2, X3)]),
        ]
    if st is Stratum.G1_SYMMETRIC:
        X = g1_field(t)
        return [
            make_witness(t, "R1", (1, 0, 0)),
            make_witness(t, "R2 - R3", (0, 1, -1)),
            make_witness(t, "X_g1 - R3", (0, 0, -1), [(1.0, X)]),
        ]
    if st is Stratum.G1:
        al = g1_direction(t)
        return [make_witness(t, "alpha2 R2 + alpha3 R3 + X_g1", al, [(1.0, g1_field(t))])]
    if st is Stratum.E11:
        return [make_witness(t, "R1", (1, 0, 0))]
    if st is Stratum.HEISENBERG:
        return [make_witness(t, "R3 - (b/2) X_heis", (0, 0, 1), [(-b / 2, heisenberg_field(t))])]
    # flat
    return [
        make_witness(t, "R2", (0, 1, 0)),
        make_witness(t, "R3", (0, 0, 1)),
        make_witness(t, "R1 + b X_flat", (1, 0, 0), [(b, flat_field(t))]),
    ]


@dataclass
class IndexReport:
    triple: Triple
    algebra: LieAlgebraClass
    K: float | None
    ricci: RicciData
    stratum: Stratum
    subindex: int
    sbar_basis: SubspaceBasis
    index: int
    s_basis: SubspaceBasis
    generic: bool
    witnesses: list[Witness] = field(default_factory=list)
    verification: list[tuple[str, float, bool]] = field(default_factory=list)
    upper_bound: str = "subindex equals index for generic triples"


def analyze(t: Triple, tol: float = GENERIC_TOL, eps: float = EPS_CLASS) -> IndexReport:
    """Everything known about ``t``: class, Ricci data, subindex, index, witnesses."""
    cls = classify(t, eps)
    ricci = diagonalize_ricci(t, tol)
    st = stratum(t, tol)
    sbar = subindex(t)
    ind, basis = index(t, tol)
    report = IndexReport(
        triple=t, algebra=cls, K=cls.K, ricci=ricci, stratum=st,
        subindex=sbar.dim, sbar_basis=sbar, index=ind, s_basis=basis,
        generic=st is Stratum.GENERIC,
    )
    if st is not Stratum.GENERIC:
        report.witnesses = cross_check_parallel_fields(t, tol)
        report.upper_bound = "assumed, not verified: isotropy must commute with the diagonal Ricci form"
        for w in report.witnesses:
            report.verification.append((f"witness {w.name}", w.residual, w.residual < WITNESS_TOL))
        values = np.array([w.value for w in report.witnesses])
        report.verification.append(("witness values span S_e", 0.0, same_span(values, basis.vectors)))
    report.verification.append((
        "S_bar contained in S_e", 0.0,
        sbar.dim == 0 or same_span(np.vstack([basis.vectors, sbar.vectors]), basis.vectors),
    ))
    return report
