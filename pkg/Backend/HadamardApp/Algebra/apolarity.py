"""Quadratic forms, polarity and apolar point sets."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import List, Sequence, Tuple

import numpy as np

from . import linalg
from .exceptions import DegenerateConfigurationError, DegenerateFormError, DimensionMismatchError, SingularMatrixError
from .linalg import Matrix
from .projective import PointConfig, Points, ProjectivePoint, _as_points, coordinate_matrix, cremona, simplex
from .scalars import DEFAULT_TOLERANCE, Field, Scalar, Tolerance, sqrt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticForm:
    """Q(u, v) = uᵀ G v for a symmetric (n+1)×(n+1) matrix G."""

    matrix: Matrix
    tol: Tolerance = DEFAULT_TOLERANCE

    def __post_init__(self):
        G = self.matrix
        if G.rows != G.cols:
            raise DimensionMismatchError(f"a quadratic form needs a square matrix, got {G.shape}")
        if G.field.exact:
            symmetric = bool(np.all(G.data == G.data.T))
        else:
            symmetric = bool(np.all(np.abs(G.data - G.data.T) <= self.tol.absolute))
        if not symmetric:
            raise DegenerateFormError("quadratic form matrix is not symmetric")

    @classmethod
    def diagonal(cls, values: Sequence, field: Field) -> "QuadraticForm":
        zero = field.zero()
        n = len(values)
        rows = [[values[i] if i == j else zero for j in range(n)] for i in range(n)]
        return cls(Matrix.from_rows(rows, field, cols=n))

    @classmethod
    def from_monomials(cls, coeffs: Sequence, n: int, field: Field) -> "QuadraticForm":
        """Coefficients of xⁱxʲ (i ≤ j, lexicographic) → symmetric matrix."""
        size = n + 1
        G = [[field.zero()] * size for _ in range(size)]
        for c, (i, j) in zip(coeffs, monomials(n)):
            if i == j:
                G[i][i] = c
            else:
                G[i][j] = G[j][i] = c / 2
        return cls(Matrix.from_rows(G, field, cols=size))

    @property
    def dim(self) -> int:
        return self.matrix.rows - 1

    @property
    def field(self) -> Field:
        return self.matrix.field

    def bilinear(self, u: Sequence, v: Sequence) -> Scalar:
        if len(u) != self.matrix.rows or len(v) != self.matrix.rows:
            raise DimensionMismatchError("point and form live in different spaces")
        G = self.matrix.data
        acc = self.field.zero()
        for i in range(len(u)):
            for j in range(len(v)):
                g = G[i, j]
                if g:
                    acc = acc + u[i] * g * v[j]
        return acc

    def evaluate(self, u: Sequence) -> Scalar:
        return self.bilinear(u, u)

    def is_nondegenerate(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return linalg.rank(self.matrix, tol) == self.matrix.rows


def monomials(n: int) -> List[Tuple[int, int]]:
    return list(combinations_with_replacement(range(n + 1), 2))


def _vanishes(value, Q: QuadraticForm, u: Sequence, v: Sequence, tol: Tolerance) -> bool:
    if Q.field.exact:
        return not value
    scale = linalg.max_abs(Q.matrix) * float(np.linalg.norm(np.array(u, dtype=complex))) * \
        float(np.linalg.norm(np.array(v, dtype=complex)))
    return abs(value) <= max(tol.absolute, tol.relative * scale)


def polar_pairing(Q: QuadraticForm, z: ProjectivePoint, w: ProjectivePoint) -> Scalar:
    return Q.bilinear(z.coords, w.coords)


def polar_hyperplane(Q: QuadraticForm, z: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple:
    """Covector G·z; its zero locus is the polar hyperplane H_{Q,z}."""
    if not Q.is_nondegenerate(tol):
        raise DegenerateFormError("polar hyperplanes need a nondegenerate quadric")
    if len(z) != Q.matrix.rows:
        raise DimensionMismatchError("point and form live in different spaces")
    column = Matrix.from_columns([z.coords], Q.field)
    return (Q.matrix @ column).column(0)


def is_apolar_set(Q: QuadraticForm, cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    pts = _as_points(cfg)
    if len(pts) != Q.dim + 1:
        raise DimensionMismatchError(f"an apolar set in P^{Q.dim} has {Q.dim + 1} points, got {len(pts)}")
    for p in pts:
        if _vanishes(polar_pairing(Q, p, p), Q, p.coords, p.coords, tol):
            return False
    for p, q in combinations(pts, 2):
        if not _vanishes(polar_pairing(Q, p, q), Q, p.coords, q.coords, tol):
            return False
    return True


def frame_quadric(base: Points, H: Sequence, tol: Tolerance = DEFAULT_TOLERANCE) -> QuadraticForm:
    """The unique Q_0 with the z_i apolar and H the polar hyperplane of p_0.

    ``base`` is z_0, …, z_n followed by p_0. In the frame where the z_i are the
    coordinate points and p_0 = [1, …, 1], H = Σ a_i xⁱ gives Q_0 = Σ a_i (xⁱ)²;
    the result is that form pulled back to the original coordinates.
    """
    pts = _as_points(base)
    n = len(pts) - 2
    if n < 1 or any(p.dim != n for p in pts):
        raise DimensionMismatchError("a base of Pⁿ is n+2 points of Pⁿ")
    field = pts[0].field
    h = [linalg.coerce_entry(c, field) for c in H]
    if len(h) != n + 1:
        raise DimensionMismatchError("hyperplane covector has the wrong length")
    Z = coordinate_matrix(pts[: n + 1])
    p0 = pts[n + 1]
    try:
        mu = linalg.solve(Z, Matrix.from_columns([p0.coords], field), tol).column(0)
    except SingularMatrixError as exc:
        raise DegenerateConfigurationError("base points z_i are linearly dependent") from exc
    if any(_is_zero(m, field, tol) for m in mu):
        raise DegenerateConfigurationError("base is not in general linear position")
    for idx, p in enumerate(pts):
        value = sum((a * b for a, b in zip(h, p.coords)), field.zero())
        if _is_zero(value, field, tol):
            raise DegenerateConfigurationError(f"hyperplane H contains base point {idx}")
    # frame change x = T y with T = Z·diag(μ)
    T = Matrix.from_rows([[Z.data[i, j] * mu[j] for j in range(n + 1)] for i in range(n + 1)], field, cols=n + 1)
    a = (T.T @ Matrix.from_columns([h], field)).column(0)
    T_inv = linalg.inverse(T, tol)
    G = T_inv.T @ QuadraticForm.diagonal(a, field).matrix @ T_inv
    if not field.exact:
        G = Matrix((G.data + G.data.T) / 2, field)
    return QuadraticForm(G)


def _is_zero(value, field: Field, tol: Tolerance) -> bool:
    return not value if field.exact else abs(value) <= tol.absolute


def quadrics_through(cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[int, List[QuadraticForm]]:
    """Projective dimension and a basis of the linear system of quadrics containing ``cfg``."""
    pts = _as_points(cfg)
    if not pts:
        raise DegenerateConfigurationError("quadrics_through needs at least one point to fix the ambient space")
    n = pts[0].dim
    field = pts[0].field
    basis_monomials = monomials(n)
    rows = [[p[i] * p[j] for i, j in basis_monomials] for p in pts]
    incidence = Matrix.from_rows(rows, field, cols=len(basis_monomials))
    K = linalg.kernel_basis(incidence, tol)
    forms = [QuadraticForm.from_monomials(K.column(j), n, field) for j in range(K.cols)]
    logger.debug("%d points in P^%d lie on a %d-dimensional system of quadrics", len(pts), n, K.cols - 1)
    return K.cols - 1, forms


def castelnuovo_count(n: int) -> int:
    """binom(n, 2) − 1: dimension of quadrics through 2n+2 doubly apolar points (and through an RNC)."""
    return comb(n, 2) - 1


def base_quadric_count(n: int) -> int:
    """binom(n+1, 2) − 2: dimension of quadrics through a base of n+2 points."""
    return comb(n + 1, 2) - 2


def weddle_conic(p_cfg: Points) -> QuadraticForm:
    """The conic through the coordinate triangle and an apolar triple p_0, p_1, p_2 of P²."""
    pts = _as_points(p_cfg)
    if len(pts) != 3 or any(p.dim != 2 for p in pts):
        raise DimensionMismatchError("the conic is defined for three points of P²")
    for p in pts:
        cremona(p)  # raises on a zero coordinate
    field = pts[0].field
    c = [pts[0][l] * pts[1][l] * pts[2][l] for l in range(3)]
    # x⁰x¹ ← Π p², x⁰x² ← Π p¹, x¹x² ← Π p⁰
    return QuadraticForm.from_monomials([field.zero(), c[2], c[1], field.zero(), c[0], field.zero()], 2, field)


def trace_pairing(Q: QuadraticForm, P: QuadraticForm, tol: Tolerance = DEFAULT_TOLERANCE) -> Scalar:
    """trace_Q P = Σ P(v_i, v_i) over a Q-orthonormal basis = tr(G_Q⁻¹ G_P)."""
    if Q.matrix.shape != P.matrix.shape:
        raise DimensionMismatchError("forms live in different spaces")
    try:
        M = linalg.solve(Q.matrix, P.matrix, tol)
    except SingularMatrixError as exc:
        raise DegenerateFormError("trace pairing needs a nondegenerate Q") from exc
    acc = Q.field.zero()
    for i in range(M.rows):
        acc = acc + M.data[i, i]
    return acc


def apolar_trace(P: QuadraticForm, cfg: Points, Q: QuadraticForm) -> Scalar:
    """Σ P(ẑ_i, ẑ_i) over Q-unit representatives ẑ_i = z_i/√Q(z_i, z_i), without square roots."""
    acc = P.field.zero()
    for z in _as_points(cfg):
        acc = acc + P.evaluate(z.coords) / Q.evaluate(z.coords)
    return acc


def trace_identity_holds(P: QuadraticForm, z_cfg: Points, p_cfg: Points, Q: QuadraticForm,
                         tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    left, right = apolar_trace(P, z_cfg, Q), apolar_trace(P, p_cfg, Q)
    if P.field.exact:
        return left == right
    return abs(left - right) <= max(tol.absolute, tol.relative * max(abs(left), abs(right)))


def unit_representative(Q: QuadraticForm, z: ProjectivePoint) -> ProjectivePoint:
    """z/√Q(z, z) with the principal root; exact backends need Q(z, z) to be a square."""
    norm = sqrt(Q.evaluate(z.coords))
    return ProjectivePoint(tuple(c / norm for c in z.coords), z.field)


def identity_form(n: int, field: Field) -> QuadraticForm:
    """Σ (xⁱ)² on Pⁿ."""
    return QuadraticForm(linalg.identity(n + 1, field))


def coordinate_simplex(n: int, field: Field) -> PointConfig:
    return PointConfig(tuple(simplex(n, field)))
