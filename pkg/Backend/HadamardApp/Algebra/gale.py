"""Split configurations, the Gale (association) transform and its relation to Cremona.

A split configuration Γ ⊂ Pʳ is r+s+2 points whose first r+1 points form a
simplex. In the coordinates of that simplex the remaining s+1 points are the
columns of an (r+1)×(s+1) matrix P; the Gale transform is the configuration of
Pˢ made of the coordinate simplex followed by the rows of P.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Optional, Tuple

from . import linalg
from .apolarity import QuadraticForm, is_apolar_set
from .exceptions import BlownDownHyperplaneError, DegenerateConfigurationError, DimensionMismatchError, SingularMatrixError
from .linalg import Matrix
from .projective import (
    PointConfig,
    ProjectivePoint,
    coordinate_matrix,
    cremona_relative,
    same_point,
    simplex,
    span_dim,
)
from .scalars import DEFAULT_TOLERANCE, Tolerance, is_zero

logger = logging.getLogger(__name__)

Pairing = Literal["gale", "identity"]


@dataclass(frozen=True)
class SplitConfig:
    points: PointConfig
    split_index: int

    def __post_init__(self):
        if not isinstance(self.points, PointConfig):
            object.__setattr__(self, "points", PointConfig(tuple(self.points)))
        r = self.points.dim
        if self.split_index != r + 1:
            raise DimensionMismatchError(f"split index of a configuration in P^{r} must be {r + 1}, got {self.split_index}")
        if len(self.points) < r + 2:
            raise DimensionMismatchError(f"a split configuration in P^{r} needs at least {r + 2} points")
        if linalg.rank(coordinate_matrix(self.head), self.points.tol) != r + 1:
            raise DegenerateConfigurationError("the first r+1 points are linearly dependent")

    @classmethod
    def from_blocks(cls, head, tail, tol: Tolerance = DEFAULT_TOLERANCE) -> "SplitConfig":
        head, tail = tuple(head), tuple(tail)
        return cls(PointConfig(head + tail, tol), len(head))

    @property
    def r(self) -> int:
        return self.points.dim

    @property
    def s(self) -> int:
        return len(self.points) - self.r - 2

    @property
    def field(self):
        return self.points.field

    @property
    def head(self) -> Tuple[ProjectivePoint, ...]:
        return self.points.points[: self.split_index]

    @property
    def tail(self) -> Tuple[ProjectivePoint, ...]:
        return self.points.points[self.split_index:]


def normalized_block(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    """P = Z⁻¹·[p_0 … p_s]: the tail in the coordinates of the head simplex."""
    Z = coordinate_matrix(cfg.head)
    try:
        return linalg.solve(Z, coordinate_matrix(cfg.tail), tol)
    except SingularMatrixError as exc:
        raise DegenerateConfigurationError("head of the split configuration is not a simplex") from exc


def gale_transform(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> SplitConfig:
    """Γ ⊂ Pʳ ↦ Γ' ⊂ Pˢ: coordinate simplex w_0..w_s followed by q_i = rows of P."""
    P = normalized_block(cfg, tol)
    head = simplex(cfg.s, cfg.field)
    tail = [ProjectivePoint(P.row(i), cfg.field) for i in range(P.rows)]
    logger.debug("gale transform P^%d -> P^%d", cfg.r, cfg.s)
    return SplitConfig.from_blocks(head, tail, tol)


def _aligned(B: SplitConfig, pairing: Pairing) -> Matrix:
    pts = B.points.points
    if pairing == "gale":
        # head of one side is paired with the tail of the other
        pts = pts[B.split_index:] + pts[: B.split_index]
    return coordinate_matrix(pts)


def association_multipliers(A_cfg: SplitConfig, B_cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE,
                            pairing: Pairing = "gale") -> Optional[tuple]:
    """Diagonal Λ, all entries nonzero, with A·Λ·Bᵀ = 0, or None when no such Λ exists.

    With ``pairing="gale"`` the i-th head point of A is matched with the i-th
    tail point of B and vice versa; ``"identity"`` matches points by position.
    """
    N = len(A_cfg.points)
    if len(B_cfg.points) != N or A_cfg.r + B_cfg.r + 2 != N:
        raise DimensionMismatchError(
            f"associated sets in P^{A_cfg.r} and P^{B_cfg.r} need {A_cfg.r + B_cfg.r + 2} points each")
    if A_cfg.field is not B_cfg.field:
        raise DimensionMismatchError("configurations use different scalar backends")
    A = coordinate_matrix(A_cfg.points)
    B = _aligned(B_cfg, pairing)
    rows = [[A.data[a, k] * B.data[b, k] for k in range(N)] for a in range(A.rows) for b in range(B.rows)]
    system = Matrix.from_rows(rows, A_cfg.field, cols=N)
    K = linalg.kernel_basis(system, tol)
    logger.debug("association system has a %d-dimensional solution space", K.cols)
    return linalg.nowhere_zero_combination(K, tol)


def is_associated(A_cfg: SplitConfig, B_cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE,
                  pairing: Pairing = "gale") -> bool:
    return association_multipliers(A_cfg, B_cfg, tol, pairing) is not None


def self_association_quadric(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Optional[QuadraticForm]:
    """A nondegenerate diagonal-in-the-head quadric making the head apolar and the tail orthogonal.

    In head coordinates Q = Σ λ_i (yⁱ)² and the conditions on the tail are
    Σ_i λ_i P_ij P_ik = 0 for j < k; a solution with every λ_i nonzero is pulled
    back to the original coordinates and scaled so that λ_0 = 1.
    """
    if cfg.r != cfg.s:
        raise DimensionMismatchError(f"self-association needs 2n+2 points in P^n, got {len(cfg.points)} in P^{cfg.r}")
    n = cfg.r
    P = normalized_block(cfg, tol)
    rows = [[P.data[i, j] * P.data[i, k] for i in range(n + 1)] for j in range(n + 1) for k in range(j + 1, n + 1)]
    system = Matrix.from_rows(rows, cfg.field, cols=n + 1)
    lam = linalg.nowhere_zero_combination(linalg.kernel_basis(system, tol), tol)
    if lam is None:
        return None
    lam = [v / lam[0] for v in lam]
    Z_inv = linalg.inverse(coordinate_matrix(cfg.head), tol)
    G = Z_inv.T @ QuadraticForm.diagonal(lam, cfg.field).matrix @ Z_inv
    if not cfg.field.exact:
        G = Matrix((G.data + G.data.T) / 2, cfg.field)
    return QuadraticForm(G)


def is_self_associated(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[bool, Optional[QuadraticForm]]:
    """(both blocks apolar to one quadric, that quadric or None)."""
    Q = self_association_quadric(cfg, tol)
    if Q is None:
        return False, None
    ok = is_apolar_set(Q, cfg.head, tol) and is_apolar_set(Q, cfg.tail, tol)
    return ok, Q


def cremona_config(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> SplitConfig:
    """Γ* = {z*_i, φ_z(p_α)} written in head coordinates.

    Tail representatives are the entrywise reciprocals of the columns of P, so
    that the Gale transform of the result is defined without rescaling.
    """
    P = normalized_block(cfg, tol)
    one = cfg.field.one()
    tail = []
    for j in range(P.cols):
        column = P.column(j)
        for i, c in enumerate(column):
            if is_zero(c, tol):
                raise BlownDownHyperplaneError(i, ProjectivePoint(column, cfg.field))
        tail.append(ProjectivePoint(tuple(one / c for c in column), cfg.field))
    return SplitConfig.from_blocks(simplex(cfg.r, cfg.field), tail, tol)


def cremona_association_commutes(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether gale(Γ*) and (gale Γ)* agree point by point."""
    left = gale_transform(cremona_config(cfg, tol), tol)
    right = cremona_config(gale_transform(cfg, tol), tol)
    return all(same_point(a, b, tol) for a, b in zip(left.points, right.points))


def double_apolar_pair(A_z: Matrix, A_p: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> SplitConfig:
    """Columns of two Q-orthogonal matrices as one split configuration in Pⁿ."""
    if A_z.shape != A_p.shape or A_z.rows != A_z.cols:
        raise DimensionMismatchError("double apolar pair needs two square matrices of one size")
    return SplitConfig.from_blocks(
        [ProjectivePoint(c, A_z.field) for c in A_z.columns()],
        [ProjectivePoint(c, A_p.field) for c in A_p.columns()],
        tol,
    )


def duality_dims(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[int, int]:
    """(dim span φ_z(p_i), dim span φ_p(z_i)) for a split configuration of 2n+2 points."""
    if cfg.r != cfg.s:
        raise DimensionMismatchError("duality compares two simplices of one Pⁿ")
    forward = [cremona_relative(cfg.head, p, tol) for p in cfg.tail]
    backward = [cremona_relative(cfg.tail, z, tol) for z in cfg.head]
    return span_dim(forward, tol), span_dim(backward, tol)


def duality_holds(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    left, right = duality_dims(cfg, tol)
    return left == right

