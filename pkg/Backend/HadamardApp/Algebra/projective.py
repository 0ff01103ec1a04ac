"""Projective points, configurations and the standard Cremona transform.

Points keep the homogeneous vector they were built from; ``normalize`` picks a
representative on demand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

import numpy as np

from . import linalg
from .exceptions import (
    BlownDownHyperplaneError,
    DegenerateConfigurationError,
    DimensionMismatchError,
    SingularMatrixError,
    ZeroEntryError,
    ZeroVectorError,
)
from .linalg import Matrix
from .scalars import DEFAULT_TOLERANCE, Field, Tolerance, common_denominator, field_of, is_zero


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple
    field: Field

    def __post_init__(self):
        if not self.coords:
            raise ZeroVectorError("a projective point needs at least one coordinate")
        if all(c == 0 for c in self.coords):
            raise ZeroVectorError("the zero vector is not a projective point")

    @classmethod
    def of(cls, coords: Iterable, field: Field = None) -> "ProjectivePoint":
        coords = list(coords)
        if field is None:
            fields = {field_of(c) for c in coords} - {None}
            field = fields.pop() if len(fields) == 1 else Field.RATIONAL
        return cls(tuple(linalg.coerce_entry(c, field) for c in coords), field)

    @property
    def dim(self) -> int:
        """Dimension n of the ambient Pⁿ."""
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"[{', '.join(str(c) for c in self.coords)}]"


Points = Union["PointConfig", Sequence[ProjectivePoint]]


@dataclass(frozen=True)
class PointConfig:
    """Ordered points of one ambient Pⁿ, pairwise distinct as projective points."""

    points: tuple
    tol: Tolerance = DEFAULT_TOLERANCE

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            return
        dims = {p.dim for p in pts}
        if len(dims) != 1:
            raise DimensionMismatchError(f"points live in different ambient spaces: {sorted(dims)}")
        fields = {p.field for p in pts}
        if len(fields) != 1:
            raise DimensionMismatchError("points use different scalar backends")
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                if same_point(pts[a], pts[b], self.tol):
                    raise DegenerateConfigurationError(f"points {a} and {b} coincide: {pts[a]}")

    @classmethod
    def of(cls, coordinate_lists: Iterable[Iterable], field: Field = None, tol: Tolerance = DEFAULT_TOLERANCE) -> "PointConfig":
        return cls(tuple(ProjectivePoint.of(c, field) for c in coordinate_lists), tol)

    @classmethod
    def from_matrix_columns(cls, A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> "PointConfig":
        return cls(tuple(ProjectivePoint(A.column(j), A.field) for j in range(A.cols)), tol)

    @property
    def dim(self) -> int:
        return self.points[0].dim if self.points else -1

    @property
    def field(self) -> Field:
        return self.points[0].field

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def matrix(self) -> Matrix:
        return coordinate_matrix(self.points)


def _as_points(cfg: Points) -> List[ProjectivePoint]:
    return list(cfg.points) if isinstance(cfg, PointConfig) else list(cfg)


def coordinate_matrix(points: Points) -> Matrix:
    """Points as the columns of a matrix."""
    pts = _as_points(points)
    if not pts:
        return Matrix.from_rows([], Field.RATIONAL)
    return Matrix.from_columns([p.coords for p in pts], pts[0].field)


def normalize(p: ProjectivePoint) -> ProjectivePoint:
    if p.field.exact:
        lead = next((c for c in p.coords if c), None)
    else:
        mags = np.abs(np.array(p.coords, dtype=np.complex128))
        lead = p.coords[int(np.argmax(mags))] if mags.max() > 0 else None
    if lead is None:
        raise ZeroVectorError("cannot normalize the zero vector")
    return ProjectivePoint(tuple(c / lead for c in p.coords), p.field)


def primitive(p: ProjectivePoint) -> ProjectivePoint:
    """Coprime integer representative of a rational point, first nonzero coordinate positive."""
    if p.field is not Field.RATIONAL:
        return normalize(p)
    d = common_denominator(p.coords)
    ints = [int(c * d) for c in p.coords]
    g = math.gcd(*ints)
    lead = next(v for v in ints if v)
    sign = 1 if lead > 0 else -1
    return ProjectivePoint(tuple(Fraction(sign * v, g) for v in ints), p.field)


def same_point(p: ProjectivePoint, q: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Proportionality through the 2×2 minors p_i q_j − p_j q_i."""
    if len(p) != len(q):
        return False
    n = len(p)
    if p.field.exact:
        return all(p[i] * q[j] - p[j] * q[i] == 0 for i in range(n) for j in range(i + 1, n))
    u = np.array(p.coords, dtype=np.complex128)
    v = np.array(q.coords, dtype=np.complex128)
    bound = tol.relative * np.linalg.norm(u) * np.linalg.norm(v)
    minors = np.outer(u, v) - np.outer(v, u)
    return bool(np.all(np.abs(minors) <= max(bound, tol.absolute)))


def span_dim(cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    pts = _as_points(cfg)
    if not pts:
        return -1
    return linalg.rank(coordinate_matrix(pts), tol) - 1


def cremona(p: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectivePoint:
    """[x⁰ : … : xⁿ] ↦ [1/x⁰ : … : 1/xⁿ], normalized."""
    for i, c in enumerate(p.coords):
        if is_zero(c, tol):
            raise BlownDownHyperplaneError(i, p)
    one = p.field.one()
    return normalize(ProjectivePoint(tuple(one / c for c in p.coords), p.field))


def cremona_product_form(p: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectivePoint:
    """Division-free representative of cremona(p): the l-th coordinate is the product of the others."""
    for i, c in enumerate(p.coords):
        if is_zero(c, tol):
            raise BlownDownHyperplaneError(i, p)
    one = p.field.one()
    coords = []
    for l in range(len(p)):
        acc = one
        for m, c in enumerate(p.coords):
            if m != l:
                acc = acc * c
        coords.append(acc)
    return ProjectivePoint(tuple(coords), p.field)


def coordinates_in_basis(basis: Points, p: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectivePoint:
    """Coordinates of ``p`` with respect to the vectors of ``basis`` (n+1 independent points)."""
    M = coordinate_matrix(basis)
    if M.rows != M.cols:
        raise DimensionMismatchError(f"a basis of P^{M.rows - 1} needs {M.rows} points, got {M.cols}")
    rhs = Matrix.from_columns([p.coords], p.field)
    try:
        c = linalg.solve(M, rhs, tol)
    except SingularMatrixError as exc:
        raise DegenerateConfigurationError("basis points are linearly dependent") from exc
    return ProjectivePoint(c.column(0), p.field)


def cremona_relative(basis: Points, p: ProjectivePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectivePoint:
    """Cremona transform defined by an arbitrary simplex ``basis``."""
    return cremona(coordinates_in_basis(basis, p, tol), tol)


def hadamard_inverse(A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    one = A.field.one()

    def reciprocal(i, j, v):
        if is_zero(v, tol):
            raise ZeroEntryError(i, j)
        return one / v

    return linalg.map_entries(A, reciprocal)


def collinear_with_line_fit(cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    pts = _as_points(cfg)
    if len(pts) < 2:
        raise DegenerateConfigurationError("a line needs at least two points")
    return span_dim(pts, tol) == 1


def simplex(n: int, field: Field) -> List[ProjectivePoint]:
    """Coordinate points z_i of Pⁿ."""
    one, zero = field.one(), field.zero()
    return [ProjectivePoint(tuple(one if j == i else zero for j in range(n + 1)), field) for i in range(n + 1)]
