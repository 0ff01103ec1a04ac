"""Small exact configurations shared by the test modules."""
from fractions import Fraction

from HadamardApp.Algebra.linalg import Matrix
from HadamardApp.Algebra.projective import PointConfig, ProjectivePoint, simplex
from HadamardApp.Algebra.scalars import Field

F = Fraction

# Cayley transform of the skew matrix with entries (1, 2, 3), times 15
CAYLEY_123 = [[5, -14, 2], [-10, -5, -10], [10, 2, -11]]


def rational(rows):
    return Matrix.from_rows([[F(v) for v in r] for r in rows], Field.RATIONAL)


def cayley_123() -> Matrix:
    return rational([[F(v, 15) for v in r] for r in CAYLEY_123])


def columns(rows) -> list:
    """Columns of an integer matrix as rational projective points."""
    return [ProjectivePoint(tuple(F(r[j]) for r in rows), Field.RATIONAL) for j in range(len(rows[0]))]


def simplex_plus(rows) -> PointConfig:
    n = len(rows) - 1
    return PointConfig(tuple(simplex(n, Field.RATIONAL)) + tuple(columns(rows)))
