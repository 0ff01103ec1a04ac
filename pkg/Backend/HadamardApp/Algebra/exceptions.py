"""Errors raised by the algebra package.

Everything derives from ``AlgebraError`` (a ``ValueError``) so the CLI and the
HTTP views can map the whole family to "bad input" in one place.
"""
from __future__ import annotations

from typing import Optional


class AlgebraError(ValueError):
    """Base class for every error the algebra package raises on purpose."""


class BackendMismatchError(AlgebraError, TypeError):
    def __init__(self, left, right):
        super().__init__(f"cannot mix scalar backends {left} and {right}")
        self.left = left
        self.right = right


class DivisionByZeroError(AlgebraError, ZeroDivisionError):
    pass


class NotASquareError(AlgebraError):
    def __init__(self, value):
        super().__init__(f"{value} is not a square in its field; normalization requires float backend")
        self.value = value


class DimensionMismatchError(AlgebraError):
    pass


class SingularMatrixError(AlgebraError):
    pass


class DegenerateFormError(AlgebraError):
    pass


class DegenerateConfigurationError(AlgebraError):
    pass


class ZeroVectorError(AlgebraError):
    pass


class BlownDownHyperplaneError(AlgebraError):
    """A point with a zero coordinate: it lies on a hyperplane the Cremona map blows down."""

    def __init__(self, index: int, point=None):
        where = f" of point {point}" if point is not None else ""
        super().__init__(f"coordinate {index}{where} is zero: point on a blown-down hyperplane")
        self.index = index
        self.point = point


class ZeroEntryError(AlgebraError):
    def __init__(self, row: int, col: int):
        super().__init__(f"entry ({row}, {col}) is zero; the Hadamard inverse is undefined")
        self.row = row
        self.col = col


class RootFindingError(AlgebraError):
    pass


class ConstructionRejected(AlgebraError):
    """The rank-2 constructor refused a parameter choice it cannot turn into a rank-2 certificate."""

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class GenerationError(AlgebraError):
    def __init__(self, message: str, trial: Optional[int] = None):
        prefix = f"trial {trial}: " if trial is not None else ""
        super().__init__(prefix + message)
        self.trial = trial


class EncodingError(AlgebraError):
    pass
