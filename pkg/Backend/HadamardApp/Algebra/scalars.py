"""Scalars over three backends with one arithmetic contract.

* ``Field.RATIONAL`` values are ``fractions.Fraction``.
* ``Field.GAUSSIAN_RATIONAL`` values are ``GaussianRational`` (a + b·i, a, b rational).
* ``Field.COMPLEX_FLOAT`` values are Python ``complex`` (numpy complex scalars are accepted).

Exact values compare to exact zero; float values go through ``Tolerance``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np

from .exceptions import BackendMismatchError, DivisionByZeroError, NotASquareError


@dataclass(frozen=True)
class Tolerance:
    relative: float = 1e-8
    absolute: float = 1e-10

    def __post_init__(self):
        if not 0.0 < self.relative < 1.0:
            raise ValueError(f"relative tolerance must lie in (0, 1), got {self.relative}")
        if self.absolute <= 0.0:
            raise ValueError(f"absolute tolerance must be positive, got {self.absolute}")

    def with_relative(self, relative: Optional[float]) -> "Tolerance":
        if relative is None:
            return self
        return Tolerance(relative=relative, absolute=self.absolute)


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """re + im·i with rational parts.

    Arithmetic accepts other GaussianRationals and plain ints. A ``Fraction``
    operand is a different backend and raises ``BackendMismatchError``.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("re", "im"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise TypeError(f"GaussianRational.{name} must be int or Fraction, got {type(value).__name__}")
            object.__setattr__(self, name, Fraction(value))

    @staticmethod
    def _wrap(other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return GaussianRational(Fraction(other))
        raise BackendMismatchError(Field.GAUSSIAN_RATIONAL, field_of(other))

    def __add__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise DivisionByZeroError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return f"{self.re}+{self.im}i"


I = GaussianRational(0, 1)

Scalar = Union[Fraction, GaussianRational, complex]


class Field(str, Enum):
    RATIONAL = "rational"
    GAUSSIAN_RATIONAL = "gaussian-rational"
    COMPLEX_FLOAT = "complex"

    @property
    def exact(self) -> bool:
        return self is not Field.COMPLEX_FLOAT

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Explicitly convert ``value`` into this field (the only sanctioned cross-backend path)."""
        if self is Field.RATIONAL:
            if isinstance(value, GaussianRational):
                if value.im:
                    raise BackendMismatchError(Field.GAUSSIAN_RATIONAL, self)
                return value.re
            if isinstance(value, (complex, float, np.inexact)):
                raise BackendMismatchError(Field.COMPLEX_FLOAT, self)
            return Fraction(value)
        if self is Field.GAUSSIAN_RATIONAL:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (complex, float, np.inexact)):
                raise BackendMismatchError(Field.COMPLEX_FLOAT, self)
            return GaussianRational(Fraction(value))
        return complex(value)


def field_of(value) -> Optional[Field]:
    if isinstance(value, Fraction):
        return Field.RATIONAL
    if isinstance(value, GaussianRational):
        return Field.GAUSSIAN_RATIONAL
    if isinstance(value, (complex, float, np.inexact)):
        return Field.COMPLEX_FLOAT
    return None


def _same_field(a, b) -> Field:
    fa, fb = field_of(a), field_of(b)
    if fa is None or fa is not fb:
        raise BackendMismatchError(fa, fb)
    return fa


def add(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    field = _same_field(a, b)
    if field.exact and not b:
        raise DivisionByZeroError(f"division of {a} by exact zero")
    if not field.exact and b == 0:
        raise DivisionByZeroError(f"division of {a} by zero")
    return a / b


def neg(a: Scalar) -> Scalar:
    if field_of(a) is None:
        raise BackendMismatchError(None, None)
    return -a


def conj(a: Scalar) -> Scalar:
    field = field_of(a)
    if field is Field.RATIONAL:
        return a
    if field is None:
        raise BackendMismatchError(None, None)
    return a.conjugate()


def is_zero(a: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if field_of(a) is Field.COMPLEX_FLOAT:
        return abs(a) <= tol.absolute
    return not a


def is_real(a: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if isinstance(a, Fraction):
        return True
    if isinstance(a, GaussianRational):
        return a.im == 0
    return abs(complex(a).imag) <= tol.absolute * max(1.0, abs(a))


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt(a: Scalar) -> Scalar:
    """Principal square root: nonnegative real part, and nonnegative imaginary part when that is zero."""
    field = field_of(a)
    if field is Field.COMPLEX_FLOAT:
        z = complex(a)
        # -0.0 imaginary parts would select the lower branch of cmath.sqrt
        root = cmath.sqrt(complex(z.real, z.imag + 0.0))
        if root.real == 0.0 and root.imag < 0.0:
            root = -root
        return complex(root.real + 0.0, root.imag + 0.0)
    if field is Field.RATIONAL:
        root = _rational_sqrt(a)
        if root is None:
            raise NotASquareError(a)
        return root
    if field is Field.GAUSSIAN_RATIONAL:
        modulus = _rational_sqrt(a.norm())
        if modulus is None:
            raise NotASquareError(a)
        c = _rational_sqrt((a.re + modulus) / 2)
        d = _rational_sqrt((modulus - a.re) / 2)
        if c is None or d is None:
            raise NotASquareError(a)
        if c != 0:
            d = a.im / (2 * c)
        return GaussianRational(c, d)
    raise BackendMismatchError(field, None)


def common_denominator(values: Iterable[Scalar]) -> int:
    """LCM of all denominators (both parts for Gaussian rationals)."""
    lcm = 1
    for v in values:
        if isinstance(v, Fraction):
            lcm = math.lcm(lcm, v.denominator)
        elif isinstance(v, GaussianRational):
            lcm = math.lcm(lcm, v.re.denominator, v.im.denominator)
    return lcm


def random_rational(rng: np.random.Generator, numerator_bound: int = 20, denominator_bound: int = 20) -> Fraction:
    num = int(rng.integers(-numerator_bound, numerator_bound + 1))
    den = int(rng.integers(1, denominator_bound + 1))
    return Fraction(num, den)


def random_scalar(field: Field, rng: np.random.Generator, numerator_bound: int = 20,
                  denominator_bound: int = 20, real: bool = False) -> Scalar:
    if field is Field.RATIONAL:
        return random_rational(rng, numerator_bound, denominator_bound)
    if field is Field.GAUSSIAN_RATIONAL:
        return GaussianRational(random_rational(rng, numerator_bound, denominator_bound),
                                random_rational(rng, numerator_bound, denominator_bound))
    if real:
        return complex(rng.standard_normal(), 0.0)
    return complex(rng.standard_normal(), rng.standard_normal())
