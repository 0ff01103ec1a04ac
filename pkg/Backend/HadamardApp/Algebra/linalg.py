"""Dense matrices over a single scalar backend.

Exact matrices keep their entries in a numpy ``object`` array (``Fraction`` or
``GaussianRational``); float matrices are ``complex128`` arrays. Rank on exact
backends is fraction-free elimination (Bareiss) with full pivoting; on the
float backend it counts singular values above ``τ·σ_1``.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .exceptions import AlgebraError, BackendMismatchError, DimensionMismatchError, SingularMatrixError
from .scalars import DEFAULT_TOLERANCE, Field, GaussianRational, Scalar, Tolerance, common_denominator, field_of

logger = logging.getLogger(__name__)


class Matrix:
    """Immutable rows×cols matrix; every entry lives in ``field``."""

    __slots__ = ("data", "field")

    def __init__(self, data: np.ndarray, field: Field):
        if data.ndim != 2:
            raise DimensionMismatchError(f"matrix data must be 2-D, got shape {data.shape}")
        if field.exact:
            data = np.array(data, dtype=object)
        else:
            data = np.array(data, dtype=np.complex128)
        data.flags.writeable = False
        self.data = data
        self.field = field

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Optional[Field] = None, cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        if field is None:
            field = _infer_field(v for r in rows for v in r)
        arr = np.empty((len(rows), ncols), dtype=object if field.exact else np.complex128)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = coerce_entry(v, field)
        return cls(arr, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Optional[Field] = None, rows: Optional[int] = None) -> "Matrix":
        columns = [list(c) for c in columns]
        nrows = rows if rows is not None else (len(columns[0]) if columns else 0)
        return cls.from_rows([[c[i] for c in columns] for i in range(nrows)], field, cols=len(columns))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def entries(self) -> tuple:
        return tuple(self.data.flat)

    def __getitem__(self, key):
        return self.data[key]

    def row(self, i: int) -> tuple:
        return tuple(self.data[i, :])

    def column(self, j: int) -> tuple:
        return tuple(self.data[:, j])

    def columns(self) -> List[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[list]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field is other.field and self.shape == other.shape and bool(np.all(self.data == other.data))

    def __hash__(self):
        return hash((self.field, self.shape, self.entries))

    def __repr__(self):
        return f"Matrix({self.field.value}, {self.to_lists()})"


def _infer_field(values: Iterable) -> Field:
    fields = {field_of(v) for v in values}
    fields.discard(None)
    if not fields:
        return Field.RATIONAL
    if len(fields) > 1:
        a, b = sorted(fields, key=lambda f: f.value)[:2]
        raise BackendMismatchError(a, b)
    return fields.pop()


def coerce_entry(value, field: Field):
    f = field_of(value)
    if f is None:
        return field.coerce(value)
    if f is not field:
        raise BackendMismatchError(f, field)
    return value if field.exact else complex(value)


def identity(n: int, field: Field) -> Matrix:
    one, zero = field.one(), field.zero()
    return Matrix.from_rows([[one if i == j else zero for j in range(n)] for i in range(n)], field, cols=n)


def zeros(rows: int, cols: int, field: Field) -> Matrix:
    zero = field.zero()
    return Matrix.from_rows([[zero] * cols for _ in range(rows)], field, cols=cols)


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.data.T, A.field)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A.field is not B.field:
        raise BackendMismatchError(A.field, B.field)
    if A.cols != B.rows:
        raise DimensionMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    if A.field.exact:
        out = np.empty((A.rows, B.cols), dtype=object)
        zero = A.field.zero()
        for i in range(A.rows):
            for j in range(B.cols):
                acc = zero
                for k in range(A.cols):
                    acc = acc + A.data[i, k] * B.data[k, j]
                out[i, j] = acc
        return Matrix(out, A.field)
    return Matrix(A.data @ B.data, A.field)


def subtract(A: Matrix, B: Matrix) -> Matrix:
    if A.field is not B.field:
        raise BackendMismatchError(A.field, B.field)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"cannot subtract {B.shape} from {A.shape}")
    return Matrix(A.data - B.data, A.field)


def scale(A: Matrix, c: Scalar) -> Matrix:
    return Matrix(A.data * coerce_entry(c, A.field), A.field)


def map_entries(A: Matrix, fn) -> Matrix:
    return Matrix.from_rows([[fn(i, j, A.data[i, j]) for j in range(A.cols)] for i in range(A.rows)], A.field, cols=A.cols)


def max_abs(A: Matrix) -> float:
    if A.data.size == 0:
        return 0.0
    return max(abs(complex(v)) for v in A.data.flat)


def lift_to_float(A: Matrix) -> Matrix:
    arr = np.array([[complex(v) for v in row] for row in A.data], dtype=np.complex128).reshape(A.shape)
    return Matrix(arr, Field.COMPLEX_FLOAT)


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    field = blocks[0].field
    if any(b.field is not field for b in blocks):
        raise BackendMismatchError(field, next(b.field for b in blocks if b.field is not field))
    if len({b.rows for b in blocks}) != 1:
        raise DimensionMismatchError("blocks have different row counts")
    return Matrix(np.hstack([b.data for b in blocks]), field)


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------

def _integral_rows(A: Matrix) -> list:
    """Rows scaled by their common denominators (rank-preserving)."""
    out = []
    for r in A.data:
        d = common_denominator(r)
        if A.field is Field.RATIONAL:
            out.append([int(v * d) for v in r])
        else:
            out.append([v * d for v in r])
    return out


def _norm(v) -> Fraction:
    return v.norm() if isinstance(v, GaussianRational) else abs(v)


def _bareiss_rank(a: list, ncols: int, exact_div) -> int:
    m = len(a)
    prev = 1
    rank = 0
    for k in range(min(m, ncols)):
        pivot = None
        best = None
        for i in range(k, m):
            for j in range(k, ncols):
                v = a[i][j]
                if v:
                    size = _norm(v)
                    if best is None or size < best:
                        pivot, best = (i, j), size
        if pivot is None:
            break
        pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        p = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, ncols):
                a[i][j] = exact_div(p * a[i][j] - aik * a[k][j], prev)
            a[i][k] = 0
        prev = p
        rank += 1
    return rank


def _rref(A: Matrix):
    """Gauss–Jordan over the exact field; returns (rows, pivot_columns)."""
    zero, one = A.field.zero(), A.field.one()
    R = [list(r) for r in A.data]
    m, n = A.rows, A.cols
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if R[i][c]), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        p = R[r][c]
        R[r] = [v / p for v in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        R[r][c] = one
        for i in range(m):
            if i != r:
                R[i][c] = zero
        pivots.append(c)
        r += 1
    return R, pivots


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def singular_values(A: Matrix) -> List[float]:
    if A.field.exact:
        raise AlgebraError("singular values need the float backend; use rank instead")
    if A.data.size == 0:
        return []
    return [float(s) for s in np.linalg.svd(A.data, compute_uv=False)]


def rank(A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    if A.field.exact:
        a = _integral_rows(A)
        exact_div = (lambda x, y: x // y) if A.field is Field.RATIONAL else (lambda x, y: x / y)
        return _bareiss_rank(a, A.cols, exact_div)
    s = singular_values(A)
    if s[0] <= tol.absolute:
        return 0
    return sum(1 for v in s if v > tol.relative * s[0])


def kernel_basis(A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    """Columns spanning the right null space of ``A``."""
    n = A.cols
    if A.field.exact:
        R, pivots = _rref(A)
        free = [c for c in range(n) if c not in pivots]
        zero, one = A.field.zero(), A.field.one()
        vectors = []
        for f in free:
            v = [zero] * n
            v[f] = one
            for row, pc in enumerate(pivots):
                v[pc] = -R[row][f]
            vectors.append(v)
        logger.debug("exact kernel of %s matrix has dimension %d", A.shape, len(vectors))
        return Matrix.from_columns(vectors, A.field, rows=n)
    if A.rows == 0:
        return identity(n, A.field)
    _, s, vh = np.linalg.svd(A.data, full_matrices=True)
    r = rank(A, tol)
    null = vh[r:].conj().T
    return Matrix(null.reshape(n, n - r), A.field)


def solve(A: Matrix, B: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    """X with A·X = B for square nonsingular A."""
    if A.field is not B.field:
        raise BackendMismatchError(A.field, B.field)
    if A.rows != A.cols or A.rows != B.rows:
        raise DimensionMismatchError(f"cannot solve {A.shape} against {B.shape}")
    n = A.rows
    if A.field.exact:
        R, pivots = _rref(hstack([A, B]))
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is not invertible")
        return Matrix.from_rows([row[n:] for row in R], A.field, cols=B.cols)
    if rank(A, tol) < n:
        raise SingularMatrixError("matrix is numerically singular")
    return Matrix(np.linalg.solve(A.data, B.data), A.field)


def inverse(A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    return solve(A, identity(A.rows, A.field), tol)


def determinant(A: Matrix) -> Scalar:
    if A.rows != A.cols:
        raise DimensionMismatchError("determinant of a non-square matrix")
    if not A.field.exact:
        return complex(np.linalg.det(A.data)) if A.rows else 1 + 0j
    a = [list(r) for r in A.data]
    n = A.rows
    det = A.field.one()
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return A.field.zero()
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        p = a[k][k]
        det = det * p
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def nowhere_zero_combination(K: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Optional[tuple]:
    """A vector in the column span of ``K`` with no zero coordinate, or None.

    Tries coefficient vectors (1, x, x², …) for x = 1, 2, …; each coordinate is
    a polynomial of degree < d in x, so rows·(d−1)+1 attempts settle it.
    """
    d = K.cols
    if d == 0:
        return None
    field = K.field
    for i in range(K.rows):
        if all(_negligible(K.data[i, j], K, tol) for j in range(d)):
            return None
    for x in range(1, K.rows * (d - 1) + 2):
        coeffs = Matrix.from_columns([[field.coerce(x ** k) for k in range(d)]], field, rows=d)
        v = (K @ coeffs).column(0)
        if not any(_negligible(c, K, tol, v) for c in v):
            return v
    return None


def _negligible(value, K: Matrix, tol: Tolerance, scale_vector=None) -> bool:
    if K.field.exact:
        return not value
    ref = max((abs(complex(c)) for c in (scale_vector if scale_vector is not None else K.data.flat)), default=0.0)
    return abs(complex(value)) <= max(tol.absolute, tol.relative * ref)
