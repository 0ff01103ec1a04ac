"""JSON encoding for scalars, matrices and configurations.

* rational:          "num/den"
* Gaussian rational: "num/den+num/den i"
* complex float:     [re, im]
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional

from .apolarity import QuadraticForm
from .exceptions import AlgebraError, EncodingError
from .gale import SplitConfig
from .linalg import Matrix
from .projective import PointConfig, ProjectivePoint
from .scalars import Field, GaussianRational, Scalar, field_of

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_GAUSSIAN = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\s*i\s*$")


def _fraction_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _float17(x: float) -> float:
    """``x`` rounded to 17 significant digits (lossless for IEEE doubles)."""
    return float(f"{x:.17g}")


def encode_scalar(value: Scalar) -> Any:
    field = field_of(value)
    if field is Field.RATIONAL:
        return _fraction_text(value)
    if field is Field.GAUSSIAN_RATIONAL:
        return f"{_fraction_text(value.re)}+{_fraction_text(value.im)} i"
    if field is Field.COMPLEX_FLOAT:
        z = complex(value)
        return [_float17(z.real), _float17(z.imag)]
    raise EncodingError(f"cannot encode {value!r}")


def _parse_fraction(text: str) -> Fraction:
    match = _RATIONAL.match(text)
    if not match:
        raise EncodingError(f"malformed rational {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise EncodingError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def decode_scalar(obj: Any, field: Optional[Field] = None) -> Scalar:
    """Inverse of ``encode_scalar``; plain JSON integers are read as rationals unless ``field`` says otherwise."""
    if isinstance(obj, bool):
        raise EncodingError("booleans are not scalars")
    if isinstance(obj, str):
        match = _GAUSSIAN.match(obj)
        value = GaussianRational(_parse_fraction(match.group(1)), _parse_fraction(match.group(2))) if match \
            else _parse_fraction(obj)
    elif isinstance(obj, list):
        if len(obj) != 2 or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            raise EncodingError(f"a complex float is [re, im], got {obj!r}")
        value = complex(obj[0], obj[1])
    elif isinstance(obj, int):
        value = Fraction(obj)
    elif isinstance(obj, float):
        value = complex(obj)
    else:
        raise EncodingError(f"cannot decode scalar from {obj!r}")
    if field is None:
        return value
    try:
        return field.coerce(value)
    except AlgebraError as exc:
        raise EncodingError(str(exc)) from exc


def encode_matrix(A: Matrix) -> list:
    return [[encode_scalar(v) for v in A.row(i)] for i in range(A.rows)]


def decode_matrix(obj: Any, field: Optional[Field] = None) -> Matrix:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise EncodingError("a matrix is a non-empty list of rows")
    rows = [[decode_scalar(v, field) for v in r] for r in obj]
    try:
        return Matrix.from_rows(rows, field)
    except AlgebraError as exc:
        raise EncodingError(str(exc)) from exc


def encode_point(p: ProjectivePoint) -> list:
    return [encode_scalar(c) for c in p.coords]


def decode_point(obj: Any, field: Optional[Field] = None) -> ProjectivePoint:
    if not isinstance(obj, list):
        raise EncodingError("a point is a list of coordinates")
    return ProjectivePoint.of([decode_scalar(v, field) for v in obj], field)


def encode_config(cfg) -> list:
    return [encode_point(p) for p in cfg]


def decode_config(obj: Any, field: Optional[Field] = None) -> PointConfig:
    if not isinstance(obj, list) or not obj:
        raise EncodingError("a configuration is a non-empty list of points")
    points = [decode_point(p, field) for p in obj]
    if field is None:
        fields = {p.field for p in points}
        if len(fields) > 1:
            # bare integers decode as rationals; lift them to the richest backend present
            target = Field.COMPLEX_FLOAT if Field.COMPLEX_FLOAT in fields else Field.GAUSSIAN_RATIONAL
            points = [decode_point(p, target) for p in obj]
    return PointConfig(tuple(points))


def encode_split_config(cfg: SplitConfig) -> dict:
    return {"r": cfg.r, "s": cfg.s, "points": encode_config(cfg.points), "split_index": cfg.split_index}


def decode_split_config(obj: Any, field: Optional[Field] = None) -> SplitConfig:
    if not isinstance(obj, dict) or "points" not in obj:
        raise EncodingError('a split configuration is {"r", "s", "points", "split_index"}')
    points = decode_config(obj["points"], field)
    split_index = obj.get("split_index", points.dim + 1)
    cfg = SplitConfig(points, split_index)
    for key, actual in (("r", cfg.r), ("s", cfg.s)):
        if key in obj and obj[key] != actual:
            raise EncodingError(f"declared {key} = {obj[key]} does not match the points ({actual})")
    return cfg


def encode_quadratic_form(Q: QuadraticForm) -> list:
    return encode_matrix(Q.matrix)


def encode_certificate(cert) -> dict:
    """Rank-2 certificate → JSON (complex entries as [re, im])."""
    return {
        "n": cert.param.n,
        "matrix": encode_matrix(cert.matrix),
        "orthogonality_residual": cert.orthogonality_residual,
        "sigma3_over_sigma1": cert.sigma_ratio,
        "valid": cert.is_valid(),
        "p0": [encode_scalar(c) for c in cert.param.p0],
        "nodes": [encode_scalar(c) for c in cert.param.nodes],
        "roots": [encode_scalar(c) for c in cert.param.roots],
        "branches": [encode_scalar(c) for c in cert.branches],
        "slice": "real" if cert.param.real else "complex",
    }
