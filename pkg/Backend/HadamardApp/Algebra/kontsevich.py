"""Random orthogonal matrices and the Hadamard-rank verifier.

The claim under test: the Hadamard inverse of an m×m orthogonal matrix with no
zero entries never has rank 3 (for m ≥ 3) and never rank 1 (for m ≥ 2).
"""
from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from enum import Enum
from itertools import combinations
from math import comb, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import linalg
from .exceptions import AlgebraError, BlownDownHyperplaneError, DimensionMismatchError, GenerationError, SingularMatrixError
from .linalg import Matrix
from .projective import Points, ProjectivePoint, _as_points, cremona_product_form, hadamard_inverse
from .rnc import assemble, perturb_in_family, random_param
from .scalars import DEFAULT_TOLERANCE, Field, Tolerance, is_zero, random_scalar, sqrt

logger = logging.getLogger(__name__)

FIELD_LABELS = ("rational", "gaussian-rational", "real", "complex")


def parse_field(label: str) -> Tuple[Field, bool]:
    """CLI/API field label → (backend, real slice)."""
    mapping = {
        "rational": (Field.RATIONAL, True),
        "gaussian-rational": (Field.GAUSSIAN_RATIONAL, False),
        "real": (Field.COMPLEX_FLOAT, True),
        "complex": (Field.COMPLEX_FLOAT, False),
    }
    try:
        return mapping[label]
    except KeyError:
        raise DimensionMismatchError(f"unknown field {label!r}; expected one of {', '.join(FIELD_LABELS)}") from None


class Method(str, Enum):
    CAYLEY_EXACT = "cayley"
    GRAM_SCHMIDT_FLOAT = "gram-schmidt"
    RNC_FAMILY = "rnc-family"


@dataclass(frozen=True)
class SamplerBounds:
    numerator_bound: int = 20
    denominator_bound: int = 20
    max_rejections: int = 1000
    rnc_scale: float = 0.05


@dataclass(frozen=True)
class OrthoSample:
    matrix: Matrix
    method: Method
    seed: int
    rejections: int


def cayley_transform(S: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    """(I − S)(I + S)⁻¹ for skew-symmetric S; SingularMatrixError when I + S is singular."""
    I = linalg.identity(S.rows, S.field)
    plus = linalg.map_entries(I, lambda i, j, v: v + S.data[i, j])
    return linalg.subtract(I, S) @ linalg.inverse(plus, tol)


def _random_skew(m: int, field_: Field, rng: np.random.Generator, bounds: SamplerBounds) -> Matrix:
    rows = [[field_.zero()] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = random_scalar(field_, rng, bounds.numerator_bound, bounds.denominator_bound)
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix.from_rows(rows, field_, cols=m)


def _has_zero_entry(A: Matrix, tol: Tolerance, floor: float = 0.0) -> bool:
    if A.field.exact:
        return any(not v for v in A.data.flat)
    return bool(np.any(np.abs(A.data) <= max(floor, tol.absolute)))


def _gram_schmidt(m: int, rng: np.random.Generator, real: bool) -> Optional[np.ndarray]:
    """Bilinear Gram–Schmidt (two passes) on a Gaussian matrix; None on an isotropic breakdown."""
    X = rng.standard_normal((m, m))
    if not real:
        X = X + 1j * rng.standard_normal((m, m))
    Q = np.zeros((m, m), dtype=np.complex128)
    for j in range(m):
        v = X[:, j].astype(np.complex128)
        for _ in range(2):
            for k in range(j):
                v = v - (Q[:, k] @ v) * Q[:, k]
        nn = complex(v @ v)
        if abs(nn) < 1e-12:
            return None
        Q[:, j] = v / sqrt(nn)
    return Q


def random_orthogonal(m: int, field_: Field, seed: int, *, real: bool = True, method: Optional[Method] = None,
                      bounds: SamplerBounds = SamplerBounds(), tol: Tolerance = DEFAULT_TOLERANCE) -> OrthoSample:
    """An m×m orthogonal matrix (AᵀA = I) with no zero entry, reproducible from ``seed``."""
    if m < 2:
        raise DimensionMismatchError("orthogonal samples need m ≥ 2")
    method = method or (Method.CAYLEY_EXACT if field_.exact else Method.GRAM_SCHMIDT_FLOAT)
    if method is Method.CAYLEY_EXACT and not field_.exact:
        raise DimensionMismatchError("the Cayley sampler runs on exact backends")
    if method is not Method.CAYLEY_EXACT and field_.exact:
        raise DimensionMismatchError(f"the {method.value} sampler runs on the float backend")
    rng = np.random.default_rng(seed)
    rejections = 0
    base = random_param(m - 1, np.random.default_rng(seed), real) if method is Method.RNC_FAMILY else None
    while rejections <= bounds.max_rejections:
        try:
            if method is Method.CAYLEY_EXACT:
                A = cayley_transform(_random_skew(m, field_, rng, bounds), tol)
            elif method is Method.GRAM_SCHMIDT_FLOAT:
                data = _gram_schmidt(m, rng, real)
                if data is None:
                    raise SingularMatrixError("isotropic vector during Gram–Schmidt")
                A = Matrix(data.real.astype(np.complex128) if real else data, Field.COMPLEX_FLOAT)
            else:
                A = assemble(perturb_in_family(base, bounds.rnc_scale, rng), tol).matrix
        except AlgebraError as exc:
            logger.debug("seed %d: rejected sample (%s)", seed, exc)
            rejections += 1
            continue
        if _has_zero_entry(A, tol, floor=0.0 if field_.exact else 1e-6):
            rejections += 1
            continue
        if not field_.exact:
            residual = float(np.max(np.abs(A.data.T @ A.data - np.eye(m))))
            if residual > 1e-12 and method is Method.GRAM_SCHMIDT_FLOAT:
                rejections += 1
                continue
        return OrthoSample(A, method, seed, rejections)
    raise GenerationError(f"{rejections} consecutive rejections for m = {m} on {field_.value}", trial=None)


def hadamard_rank(A: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    return linalg.rank(hadamard_inverse(A, tol), tol)


@dataclass
class VerifierReport:
    size: int
    trials: int
    field: str
    method: str
    seed: int
    tolerance: float
    histogram: Dict[int, int]
    rank3_count: int
    rank1_count: int
    rejections: int
    violations: List[dict] = dc_field(default_factory=list)
    suspicious: List[dict] = dc_field(default_factory=list)

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def body(self) -> dict:
        data = asdict(self)
        data["histogram"] = {str(k): v for k, v in sorted(self.histogram.items())}
        data["violation_count"] = self.violation_count
        return data

    @property
    def digest(self) -> str:
        canonical = json.dumps(self.body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_dict(self) -> dict:
        data = self.body()
        data["digest"] = self.digest
        return data


def _trial(m: int, field_: Field, real: bool, method: Method, seed: int, index: int,
           bounds: SamplerBounds, tol: Tolerance) -> dict:
    trial_seed = seed + index
    try:
        sample = random_orthogonal(m, field_, trial_seed, real=real, method=method, bounds=bounds, tol=tol)
    except GenerationError as exc:
        raise GenerationError(str(exc), trial=index) from exc
    B = hadamard_inverse(sample.matrix, tol)
    record = {"trial": index, "seed": trial_seed, "rejections": sample.rejections, "matrix": sample.matrix}
    if field_.exact:
        record["rank"] = linalg.rank(B, tol)
        record["sigma3"] = record["sigma4"] = None
    else:
        s = np.array(linalg.singular_values(B))
        ratios = s / s[0]
        record["rank"] = int(np.sum(ratios > tol.relative))
        record["sigma3"] = float(ratios[2]) if m >= 3 else None
        record["sigma4"] = float(ratios[3]) if m >= 4 else None
    return record


def verify_conjecture(m: int, trials: int, field_label: str, seed: int, tol: Tolerance = DEFAULT_TOLERANCE, *,
                      method: Optional[Method] = None, bounds: SamplerBounds = SamplerBounds(),
                      workers: int = 1) -> VerifierReport:
    """Sample ``trials`` orthogonal matrices and tabulate the ranks of their Hadamard inverses.

    Exact backends count rank 3 and rank 1 as violations. The float backend
    lists them, and the near-rank-3 singular value pattern at m ≥ 4, under
    ``suspicious`` for an exact re-check instead.
    """
    from .codec import encode_matrix

    if m < 2:
        raise DimensionMismatchError("verification needs m ≥ 2")
    if trials < 1:
        raise DimensionMismatchError("verification needs at least one trial")
    field_, real = parse_field(field_label)
    method = method or (Method.CAYLEY_EXACT if field_.exact else Method.GRAM_SCHMIDT_FLOAT)
    logger.info("verifying m=%d over %s: %d trials, seed %d, sampler %s", m, field_label, trials, seed, method.value)

    def run(index: int) -> dict:
        return _trial(m, field_, real, method, seed, index, bounds, tol)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        records = list(pool.map(run, range(trials)))

    frame = pd.DataFrame.from_records(
        [{k: r[k] for k in ("trial", "seed", "rank", "rejections", "sigma3", "sigma4")} for r in records]
    ).sort_values("trial")
    histogram = {int(k): int(v) for k, v in frame["rank"].value_counts().sort_index().items()}

    violations, suspicious = [], []
    for r in records:
        flagged = r["rank"] in (1, 3) if m >= 3 else r["rank"] == 1
        entry = {"trial": r["trial"], "seed": r["seed"], "rank": r["rank"], "matrix": encode_matrix(r["matrix"])}
        if field_.exact:
            if flagged:
                violations.append(entry)
        else:
            near_three = m >= 4 and r["sigma4"] < tol.relative <= r["sigma3"]
            if flagged or near_three:
                entry["sigma3_ratio"] = r["sigma3"]
                entry["sigma4_ratio"] = r["sigma4"]
                suspicious.append(entry)

    report = VerifierReport(
        size=m,
        trials=trials,
        field=field_label,
        method=method.value,
        seed=seed,
        tolerance=tol.relative,
        histogram=histogram,
        rank3_count=histogram.get(3, 0) if m >= 3 else 0,
        rank1_count=histogram.get(1, 0),
        rejections=int(frame["rejections"].sum()),
        violations=violations,
        suspicious=suspicious,
    )
    if violations:
        logger.warning("%d violation(s) for m=%d over %s", len(violations), m, field_label)
    if suspicious:
        logger.warning("%d suspicious float trial(s) for m=%d; re-check with an exact backend", len(suspicious), m)
    return report


def histogram_frame(histogram: Dict) -> pd.DataFrame:
    """Rank histogram (int or str keys) as a two-column table, for CSV export."""
    rows = sorted((int(rank), int(count)) for rank, count in histogram.items())
    return pd.DataFrame(rows, columns=["rank", "count"])


def e_hyperplane(p_cfg: Points, i: int, j: int, k: int) -> tuple:
    """Covector whose l-th coordinate is pˡ_i pˡ_j pˡ_k."""
    pts = _as_points(p_cfg)
    if not 0 <= i < j < k < len(pts):
        raise DimensionMismatchError(f"indices ({i}, {j}, {k}) must satisfy 0 ≤ i < j < k < {len(pts)}")
    for idx in (i, j, k):
        for l, c in enumerate(pts[idx].coords):
            if is_zero(c):
                raise BlownDownHyperplaneError(l, pts[idx])
    return tuple(pts[i][l] * pts[j][l] * pts[k][l] for l in range(len(pts[i])))


def evaluate_covector(h: Sequence, p: ProjectivePoint):
    if len(h) != len(p):
        raise DimensionMismatchError("covector and point live in different spaces")
    acc = p.field.zero()
    for a, b in zip(h, p.coords):
        acc = acc + a * b
    return acc


def e_containment_holds(p_cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """E_ijk(φ(p_l)) = 0 for every triple i < j < k and every l in it."""
    pts = _as_points(p_cfg)
    images = [cremona_product_form(p, tol) for p in pts]
    for i, j, k in combinations(range(len(pts)), 3):
        h = e_hyperplane(pts, i, j, k)
        for l in (i, j, k):
            value = evaluate_covector(h, images[l])
            if not is_zero(value, tol):
                return False
    return True


def min_rank_bound(m: int) -> int:
    """Smallest k ≥ 1 with k(2m − k) − 1 + binom(m+1, 2) − 1 ≥ m² − 1."""
    if m < 2:
        raise DimensionMismatchError("the rank bound is defined for m ≥ 2")
    return max(1, m - isqrt(m * (m + 1) // 2 - 1))


def dimension_count(m: int, k: int) -> Tuple[int, int, bool]:
    """(dim of rank-≤k locus plus dim of orthogonal group, dim of all m×m matrices mod scale, admits)."""
    if m < 2 or not 1 <= k <= m:
        raise DimensionMismatchError(f"need m ≥ 2 and 1 ≤ k ≤ m, got m={m}, k={k}")
    lhs = k * (2 * m - k) - 1 + comb(m + 1, 2) - 1
    rhs = m * m - 1
    return lhs, rhs, lhs >= rhs


def bound_row(m: int) -> dict:
    bound = min_rank_bound(m)
    return {
        "m": m,
        "min_rank_bound": bound,
        "rank_three_admitted": bound <= 3 <= m,
        "dimension_count": dict(zip(("lhs", "rhs", "admits"), dimension_count(m, bound))),
    }
