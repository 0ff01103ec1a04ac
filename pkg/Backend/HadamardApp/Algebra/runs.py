"""Pipelines behind the management commands and the HTTP endpoints.

Every ``run_*`` takes decoded inputs and returns ``(payload, ok)``: a JSON-ready
dict and whether the property the run checks held.
"""
from __future__ import annotations

import logging
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from .apolarity import castelnuovo_count, quadrics_through, weddle_conic
from .codec import (
    encode_certificate,
    encode_config,
    encode_quadratic_form,
    encode_scalar,
    encode_split_config,
)
from .exceptions import (
    AlgebraError,
    BlownDownHyperplaneError,
    DegenerateConfigurationError,
    DimensionMismatchError,
    GenerationError,
)
from .gale import (
    SplitConfig,
    association_multipliers,
    cremona_association_commutes,
    double_apolar_pair,
    duality_dims,
    gale_transform,
    is_self_associated,
)
from .kontsevich import (
    Method,
    SamplerBounds,
    bound_row,
    parse_field,
    random_orthogonal,
    verify_conjecture,
)
from .linalg import Matrix
from .projective import Points, ProjectivePoint, _as_points, cremona, primitive, simplex
from .rnc import FD_STEP, JACOBIAN_TOLERANCE, RncParam, assemble, local_dimension, random_param
from .scalars import DEFAULT_TOLERANCE, Field, Tolerance, is_zero, random_scalar

logger = logging.getLogger(__name__)

Result = Tuple[Dict[str, Any], bool]


def generate_orthogonal(m: int, field_label: str, seed: int, bounds: SamplerBounds = SamplerBounds(),
                        tol: Tolerance = DEFAULT_TOLERANCE) -> Matrix:
    field_, real = parse_field(field_label)
    return random_orthogonal(m, field_, seed, real=real, bounds=bounds, tol=tol).matrix


def generate_double_apolar(n: int, field_label: str, seed: int, bounds: SamplerBounds = SamplerBounds(),
                           tol: Tolerance = DEFAULT_TOLERANCE) -> SplitConfig:
    """Columns of two independent orthogonal matrices: both blocks apolar to Σ(xⁱ)²."""
    A_z = generate_orthogonal(n + 1, field_label, seed, bounds, tol)
    A_p = generate_orthogonal(n + 1, field_label, seed + 1, bounds, tol)
    return double_apolar_pair(A_z, A_p, tol)


def run_verify(m: int, trials: int, field_label: str, seed: int, tol: Tolerance = DEFAULT_TOLERANCE, *,
               method: Optional[Method] = None, bounds: SamplerBounds = SamplerBounds(), workers: int = 1):
    report = verify_conjecture(m, trials, field_label, seed, tol, method=method, bounds=bounds, workers=workers)
    return report.to_dict(), report.violation_count == 0


def run_construct(n: int, field_label: str = "real", seed: int = 0, p0: Optional[Sequence] = None,
                  nodes: Optional[Sequence] = None, tol: Tolerance = DEFAULT_TOLERANCE, *,
                  with_local_dimension: bool = False, step: float = FD_STEP,
                  jacobian_tol: Tolerance = JACOBIAN_TOLERANCE) -> Result:
    """Rank-2 certificate from (p0, nodes), or from a seeded random curve when both are omitted."""
    if field_label not in ("real", "complex"):
        raise DimensionMismatchError("construct runs on the real or complex slice")
    if n < 1:
        raise DimensionMismatchError("construct needs n ≥ 1")
    real = field_label == "real"
    if p0 is None and nodes is None:
        par = random_param(n, np.random.default_rng(seed), real)
    else:
        rng = np.random.default_rng(seed)
        if p0 is None:
            p0 = random_param(n, rng, real).p0
        if nodes is None:
            nodes = range(n + 1)
        if len(p0) != n + 1 or len(nodes) != n + 1:
            raise DimensionMismatchError(f"n = {n} needs {n + 1} coordinates of p0 and {n + 1} nodes")
        par = RncParam.normalized(p0, nodes, real=real, tol=tol)
    cert = assemble(par, tol)
    payload, ok = encode_certificate(cert), cert.is_valid()
    if with_local_dimension:
        payload["local_dimension"] = local_dimension(n, cert, step, jacobian_tol)
        payload["expected_local_dimension"] = 2 * n - 1
        ok = ok and payload["local_dimension"] == 2 * n - 1
    return payload, ok


def run_cremona(cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> Result:
    pts = _as_points(cfg)
    images = [primitive(cremona(p, tol)) for p in pts]
    payload = {"points": encode_config(pts), "images": encode_config(images)}
    if images and images[0].field is Field.RATIONAL:
        payload["integer_images"] = [[int(c) for c in p.coords] for p in images]
    return payload, True


def run_gale(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Result:
    partner = gale_transform(cfg, tol)
    multipliers = association_multipliers(cfg, partner, tol)
    try:
        commutes = cremona_association_commutes(cfg, tol)
    except BlownDownHyperplaneError:
        commutes = None
    payload = {
        "input": encode_split_config(cfg),
        "gale": encode_split_config(partner),
        "associated": multipliers is not None,
        "multipliers": [encode_scalar(v) for v in multipliers] if multipliers is not None else None,
        "cremona_commutes": commutes,
    }
    if cfg.r == cfg.s:
        try:
            forward, backward = duality_dims(cfg, tol)
            payload["duality"] = {"span_phi_z_p": forward, "span_phi_p_z": backward, "holds": forward == backward}
        except (BlownDownHyperplaneError, DegenerateConfigurationError):
            payload["duality"] = None
    return payload, multipliers is not None and commutes is not False


def run_conic(p_cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> Result:
    """Conic through the coordinate triangle and three points of P², with its six residuals."""
    pts = _as_points(p_cfg)
    Q = weddle_conic(pts)
    six = simplex(2, Q.field) + pts
    residuals = [Q.evaluate(p.coords) for p in six]
    G = Q.matrix.data
    coefficients = {
        "x0x1": encode_scalar(2 * G[0, 1]),
        "x0x2": encode_scalar(2 * G[0, 2]),
        "x1x2": encode_scalar(2 * G[1, 2]),
    }
    ok = all(is_zero(r, tol) for r in residuals)
    return {
        "points": encode_config(six),
        "conic": encode_quadratic_form(Q),
        "coefficients": coefficients,
        "residuals": [encode_scalar(r) for r in residuals],
        "on_conic": ok,
    }, ok


def run_quadrics(cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE, double_apolar: bool = False) -> Result:
    """Dimension of the system of quadrics through ``cfg``; compared with binom(n, 2) − 1 for a double apolar pair."""
    pts = _as_points(cfg.points if isinstance(cfg, SplitConfig) else cfg)
    dimension, basis = quadrics_through(pts, tol)
    n = pts[0].dim
    payload = {"n": n, "points": len(pts), "dimension": dimension,
               "basis": [encode_quadratic_form(Q) for Q in basis]}
    ok = True
    if double_apolar or (isinstance(cfg, SplitConfig) and len(pts) == 2 * n + 2):
        payload["expected"] = castelnuovo_count(n)
        ok = dimension == payload["expected"]
    return payload, ok


def run_selfassoc(cfg: SplitConfig, tol: Tolerance = DEFAULT_TOLERANCE) -> Result:
    ok, Q = is_self_associated(cfg, tol)
    return {
        "input": encode_split_config(cfg),
        "self_associated": ok,
        "quadric": encode_quadratic_form(Q) if Q is not None else None,
    }, ok


def run_bound(ms: Iterable[int]) -> Result:
    rows = [bound_row(m) for m in ms]
    tension = [row["m"] for row in rows if row["rank_three_admitted"]]
    payload = {"rows": rows, "tension": tension}
    if tension:
        payload["note"] = ("the naive dimension count admits rank 3 for m in "
                           f"{tension}, yet rank 3 is never expected")
    return payload, True


def generate_split(r: int, s: int, field_label: str, seed: int, bounds: SamplerBounds = SamplerBounds(),
                   tol: Tolerance = DEFAULT_TOLERANCE) -> SplitConfig:
    """Coordinate simplex of Pʳ followed by s+1 random points with no zero coordinate."""
    if r < 1 or s < 0:
        raise DimensionMismatchError("a split configuration needs r ≥ 1 and s ≥ 0")
    field_, real = parse_field(field_label)
    rng = np.random.default_rng(seed)
    for _ in range(bounds.max_rejections + 1):
        tail = []
        for _ in range(s + 1):
            coords = [random_scalar(field_, rng, bounds.numerator_bound, bounds.denominator_bound, real=real)
                      for _ in range(r + 1)]
            if any(is_zero(c, tol) for c in coords):
                break
            tail.append(ProjectivePoint(tuple(coords), field_))
        else:
            try:
                return SplitConfig.from_blocks(simplex(r, field_), tail, tol)
            except AlgebraError as exc:
                logger.debug("seed %d: rejected split configuration (%s)", seed, exc)
    raise GenerationError(f"no split configuration for r={r}, s={s} after {bounds.max_rejections} attempts")
