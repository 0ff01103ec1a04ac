"""Rational normal curves through the coordinate simplex and the rank-2 constructor.

A curve is fixed by a point p_0 (its value at t = ∞) and nodes a_0, …, a_n:

    x(t) = [p⁰_0/(t − a_0) : … : pⁿ_0/(t − a_n)]

The n points where x(t) is orthogonal to itself are the roots of a degree-n
polynomial. Together with p_0 they are the columns of an orthogonal matrix
whose Hadamard inverse has rank 2.

Everything here runs on the float backend.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import (
    BlownDownHyperplaneError,
    ConstructionRejected,
    DegenerateConfigurationError,
    DimensionMismatchError,
    RootFindingError,
)
from .linalg import Matrix, singular_values
from .projective import PointConfig, Points, ProjectivePoint, _as_points, coordinates_in_basis, cremona, hadamard_inverse, span_dim
from .scalars import DEFAULT_TOLERANCE, Field, Tolerance, sqrt

logger = logging.getLogger(__name__)

SLICES = ("real", "complex")

FD_STEP = 1e-6
JACOBIAN_TOLERANCE = Tolerance(relative=1e-6)


@dataclass(frozen=True)
class RncParam:
    p0: Tuple[complex, ...]
    nodes: Tuple[complex, ...]
    roots: Tuple[complex, ...] = ()
    real: bool = True

    @property
    def n(self) -> int:
        return len(self.p0) - 1

    @classmethod
    def normalized(cls, p0: Sequence, nodes: Sequence, real: bool = True,
                   tol: Tolerance = DEFAULT_TOLERANCE) -> "RncParam":
        """Scale p_0 to Σ(pⁱ_0)² = 1 and move the nodes affinely to a_0 = 0, a_1 = 1."""
        p = np.array([complex(c) for c in p0], dtype=np.complex128)
        a = np.array([complex(c) for c in nodes], dtype=np.complex128)
        if p.size != a.size:
            raise DimensionMismatchError(f"p0 has {p.size} coordinates but {a.size} nodes were given")
        if p.size < 2:
            raise DimensionMismatchError("a rational normal curve needs n ≥ 1")
        for i, c in enumerate(p):
            if abs(c) <= tol.absolute:
                raise BlownDownHyperplaneError(i, ProjectivePoint(tuple(p), Field.COMPLEX_FLOAT))
        if real and (np.any(np.abs(p.imag) > tol.absolute) or np.any(np.abs(a.imag) > tol.absolute)):
            raise DegenerateConfigurationError("the real slice needs real p0 and real nodes")
        norm = complex(np.sum(p * p))
        if abs(norm) <= tol.absolute:
            raise DegenerateConfigurationError("p0 is isotropic: Σ(p0ⁱ)² = 0")
        p = p / sqrt(norm)
        gaps = np.abs(a[:, None] - a[None, :]) + np.eye(a.size)
        if np.any(gaps <= tol.absolute):
            raise DegenerateConfigurationError("nodes must be pairwise distinct")
        a = (a - a[0]) / (a[1] - a[0])
        if real:
            p, a = p.real.astype(np.complex128), a.real.astype(np.complex128)
        return cls(tuple(complex(c) for c in p), tuple(complex(c) for c in a), (), real)


@dataclass(frozen=True)
class Rank2Certificate:
    matrix: Matrix
    orthogonality_residual: float
    sigma_ratio: float
    param: RncParam
    branches: Tuple[complex, ...] = ()

    def is_valid(self, residual_bound: float = 1e-8, ratio_bound: float = 1e-8) -> bool:
        return self.orthogonality_residual <= residual_bound and self.sigma_ratio <= ratio_bound


def rnc_point(par: RncParam, t: Optional[complex]) -> ProjectivePoint:
    """x(t); ``t=None`` (or infinity) gives p_0."""
    if t is None or (isinstance(t, (int, float)) and math.isinf(t)):
        return ProjectivePoint(tuple(par.p0), Field.COMPLEX_FLOAT)
    t = complex(t)
    for i, a in enumerate(par.nodes):
        if t == a:
            raise DegenerateConfigurationError(f"t equals node a_{i}: x(t) is the coordinate point z_{i}")
    return ProjectivePoint(tuple(p / (t - a) for p, a in zip(par.p0, par.nodes)), Field.COMPLEX_FLOAT)


def section_polynomial(par: RncParam) -> np.ndarray:
    """Coefficients (highest degree first) of f(t) = Σ_i (pⁱ_0)² Π_{j≠i} (t − a_j)."""
    nodes = np.array(par.nodes, dtype=np.complex128)
    f = np.zeros(par.n + 1, dtype=np.complex128)
    for i, p in enumerate(par.p0):
        f += (p * p) * np.poly(np.delete(nodes, i))
    return f


def poly_roots(coeffs: Sequence[complex], tol: Tolerance = DEFAULT_TOLERANCE) -> List[complex]:
    """Roots by companion-matrix eigenvalues, each refined by one Newton step."""
    c = np.array(coeffs, dtype=np.complex128)
    if c.size < 2:
        raise RootFindingError("polynomial of degree 0 has no roots")
    if abs(c[0]) <= tol.absolute:
        raise RootFindingError("leading coefficient vanishes")
    monic = c / c[0]
    degree = monic.size - 1
    companion = np.zeros((degree, degree), dtype=np.complex128)
    companion[0, :] = -monic[1:]
    companion[1:, :-1] = np.eye(degree - 1)
    derivative = np.polyder(c)
    roots = []
    for t in np.linalg.eigvals(companion):
        slope = np.polyval(derivative, t)
        if slope != 0:
            t = t - np.polyval(c, t) / slope
        scale = float(np.sum(np.abs(c) * np.abs(t) ** np.arange(degree, -1, -1)))
        residual = abs(np.polyval(c, t))
        if residual > tol.absolute * max(1.0, scale) and residual > tol.relative * scale:
            raise RootFindingError(f"root {t} leaves residual {residual:.3e}")
        roots.append(complex(t))
    return roots


def _ordered_roots(par: RncParam, tol: Tolerance) -> List[complex]:
    roots = poly_roots(section_polynomial(par), tol)
    if par.real:
        # roots interlace the real nodes, so they are real
        roots = [complex(t.real, 0.0) if abs(t.imag) <= tol.relative * max(1.0, abs(t)) else t for t in roots]
    return sorted(roots, key=lambda t: (t.real, t.imag))


def check_roots(par: RncParam, roots: Sequence[complex], tol: Tolerance) -> None:
    scale = max([1.0] + [abs(a) for a in par.nodes] + [abs(t) for t in roots])
    gap = tol.relative * scale
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= gap:
                raise ConstructionRejected("repeated-roots", f"roots t_{i + 1} and t_{j + 1} coincide")
        for k, a in enumerate(par.nodes):
            if abs(roots[i] - a) <= gap:
                raise ConstructionRejected("root-at-node", f"root t_{i + 1} collides with node a_{k}")


def _columns(par: RncParam, roots: Sequence[complex]) -> Tuple[np.ndarray, List[complex]]:
    p0 = np.array(par.p0, dtype=np.complex128)
    nodes = np.array(par.nodes, dtype=np.complex128)
    columns, branches = [p0], [1 + 0j]
    for t in roots:
        x = p0 / (t - nodes)
        root = sqrt(complex(np.sum(x * x)))
        columns.append(x / root)
        branches.append(root)
    return np.column_stack(columns), branches


def assemble(par: RncParam, tol: Tolerance = DEFAULT_TOLERANCE) -> Rank2Certificate:
    """Matrix and certificate for a normalized parameter, rejecting degenerate choices."""
    roots = _ordered_roots(par, tol)
    check_roots(par, roots, tol)
    data, branches = _columns(par, roots)
    if par.real:
        data = data.real.astype(np.complex128)
    zero = np.argwhere(np.abs(data) <= tol.absolute)
    if zero.size:
        i, j = zero[0]
        raise ConstructionRejected("zero-entry", f"entry ({i}, {j}) of the orthogonal matrix vanishes")
    A = Matrix(data, Field.COMPLEX_FLOAT)
    residual = float(np.max(np.abs(data.T @ data - np.eye(par.n + 1))))
    s = singular_values(hadamard_inverse(A, tol))
    ratio = s[2] / s[0] if len(s) >= 3 else 0.0
    cert = Rank2Certificate(A, residual, ratio, replace(par, roots=tuple(roots)), tuple(branches))
    logger.debug("rank-2 matrix of size %d: residual %.3e, sigma3/sigma1 %.3e", par.n + 1, residual, ratio)
    return cert


def construct_rank2(n: int, p0: Sequence, nodes: Sequence, field: str = "real",
                    tol: Tolerance = DEFAULT_TOLERANCE) -> Rank2Certificate:
    """An (n+1)×(n+1) orthogonal matrix with Hadamard rank 2, built from the curve (p0, nodes)."""
    if field not in SLICES:
        raise DimensionMismatchError(f"the rank-2 constructor runs on the real or complex slice, not {field!r}")
    if len(p0) != n + 1 or len(nodes) != n + 1:
        raise DimensionMismatchError(f"n = {n} needs {n + 1} coordinates of p0 and {n + 1} nodes")
    par = RncParam.normalized(p0, nodes, real=field == "real", tol=tol)
    return assemble(par, tol)


def random_param(n: int, rng: np.random.Generator, real: bool = True) -> RncParam:
    """Generic curve data: p_0 entries bounded away from zero, nodes spread out."""
    while True:
        if real:
            p0 = rng.standard_normal(n + 1)
        else:
            p0 = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
        if np.all(np.abs(p0) > 0.1) and abs(np.sum(p0 * p0)) > 0.1:
            break
    steps = rng.uniform(0.5, 1.5, size=n + 1)
    nodes = np.cumsum(steps) - steps[0]
    if not real:
        nodes = nodes + 0.3j * rng.standard_normal(n + 1)
    return RncParam.normalized(p0, nodes, real=real)


def perturb_in_family(par: RncParam, scale: float, rng: np.random.Generator) -> RncParam:
    """A nearby curve of the same family (p_0 and the free nodes a_2..a_n moved)."""
    noise = rng.standard_normal(par.n + 1)
    node_noise = rng.standard_normal(par.n + 1)
    if not par.real:
        noise = noise + 1j * rng.standard_normal(par.n + 1)
        node_noise = node_noise + 1j * rng.standard_normal(par.n + 1)
    p0 = np.array(par.p0) + scale * noise
    nodes = np.array(par.nodes)
    nodes[2:] = nodes[2:] + scale * node_noise[2:]
    return RncParam.normalized(p0, nodes, real=par.real)


def _tangent_basis(p0: np.ndarray) -> np.ndarray:
    # vectors u with Σ p0ⁱ uⁱ = 0 (bilinear, no conjugation)
    _, _, vh = np.linalg.svd(p0.reshape(1, -1))
    return vh[1:].conj().T


def _matched(base: np.ndarray, base_roots: Sequence[complex], par: RncParam, roots: Sequence[complex]) -> np.ndarray:
    order = []
    remaining = list(range(len(roots)))
    for t in base_roots:
        k = min(remaining, key=lambda idx: abs(roots[idx] - t))
        remaining.remove(k)
        order.append(roots[k])
    data, _ = _columns(par, order)
    for j in range(1, data.shape[1]):
        if np.real(np.vdot(base[:, j], data[:, j])) < 0:
            data[:, j] = -data[:, j]
    return data


def local_dimension(n: int, base: Rank2Certificate, step: float = FD_STEP,
                    tol: Tolerance = JACOBIAN_TOLERANCE) -> int:
    """Rank of the finite-difference Jacobian of (p_0, a_2..a_n) ↦ matrix at ``base``.

    The family has 2n − 1 free parameters (n on the sphere for p_0, n − 1 nodes).
    """
    par = base.param
    if par.n != n:
        raise DimensionMismatchError(f"certificate is for n = {par.n}, not {n}")
    p0 = np.array(par.p0, dtype=np.complex128)
    nodes = np.array(par.nodes, dtype=np.complex128)
    U = _tangent_basis(p0)
    if par.real:
        U = U.real.astype(np.complex128)
    count = 2 * n - 1
    reference = base.matrix.data

    def image(theta: np.ndarray) -> np.ndarray:
        p = p0 + U @ theta[:n]
        p = p / sqrt(complex(np.sum(p * p)))
        a = nodes.copy()
        a[2:] = a[2:] + theta[n:]
        moved = RncParam(tuple(p), tuple(a), (), par.real)
        roots = poly_roots(section_polynomial(moved))
        return _matched(reference, par.roots, moved, roots).ravel()

    J = np.empty((reference.size, count), dtype=np.complex128)
    for k in range(count):
        e = np.zeros(count)
        e[k] = step
        J[:, k] = (image(e) - image(-e)) / (2 * step)
    s = np.linalg.svd(J, compute_uv=False)
    if s[0] <= tol.absolute:
        return 0
    rank = int(np.sum(s > tol.relative * s[0]))
    logger.debug("local dimension at n=%d: %d of %d parameters", n, rank, count)
    return rank


def curve_coefficients(par: RncParam) -> Tuple[ProjectivePoint, ProjectivePoint]:
    """Two points spanning the line that φ_z maps the curve onto: u = (1/pⁱ_0), v = (aᵢ/pⁱ_0)."""
    u = tuple(1 / p for p in par.p0)
    v = tuple(a / p for a, p in zip(par.nodes, par.p0))
    return ProjectivePoint(u, Field.COMPLEX_FLOAT), ProjectivePoint(v, Field.COMPLEX_FLOAT)


def lies_on_common_rnc(z_block: Points, p_cfg: Points, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether the n+1 points of ``p_cfg`` lie on one rational normal curve through the simplex ``z_block``.

    Equivalent to their images under the Cremona map of ``z_block`` spanning exactly a line;
    a single image (span 0) does not determine a curve.
    """
    images = [cremona(coordinates_in_basis(z_block, p, tol), tol) for p in _as_points(p_cfg)]
    return span_dim(images, tol) == 1


def certificate_config(cert: Rank2Certificate) -> PointConfig:
    return PointConfig.from_matrix_columns(cert.matrix)
