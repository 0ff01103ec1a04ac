# HadamardApp/conf.py
"""Algebra defaults built from ``settings.HADAMARD``."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

from django.conf import settings

from .Algebra.kontsevich import SamplerBounds
from .Algebra.scalars import Tolerance


def hadamard_setting(key: str):
    return settings.HADAMARD[key]


def tolerance(relative: Optional[float] = None) -> Tolerance:
    """Configured tolerance; ``relative`` (e.g. from ``--tol``) overrides the relative threshold."""
    base = Tolerance(relative=hadamard_setting("RELATIVE_TOL"), absolute=hadamard_setting("ABSOLUTE_TOL"))
    return base.with_relative(relative)


def jacobian_tolerance() -> Tolerance:
    return Tolerance(relative=hadamard_setting("JACOBIAN_TOL"), absolute=hadamard_setting("ABSOLUTE_TOL"))


def sampler_bounds() -> SamplerBounds:
    return SamplerBounds(
        numerator_bound=hadamard_setting("NUMERATOR_BOUND"),
        denominator_bound=hadamard_setting("DENOMINATOR_BOUND"),
        max_rejections=hadamard_setting("MAX_REJECTIONS"),
    )


def results_dir() -> Path:
    path = Path(hadamard_setting("RESULTS_DIR"))
    if not path.is_absolute():
        path = Path(settings.BASE_DIR) / path
    path.mkdir(parents=True, exist_ok=True)
    return path


def fd_step() -> float:
    return hadamard_setting("FD_STEP")


def workers() -> int:
    return max(1, int(hadamard_setting("WORKERS")))
