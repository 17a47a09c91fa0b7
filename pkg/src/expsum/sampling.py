"""Deterministic low-discrepancy point sets on strips.

Unscrambled Halton points are used everywhere a report samples a strip,
so identical inputs always produce identical outputs with no RNG seed
bookkeeping.
"""

from __future__ import annotations

import numpy as np
from scipy.stats import qmc

from .sums import Strip


def strip_points(strip: Strip, t_extent: float, n: int) -> np.ndarray:
    """n Halton points s = sigma + i*t covering [alpha, beta] x [-T, T]."""
    if n < 1:
        raise ValueError("strip_points: need n >= 1")
    if t_extent <= 0:
        raise ValueError("strip_points: t_extent must be positive")
    u = qmc.Halton(d=2, scramble=False).random(n)
    sigma = strip.alpha + (strip.beta - strip.alpha) * u[:, 0]
    t = (2.0 * u[:, 1] - 1.0) * t_extent
    return sigma + 1j * t
