"""Coefficient recovery by long vertical means.

On a vertical line Re s = sigma, the mean of f(s)*e^{lambda*s} over
t in [-T, T] tends (as T grows) to the coefficient of exp(-lambda*s) in
f, because every mismatched term averages out like 1/(T*|lambda - mu|).
This gives a round trip from black-box evaluation back to the symbolic
terms, at accuracy limited by T, by the candidate separation, and by the
trapezoid quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .errors import NonFiniteEvaluation
from .sums import ExponentialSum

Evaluator = Union[ExponentialSum, Callable[[complex], complex]]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class SpectrumEstimate:
    """Mean-value coefficient estimates at the candidate frequencies."""

    sigma: float
    T: float
    panels: int
    entries: tuple[tuple[float, complex], ...]

    def __post_init__(self):
        if self.T <= 0:
            raise ValueError("SpectrumEstimate: T must be positive")
        if self.panels < 2:
            raise ValueError("SpectrumEstimate: need at least 2 panels")


def _line_values(evaluator: Evaluator, s: np.ndarray) -> np.ndarray:
    if isinstance(evaluator, ExponentialSum):
        return evaluator.evaluate_many(s)
    try:
        vals = np.asarray(evaluator(s))
        if vals.shape == s.shape:
            return vals.astype(complex)
    except Exception:
        pass
    return np.array([complex(evaluator(complex(z))) for z in s])


def mean_coefficient(evaluator: Evaluator, lambda_value: float, sigma: float,
                     T: float, panels: int) -> complex:
    """Composite-trapezoid value of (1/2T) * integral of f(sigma+it) * e^{lambda*(sigma+it)} dt
    over [-T, T].

    For an exponential-sum evaluator this approaches the coefficient at
    frequency lambda; mismatched frequencies mu contribute at most
    |a| * e^{(lambda-mu)*sigma} / (T*|lambda-mu|), so accuracy degrades
    when candidates crowd the true spectrum.  Accepts an
    ``ExponentialSum`` directly (vectorized) or any callable s -> complex.
    """
    if T <= 0:
        raise ValueError("mean_coefficient: T must be positive")
    if panels < 1:
        raise ValueError("mean_coefficient: need at least one panel")
    h = 2.0 * T / panels
    scale = math.exp(lambda_value * sigma)
    total = 0j
    nodes = panels + 1
    for start in range(0, nodes, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, nodes))
        t = -T + h * idx
        vals = _line_values(evaluator, sigma + 1j * t)
        bad = ~np.isfinite(vals)
        if bad.any():
            raise NonFiniteEvaluation(float(t[int(np.argmax(bad))]))
        weights = np.ones(len(idx))
        weights[idx == 0] = 0.5
        weights[idx == panels] = 0.5
        total += np.sum(weights * vals * np.exp(1j * lambda_value * t))
    return complex(total * scale * h / (2.0 * T))


def recover_spectrum(f: ExponentialSum, candidates: Sequence[float], sigma: float,
                     T: float, panels: int) -> SpectrumEstimate:
    """Estimate the coefficient at each candidate frequency by vertical means.

    Candidates must be pairwise distinct; frequency *detection* is out of
    scope, the candidate list comes from the user or the symbolic sum.
    """
    candidates = [float(c) for c in candidates]
    if len(set(candidates)) != len(candidates):
        raise ValueError("recover_spectrum: candidates must be pairwise distinct")
    entries = tuple((lam, mean_coefficient(f, lam, sigma, T, panels)) for lam in candidates)
    return SpectrumEstimate(sigma=sigma, T=T, panels=panels, entries=entries)
