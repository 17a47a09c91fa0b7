"""Finite Cesaro averages of vertical translates: the numerical oracle
for the symbolic split.

Averaging f(s), f(s+i*tau), ..., f(s+i*(k-1)*tau) multiplies each term
by the mean of k unimodular rotations, a closed-form geometric sum.  As
k grows the mean tends to 1 on frequencies with mu*tau in 2*pi*Z and to
0 elsewhere at rate O(1/k), so the averages converge uniformly on strips
to the projected sum computed by ``splitting.bohr_split``.  This module
measures that convergence.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .frequencies import Period
from .sampling import strip_points
from .splitting import bohr_split
from .sums import ExponentialSum, Strip

_RESONANCE_TOL = 1e-9


@dataclass(frozen=True)
class ConvergenceProfile:
    """Max deviation of the k-term average from the split's periodic part,
    tabulated over k for CSV export."""

    k_values: tuple[int, ...]
    max_errors: tuple[float, ...]
    strip: Strip
    sample_count: int

    def __post_init__(self):
        if len(self.k_values) != len(self.max_errors):
            raise ValueError("k_values and max_errors must have equal length")


def dirichlet_kernel(theta: float, k: int) -> complex:
    """Mean (1/k) * sum_{j<k} e^{i*j*theta} of k rotations.

    Uses the geometric closed form away from resonance; within 1e-9 of
    e^{i*theta} = 1 the denominator would cancel catastrophically, so the
    sum is accumulated directly (stable there: all summands nearly
    aligned).  The modulus never exceeds 1.
    """
    if k < 1:
        raise ValueError("dirichlet_kernel: k must be a positive integer")
    w = cmath.exp(1j * theta)
    if abs(w - 1.0) > _RESONANCE_TOL:
        out = (cmath.exp(1j * k * theta) - 1.0) / (k * (w - 1.0))
    else:
        out = complex(np.mean(np.exp(1j * theta * np.arange(k))))
    mag = abs(out)
    if mag > 1.0:
        out /= mag
    return out


def cesaro_average(f: ExponentialSum, tau: float, k: int, s: complex,
                   direct: bool = False) -> complex:
    """Average of the first k vertical translates of f by tau, at s.

    The default path applies the rotation-mean kernel termwise, O(terms)
    instead of O(k*terms); ``direct=True`` forces the literal summation
    (1/k) * sum_{j<k} f(s + i*j*tau) for verification.
    """
    if k < 1:
        raise ValueError("cesaro_average: k must be a positive integer")
    if direct:
        total = 0j
        for j in range(k):
            total += f.evaluate(s + 1j * (j * tau))
        return total / k
    total = 0j
    for term in f.terms:
        mu = term.frequency.value
        try:
            e = cmath.exp(-mu * s)
        except OverflowError:
            return complex(math.inf, math.inf)
        total += term.coefficient * dirichlet_kernel(-mu * tau, k) * e
    return total


def _cesaro_average_many(f: ExponentialSum, tau: float, k: int, s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=complex)
    total = np.zeros_like(s)
    with np.errstate(over="ignore", invalid="ignore"):
        for term in f.terms:
            mu = term.frequency.value
            kern = dirichlet_kernel(-mu * tau, k)
            total += term.coefficient * kern * np.exp(-mu * s)
    return total


def cesaro_compare(f: ExponentialSum, tau: Period, k: int, strip: Strip, n: int,
                   t_extent: float | None = None) -> float:
    """Max over n strip sample points of |k-term average - periodic part|.

    The periodic part comes from the symbolic split at tau, so this is
    the oracle disagreement between the numerical limit process and the
    exact frequency projection.  Sampling covers t in [-T, T] with
    T = 10*tau by default.
    """
    split = bohr_split(f, tau)
    if t_extent is None:
        t_extent = 10.0 * tau.value
    pts = strip_points(strip, t_extent, n)
    avg = _cesaro_average_many(f, tau.value, k, pts)
    ref = split.p.evaluate_many(pts)
    return float(np.max(np.abs(avg - ref)))


def cesaro_error_bound(f: ExponentialSum, tau: Period, strip: Strip) -> float:
    """Constant C with cesaro_compare(f, tau, k, strip, n) <= C/k.

    Per rejected term, |kernel| <= 1/(k*|sin(mu*tau/2)|) and the modulus
    on the strip is at most the edge maximum, so C sums
    |a|*max(e^{-mu*alpha}, e^{-mu*beta}) / |sin(mu*tau/2)| over the
    bounded remainder.
    """
    split = bohr_split(f, tau)
    tau_value = tau.value
    total = 0.0
    for term in split.b.terms:
        mu = term.frequency.value
        edge = max(math.exp(-mu * strip.alpha), math.exp(-mu * strip.beta))
        total += abs(term.coefficient) * edge / abs(math.sin(mu * tau_value / 2.0))
    return total


def convergence_profile(f: ExponentialSum, tau: Period, k_values, strip: Strip,
                        n: int) -> ConvergenceProfile:
    """Tabulate cesaro_compare over an ascending list of k values."""
    k_values = tuple(int(k) for k in k_values)
    if not k_values:
        raise ValueError("convergence_profile: k_values must be nonempty")
    if any(b <= a for a, b in zip(k_values, k_values[1:])):
        raise ValueError("convergence_profile: k_values must be strictly ascending")
    errors = tuple(cesaro_compare(f, tau, k, strip, n) for k in k_values)
    return ConvergenceProfile(k_values, errors, strip, n)
