"""Translation numbers on vertical strips: certification and refutation.

A real tau is a translation number of f belonging to epsilon (relative
to a strip) when sup over the strip of |f(s+i*tau) - f(s)| <= epsilon.
The certificate here is the per-term triangle bound

    B(tau) = sum_j |a_j| * max(e^{-mu_j*alpha}, e^{-mu_j*beta}) * |e^{-i*mu_j*tau} - 1|,

which dominates that supremum, so B(tau) <= epsilon is sound but not
necessary; sampling provides the refutation side, and everything in
between stays Unknown.  Grid scans and arithmetic-progression scans
measure how densely the certified set sits on the line.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from .errors import InvalidTau
from .frequencies import Period, rational_ratio
from .sampling import strip_points
from .splitting import translation_module
from .sums import ExponentialSum, Strip, _exp

REFUTATION_SLACK = 1e-9
DEFAULT_T_EXTENT = 50.0

TauLike = Union[float, Period]


class CertificationStatus(enum.Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CertificationResult:
    status: CertificationStatus
    witness: Optional[complex] = None
    certified_bound: Optional[float] = None


@dataclass(frozen=True)
class StripScanReport:
    """Certified translation numbers on the grid {0, +/-step, ..., +/-tau_max}.

    max_gap is the largest distance between consecutive certified taus,
    counting the distances to the grid edges +/-tau_max, so an empty
    certified set degenerates to 2*tau_max instead of an exception.
    """

    epsilon: float
    strip: Strip
    grid_start: float
    grid_step: float
    grid_count: int
    certified_taus: tuple[float, ...]
    max_gap: float


class MaxPrincipleResult(NamedTuple):
    bound: float
    max_observed: float
    passed: bool


def _edge_weights(f: ExponentialSum, strip: Strip) -> list[tuple[float, object]]:
    """(|a_j| * max of the term modulus on the strip edges, frequency) pairs."""
    out = []
    for t in f.terms:
        mu = t.frequency.value
        out.append((abs(t.coefficient) * max(_exp(-mu * strip.alpha), _exp(-mu * strip.beta)),
                    t.frequency))
    return out


def translation_bound(f: ExponentialSum, tau: TauLike, strip: Strip) -> float:
    """The certificate bound B(tau) >= sup over the strip of |V_tau f - f|.

    When tau is an exact Period, terms on its lattice contribute exactly
    zero (no float rotation is evaluated)."""
    if isinstance(tau, Period):
        from .frequencies import is_period_multiple
        tau_value = tau.value
        total = 0.0
        for weight, freq in _edge_weights(f, strip):
            if is_period_multiple(freq, tau):
                continue
            total += weight * abs(np.exp(-1j * freq.value * tau_value) - 1.0)
        return total
    total = 0.0
    for weight, freq in _edge_weights(f, strip):
        total += weight * abs(np.exp(-1j * freq.value * tau) - 1.0)
    return float(total)


def translation_bounds(f: ExponentialSum, taus: np.ndarray, strip: Strip) -> np.ndarray:
    """Vectorized B(tau) over an array of translations."""
    taus = np.asarray(taus, dtype=float)
    total = np.zeros_like(taus)
    for weight, freq in _edge_weights(f, strip):
        total += weight * np.abs(np.exp(-1j * freq.value * taus) - 1.0)
    return total


def certify_translation_strip(f: ExponentialSum, tau: TauLike, epsilon: float,
                              strip: Strip) -> CertificationResult:
    """Certified when B(tau) <= epsilon, otherwise Unknown (the bound is
    sufficient, not necessary; use refutation sampling for the other side)."""
    if epsilon <= 0:
        raise ValueError("certify_translation_strip: epsilon must be positive")
    bound = translation_bound(f, tau, strip)
    if bound <= epsilon:
        return CertificationResult(CertificationStatus.CERTIFIED, certified_bound=bound)
    return CertificationResult(CertificationStatus.UNKNOWN)


def refute_translation_strip(f: ExponentialSum, tau: TauLike, epsilon: float, strip: Strip,
                             m: int, t_extent: float = DEFAULT_T_EXTENT) -> CertificationResult:
    """Sample m strip points; a point with |f(s+i*tau) - f(s)| beyond epsilon
    (with 1e-9 relative slack against float noise) refutes tau."""
    if epsilon <= 0:
        raise ValueError("refute_translation_strip: epsilon must be positive")
    if m < 1:
        raise ValueError("refute_translation_strip: need m >= 1 samples")
    tau_value = tau.value if isinstance(tau, Period) else float(tau)
    pts = strip_points(strip, t_extent, m)
    diffs = np.abs(f.evaluate_many(pts + 1j * tau_value) - f.evaluate_many(pts))
    worst = int(np.nanargmax(diffs)) if np.isfinite(diffs).any() else 0
    if diffs[worst] > epsilon * (1.0 + REFUTATION_SLACK):
        return CertificationResult(CertificationStatus.REFUTED, witness=complex(pts[worst]))
    return CertificationResult(CertificationStatus.UNKNOWN)


def scan_translations(f: ExponentialSum, epsilon: float, strip: Strip,
                      tau_max: float, step: float) -> StripScanReport:
    """Certify every grid point in {0, +/-step, ..., +/-tau_max} and report
    the largest gap in the certified set: an empirical upper estimate of the
    inclusion length L witnessing relative density."""
    if step <= 0:
        raise ValueError("scan_translations: step must be positive")
    if tau_max <= step:
        raise ValueError("scan_translations: tau_max must exceed step")
    if epsilon <= 0:
        raise ValueError("scan_translations: epsilon must be positive")
    half = int(math.floor(tau_max / step + 1e-9))
    ks = np.arange(-half, half + 1)
    taus = ks * step
    bounds = translation_bounds(f, taus, strip)
    certified = taus[bounds <= epsilon]
    if certified.size == 0:
        max_gap = 2.0 * tau_max
    else:
        gaps = [certified[0] + tau_max, tau_max - certified[-1]]
        if certified.size > 1:
            gaps.append(float(np.max(np.diff(certified))))
        max_gap = max(gaps)
    return StripScanReport(epsilon=epsilon, strip=strip, grid_start=float(-half * step),
                           grid_step=step, grid_count=int(2 * half + 1),
                           certified_taus=tuple(float(x) for x in certified),
                           max_gap=float(max_gap))


def progression_intersection_gap(f: ExponentialSum, t: TauLike, epsilon: float,
                                 strip: Strip, k_max: int) -> float:
    """Largest gap between consecutive certified multiples k*t, |k| <= k_max.

    For almost-periodic f this is finite and stabilizes as k_max grows
    (the certified multiples are relatively dense).  Returns +inf when
    fewer than two multiples certify.  A Period t routes the lattice
    terms through the exact zero-contribution path.
    """
    if k_max < 1:
        raise ValueError("progression_intersection_gap: k_max must be >= 1")
    if epsilon <= 0:
        raise ValueError("progression_intersection_gap: epsilon must be positive")
    ks = np.arange(0, k_max + 1)
    if isinstance(t, Period):
        t_value = t.value
        bounds = np.zeros(k_max + 1)
        for weight, freq in _edge_weights(f, strip):
            r = rational_ratio(freq, t.ref_frequency)
            rot = weight * np.abs(np.exp(-1j * freq.value * (ks * t_value)) - 1.0)
            if r is not None:
                d = (t.multiplier * r).denominator
                # multiples of d land exactly on the lattice: zero contribution
                rot[ks % d == 0] = 0.0
            bounds += rot
    else:
        t_value = float(t)
        bounds = translation_bounds(f, ks * t_value, strip)
    certified = ks[bounds <= epsilon]
    # B is even in tau, so the certified set mirrors to negative k
    full = np.concatenate([-certified[::-1], certified[1:]]) if certified.size else certified
    if full.size < 2:
        return math.inf
    return float(np.max(np.diff(full)) * t_value)


def max_principle_check(f: ExponentialSum, tau: Period, kappa: float, m: int,
                        t_extent: float = DEFAULT_T_EXTENT) -> MaxPrincipleResult:
    """Check |f(s+i*tau) - f(s)| <= 2*M against a certified bound for M.

    For tau in the translation module the difference is a bounded
    analytic function on Re s > kappa, so by the maximum principle it is
    dominated by twice the line supremum of |f| at kappa; since such tau
    fix the unbounded part exactly, the bound only needs the bounded
    part.  Observed maxima are sampled on the strip (kappa, kappa + 2).
    """
    if m < 1:
        raise ValueError("max_principle_check: need m >= 1 samples")
    module = translation_module(f)
    if not module.is_cyclic:
        raise InvalidTau("translation module has no cyclic generator")
    r = tau.ratio(module.generator)
    if r is None or r <= 0 or r.denominator != 1:
        raise InvalidTau(f"tau must be a positive integer multiple of the generator; ratio is {r}")
    bound = 2.0 * f.bounded_part().sup_bound_halfplane(kappa)
    pts = strip_points(Strip(kappa, kappa + 2.0), t_extent, m)
    diffs = np.abs(f.evaluate_many(pts + 1j * tau.value) - f.evaluate_many(pts))
    max_observed = float(np.max(diffs))
    return MaxPrincipleResult(bound=bound, max_observed=max_observed,
                              passed=max_observed <= bound)
