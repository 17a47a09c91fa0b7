"""Finite exponential sums a_1*exp(-mu_1*s) + ... + a_n*exp(-mu_n*s).

Sign convention: a term grows as Re s -> +inf exactly when its frequency
has negative value.  Coefficients are double-precision complex; the
frequency structure stays exact through the ``frequencies`` layer, which
is where all the theory-relevant decisions (periods, commensurability)
are made.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .frequencies import Frequency, Period, is_period_multiple


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class Term:
    """One summand a*exp(-mu*s)."""

    coefficient: complex
    frequency: Frequency

    def __post_init__(self):
        object.__setattr__(self, "coefficient", complex(self.coefficient))


@dataclass(frozen=True)
class Strip:
    """Vertical strip alpha < Re s < beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise ValueError(f"strip requires alpha < beta, got ({self.alpha}, {self.beta})")


TermLike = Union[Term, tuple]


class ExponentialSum:
    """Canonical finite exponential sum.

    Canonical form: frequencies pairwise distinct as exact vectors,
    terms sorted by numeric frequency value (exact lexicographic
    tie-break), no zero coefficients.  Instances are immutable and all
    operations return new sums, so values are safe to share.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[TermLike] = ()):
        acc: dict[Frequency, complex] = {}
        for item in terms:
            if not isinstance(item, Term):
                item = Term(*item)
            acc[item.frequency] = acc.get(item.frequency, 0j) + item.coefficient
        kept = [(f, c) for f, c in acc.items() if c != 0]
        kept.sort(key=lambda fc: fc[0].sort_key())
        self._terms = tuple(Term(c, f) for f, c in kept)

    @property
    def terms(self) -> tuple[Term, ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExponentialSum) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "ExponentialSum(0)"
        body = " + ".join(f"({t.coefficient})*exp(-({t.frequency!r})*s)" for t in self._terms)
        return f"ExponentialSum({body})"

    # -- evaluation ----------------------------------------------------

    def evaluate(self, s: complex) -> complex:
        """Value at s = sigma + i*t.  Overflow of an unbounded term deep in
        the left half-plane yields a non-finite result, never an exception."""
        total = 0j
        for term in self._terms:
            try:
                e = cmath.exp(-term.frequency.value * s)
            except OverflowError:
                return complex(math.inf, math.inf)
            total += term.coefficient * e
        return total

    def evaluate_many(self, s: np.ndarray) -> np.ndarray:
        """Vectorized evaluation over an array of complex points."""
        s = np.asarray(s, dtype=complex)
        total = np.zeros_like(s)
        with np.errstate(over="ignore", invalid="ignore"):
            for term in self._terms:
                total += term.coefficient * np.exp(-term.frequency.value * s)
        return total

    # -- translation ---------------------------------------------------

    def translate(self, tau: float) -> "ExponentialSum":
        """Vertical translation f(s + i*tau): rotates each coefficient by
        exp(-i*mu*tau) numerically; frequencies are untouched."""
        return ExponentialSum(
            Term(t.coefficient * cmath.exp(-1j * t.frequency.value * tau), t.frequency)
            for t in self._terms)

    def translate_exact(self, period: Period) -> "ExponentialSum":
        """Translation by an exact period: coefficients of frequencies in the
        period's lattice are left untouched (no float rotation), the rest are
        rotated numerically.  Lets period invariance be tested as identity."""
        rotated = []
        changed = False
        tau = period.value
        for t in self._terms:
            if is_period_multiple(t.frequency, period):
                rotated.append(t)
            else:
                changed = True
                rotated.append(Term(t.coefficient * cmath.exp(-1j * t.frequency.value * tau),
                                    t.frequency))
        if not changed:
            return self
        return ExponentialSum(rotated)

    # -- bounded/unbounded partition ------------------------------------

    def unbounded_part(self) -> "ExponentialSum":
        """Terms growing as Re s -> inf (frequency value < 0, decided exactly)."""
        return ExponentialSum(t for t in self._terms if t.frequency.exact_value < 0)

    def bounded_part(self) -> "ExponentialSum":
        return ExponentialSum(t for t in self._terms if t.frequency.exact_value >= 0)

    # -- certified sup bounds --------------------------------------------

    def sup_bound_strip(self, strip: Strip) -> float:
        """Upper bound for sup |f| over the closed strip: each term's modulus
        is monotone in sigma, so it peaks at one of the two edges."""
        total = 0.0
        for t in self._terms:
            mu = t.frequency.value
            total += abs(t.coefficient) * max(_exp(-mu * strip.alpha), _exp(-mu * strip.beta))
        return total

    def sup_bound_halfplane(self, kappa: float) -> float:
        """Upper bound for sup |f| over Re s >= kappa; +inf as soon as any
        term is unbounded there."""
        total = 0.0
        for t in self._terms:
            if t.frequency.exact_value < 0:
                return math.inf
            total += abs(t.coefficient) * _exp(-t.frequency.value * kappa)
        return total

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "ExponentialSum") -> "ExponentialSum":
        if not isinstance(other, ExponentialSum):
            return NotImplemented
        return ExponentialSum(self._terms + other._terms)

    def __sub__(self, other: "ExponentialSum") -> "ExponentialSum":
        if not isinstance(other, ExponentialSum):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self) -> "ExponentialSum":
        return self.scale(-1)

    def scale(self, c: complex) -> "ExponentialSum":
        c = complex(c)
        if c == 0:
            return ExponentialSum()
        return ExponentialSum(Term(c * t.coefficient, t.frequency) for t in self._terms)

    def __mul__(self, c):
        if isinstance(c, (int, float, complex)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__


def msup_sample(f: ExponentialSum, sigma: float, t_max: float, n: int) -> float:
    """Empirical lower bound for the line supremum sup_t |f(sigma + i*t)|,
    taken over n equally spaced samples of t in [-t_max, t_max]."""
    if n < 2:
        raise ValueError("msup_sample: need n >= 2 samples")
    if t_max <= 0:
        raise ValueError("msup_sample: t_max must be positive")
    ts = np.linspace(-t_max, t_max, n)
    return float(np.max(np.abs(f.evaluate_many(sigma + 1j * ts))))
