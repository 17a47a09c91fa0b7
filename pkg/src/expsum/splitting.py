"""Splitting unbounded almost-periodic sums into periodic + bounded parts.

The central fact: an exponential sum that is unbounded on right
half-planes is almost periodic there exactly when its unbounded
frequencies are pairwise commensurable, and then its translation module
is the cyclic group generated by the common period t of the unbounded
part.  Averaging the vertical translates by any tau in that module
converges to the sub-sum of terms whose frequencies lie on the lattice
2*pi/tau * Z; applied termwise the limit is exactly the indicator of
mu*tau in 2*pi*Z, so the split is computed here as an exact frequency
projection.  The ``cesaro`` module provides the independent numerical
oracle for this projection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AlreadyBounded, ConstantFunction, InvalidTau, NotAlmostPeriodic
from .frequencies import Frequency, Period, common_period, is_period_multiple, rational_ratio
from .sums import ExponentialSum


class ModuleKind(enum.Enum):
    ALL_REALS = "AllReals"
    CYCLIC = "Cyclic"
    ZERO = "Zero"


@dataclass(frozen=True)
class TranslationModule:
    """The set of vertical translations under which f moves arbitrarily little.

    AllReals: f is bounded on right half-planes (every tau qualifies).
    Cyclic:   the integer multiples of a generator period.
    Zero:     only tau = 0; the sum is unbounded but not almost periodic.
    """

    kind: ModuleKind
    generator: Optional[Period] = None

    def __post_init__(self):
        if (self.kind is ModuleKind.CYCLIC) != (self.generator is not None):
            raise ValueError("cyclic modules carry a generator; the others do not")

    @classmethod
    def all_reals(cls) -> "TranslationModule":
        return cls(ModuleKind.ALL_REALS)

    @classmethod
    def cyclic(cls, generator: Period) -> "TranslationModule":
        return cls(ModuleKind.CYCLIC, generator)

    @classmethod
    def zero(cls) -> "TranslationModule":
        return cls(ModuleKind.ZERO)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is ModuleKind.CYCLIC


@dataclass(frozen=True)
class SplitResult:
    """f = p + b with p periodic (all frequencies on tau's lattice, includes
    every unbounded term) and b bounded on right half-planes."""

    p: ExponentialSum
    b: ExponentialSum
    tau: Period


@dataclass(frozen=True)
class LaurentSeries:
    """Periodic sum rewritten as sum_n a_n * exp(-n*base*s) with base = 2*pi/t.

    Entries with n < 0 form the unbounded part.  The base frequency is
    exact; its numeric value is ``base_value``.
    """

    base_frequency: Frequency
    coefficients: dict[int, complex]

    @property
    def base_value(self) -> float:
        return self.base_frequency.value


def _unbounded_frequencies(f: ExponentialSum) -> list[Frequency]:
    """Absolute values (as exact vectors) of the unbounded exponents."""
    return [-t.frequency for t in f.terms if t.frequency.exact_value < 0]


def is_halfplane_ap(f: ExponentialSum) -> bool:
    """Is f almost periodic on every half-plane Re s > kappa > 0?

    For finite sums this reduces to pairwise commensurability of the
    unbounded frequencies (vacuously true when there are none).
    """
    negs = _unbounded_frequencies(f)
    if not negs:
        return True
    pivot = negs[0]
    return all(rational_ratio(nu, pivot) is not None for nu in negs[1:])


def translation_module(f: ExponentialSum) -> TranslationModule:
    negs = _unbounded_frequencies(f)
    if not negs:
        return TranslationModule.all_reals()
    if not is_halfplane_ap(f):
        return TranslationModule.zero()
    return TranslationModule.cyclic(common_period(negs))


def bohr_split(f: ExponentialSum, tau: Optional[Period] = None) -> SplitResult:
    """Split f = p + b by exact frequency projection onto tau's lattice.

    p collects the terms with mu*tau in 2*pi*Z (among them every
    unbounded term and every constant), b the rest; b is bounded on every
    half-plane Re s > kappa > 0.  tau defaults to the generator of the
    translation module and must otherwise be an exact positive integer
    multiple of it.
    """
    module = translation_module(f)
    if module.kind is ModuleKind.ALL_REALS:
        raise AlreadyBounded("sum has no unbounded part; the split would be the trivial f = 0 + f")
    if module.kind is ModuleKind.ZERO:
        raise NotAlmostPeriodic("unbounded frequencies are incommensurable; translation module is {0}")
    generator = module.generator
    if tau is None:
        tau = generator
    else:
        r = tau.ratio(generator)
        if r is None or r <= 0 or r.denominator != 1:
            raise InvalidTau(f"tau must be a positive integer multiple of the generator; ratio is {r}")
    p_terms = []
    b_terms = []
    for term in f.terms:
        if is_period_multiple(term.frequency, tau):
            p_terms.append(term)
        else:
            b_terms.append(term)
    return SplitResult(ExponentialSum(p_terms), ExponentialSum(b_terms), tau)


def fundamental_period(p: ExponentialSum) -> Period:
    """Smallest t > 0 with p(s + i*t) = p(s).

    The condition mu*t in 2*pi*Z ignores the sign of mu, so negative
    frequencies are negated before taking the common period.
    """
    freqs = []
    for term in p.terms:
        nu = term.frequency
        if nu.is_zero:
            continue
        freqs.append(-nu if nu.exact_value < 0 else nu)
    if not freqs:
        raise ConstantFunction("constant sums have no fundamental period")
    return common_period(freqs)


def laurent_parameters(p: ExponentialSum) -> LaurentSeries:
    """Index the terms of a periodic sum by integers: mu_j = n_j * (2*pi/t),
    with t the fundamental period.  The indices are computed exactly."""
    t = fundamental_period(p)
    base = t.ref_frequency.scale(1 / t.multiplier)
    coefficients: dict[int, complex] = {}
    for term in p.terms:
        r = rational_ratio(term.frequency, base)
        if r is None or r.denominator != 1:
            raise AssertionError(f"frequency {term.frequency!r} is not an integer multiple "
                                 f"of the base; fundamental_period is broken")
        coefficients[int(r)] = term.coefficient
    return LaurentSeries(base, coefficients)


def uniqueness_check(f: ExponentialSum, tau1: Period, tau2: Period) -> bool:
    """Do splits at two different module elements agree on the unbounded part?

    Must always be True for valid inputs; a False return is a library
    defect and is surfaced to the tests as such.
    """
    p1 = bohr_split(f, tau1).p
    p2 = bohr_split(f, tau2).p
    return p1.unbounded_part() == p2.unbounded_part()
