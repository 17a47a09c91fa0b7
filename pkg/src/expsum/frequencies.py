"""Exact arithmetic on frequencies spanned by declared basis constants.

A frequency is a rational linear combination of a few named real
constants (``one``, ``sqrt2``, ...) that the user asserts to be
rationally independent.  Under that assertion every commensurability
question -- ratios, common periods, membership of a frequency in the
lattice of a period -- has an exact answer computed with
``fractions.Fraction`` arithmetic on the coordinates.  Floating point
enters only when a numeric value is finally needed.

Basis constants are ingested as decimal strings (30+ significant digits
recommended for irrationals) and kept as ``decimal.Decimal``, so the
numeric value of a frequency is itself an exact rational of the declared
digits; signs and zero tests on values are decided exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import IncommensurableFrequencies

TWO_PI = 2.0 * math.pi

RationalLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class BasisSymbol:
    """A named real constant, e.g. ``sqrt2 = 1.41421356237309504880...``.

    The set of basis values in play is *asserted* rationally
    independent; nothing here attempts to verify that (it is undecidable
    for arbitrary reals), it only makes the exactness of the frequency
    arithmetic conditional on the assertion.
    """

    label: str
    value: Decimal

    def __post_init__(self):
        if not self.label:
            raise ValueError("basis symbol label must be a nonempty string")
        if self.value == 0:
            raise ValueError(f"basis symbol {self.label!r} must have nonzero value")

    @property
    def float_value(self) -> float:
        return float(self.value)


def symbol(label: str, value: str | Decimal) -> BasisSymbol:
    """Convenience constructor accepting the decimal value as a string."""
    return BasisSymbol(label, Decimal(value))


class Frequency:
    """An exact frequency: finite map from basis symbols to rationals.

    The empty combination is the zero frequency.  Construction merges
    duplicate symbols, drops zero coordinates and orders coordinates by
    label, so two frequencies are equal exactly when they are the same
    rational vector.
    """

    __slots__ = ("_coords", "_exact", "_value")

    def __init__(self, coords: Mapping[BasisSymbol, RationalLike] | Iterable = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        acc: dict[BasisSymbol, Fraction] = {}
        for sym, q in items:
            acc[sym] = acc.get(sym, Fraction(0)) + Fraction(q)
        cleaned = sorted(((s, q) for s, q in acc.items() if q != 0),
                         key=lambda item: item[0].label)
        for (a, _), (b, _) in zip(cleaned, cleaned[1:]):
            if a.label == b.label:
                raise ValueError(f"duplicate basis label {a.label!r} with conflicting values")
        self._coords: tuple[tuple[BasisSymbol, Fraction], ...] = tuple(cleaned)
        exact = Fraction(0)
        for sym, q in self._coords:
            exact += Fraction(sym.value) * q
        self._exact = exact
        self._value = float(exact)

    @property
    def coords(self) -> tuple[tuple[BasisSymbol, Fraction], ...]:
        return self._coords

    @property
    def is_zero(self) -> bool:
        return not self._coords

    @property
    def value(self) -> float:
        """Numeric value in double precision (exact rational, then one rounding)."""
        return self._value

    @property
    def exact_value(self) -> Fraction:
        """Numeric value as an exact rational of the declared basis digits."""
        return self._exact

    def scale(self, q: RationalLike) -> "Frequency":
        q = Fraction(q)
        return Frequency((s, c * q) for s, c in self._coords)

    def __neg__(self) -> "Frequency":
        return self.scale(-1)

    def __add__(self, other: "Frequency") -> "Frequency":
        if not isinstance(other, Frequency):
            return NotImplemented
        return Frequency(tuple(self._coords) + tuple(other._coords))

    def __sub__(self, other: "Frequency") -> "Frequency":
        if not isinstance(other, Frequency):
            return NotImplemented
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self._coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Frequency) and self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __repr__(self) -> str:
        if not self._coords:
            return "Frequency(0)"
        body = " + ".join(f"{q}*{s.label}" for s, q in self._coords)
        return f"Frequency({body})"

    def sort_key(self):
        """Canonical ordering key: numeric value, then exact lexicographic."""
        return (self._exact, tuple((s.label, q) for s, q in self._coords))


ZERO_FREQUENCY = Frequency()


def freq_value(f: Frequency) -> float:
    return f.value


def rational_ratio(f1: Frequency, f2: Frequency) -> Optional[Fraction]:
    """Exact q with f1 = q*f2 as vectors, or None if no such rational exists.

    f1 = 0 yields q = 0; f2 = 0 is a precondition violation.
    """
    if f2.is_zero:
        raise ValueError("rational_ratio: second frequency must be nonzero")
    if f1.is_zero:
        return Fraction(0)
    c1, c2 = f1.coords, f2.coords
    if len(c1) != len(c2):
        return None
    q = None
    for (s1, a), (s2, b) in zip(c1, c2):
        if s1 != s2:
            return None
        r = a / b
        if q is None:
            q = r
        elif r != q:
            return None
    return q


class Period:
    """An exact vertical period t = 2*pi*multiplier / value(ref_frequency).

    The reference frequency is normalized so that its lexicographically
    first coordinate is +/-1, which makes structural equality decide
    exact equality of the periods themselves: t1 = t2 iff the normalized
    pairs coincide.
    """

    __slots__ = ("_ref", "_multiplier")

    def __init__(self, ref_frequency: Frequency, multiplier: RationalLike):
        multiplier = Fraction(multiplier)
        if ref_frequency.is_zero or ref_frequency.exact_value <= 0:
            raise ValueError("period reference frequency must have positive value")
        if multiplier <= 0:
            raise ValueError("period multiplier must be positive")
        lead = abs(ref_frequency.coords[0][1])
        self._ref = ref_frequency.scale(1 / lead)
        self._multiplier = multiplier / lead

    @property
    def ref_frequency(self) -> Frequency:
        return self._ref

    @property
    def multiplier(self) -> Fraction:
        return self._multiplier

    @property
    def value(self) -> float:
        """Numeric length of the period, 2*pi*multiplier/value(ref)."""
        return TWO_PI * float(self._multiplier / self._ref.exact_value)

    def times(self, k: RationalLike) -> "Period":
        """The period scaled by a positive rational (k*t)."""
        return Period(self._ref, self._multiplier * Fraction(k))

    def ratio(self, other: "Period") -> Optional[Fraction]:
        """Exact t_self/t_other, or None when the references are incommensurable."""
        r = rational_ratio(self._ref, other._ref)
        if r is None:
            return None
        return self._multiplier / (other._multiplier * r)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Period)
                and self._ref == other._ref
                and self._multiplier == other._multiplier)

    def __hash__(self) -> int:
        return hash((self._ref, self._multiplier))

    def __repr__(self) -> str:
        return f"Period(2*pi*{self._multiplier}/{self._ref!r})"


def common_period(freqs: Iterable[Frequency]) -> Period:
    """Smallest t > 0 with nu*t in 2*pi*Z for every input frequency.

    All inputs must be nonzero with positive numeric value (callers pass
    absolute values of exponents).  With ratios nu_j = (p_j/q_j)*nu_1 in
    lowest terms, the answer is t = 2*pi*rho/nu_1 with
    rho = lcm(q_j)/gcd(p_j): exact and O(n), no search.
    """
    freqs = list(freqs)
    if not freqs:
        raise ValueError("common_period: need at least one frequency")
    pivot = freqs[0]
    nums: list[int] = []
    dens: list[int] = []
    for nu in freqs:
        if nu.is_zero or nu.exact_value <= 0:
            raise ValueError("common_period: frequencies must have positive value")
        r = rational_ratio(nu, pivot)
        if r is None:
            raise IncommensurableFrequencies(
                f"no rational ratio between {nu!r} and {pivot!r}")
        nums.append(r.numerator)
        dens.append(r.denominator)
    rho = Fraction(math.lcm(*dens), math.gcd(*nums))
    return Period(pivot, rho)


def is_period_multiple(mu: Frequency, period: Period) -> bool:
    """Exact decision of mu*t in 2*pi*Z for t the given period.

    Sound under the rational-independence assertion: if mu has no
    rational ratio to the period's reference, the product cannot be a
    multiple of 2*pi.
    """
    if mu.is_zero:
        return True
    r = rational_ratio(mu, period.ref_frequency)
    if r is None:
        return False
    return (period.multiplier * r).denominator == 1
