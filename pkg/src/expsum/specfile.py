"""The JSON sum-specification document and its (de)serialization.

Schema::

    {
      "basis": [{"label": "sqrt2", "value": "1.41421356237309504880168872420969808"}, ...],
      "terms": [{"re": "2", "im": "0",
                 "frequency": [{"label": "sqrt2", "numerator": -1, "denominator": 1}]}, ...],
      "guards": {"kappa": "0.25"}          # optional
    }

Basis values are decimal strings (30+ significant digits recommended for
irrational constants) and are asserted rationally independent.  A term
with frequency entries c_1*b_1 + ... denotes a*exp(-mu*s) with
mu = sum c_i * value(b_i).  Documents round-trip: the ``describe``
output of the CLI is itself a valid document that reproduces the
identical canonical sum.

All floats emitted anywhere in reports go through :func:`float_str`
(17 significant digits, enough to reproduce the double exactly);
rationals are emitted as "p/q" strings so no exact data ever passes
through a float.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import IO, Optional, Union

from .errors import SpecError
from .frequencies import BasisSymbol, Frequency, Period
from .splitting import LaurentSeries
from .sums import ExponentialSum, Term


@dataclass(frozen=True)
class LoadedSpec:
    basis: tuple[BasisSymbol, ...]
    sum: ExponentialSum
    kappa: Optional[float] = None


# -- formatting ---------------------------------------------------------

def float_str(x: float) -> str:
    """Fixed 17-significant-digit rendering; round-trips any double."""
    return format(float(x), ".17g")


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def frequency_json(freq: Frequency) -> list[dict]:
    return [{"label": sym.label, "numerator": q.numerator, "denominator": q.denominator}
            for sym, q in freq.coords]


def frequency_expr(freq: Frequency) -> str:
    """Human-oriented rendering like "1/1*one + -1/2*sqrt2"; "0" when zero."""
    if freq.is_zero:
        return "0"
    return " + ".join(f"{fraction_str(q)}*{sym.label}" for sym, q in freq.coords)


def period_json(period: Period) -> dict:
    return {
        "display": f"2π·{fraction_str(period.multiplier)} / ν({frequency_expr(period.ref_frequency)})",
        "multiplier": fraction_str(period.multiplier),
        "ref_frequency": frequency_json(period.ref_frequency),
        "value": float_str(period.value),
    }


def term_row(term: Term) -> dict:
    return {
        "re": float_str(term.coefficient.real),
        "im": float_str(term.coefficient.imag),
        "frequency": frequency_json(term.frequency),
    }


def laurent_json(series: LaurentSeries) -> dict:
    return {
        "base_frequency": frequency_json(series.base_frequency),
        "base_value": float_str(series.base_value),
        "coefficients": [{"n": n, "re": float_str(c.real), "im": float_str(c.imag)}
                         for n, c in sorted(series.coefficients.items())],
    }


def basis_json(basis: tuple[BasisSymbol, ...]) -> list[dict]:
    return [{"label": sym.label, "value": str(sym.value)} for sym in basis]


# -- parsing ------------------------------------------------------------

def _require(cond: bool, message: str):
    if not cond:
        raise SpecError(message)


def _as_float(value, what: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise SpecError(f"{what} must be a number or decimal string, got {value!r}") from None


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SpecError(f"{what} must be an integer, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise SpecError(f"{what} must be an integer, got {value!r}") from None


def parse_document(doc: dict) -> LoadedSpec:
    """Validate a decoded document and build the canonical sum."""
    _require(isinstance(doc, dict), "document must be a JSON object")
    _require(isinstance(doc.get("basis"), list) and doc["basis"],
             "document needs a nonempty 'basis' list")
    symbols: dict[str, BasisSymbol] = {}
    order: list[BasisSymbol] = []
    for entry in doc["basis"]:
        _require(isinstance(entry, dict), "basis entries must be objects")
        label = entry.get("label")
        _require(isinstance(label, str) and label != "", "basis entries need a string 'label'")
        _require(label not in symbols, f"duplicate basis label {label!r}")
        raw = entry.get("value")
        _require(isinstance(raw, (str, int, float)), f"basis {label!r} needs a decimal 'value'")
        try:
            value = Decimal(str(raw))
        except InvalidOperation:
            raise SpecError(f"basis {label!r}: {raw!r} is not a decimal") from None
        _require(value != 0, f"basis {label!r} must have nonzero value")
        sym = BasisSymbol(label, value)
        symbols[label] = sym
        order.append(sym)

    terms = []
    for i, entry in enumerate(doc.get("terms", [])):
        _require(isinstance(entry, dict), f"term {i}: must be an object")
        re = _as_float(entry.get("re", 0), f"term {i}: 're'")
        im = _as_float(entry.get("im", 0), f"term {i}: 'im'")
        coords = []
        _require(isinstance(entry.get("frequency", []), list), f"term {i}: 'frequency' must be a list")
        for part in entry.get("frequency", []):
            _require(isinstance(part, dict), f"term {i}: frequency entries must be objects")
            label = part.get("label")
            _require(label in symbols, f"term {i}: undeclared basis label {label!r}")
            num = _as_int(part.get("numerator", 1), f"term {i}: numerator")
            den = _as_int(part.get("denominator", 1), f"term {i}: denominator")
            _require(den != 0, f"term {i}: zero denominator for label {label!r}")
            coords.append((symbols[label], Fraction(num, den)))
        terms.append(Term(complex(re, im), Frequency(coords)))

    kappa = None
    guards = doc.get("guards")
    if guards is not None:
        _require(isinstance(guards, dict), "'guards' must be an object")
        if "kappa" in guards:
            kappa = _as_float(guards["kappa"], "guards.kappa")
    return LoadedSpec(basis=tuple(order), sum=ExponentialSum(terms), kappa=kappa)


def load_spec(source: Union[str, IO[str]]) -> LoadedSpec:
    """Load a document from a path or an open text stream."""
    if isinstance(source, str):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecError(f"cannot read {source!r}: {exc}") from None
    else:
        text = source.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return parse_document(doc)


def canonical_document(spec: LoadedSpec) -> dict:
    """Re-emittable document for the canonical sum (round-trips exactly)."""
    doc = {
        "basis": basis_json(spec.basis),
        "terms": [term_row(t) for t in spec.sum.terms],
    }
    if spec.kappa is not None:
        doc["guards"] = {"kappa": float_str(spec.kappa)}
    return doc
