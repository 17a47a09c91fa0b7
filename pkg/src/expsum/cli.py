"""Command-line front end.

All reports are deterministic: identical spec and flags give
byte-identical output.  Floats print with 17 significant digits,
rationals as "p/q" strings, and sampling uses fixed low-discrepancy
sequences, so outputs are diffable and safe to freeze as golden files.

Exit codes: 0 success, 1 parse/validation error, 2 not almost periodic
(no splitting exists), 3 numeric failure (non-finite evaluation).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Optional, Sequence

from . import cesaro, spectrum, splitting, translations
from .errors import ExpsumError, NonFiniteEvaluation, NotAlmostPeriodic
from .specfile import (LoadedSpec, canonical_document, float_str, laurent_json, load_spec,
                       period_json, term_row)
from .sums import Strip

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_ALMOST_PERIODIC = 2
EXIT_NUMERIC = 3

# Frozen CLI defaults (see tests/golden/defaults.json).
DEFAULTS = {
    "split.tau_multiple": 1,
    "cesaro.tau_multiple": 1,
    "cesaro.k_list": "100,1000,10000",
    "cesaro.strip": "0.5,1",
    "cesaro.samples": 100,
    "scan.epsilon": 0.1,
    "scan.strip": "0.5,1.5",
    "scan.tau_max": 50.0,
    "scan.step": 0.01,
    "progression.t": 1.0,
    "progression.epsilon": 0.25,
    "progression.strip": "0.5,1.5",
    "progression.kmax": 100000,
    "spectrum.sigma": 0.5,
    "spectrum.T": 10000.0,
    "spectrum.panels": 1000000,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved here, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _strip_arg(text: str) -> Strip:
    try:
        alpha, beta = (float(part) for part in text.split(","))
        return Strip(alpha, beta)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'alpha,beta' with alpha < beta: {exc}")


def _int_list_arg(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must be nonempty")
    return values


def _float_list_arg(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must be nonempty")
    return values


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="expsum",
                     description="Analyze analytic almost-periodic exponential sums on half-planes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", parents=[], help="canonical terms, classification, translation module")
    p.add_argument("spec", help="path to a sum-specification JSON document")

    p = sub.add_parser("split", help="split into periodic and bounded parts")
    p.add_argument("spec")
    p.add_argument("--tau-multiple", type=_positive_int, default=DEFAULTS["split.tau_multiple"],
                   help="split at tau = k * generator (default: %(default)s)")
    p.add_argument("--allow-trivial", action="store_true",
                   help="permit the trivial split p = 0 for bounded sums")

    p = sub.add_parser("cesaro", help="convergence profile of averaged translates (CSV)")
    p.add_argument("spec")
    p.add_argument("--tau-multiple", type=_positive_int, default=DEFAULTS["cesaro.tau_multiple"],
                   help="average translates by k * generator (default: %(default)s)")
    p.add_argument("--k-list", type=_int_list_arg, default=DEFAULTS["cesaro.k_list"],
                   help="ascending average lengths (default: %(default)s)")
    p.add_argument("--strip", type=_strip_arg, default=DEFAULTS["cesaro.strip"],
                   help="strip alpha,beta to sample (default: %(default)s)")
    p.add_argument("-n", "--samples", type=_positive_int, default=DEFAULTS["cesaro.samples"],
                   help="sample points per k (default: %(default)s)")

    p = sub.add_parser("scan", help="certify translation numbers on a grid")
    p.add_argument("spec")
    p.add_argument("--epsilon", type=float, default=DEFAULTS["scan.epsilon"],
                   help="translation tolerance (default: %(default)s)")
    p.add_argument("--strip", type=_strip_arg, default=DEFAULTS["scan.strip"],
                   help="strip alpha,beta (default: %(default)s)")
    p.add_argument("--tau-max", type=float, default=DEFAULTS["scan.tau_max"],
                   help="scan tau in [-tau_max, tau_max] (default: %(default)s)")
    p.add_argument("--step", type=float, default=DEFAULTS["scan.step"],
                   help="grid step (default: %(default)s)")
    p.add_argument("--csv", action="store_true",
                   help="emit per-grid-point CSV (tau, bound, status) instead of the JSON report")

    p = sub.add_parser("progression", help="largest gap between certified multiples of t")
    p.add_argument("spec")
    p.add_argument("--t", type=float, default=DEFAULTS["progression.t"],
                   help="progression stride (default: %(default)s)")
    p.add_argument("--epsilon", type=float, default=DEFAULTS["progression.epsilon"],
                   help="translation tolerance (default: %(default)s)")
    p.add_argument("--strip", type=_strip_arg, default=DEFAULTS["progression.strip"],
                   help="strip alpha,beta (default: %(default)s)")
    p.add_argument("--kmax", type=_positive_int, default=DEFAULTS["progression.kmax"],
                   help="check multiples k*t for |k| <= kmax (default: %(default)s)")

    p = sub.add_parser("spectrum", help="recover coefficients by vertical means")
    p.add_argument("spec")
    p.add_argument("--candidates", type=_float_list_arg, required=True,
                   help="comma-separated candidate frequencies")
    p.add_argument("--sigma", type=float, default=DEFAULTS["spectrum.sigma"],
                   help="line Re s = sigma (default: %(default)s)")
    p.add_argument("--T", type=float, default=DEFAULTS["spectrum.T"], dest="T",
                   help="half-length of the integration segment (default: %(default)s)")
    p.add_argument("--panels", type=_positive_int, default=DEFAULTS["spectrum.panels"],
                   help="trapezoid panel count (default: %(default)s)")

    return parser


def _emit_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False))
    sys.stdout.write("\n")


def _module_json(module: splitting.TranslationModule) -> dict:
    doc = {"kind": module.kind.value}
    if module.generator is not None:
        doc["generator"] = period_json(module.generator)
    return doc


def _cmd_describe(args) -> int:
    spec = load_spec(args.spec)
    f = spec.sum
    doc = canonical_document(spec)
    for row, term in zip(doc["terms"], f.terms):
        row["class"] = "unbounded" if term.frequency.exact_value < 0 else "bounded"
    doc["is_halfplane_ap"] = splitting.is_halfplane_ap(f)
    doc["translation_module"] = _module_json(splitting.translation_module(f))
    _emit_json(doc)
    return EXIT_OK


def _cmd_split(args) -> int:
    spec = load_spec(args.spec)
    f = spec.sum
    if args.allow_trivial and f.unbounded_part().is_zero:
        _emit_json({"tau": None,
                    "p": {"terms": []},
                    "b": {"terms": [term_row(t) for t in f.terms]},
                    "laurent": None})
        return EXIT_OK
    module = splitting.translation_module(f)
    tau = module.generator.times(args.tau_multiple) if module.is_cyclic else None
    result = splitting.bohr_split(f, tau)
    _emit_json({"tau": period_json(result.tau),
                "p": {"terms": [term_row(t) for t in result.p.terms]},
                "b": {"terms": [term_row(t) for t in result.b.terms]},
                "laurent": laurent_json(splitting.laurent_parameters(result.p))})
    return EXIT_OK


def _cmd_cesaro(args) -> int:
    spec = load_spec(args.spec)
    module = splitting.translation_module(spec.sum)
    tau = module.generator.times(args.tau_multiple) if module.is_cyclic else None
    profile = cesaro.convergence_profile(spec.sum, tau, args.k_list, args.strip, args.samples)
    if any(not math.isfinite(e) for e in profile.max_errors):
        raise NonFiniteEvaluation(math.nan, "non-finite average while profiling convergence")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["k", "maxError", "alpha", "beta", "n"])
    for k, err in zip(profile.k_values, profile.max_errors):
        writer.writerow([k, float_str(err), float_str(args.strip.alpha),
                         float_str(args.strip.beta), args.samples])
    return EXIT_OK


def _cmd_scan(args) -> int:
    spec = load_spec(args.spec)
    if args.csv:
        import numpy as np
        half = int(math.floor(args.tau_max / args.step + 1e-9))
        taus = np.arange(-half, half + 1) * args.step
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["tau", "bound", "status"])
        bounds = translations._bounds_on_grid(spec.sum, taus, args.strip)
        for tau, bound in zip(taus, bounds):
            status = "Certified" if bound <= args.epsilon else "Unknown"
            writer.writerow([float_str(tau), float_str(bound), status])
        return EXIT_OK
    report = translations.scan_translations(spec.sum, args.epsilon, args.strip,
                                            args.tau_max, args.step)
    _emit_json({
        "epsilon": float_str(report.epsilon),
        "strip": {"alpha": float_str(report.strip.alpha), "beta": float_str(report.strip.beta)},
        "grid": {"start": float_str(report.grid_start), "step": float_str(report.grid_step),
                 "count": report.grid_count},
        "certified_taus": [float_str(t) for t in report.certified_taus],
        "max_gap": float_str(report.max_gap),
    })
    return EXIT_OK


def _cmd_progression(args) -> int:
    spec = load_spec(args.spec)
    gap = translations.progression_intersection_gap(spec.sum, args.t, args.epsilon,
                                                    args.strip, args.kmax)
    _emit_json({
        "t": float_str(args.t),
        "epsilon": float_str(args.epsilon),
        "strip": {"alpha": float_str(args.strip.alpha), "beta": float_str(args.strip.beta)},
        "k_max": args.kmax,
        "gap": float_str(gap) if math.isfinite(gap) else "inf",
    })
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    spec = load_spec(args.spec)
    estimate = spectrum.recover_spectrum(spec.sum, args.candidates, args.sigma,
                                         args.T, args.panels)
    _emit_json({
        "sigma": float_str(estimate.sigma),
        "T": float_str(estimate.T),
        "panels": estimate.panels,
        "entries": [{"lambda": float_str(lam), "re": float_str(c.real), "im": float_str(c.imag)}
                    for lam, c in estimate.entries],
    })
    return EXIT_OK


_COMMANDS = {
    "describe": _cmd_describe,
    "split": _cmd_split,
    "cesaro": _cmd_cesaro,
    "scan": _cmd_scan,
    "progression": _cmd_progression,
    "spectrum": _cmd_spectrum,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NotAlmostPeriodic as exc:
        print(f"expsum: {exc}", file=sys.stderr)
        return EXIT_NOT_ALMOST_PERIODIC
    except NonFiniteEvaluation as exc:
        print(f"expsum: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ExpsumError, ValueError) as exc:
        print(f"expsum: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
