"""Command-line interface: ``ffs analyze|rotate|synthesize|fracderiv|verify``.

Exit codes: 0 success, 1 a self-check property failed, 2 malformed input,
3 Nyquist violation, 4 singular constant term.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import io, verify
from .analysis import analyze_classical, analyze_fractional
from .complexform import complex_coefficients, synthesize_complex
from .errors import FFSError, MalformedInput, NyquistViolation, SingularDC
from .fracderiv import frac_derivative_coeffs, frac_derivative_signal
from .rotation import from_fractional, to_fractional
from .signals import SignalKind, SignalSpec, sample
from .synthesis import synthesize_ffs, synthesize_linear_form
from .types import FractionalOrder, RealCoefficients

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_MALFORMED = 2
EXIT_NYQUIST = 3
EXIT_SINGULAR = 4

SIGNAL_KINDS = [k.value for k in SignalKind if k is not SignalKind.TrigPolynomial]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _order(value: str) -> float:
    try:
        return FractionalOrder(float(value)).alpha
    except (ValueError, FFSError) as exc:
        raise argparse.ArgumentTypeError(f"invalid alpha {value!r}: {exc}") from None


def _positive_int(minimum: int):
    def parse(value: str) -> int:
        try:
            n = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
        if n < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {n}")
        return n

    return parse


def _grid(period: float, points: int) -> np.ndarray:
    return np.arange(points) * (period / points)


def _resolve_order(coeffs: RealCoefficients, alpha: float | None) -> tuple[RealCoefficients, float]:
    """Pick the evaluation order and strip the tag of a fractional-basis file."""
    tag = coeffs.basis
    if tag.kind == "fractional":
        if alpha is not None and alpha != tag.alpha:
            raise MalformedInput(
                f"coefficients are on the order-{tag.alpha} basis but --alpha {alpha} was given"
            )
        return coeffs.as_plain(), tag.alpha
    return coeffs.as_plain(), 0.0 if alpha is None else alpha


def cmd_analyze(args) -> int:
    if args.input is not None:
        signal = io.read_samples(args.input, args.period)
    else:
        if args.period is None:
            raise MalformedInput("--period is required with --signal")
        spec = SignalSpec(SignalKind(args.signal), period=args.period, amplitude=args.amplitude)
        signal = sample(spec, args.samples)
    if args.alpha is None:
        coeffs = analyze_classical(signal, args.nmax)
    else:
        coeffs = analyze_fractional(signal, args.alpha, args.nmax)
    io.write_coeffs(args.output, coeffs)
    return EXIT_OK


def cmd_rotate(args) -> int:
    coeffs = io.read_coeffs(args.coeffs)
    if args.inverse:
        out = from_fractional(coeffs, args.alpha)
    else:
        out = to_fractional(coeffs, args.alpha)
    io.write_coeffs(args.output, out)
    return EXIT_OK


def cmd_synthesize(args) -> int:
    coeffs, alpha = _resolve_order(io.read_coeffs(args.coeffs), args.alpha)
    t = _grid(coeffs.period, args.points)
    if args.form == "ffs":
        io.write_curve(args.output, t, {"value": synthesize_ffs(coeffs, alpha, t)})
    elif args.form == "linear":
        io.write_curve(args.output, t, {"value": synthesize_linear_form(to_fractional(coeffs, alpha), t)})
    else:
        z = synthesize_complex(complex_coefficients(coeffs, alpha), t)
        io.write_curve(args.output, t, {"re": z.real, "im": z.imag})
    return EXIT_OK


def coeffs_sibling(path: str | os.PathLike) -> Path:
    """``curve.csv`` -> ``curve.coeffs.json`` next to it."""
    path = Path(path)
    return path.with_name(f"{path.stem}.coeffs.json")


def cmd_fracderiv(args) -> int:
    coeffs = io.read_coeffs(args.coeffs).as_plain()
    t = _grid(coeffs.period, args.points)
    io.write_coeffs(coeffs_sibling(args.output), frac_derivative_coeffs(coeffs, args.alpha, args.scaled))
    io.write_curve(args.output, t, {"value": frac_derivative_signal(coeffs, args.alpha, args.scaled, t)})
    return EXIT_OK


def _default_seed() -> int:
    env = os.environ.get("FFS_SEED")
    if env is None:
        return verify.DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise MalformedInput(f"FFS_SEED must be an integer, got {env!r}") from None


def cmd_verify(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    results = verify.run(args.tolerance, seed)
    sys.stdout.write(verify.format_report(results, args.tolerance, seed))
    return EXIT_OK if all(r.passed for r in results) else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ffs", description="Fourier series in fractional dimensional space.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="extract coefficients from samples")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="CSV file with header t,value covering one period")
    src.add_argument("--signal", choices=SIGNAL_KINDS, help="built-in test waveform")
    p.add_argument("--amplitude", type=float, default=1.0)
    p.add_argument("--period", type=float, help="signal period (inferred from --input if omitted)")
    p.add_argument("--samples", type=_positive_int(2), default=4096, help="samples per period for --signal")
    p.add_argument("--nmax", type=_positive_int(0), required=True)
    p.add_argument("--alpha", type=_order, help="project onto the order-alpha fractional basis")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rotate", help="rotate coefficients into (or out of) order alpha")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--alpha", type=_order, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("synthesize", help="evaluate f(t; alpha) over one period")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--alpha", type=_order)
    p.add_argument("--points", type=_positive_int(2), required=True)
    p.add_argument("--form", choices=["ffs", "linear", "complex"], default="ffs")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("fracderiv", help="fractional derivative of a classical series")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--alpha", type=_order, required=True)
    p.add_argument("--scaled", action="store_true", help="include the (n omega)^alpha gain")
    p.add_argument("--points", type=_positive_int(2), required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_fracderiv)

    p = sub.add_parser("verify", help="run the numerical self-check suite")
    p.add_argument("--tolerance", type=float, default=verify.DEFAULT_TOLERANCE)
    p.add_argument("--seed", type=int, default=None, help="default 42, or $FFS_SEED")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NyquistViolation as exc:
        print(f"ffs: {exc}", file=sys.stderr)
        return EXIT_NYQUIST
    except SingularDC as exc:
        print(f"ffs: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except FFSError as exc:
        print(f"ffs: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
