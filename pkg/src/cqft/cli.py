"""Command-line interface.

Exit codes: 0 success or PASS, 1 usage or parse error, 2 invalid axis,
3 degenerate axis used on a signal with a vector part.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .algebra import (
    DEFAULT_TOL,
    PAPER_AXIS,
    QI,
    CQuat,
    exp_axis,
    im_part,
    is_null_array,
    is_root_minus_one,
    re_part,
    seminorm,
    seminorm_array,
)
from .bench import run_bench
from .errors import DegenerateAxisMisuse, InvalidAxis
from .sampling import random_real_signal, random_signal
from .signalfile import read_signal, write_signal
from .transform import DEGENERATE_I, TransformSpec, cqdft, null_diagnostics, transform

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_AXIS = 2
EXIT_DEGENERATE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_axis(text: str):
    """``I`` for the degenerate axis, otherwise six reals ``Re x, Im x, Re y, Im y, Re z, Im z``."""
    text = text.strip()
    if text == "I":
        return DEGENERATE_I
    try:
        v = [float(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse axis {text!r}") from None
    if len(v) != 6 or not all(math.isfinite(c) for c in v):
        raise UsageError(f"axis needs six finite reals, got {text!r}")
    return CQuat(0, complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5]))


def format_axis(axis) -> str:
    if axis is DEGENERATE_I:
        return "I"
    return ",".join("%.17g" % p for c in (axis.x, axis.y, axis.z) for p in (c.real, c.imag))


def _cplx(c: complex) -> str:
    return "%.12g%+.12gI" % (c.real, c.imag)


def _spec(args, default_axis=None) -> TransformSpec:
    text = args.axis if args.axis is not None else default_axis
    if text is None:
        raise UsageError(f"{args.command} requires --axis")
    return TransformSpec(axis=parse_axis(text), side=args.side, direction=args.direction, tol=args.tol)


def cmd_validate_axis(args) -> int:
    text = args.axis_pos if args.axis_pos is not None else args.axis
    if text is None:
        raise UsageError("validate-axis needs an axis")
    axis = parse_axis(text)
    if axis is DEGENERATE_I:
        print("axis: I (degenerate; valid only for signals without a vector part)")
        return EXIT_OK
    re, im = re_part(axis), im_part(axis)
    ok = is_root_minus_one(axis, args.tol)
    print(f"axis: {format_axis(axis)}")
    print(f"seminorm: {_cplx(seminorm(axis))}")
    print(f"<Re,Im>: {re.dot(im):.12g}")
    print(f"|Re|^2-|Im|^2: {re.norm() - im.norm():.12g}")
    print(f"root of -1: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_INVALID_AXIS


def _expwave(axis, shape, freq: int) -> np.ndarray:
    if len(shape) == 1:
        phase = 2 * np.pi * freq * np.arange(shape[0]) / shape[0]
    else:
        r, c = np.meshgrid(np.arange(shape[0]), np.arange(shape[1]), indexing="ij")
        phase = 2 * np.pi * freq * (r / shape[0] + c / shape[1])
    out = np.zeros(shape + (4,), dtype=complex)
    if axis is DEGENERATE_I:
        out[..., 0] = np.exp(1j * phase)
        return out
    for idx in np.ndindex(*shape):
        out[idx] = exp_axis(axis, float(phase[idx])).to_array()
    return out


def cmd_gen(args) -> int:
    if args.dims is not None:
        shape = tuple(args.dims)
    elif args.n is not None:
        shape = (args.n,)
    else:
        raise UsageError("gen needs a length N or --dims R C")
    if min(shape) < 1:
        raise UsageError("sizes must be at least 1")
    f = np.zeros(shape + (4,), dtype=complex)
    comments = [f"cqft gen {args.kind} shape={'x'.join(map(str, shape))}"]
    if args.kind == "delta":
        f[(0,) * len(shape) + (0,)] = 1
    elif args.kind == "constant":
        f[..., 0] = 1
    elif args.kind == "random":
        if args.seed is None:
            raise UsageError("gen random requires --seed")
        f = random_signal(np.random.default_rng(args.seed), shape)
        comments.append(f"seed={args.seed}")
    else:
        axis = parse_axis(args.axis) if args.axis is not None else QI
        if axis is not DEGENERATE_I and not is_root_minus_one(axis, args.tol):
            raise InvalidAxis(f"{format_axis(axis)} is not a root of -1")
        f = _expwave(axis, shape, args.freq)
        comments.append(f"axis={format_axis(axis)} freq={args.freq}")
    write_signal(sys.stdout, f, comments)
    return EXIT_OK


def _report_diagnostics(label: str, f: np.ndarray, tol: float) -> None:
    d = null_diagnostics(f, tol)
    print(f"{label}: {d['samples']} samples, {d['null']} null, {d['zero']} zero", file=sys.stderr)


def cmd_transform(args) -> int:
    spec = _spec(args)
    try:
        if args.input == "-":
            f = read_signal(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                f = read_signal(fh)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    out = transform(f, spec, engine=args.engine)
    _report_diagnostics("input", f, args.tol)
    _report_diagnostics("output", out, args.tol)
    comments = [
        f"cqft transform axis={format_axis(spec.axis)} side={spec.side} "
        f"direction={spec.direction} engine={args.engine}"
    ]
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_signal(fh, out, comments)
    else:
        write_signal(sys.stdout, out, comments)
    return EXIT_OK


def cmd_bench(args) -> int:
    if any(n < 1 for n in args.sizes) or args.reps < 1:
        raise UsageError("sizes and repetitions must be at least 1")
    spec = _spec(args, format_axis(PAPER_AXIS))
    if spec.degenerate:
        raise UsageError("bench needs a non-degenerate axis")
    results = run_bench(args.sizes, spec, reps=args.reps, seed=args.seed or 0)
    if args.csv:
        print("n,direct_s,fast_s,ratio,max_rel_err")
        for r in results:
            print(f"{r.n},{r.direct_s:.6e},{r.fast_s:.6e},{r.ratio:.6e},{r.max_rel_err:.3e}")
    else:
        print(f"{'N':>8} {'direct (s)':>12} {'fast (s)':>12} {'fast/direct':>12} {'max rel err':>12}")
        for r in results:
            print(f"{r.n:>8} {r.direct_s:>12.4e} {r.fast_s:>12.4e} {r.ratio:>12.4e} {r.max_rel_err:>12.2e}")
    return EXIT_OK


def cmd_explore_null(args) -> int:
    if args.trials < 1 or args.n < 1:
        raise UsageError("trials and n must be at least 1")
    spec = _spec(args, format_axis(PAPER_AXIS))
    if spec.degenerate:
        raise UsageError("explore-null needs a non-degenerate axis")
    seed = args.seed or 0
    min_abs, min_rel, where = math.inf, math.inf, None
    hits = []
    for trial in range(args.trials):
        f = random_real_signal(np.random.default_rng(seed + trial), args.n)
        spectrum = transform(f, spec, engine=args.engine)
        sn = np.abs(seminorm_array(spectrum))
        rel = sn / np.maximum(1.0, np.sum(np.abs(spectrum) ** 2, axis=-1))
        k = int(np.argmin(rel))
        if rel[k] < min_rel:
            min_rel, where = float(rel[k]), (trial, k)
        min_abs = min(min_abs, float(sn.min()))
        flagged = np.flatnonzero(is_null_array(spectrum, args.tol))
        if flagged.size:
            check = cqdft(f, spec)[flagged]
            for u, confirmed in zip(flagged, is_null_array(check, args.tol)):
                hits.append((trial, int(u), bool(confirmed)))
    print(f"axis: {format_axis(spec.axis)}")
    print(f"side: {spec.side}")
    print(f"trials: {args.trials}  n: {args.n}  seed: {seed}  tol: {args.tol:g}")
    print("signals: real quaternion, trial t uses numpy default_rng(seed + t)")
    print(f"min |seminorm|: {min_abs:.6e}")
    print(f"min relative |seminorm|: {min_rel:.6e} (trial {where[0]}, bin {where[1]})")
    print(f"near-null spectrum samples: {len(hits)}")
    for trial, u, confirmed in hits:
        print(f"  trial {trial} (seed {seed + trial}) bin {u}: direct engine {'confirms' if confirmed else 'does not confirm'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--axis", help="six reals 'Re x,Im x,Re y,Im y,Re z,Im z', or I")
    common.add_argument("--side", choices=("left", "right"), default="left")
    common.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    common.add_argument("--engine", choices=("fast", "direct"), default="fast")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--seed", type=int)
    common.add_argument("--csv", action="store_true", help="machine-readable output (bench)")

    parser = _Parser(prog="cqft", description="Complexified quaternion Fourier transform tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-axis", parents=[common], help="check that an axis is a root of -1")
    p.add_argument("axis_pos", nargs="?", metavar="AXIS")
    p.set_defaults(func=cmd_validate_axis)

    p = sub.add_parser("gen", parents=[common], help="write a test signal to standard output")
    p.add_argument("kind", choices=("delta", "constant", "random", "expwave"))
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--dims", nargs=2, type=int, metavar=("R", "C"))
    p.add_argument("--freq", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", parents=[common], help="transform a signal file")
    p.add_argument("input", help="signal file, or - for standard input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("bench", parents=[common], help="time the direct and fast engines")
    p.add_argument("--sizes", type=int, nargs="+", default=[256, 1024, 4096])
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("explore-null", parents=[common], help="search for null spectrum samples of real signals")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n", type=int, default=64)
    p.set_defaults(func=cmd_explore_null)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0:
        print("cqft: error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InvalidAxis as exc:
        return _error(exc, EXIT_INVALID_AXIS)
    except DegenerateAxisMisuse as exc:
        return _error(exc, EXIT_DEGENERATE)
    except (UsageError, ValueError) as exc:
        return _error(exc, EXIT_USAGE)


def _error(exc: Exception, code: int) -> int:
    print(f"cqft: error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
