"""Command-line front end.

Exit codes: 0 success, 1 detection failure or failed verification, 2 usage or
input error.  Outputs go to ``--outdir`` (default: ``$AQWD_OUTPUT_DIR`` or the
current directory).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import figures, io
from .detect import detect_map, snr_sweep
from .properties import PropertyId, gaussian_fixture, run_all, verify_property, aligned_fixture
from .properties import QUADRATURE_PROPERTIES, REFERENCE_QUADRATURE_PARAMS, REFERENCE_SHIFT_PARAMS
from .qpft import ParamSet
from .signals import (
    NOISELESS,
    LFMComponent,
    Signal,
    add_awgn,
    make_gaussian_pair,
    make_multicomponent,
)
from .tfd import TFKind, compute_tfd

OUTPUT_ENV = "AQWD_OUTPUT_DIR"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _floats(text: str, count: Optional[int], what: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated numbers: {text!r}") from None
    if count is not None and len(vals) != count:
        raise argparse.ArgumentTypeError(f"{what} needs {count} values, got {len(vals)}")
    return vals


def parse_lambda(text: str) -> ParamSet:
    try:
        return ParamSet.of(_floats(text, 5, "--lambda"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_lfm(text: str) -> LFMComponent:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--lfm needs AMP,NU0,XI0, got {text!r}")
    try:
        amp = complex(parts[0].replace("i", "j"))
        nu0, xi0 = float(parts[1]), float(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --lfm value {text!r}") from None
    return LFMComponent(amp, nu0, xi0)


def parse_kind(text: str) -> TFKind:
    try:
        return TFKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_seeds(text: str) -> list[int]:
    """``0,3,7`` or a half-open range ``0:20``."""
    try:
        if ":" in text:
            lo, hi = (int(v) for v in text.split(":"))
            return list(range(lo, hi))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}") from None


def parse_snr(text: str) -> float:
    if text.lower() in ("inf", "none", "clean"):
        return NOISELESS
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad SNR {text!r}") from None


def _add_signal_args(p: argparse.ArgumentParser, input_ok: bool = True) -> None:
    g = p.add_argument_group("signal")
    g.add_argument("--lfm", type=parse_lfm, action="append", metavar="AMP,NU0,XI0",
                   help="chirp component; repeat for multi-component signals")
    g.add_argument("--gaussian-pair", type=lambda s: _floats(s, 2, "--gaussian-pair"),
                   metavar="C1,C2", help="two Gaussian beams centred at C1 and C2")
    if input_ok:
        g.add_argument("--input", type=Path, help="signal CSV written by `generate`")
    g.add_argument("--half-support", type=float, default=10.0)
    g.add_argument("--n", type=int, default=1024)
    g.add_argument("--snr", type=parse_snr, default=NOISELESS, help="dB; omit for no noise")
    g.add_argument("--seed", type=int, default=0)


def _signal(args) -> Signal:
    sources = [x for x in (args.lfm, args.gaussian_pair, getattr(args, "input", None)) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one of --lfm, --gaussian-pair, --input")
    if args.lfm:
        f = make_multicomponent(args.lfm, args.half_support, args.n)
    elif args.gaussian_pair:
        f = make_gaussian_pair(tuple(args.gaussian_pair), args.half_support, args.n)
    else:
        f = io.read_signal_csv(args.input)
    if args.snr != NOISELESS:
        f = add_awgn(f, args.snr, args.seed)
    return f


def _outdir(args) -> Path:
    d = Path(args.outdir or os.environ.get(OUTPUT_ENV) or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _check_lambda(kind: TFKind, lam: Optional[ParamSet]) -> Optional[ParamSet]:
    if kind.needs_params and lam is None:
        raise UsageError(f"--kind {kind.value} requires --lambda")
    if not kind.needs_params and lam is not None:
        raise UsageError(f"--kind {kind.value} takes no --lambda")
    return lam


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="aqwd", description="Quadratic-phase Wigner/ambiguity distributions")
    p.add_argument("--outdir", help=f"output directory (default ${OUTPUT_ENV} or .)")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("generate", help="write a test signal as CSV")
    _add_signal_args(g, input_ok=False)
    g.add_argument("--out", default="signal.csv")

    t = sub.add_parser("transform", help="compute a distribution; write CSV and PGM")
    _add_signal_args(t)
    t.add_argument("--kind", type=parse_kind, required=True)
    t.add_argument("--lambda", dest="lam", type=parse_lambda, metavar="A,B,C,D,E")
    t.add_argument("--contour", type=int, metavar="K", help="posterize the PGM to K levels")
    t.add_argument("--out", help="file stem (default: the kind name)")
    t.add_argument("--workers", type=int)

    d = sub.add_parser("detect", help="fit an LFM ridge")
    _add_signal_args(d)
    d.add_argument("--from-csv", type=Path, help="distribution CSV written by `transform`")
    d.add_argument("--kind", type=parse_kind)
    d.add_argument("--lambda", dest="lam", type=parse_lambda, metavar="A,B,C,D,E")
    d.add_argument("--threshold", type=float, default=0.5)
    d.add_argument("--out", help="CSV path (default: stdout)")

    v = sub.add_parser("verify", help="check the distribution identities")
    v.add_argument("--all", action="store_true")
    v.add_argument("--property", action="append", default=[],
                   choices=[pid.value for pid in PropertyId])
    v.add_argument("--n", type=int, default=1024, help="grid size for the quadrature identities")
    v.add_argument("--out", help="CSV path (default: stdout)")

    s = sub.add_parser("sweep", help="detection over kinds x SNRs x seeds")
    _add_signal_args(s)
    s.add_argument("--kinds", default="wd,qwd,aqwd",
                   type=lambda x: [parse_kind(k) for k in x.split(",")])
    s.add_argument("--lambda", dest="lam", type=parse_lambda, metavar="A,B,C,D,E",
                   help="parameter set for every kind that needs one")
    s.add_argument("--kind-lambda", action="append", default=[], metavar="KIND=A,B,C,D,E",
                   help="per-kind override")
    s.add_argument("--snrs", default="10", type=lambda x: [parse_snr(v) for v in x.split(",")])
    s.add_argument("--seeds", default="0:20", type=parse_seeds)
    s.add_argument("--threshold", type=float, default=0.5)
    s.add_argument("--out", help="CSV path (default: stdout)")

    f = sub.add_parser("figure", help="reproduce a figure as CSV + PGM files")
    f.add_argument("name", choices=sorted(figures.RECIPES))
    f.add_argument("--lambda", dest="lam", type=parse_lambda, metavar="A,B,C,D,E")
    f.add_argument("--n", type=int, default=figures.DEFAULTS["n"])
    f.add_argument("--half-support", type=float, default=figures.DEFAULTS["half_support"])
    f.add_argument("--seed", type=int, default=figures.DEFAULTS["seed"])
    f.add_argument("--contour", type=int, metavar="K")
    return p


def _open_out(path: Optional[str], outdir_args):
    if path is None:
        return sys.stdout, False
    target = Path(path)
    if not target.is_absolute():
        target = _outdir(outdir_args) / target
    return open(target, "w", newline="", encoding="utf-8"), True


def _write_map(W, stem: Path, contour: Optional[int]) -> None:
    io.write_tfmap_csv(W, stem.with_suffix(".csv"))
    io.write_heatmap(W, stem.with_suffix(".pgm"), levels=contour)


def cmd_generate(args) -> int:
    f = _signal(args)
    target = Path(args.out)
    if not target.is_absolute():
        target = _outdir(args) / target
    io.write_signal_csv(f, target)
    return EXIT_OK


def cmd_transform(args) -> int:
    lam = _check_lambda(args.kind, args.lam)
    W = compute_tfd(args.kind, lam, _signal(args), workers=args.workers)
    _write_map(W, _outdir(args) / (args.out or args.kind.value), args.contour)
    return EXIT_OK


def cmd_detect(args) -> int:
    if args.from_csv is not None:
        if args.lfm or args.gaussian_pair or args.input or args.kind or args.lam:
            raise UsageError("--from-csv excludes signal, --kind and --lambda options")
        W = io.read_tfmap_csv(args.from_csv)
    else:
        if args.kind is None:
            raise UsageError("detect needs --kind (or --from-csv)")
        W = compute_tfd(args.kind, _check_lambda(args.kind, args.lam), _signal(args))
    report = detect_map(W, args.threshold)
    fh, close = _open_out(args.out, args)
    try:
        io.write_detection_csv([report], fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK if report.detected else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.all == bool(args.property):
        raise UsageError("give either --all or one or more --property")
    if args.all:
        reports = run_all(n=args.n)
    else:
        reports = []
        for name in args.property:
            pid = PropertyId(name)
            if pid in QUADRATURE_PROPERTIES:
                fixtures = [gaussian_fixture(lam, n=args.n) for lam in REFERENCE_QUADRATURE_PARAMS]
            else:
                fixtures = [aligned_fixture(lam) for lam in REFERENCE_SHIFT_PARAMS]
            reports += [verify_property(pid, fx) for fx in fixtures]
    fh, close = _open_out(args.out, args)
    try:
        io.write_reports_csv(reports, fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_sweep(args) -> int:
    params = {}
    for kind in args.kinds:
        params[kind] = args.lam if kind.needs_params else None
    for item in args.kind_lambda:
        name, _, text = item.partition("=")
        kind = parse_kind(name)
        params[kind] = parse_lambda(text)
    for kind in args.kinds:
        if kind.needs_params and params.get(kind) is None:
            raise UsageError(f"sweep over {kind.value} needs --lambda or --kind-lambda")
    args.snr = NOISELESS  # noise comes from the sweep itself
    rows = snr_sweep(_signal(args), params, args.kinds, args.snrs, args.seeds, args.threshold)
    fh, close = _open_out(args.out, args)
    try:
        io.write_sweep_csv(rows, fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_figure(args) -> int:
    recipe = figures.RECIPES[args.name]
    maps = recipe(n=args.n, half_support=args.half_support, seed=args.seed, lam=args.lam)
    out = _outdir(args)
    for name, W in maps:
        _write_map(W, out / name, args.contour)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "transform": cmd_transform,
    "detect": cmd_detect,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "figure": cmd_figure,
}


def dispatch(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"aqwd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
