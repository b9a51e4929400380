"""Command-line entry point: ``gapwave <subcommand> [options]``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import io as _stdio
import sys
from pathlib import Path

from . import io
from .actuation import calibration_table
from .design import DesignTargets, search_design
from .errors import GapwaveError
from .phase import phase_sweep, phase_shift
from .physics import EllipticalStripProfile, FrequencyBand
from .tmm import sweep_sparams


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _band(text):
    try:
        lo, hi = (float(p) for p in text.split(":"))
        return FrequencyBand(lo * io.GHZ, hi * io.GHZ)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <GHz:GHz> with low < high, got {text!r}")


def _mm_list(text):
    try:
        return [float(p) * io.MM for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated mm values, got {text!r}")


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON configuration file")
    common.add_argument("--out", type=Path, help="output file (default: stdout)")

    parser = _Parser(prog="gapwave", description="Strip-tuned waveguide phase shifter model")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phase", parents=[common], help="single phase-shift evaluation")
    p.add_argument("--be", type=float, required=True, help="strip deflection, mm")
    p.add_argument("--freq", type=float, help="frequency, GHz (default: band centre)")

    p = sub.add_parser("sweep", parents=[common], help="phase-shift table as CSV")
    p.add_argument("--be", type=_mm_list, default=_mm_list("0,0.2,0.4,0.6,0.8,1.0"),
                   help="comma-separated deflections, mm")
    p.add_argument("--band", type=_band, help="GHz:GHz (default: guide band)")
    p.add_argument("--nfreq", type=_positive_int, default=23)

    p = sub.add_parser("sparams", parents=[common], help="S-parameters as Touchstone")
    p.add_argument("--be", type=float, required=True, help="strip deflection, mm")
    p.add_argument("--band", type=_band)
    p.add_argument("--nfreq", type=_positive_int, default=221)
    p.add_argument("--nsections", type=_positive_int)

    p = sub.add_parser("calibrate", parents=[common], help="turns / deflection / phase table")
    p.add_argument("--freq", type=float, help="frequency, GHz (default: band centre)")
    p.add_argument("--npoints", type=_positive_int, default=11)

    p = sub.add_parser("design", parents=[common], help="search the shortest feasible strip")
    p.add_argument("--min-phase", type=float, required=True, help="degrees at band centre")
    p.add_argument("--max-length", type=float, required=True, help="bound on 2 a_e, mm")
    p.add_argument("--margin", type=float, default=0.0, help="fractional cutoff margin")
    p.add_argument("--max-dispersion", type=float)
    p.add_argument("--band", type=_band)

    p = sub.add_parser("compare", parents=[common], help="model vs measured CSV")
    p.add_argument("--measured", type=Path, required=True, help="CSV freq_ghz,value")
    p.add_argument("--kind", choices=io.TRACE_KINDS, default="phase")
    p.add_argument("--be", type=float, required=True, help="strip deflection, mm")
    p.add_argument("--nfreq", type=_positive_int, default=111)
    p.add_argument("--nsections", type=_positive_int)
    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _run(args):
    cfg = io.parse_config(args.config.read_text()) if args.config else io.default_config()
    guide = cfg.guide

    if args.command == "phase":
        f = args.freq * io.GHZ if args.freq is not None else guide.band.center
        value = phase_shift(args.be * io.MM, cfg.a_e, guide, f, cfg.quadrature)
        _emit(f"{value:.3f}°\n", args.out)

    elif args.command == "sweep":
        sweep = phase_sweep(cfg.a_e, guide, args.be, args.band or guide.band,
                            args.nfreq, cfg.quadrature)
        buf = _stdio.StringIO()
        io.write_phase_sweep_csv(sweep, buf)
        _emit(buf.getvalue(), args.out)

    elif args.command == "sparams":
        profile = EllipticalStripProfile(cfg.a_e, args.be * io.MM)
        sweep = sweep_sparams(profile, guide, args.band or guide.band, args.nfreq,
                              args.nsections or cfg.n_sections)
        _emit(io.touchstone_text(sweep), args.out)

    elif args.command == "calibrate":
        if args.npoints < 2:
            raise UsageError("calibrate: --npoints must be >= 2")
        f = args.freq * io.GHZ if args.freq is not None else guide.band.center
        table = calibration_table(f, cfg.a_e, guide, cfg.screw, args.npoints, cfg.quadrature)
        buf = _stdio.StringIO()
        io.write_calibration_csv(table, buf)
        _emit(buf.getvalue(), args.out)

    elif args.command == "design":
        targets = DesignTargets(args.band or guide.band, args.min_phase,
                                args.max_length * io.MM, args.margin, args.max_dispersion)
        result = search_design(targets, guide, cfg.quadrature)
        _emit(io.design_result_json(result) + "\n", args.out)

    elif args.command == "compare":
        measured = io.read_measured_csv(args.measured, args.kind)
        band = guide.band
        if args.kind == "phase":
            sweep = phase_sweep(cfg.a_e, guide, [args.be * io.MM], band, args.nfreq,
                                cfg.quadrature)
            model = io.trace_from_sweep(sweep, args.be * io.MM)
        else:
            profile = EllipticalStripProfile(cfg.a_e, args.be * io.MM)
            model = io.trace_from_sparams(
                sweep_sparams(profile, guide, band, args.nfreq,
                              args.nsections or cfg.n_sections), args.kind)
        _emit(io.compare_measured(model, measured).to_json() + "\n", args.out)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    try:
        _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (GapwaveError, ValueError, OSError) as exc:
        print(f"gapwave {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
