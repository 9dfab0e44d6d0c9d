"""Command line interface for the :mod:`pvi_algebra` toolkit."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from .catalog import load_catalog
from .config import RunConfig
from .constants import DEFAULT_BITS, OUTPUT_FORMATS
from .dynamics import GROUPS, classify_finiteness, orbit
from .errors import NotOnSurfaceError, PVIError
from .exact_scalar import conductor_bound, scalar_to_json, solve_trig_diophantine
from .io import render_report, write_output
from .line_census import census_rows, run_census
from .pvi_field import TARGETS, ramification_profile, rationality_audit, verify_solution
from .rh_map import rh, rh_numeric, trace_tuple, wall_maps_to_singular
from .surface import SurfacePoint, Theta, singular_points_numeric
from .tetra import Verdict, tetrahedral_theorem_probe
from .weyl import Kappa, in_wall_d4, in_wall_f4, reduce_to_alcove, stratum, to_b_coords

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2

# (report, exit code, optional CSV rows)
Outcome = Tuple[Dict[str, Any], int, Optional[Iterable[Dict[str, Any]]]]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bits", type=int, help=f"Working precision in bits (default {DEFAULT_BITS})")
    common.add_argument("--cap", type=int, help="Maximum number of orbit points to explore")
    common.add_argument("--threads", type=int, help="Worker threads for parallel searches")
    common.add_argument(
        "--conductor-bound",
        type=int,
        help="Largest cyclotomic conductor allowed (overrides PVI_CONDUCTOR_BOUND)",
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Report format (default json)")
    common.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Increase log verbosity")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="pvi",
        description=(
            "Exact checks around algebraic Painleve VI solutions: surface orbits, "
            "parameter walls and strata, the Riemann-Hilbert parameter map and "
            "explicit solution catalogs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", parents=[common], help="Enumerate an orbit on S(theta)")
    p.add_argument("--theta", nargs=4, required=True, metavar="T", help="theta1..theta4 as exact scalars")
    p.add_argument("--point", nargs=3, required=True, metavar="X", help="Start point x1 x2 x3")
    p.add_argument("--group", choices=GROUPS, default="G", help="G (all words) or G2 (even words)")
    p.add_argument(
        "--no-classify",
        dest="classify",
        action="store_false",
        help="Plain enumeration without the cyclotomic finiteness criterion",
    )

    p = sub.add_parser("census", parents=[common], help="Eigenvalue census of all ON/OFF matrices")

    p = sub.add_parser("verify", parents=[common], help="Verify a catalog solution")
    p.add_argument("name", help="Solution name, e.g. klein or icosahedral")
    p.add_argument("--catalog", type=Path, help="Catalog JSON (defaults to the shipped catalog)")
    p.add_argument("--samples", type=int, default=100, help="Number of sample parameters")

    for name, text in (
        ("stratum", "Alcove reduction and stratum of kappa"),
        ("wall", "Wall membership of kappa"),
        ("rh", "Image of kappa under the parameter Riemann-Hilbert map"),
        ("tetra", "Tetrahedral ball obstruction for kappa"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("kappa", help="Comma separated k0,k1,k2,k3,k4")
        if name == "wall":
            p.add_argument(
                "--probe",
                action="store_true",
                help="Also compare with singularity of S(rh(kappa))",
            )
        if name == "rh":
            p.add_argument("--numeric", action="store_true", help="Evaluate in floating point")

    p = sub.add_parser("trig", parents=[common], help="Solve sum cos(pi*r_k) = 0")
    p.add_argument("terms", type=int)
    p.add_argument("max_denominator", type=int)

    p = sub.add_parser("singular", parents=[common], help="Singular points of S(theta)")
    p.add_argument("--theta", nargs=4, required=True, metavar="T")
    return parser


def _cmd_orbit(args: argparse.Namespace, config: RunConfig) -> Outcome:
    theta = Theta.of(args.theta)
    start = SurfacePoint.of(args.point, theta)
    if args.classify:
        result = classify_finiteness(start, config.cap, group=args.group, workers=config.threads)
    else:
        result = orbit(start, args.group, config.cap, workers=config.threads)
    report = result.to_dict()
    report["theta"] = theta.to_json()
    return report, EXIT_UNDECIDED if result.status == "unknown" else EXIT_OK, None


def _cmd_census(args: argparse.Namespace, config: RunConfig) -> Outcome:
    report = run_census(workers=config.threads)
    rows = census_rows() if config.output_format == "csv" else None
    return report.to_dict(), EXIT_OK if report.all_pass else EXIT_UNDECIDED, rows


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> Outcome:
    solution = load_catalog(args.catalog).get(args.name)
    residuals = verify_solution(solution, bits=config.bits, count=args.samples, workers=config.threads)
    report = residuals.to_dict()
    report["degree"] = solution.degree
    report["ramification"] = {target: list(ramification_profile(solution, target)) for target in TARGETS}
    report["audit"] = rationality_audit(solution).to_dict()
    return report, EXIT_OK if residuals.passed else EXIT_UNDECIDED, None


def _cmd_stratum(args: argparse.Namespace, config: RunConfig) -> Outcome:
    kappa = Kappa.parse(args.kappa)
    reduced, word = reduce_to_alcove(kappa)
    report: Dict[str, Any] = {"kappa": kappa.as_strings(), "alcove_kappa": reduced.as_strings()}
    report["word"] = list(word)
    report.update(stratum(kappa).to_dict())
    report["wall_d4"] = in_wall_d4(kappa)
    report["wall_f4"] = in_wall_f4(kappa)
    return report, EXIT_OK, None


def _cmd_wall(args: argparse.Namespace, config: RunConfig) -> Outcome:
    kappa = Kappa.parse(args.kappa)
    report: Dict[str, Any] = {
        "kappa": kappa.as_strings(),
        "b": [str(v) for v in to_b_coords(kappa).as_tuple()],
        "wall_d4": in_wall_d4(kappa),
        "wall_f4": in_wall_f4(kappa),
    }
    code = EXIT_OK
    if args.probe:
        probe = wall_maps_to_singular(kappa, config.bits)
        report["probe"] = probe.to_dict()
        if probe.agreement is not True:
            code = EXIT_UNDECIDED
    return report, code, None


def _cmd_rh(args: argparse.Namespace, config: RunConfig) -> Outcome:
    if args.numeric:
        values = [v for v in args.kappa.replace(",", " ").split() if v]
        theta = rh_numeric(values, config.bits)
        return {"kappa": values, "theta": [str(t) for t in theta]}, EXIT_OK, None
    kappa = Kappa.parse(args.kappa)
    report = {
        "kappa": kappa.as_strings(),
        "traces": [scalar_to_json(t) for t in trace_tuple(kappa).as_tuple()],
        "theta": rh(kappa).to_json(),
    }
    return report, EXIT_OK, None


def _cmd_tetra(args: argparse.Namespace, config: RunConfig) -> Outcome:
    report = tetrahedral_theorem_probe(Kappa.parse(args.kappa))
    code = EXIT_UNDECIDED if report.verdict is Verdict.INDETERMINATE else EXIT_OK
    return report.to_dict(), code, None


def _cmd_trig(args: argparse.Namespace, config: RunConfig) -> Outcome:
    solutions = solve_trig_diophantine(args.terms, args.max_denominator, workers=config.threads)
    report = {
        "terms": args.terms,
        "max_denominator": args.max_denominator,
        "count": len(solutions),
        "solutions": [[str(r) for r in solution] for solution in solutions],
    }
    rows = [{"solution": " ".join(str(r) for r in s)} for s in solutions]
    return report, EXIT_OK, rows if config.output_format == "csv" else None


def _cmd_singular(args: argparse.Namespace, config: RunConfig) -> Outcome:
    result = singular_points_numeric(Theta.of(args.theta), config.bits)
    code = EXIT_UNDECIDED if result.inconclusive and not result.is_singular else EXIT_OK
    return result.to_dict(), code, None


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Outcome]] = {
    "orbit": _cmd_orbit,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "stratum": _cmd_stratum,
    "wall": _cmd_wall,
    "rh": _cmd_rh,
    "tetra": _cmd_tetra,
    "trig": _cmd_trig,
    "singular": _cmd_singular,
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = RunConfig.from_args(args)
        with conductor_bound(config.conductor_bound):
            report, code, rows = COMMANDS[args.command](args, config)
            text = render_report(report, config.output_format, rows)
        write_output(text, config.output_path)
    except NotOnSurfaceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        if exc.residual is not None:
            sys.stderr.write(f"residual: {scalar_to_json(exc.residual)}\n")
        return EXIT_ERROR
    except (PVIError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
