"""Command-line driver: run, validate, and demo subcommands.

Exit codes partition run outcomes: 0 safe, 2 unsafe, 3 tick cap exhausted,
and 1 for any input or IO error. Diagnostics go to stderr; the report goes
to stdout unless redirected to a file.
"""

import argparse
import sys
from typing import Optional

from .engine import HALT_ALL_DELIVERED, HALT_CONFLICT, Airspace
from .scenario import (
    DEMO_NAMES,
    ScenarioError,
    apply_shared_level,
    build_demo_airspace,
    load_scenario,
    report_to_json,
    write_movement_log,
    write_report,
)

EXIT_SAFE = 0
EXIT_ERROR = 1
EXIT_UNSAFE = 2
EXIT_INCONCLUSIVE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which would collide with
    # the unsafe outcome; remap usage problems onto the error exit code.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uamsim", description="Tick-based eVTOL trajectory simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate a scenario file")
    run.add_argument("--scenario", required=True, help="scenario JSON file")
    _add_run_options(run)

    validate = sub.add_parser("validate", help="schema-check a scenario file")
    validate.add_argument("--scenario", required=True, help="scenario JSON file")

    demo = sub.add_parser("demo", help="generate and run a built-in scenario")
    demo.add_argument("--experiment", required=True, choices=DEMO_NAMES)
    _add_run_options(demo)

    return parser


def _add_run_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--log", help="write the movement log CSV here")
    sub.add_argument("--report", help="write the report JSON here instead of stdout")
    sub.add_argument("--max-ticks", type=int, help="tick cap before the run is inconclusive")
    sub.add_argument(
        "--shared-level", type=float,
        help="force every waypoint and take-off fix onto one flight level (ft)",
    )


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR

    try:
        if args.command == "validate":
            load_scenario(args.scenario)
            print(f"{args.scenario}: OK", file=sys.stderr)
            return EXIT_SAFE
        if args.command == "run":
            airspace = load_scenario(
                args.scenario, max_ticks=args.max_ticks, shared_level=args.shared_level
            )
        else:
            airspace = build_demo_airspace(args.experiment, max_ticks=args.max_ticks)
            if args.shared_level is not None:
                apply_shared_level(airspace, args.shared_level)
    except (ScenarioError, ValueError, OSError) as exc:
        print(f"uamsim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    return _simulate_and_emit(airspace, args)


def _simulate_and_emit(airspace: Airspace, args: argparse.Namespace) -> int:
    report = airspace.simulate()
    try:
        if args.log:
            write_movement_log(airspace.movement_log, args.log)
        if args.report:
            write_report(report, args.report)
        else:
            sys.stdout.write(report_to_json(report))
    except OSError as exc:
        print(f"uamsim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report.halt_reason == HALT_CONFLICT:
        return EXIT_UNSAFE
    if report.halt_reason == HALT_ALL_DELIVERED:
        return EXIT_SAFE
    return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main())
