# -*- coding: utf-8 -*-
"""CLI entrypoint for the ``ospx`` command."""

from __future__ import annotations

import argparse
import sys

from osp_rops import __version__
from osp_rops.commands.spectrum_cmd import run_spectrum
from osp_rops.commands.suite_cmd import run_suite
from osp_rops.commands.verify_cmd import run_verify


def _add_output_level_args(
    parser: argparse.ArgumentParser,
    *,
    set_default: bool,
) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--quiet",
        dest="output_level",
        action="store_const",
        const="quiet",
        default=argparse.SUPPRESS,
        help="Summary output (default)",
    )
    group.add_argument(
        "--verbose",
        dest="output_level",
        action="store_const",
        const="verbose",
        default=argparse.SUPPRESS,
        help="Summary table, witnesses and INFO logs",
    )
    group.add_argument(
        "--debug",
        dest="output_level",
        action="store_const",
        const="debug",
        default=argparse.SUPPRESS,
        help="Per-identity DEBUG logs",
    )
    if set_default:
        parser.set_defaults(output_level="quiet")


def _add_algebra_args(parser: argparse.ArgumentParser, *, preset_default: str | None) -> None:
    parser.add_argument(
        "--preset",
        default=preset_default,
        help="Algebra preset: osp:n:2m, so:N or sp:2m",
    )
    parser.add_argument(
        "--epsilon",
        type=int,
        choices=[-1, 1],
        default=None,
        help="Sign epsilon override for osp presets",
    )
    parser.add_argument(
        "--algebra",
        dest="algebra_file",
        default=None,
        help="YAML algebra file (preset or explicit grading/metric)",
    )
    parser.add_argument(
        "--sigma",
        choices=["+i", "-i"],
        default=None,
        help="Square root of -1 used in z and c+-",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ospx",
        description="Exact verification of osp-invariant R-matrices and R-operators",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    _add_output_level_args(parser, set_default=True)
    output_parent = argparse.ArgumentParser(add_help=False)
    _add_output_level_args(output_parent, set_default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="Run identity suites and emit a JSON certificate",
        parents=[output_parent],
    )
    _add_algebra_args(verify, preset_default=None)
    verify.add_argument("--config", default=None, help="YAML run configuration; flags override it")
    verify.add_argument("--cutoff", type=int, default=None, help="Joint boson-degree cutoff C")
    verify.add_argument("--series-order", type=int, default=None, help="Generating-function series order K")
    verify.add_argument("--kmax", type=int, default=None, help="Largest series coefficient index")
    verify.add_argument(
        "--invariant-kmax",
        type=int,
        default=None,
        help="Largest invariant I_k built in the oscillator algebra and bridged to the series",
    )
    verify.add_argument(
        "--suite",
        dest="suites",
        default=None,
        help="Comma-separated suite names, or 'all'",
    )
    verify.add_argument("--u-samples", default=None, help="Comma-separated rational u samples")
    verify.add_argument("--tol", type=float, default=None, help="Series/Gamma-ratio comparison tolerance")
    verify.add_argument("--gamma-tol", type=float, default=None, help="Gamma-ratio evaluation tolerance")
    verify.add_argument("--dps", type=int, default=None, help="mpmath precision in decimal digits")
    verify.add_argument("--partial", type=int, default=None, help="Length of the series partial sums")
    verify.add_argument("--out", default=None, help="Write the JSON report to this path")
    verify.add_argument(
        "--json-only",
        action="store_true",
        help="Print only the JSON report on stdout",
    )
    verify.set_defaults(handler=run_verify)

    spectrum = sub.add_parser(
        "spectrum",
        help="Export the spectral table of z on the truncated Fock space",
        parents=[output_parent],
    )
    _add_algebra_args(spectrum, preset_default="osp:1:2")
    spectrum.add_argument("--cutoff", type=int, default=None, help="Joint boson-degree cutoff C (default 8 with one boson mode, else 4)")
    spectrum.add_argument(
        "--format",
        choices=["json", "yaml"],
        default="json",
        help="Output format of the table",
    )
    spectrum.add_argument(
        "--u-samples",
        default=None,
        help="Comma-separated u samples at which per-eigenvalue operator values are added",
    )
    spectrum.add_argument(
        "--values-out",
        default=None,
        help="Write the per-eigenvalue values to a .csv or .json file",
    )
    spectrum.add_argument("--out", default=None, help="Write the table to this path")
    spectrum.set_defaults(handler=run_spectrum)

    suite = sub.add_parser(
        "suite",
        help="Inspect or execute single verification suites",
        parents=[output_parent],
    )
    suite_sub = suite.add_subparsers(dest="suite_action", required=True)

    suite_list = suite_sub.add_parser(
        "list",
        help="List all registered suites",
        parents=[output_parent],
    )
    suite_list.add_argument(
        "--tag",
        action="append",
        default=[],
        help="Optional tag or group filter; may be repeated",
    )
    suite_list.set_defaults(handler=run_suite)

    suite_schema = suite_sub.add_parser(
        "schema",
        help="Show suite metadata and input schema",
        parents=[output_parent],
    )
    suite_schema.add_argument("suite_name", type=str, help="Registered suite name")
    suite_schema.set_defaults(handler=run_suite)

    suite_run = suite_sub.add_parser(
        "run",
        help="Execute one suite with JSON input",
        parents=[output_parent],
    )
    suite_run.add_argument("suite_name", type=str, help="Registered suite name")
    _add_algebra_args(suite_run, preset_default="osp:1:2")
    input_group = suite_run.add_mutually_exclusive_group()
    input_group.add_argument(
        "--input-json",
        default=None,
        help="Inline JSON object input for the suite",
    )
    input_group.add_argument(
        "--input-file",
        default=None,
        help="Path to a JSON file containing the suite input object",
    )
    suite_run.set_defaults(handler=run_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return int(args.handler(args))


if __name__ == "__main__":
    sys.exit(main())
