#!/usr/bin/env python3
"""
Surface obstruction toolkit - command-line client

    python surface_client.py group abelianize "<x,y,z | x^2, y^3, z^7, x*y*z>"
    python surface_client.py seifert kill-fiber "S2(0; 1/2, -1/3, -1/7)"
    python surface_client.py pretzel dbc "P(-2,3,7)"
    python surface_client.py surface-check ../surfaces/corollary_torus.surf --trace
    python surface_client.py paper-verify --sweep 3

Exit codes: 0 pass, 1 a section failed, 2 usage or parse error.
"""
import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "server"))

from modules.config import load_client_config
from modules.formatters import ResultFormatter
from config import load_config
from toolkit import GROUP_SUBCOMMANDS, PRETZEL_SUBCOMMANDS, SEIFERT_SUBCOMMANDS, SurfaceToolkit
from report import Report

logger = logging.getLogger("surface-client")


class UsageExit(Exception):
    def __init__(self, message: str):
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting so main() owns the exit code."""

    def error(self, message: str):
        raise UsageExit(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surface_client", description="Knotted-surface obstruction toolkit")
    parser.add_argument("--machine", action="store_true", help="print the key=value block only")
    parser.add_argument("--trace", action="store_true", help="include full proof traces")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    group = commands.add_parser("group", help="finitely presented group calculus")
    group.add_argument("subcommand", choices=GROUP_SUBCOMMANDS)
    group.add_argument("presentation")
    group.add_argument("--subgroup", default="", help="comma-separated subgroup generators")
    group.add_argument("--max-cosets", "--max", dest="max_cosets", type=int)
    group.add_argument("--images", help="permutation images, e.g. '1,0,2; 0,2,1'")

    seifert = commands.add_parser("seifert", help="Seifert fibered spaces over S2")
    seifert.add_argument("subcommand", choices=SEIFERT_SUBCOMMANDS)
    seifert.add_argument("space")

    pretzel = commands.add_parser("pretzel", help="pretzel knots")
    pretzel.add_argument("subcommand", choices=PRETZEL_SUBCOMMANDS)
    pretzel.add_argument("knot")

    surface = commands.add_parser("surface-check", help="run the decision procedures on a spec file")
    surface.add_argument("file")
    surface.add_argument("--sweep", type=int)

    paper = commands.add_parser("paper-verify", help="run the full reproduction suite")
    paper.add_argument("--sweep", type=int)
    paper.add_argument("--max-cosets", dest="max_cosets", type=int)

    for sub in (group, seifert, pretzel, surface, paper):
        sub.add_argument("--machine", action="store_true", default=argparse.SUPPRESS)
        sub.add_argument("--trace", action="store_true", default=argparse.SUPPRESS)
    return parser


async def run_command(args: argparse.Namespace, toolkit: SurfaceToolkit) -> Report:
    if args.command == "group":
        return await toolkit.cmd_group(args.subcommand, args.presentation, subgroup=args.subgroup,
                                       max_cosets=args.max_cosets, images=args.images)
    if args.command == "seifert":
        return await toolkit.cmd_seifert(args.subcommand, args.space)
    if args.command == "pretzel":
        return await toolkit.cmd_pretzel(args.subcommand, args.knot)
    if args.command == "surface-check":
        return await toolkit.cmd_surface_check(path=args.file, sweep=args.sweep)
    return await toolkit.cmd_paper_verify(sweep=args.sweep)


def _positive(name: str, value: Optional[int]) -> None:
    if value is not None and value < 1:
        raise UsageExit(f"{name} must be a positive integer")


async def main(argv: Optional[List[str]] = None) -> int:
    try:
        client_config = load_client_config()
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2
    logging.basicConfig(
        level=getattr(logging, client_config['log_level'], logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
        _positive("--sweep", getattr(args, "sweep", None))
        _positive("--max-cosets", getattr(args, "max_cosets", None))
    except UsageExit as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2

    try:
        engine_config = load_config()
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2
    if getattr(args, "max_cosets", None):
        engine_config['max_cosets'] = args.max_cosets
    toolkit = SurfaceToolkit(engine_config)

    formatter = ResultFormatter(
        "machine" if args.machine else client_config['output'],
        show_trace=args.trace or client_config['show_trace'],
        timestamp=client_config['timestamp'] and not args.machine,
    )
    report = await run_command(args, toolkit)
    print(formatter.format_report(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
