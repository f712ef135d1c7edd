"""Command line interface.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a
verification failed, 2 usage or input error, 3 some result is undecided.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import typing as t
from pathlib import Path

import colorama

from domprism import census, corpus, families, suites
from domprism.config import Config, load_config
from domprism.domination import DominationKind, invariant
from domprism.errors import (
    CertificateError,
    ConfigError,
    Graph6Error,
    GraphError,
    NotFoundError,
    UndecidedError,
    UnknownSuiteError,
)
from domprism.graph import Graph, prism
from domprism.graph6 import encode_graph6, parse_graph6
from domprism.version import __version__

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

WITNESSES: t.Dict[str, t.Callable[[int], t.Any]] = {
    "prop1": families.prop1_witness,
    "claimB": families.claimB_witness,
    "hamming": families.hamming_perfect_code,
    "doubled-code": families.doubled_code_dominating_set,
    "figure": lambda _: families.figure_one_witness(),
}


class ColorFormatter(logging.Formatter):
    """Formatter that colors the level name."""

    COLORS: t.ClassVar[t.Dict[int, str]] = {
        logging.DEBUG: colorama.Fore.CYAN,
        logging.INFO: colorama.Fore.GREEN,
        logging.WARNING: colorama.Fore.YELLOW,
        logging.ERROR: colorama.Fore.RED,
        logging.CRITICAL: colorama.Fore.RED + colorama.Style.BRIGHT,
    }

    def format(self, record: logging.LogRecord) -> str:  # noqa: A003
        """Format with a colored level name."""
        levelname = record.levelname
        color = self.COLORS.get(record.levelno, "")
        record.levelname = f"{color}{levelname}{colorama.Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


def setup_logging(verbosity: int) -> None:
    """Install a stderr handler on the package logger, colored on a terminal.

    Args:
        verbosity: -1 errors only, 0 warnings, 1 info, 2+ debug
    """
    colorama.just_fix_windows_console()
    levels = {-1: logging.ERROR, 0: logging.WARNING, 1: logging.INFO}
    level = levels.get(verbosity, logging.DEBUG if verbosity > 1 else logging.ERROR)
    handler = logging.StreamHandler(sys.stderr)
    fmt = "%(levelname)s %(name)s: %(message)s"
    color = sys.stderr.isatty()
    handler.setFormatter(ColorFormatter(fmt) if color else logging.Formatter(fmt))
    logger = logging.getLogger("domprism")
    logger.handlers = [handler]
    logger.setLevel(level)
    logger.propagate = False


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        msg = f"'{text}' is not an integer"
        raise argparse.ArgumentTypeError(msg) from e
    if value < 1:
        msg = f"{value} must be >= 1"
        raise argparse.ArgumentTypeError(msg)
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="domprism",
        description="Exact domination invariants of graphs and their prisms",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    parser.add_argument("--config", type=Path, help="TOML file of settings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute one invariant")
    p.add_argument("--graph", required=True, help="family spec (Q4, C7) or graph6")
    p.add_argument(
        "--kind",
        required=True,
        choices=[k.value for k in DominationKind],
    )
    p.add_argument("--prism", action="store_true", help="use the prism of the graph")
    p.add_argument("--witness", action="store_true", help="also print a witness")
    p.add_argument("--budget", type=_positive, help="solver node budget")

    p = sub.add_parser("scan", help="census of γ_t-prism perfect graphs")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="graph6 file, - for stdin")
    source.add_argument("--generate", type=_positive, metavar="N")
    source.add_argument("--geng", type=_positive, metavar="N")
    p.add_argument("--jobs", type=_positive)
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.add_argument("--undecided-budget", type=_positive, metavar="N")
    p.add_argument("--bipartite-shortcut", action="store_true")
    p.add_argument("--no-progress", action="store_true")
    p.add_argument("--report", type=Path, help="write the aggregate as JSON")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", choices=list(suites.SUITES))
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--quick", action="store_true", help="reduced samples")
    p.add_argument("--samples", type=_positive)
    p.add_argument("--input", type=Path, help="graph6 corpus for census suites")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=_positive)

    p = sub.add_parser("construct", help="print a family member")
    p.add_argument("--family", required=True)
    p.add_argument("--emit", choices=["g6", "edges"], default="g6")
    p.add_argument("--prism", action="store_true")

    p = sub.add_parser("witness", help="print a construction's vertex set")
    p.add_argument("--name", required=True, choices=list(WITNESSES))
    p.add_argument("--param", type=_positive, default=1)
    return parser


def parse_graph_arg(text: str) -> Graph:
    """Family spec if it parses as one, else a graph6 token."""
    try:
        return families.parse_family_spec(text).build()
    except GraphError:
        pass
    return parse_graph6(text)


def _cmd_invariant(args: argparse.Namespace, config: Config) -> int:
    g = parse_graph_arg(args.graph)
    if args.prism:
        g = prism(g)
    budget = args.budget or config.node_budget
    result = invariant(g, DominationKind(args.kind), budget, config.search_budget)
    _LOGGER.info("%s = %d by %s", args.kind, result.value, result.method.value)
    print(result.value)
    if args.witness:
        print(" ".join(map(str, result.witness)))
    return EXIT_OK


def _scan_lines(args: argparse.Namespace) -> t.Iterable[str]:
    if args.generate is not None:
        return [encode_graph6(g) for g in corpus.connected_graphs(args.generate)]
    if args.geng is not None:
        return corpus.geng_tokens(args.geng)
    if args.input == "-":
        return sys.stdin
    try:
        return Path(args.input).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        msg = f"Cannot read {args.input}: {e}"
        raise GraphError(msg) from e


def _cmd_scan(args: argparse.Namespace, config: Config) -> int:
    options = census.ScanOptions(
        jobs=args.jobs or config.jobs,
        node_budget=args.undecided_budget or config.node_budget,
        bipartite_shortcut=args.bipartite_shortcut or config.bipartite_shortcut,
        audit_rate=config.audit_rate,
        progress=config.progress and not args.no_progress and sys.stderr.isatty(),
    )
    records: t.List[t.Dict[str, t.Any]] = []
    writer = csv.writer(sys.stdout, lineterminator="\n")

    def emit_csv(record: census.ScanRecord) -> None:
        writer.writerow(record.csv_row())

    def emit_json(record: census.ScanRecord) -> None:
        records.append(record.to_dict())

    if args.out == "csv":
        writer.writerow(census.CSV_COLUMNS)
    emit = emit_csv if args.out == "csv" else emit_json
    report = census.scan_stream(_scan_lines(args), options, emit)
    if args.out == "json":
        doc = {"report": report.to_dict(), "records": records}
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if args.report is not None:
        with args.report.open("w", encoding="utf-8") as file:
            json.dump(report.to_dict(), file, indent=2)
    print(
        f"total {report.total_graphs}, perfect {report.perfect_count}, "
        f"non-perfect {report.non_perfect_count}, "
        f"undecided {report.undecided_count}, min ratio {report.min_ratio}",
        file=sys.stderr,
    )
    return EXIT_UNDECIDED if report.undecided_count else EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: Config) -> int:
    if args.all == (args.suite is not None):
        _LOGGER.error("Give exactly one of a suite name or --all")
        return EXIT_USAGE
    options = suites.SuiteOptions(
        seed=config.seed if args.seed is None else args.seed,
        samples=args.samples,
        quick=args.quick,
        node_budget=config.node_budget,
        search_budget=config.search_budget,
        input_path=args.input,
        jobs=args.jobs or config.jobs,
        progress=config.progress and sys.stderr.isatty(),
    )
    names = list(suites.SUITES) if args.all else [args.suite]
    reports = [suites.verify_suite(name, options) for name in names]
    json.dump([r.to_dict() for r in reports], sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    statuses = {r.status for r in reports}
    for r in reports:
        print(f"{r.suite}: {r.status}", file=sys.stderr)
    if suites.FAIL in statuses:
        return EXIT_FAILED
    if suites.UNDECIDED in statuses:
        return EXIT_UNDECIDED
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace, _: Config) -> int:
    g = families.parse_family_spec(args.family).build()
    if args.prism:
        g = prism(g)
    if args.emit == "g6":
        print(encode_graph6(g))
    else:
        print(g.n, g.num_edges)
        for u, v in g.edges():
            print(u, v)
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace, _: Config) -> int:
    s = WITNESSES[args.name](args.param)
    _LOGGER.info("%s(%d): %d vertices", args.name, args.param, len(s))
    print(" ".join(map(str, s)))
    return EXIT_OK


COMMANDS: t.Dict[str, t.Callable[[argparse.Namespace, Config], int]] = {
    "invariant": _cmd_invariant,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "witness": _cmd_witness,
}


def cli_main(argv: t.Union[t.Sequence[str], None] = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments without the program name, None for sys.argv[1:]

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    setup_logging(-1 if args.quiet else args.verbose)

    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except (
        ConfigError,
        Graph6Error,
        GraphError,
        NotFoundError,
        UnknownSuiteError,
    ) as e:
        _LOGGER.error("%s", e)
        return EXIT_USAGE
    except UndecidedError as e:
        _LOGGER.error("%s", e)
        return EXIT_UNDECIDED
    except CertificateError as e:
        _LOGGER.error("%s", e)
        return EXIT_FAILED


def main() -> None:
    """Console script entry point."""
    sys.exit(cli_main())
