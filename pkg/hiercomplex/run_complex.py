#!/usr/bin/env python3
"""CLI entrypoint for building complexes and checking lemmas on them."""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from hiercomplex.config.loader import load_rule_table
from hiercomplex.config.settings import SuiteSettings, get_settings
from hiercomplex.core.builder import ComplexBuilder
from hiercomplex.core.errors import ComplexError
from hiercomplex.core.model import Complex
from hiercomplex.geodesy.metric import (
    corner_pairs,
    ellipticity_scan,
    ellipticity_summary,
    sample_pairs,
)
from hiercomplex.paths.path import parse_path
from hiercomplex.paths.search import search_reduction
from hiercomplex.results.dot import export_dot
from hiercomplex.results.serializer import ResultSerializer, lemma_verdicts
from hiercomplex.utils.logging_setup import setup_logging
from hiercomplex.utils.paths import resolve_output, write_text
from hiercomplex.utils.validation import parse_lemma_selection, validate_level, validate_path_exists
from hiercomplex.verify import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="hiercomplex",
        description="Build hierarchical 2-complexes and check their lemmas",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="Build a complex and write its document")
    build.add_argument("--level", type=int, required=True, help="Complex level (>= 1)")
    build.add_argument("--rules", type=str, default=None, help="JSON rule configuration file")
    build.add_argument(
        "--no-pastings",
        action="store_true",
        default=False,
        help="Subdivide only (pure macrotile at every level)",
    )
    build.add_argument("--out", type=str, default=None, help="Output file or directory")

    check = commands.add_parser("check", help="Run the lemma suite")
    _add_source(check)
    check.add_argument(
        "--lemmas", type=str, default=None, help="Comma-separated lemma ids, e.g. L1,L3"
    )
    check.add_argument("--budget", type=int, default=None, help="Paths per null-form search")
    check.add_argument("--seed", type=int, default=None, help="Base seed for sampled paths")
    check.add_argument("--samples", type=int, default=None, help="Sampled paths per level")
    check.add_argument("--workers", type=int, default=None, help="Lemmas run concurrently")
    check.add_argument(
        "--text", action="store_true", default=False, help="Plain-text report instead of JSON"
    )
    check.add_argument("--out", type=str, default=None, help="Output file or directory")

    dot = commands.add_parser("export-dot", help="Write planes as Graphviz DOT")
    _add_source(dot)
    dot.add_argument(
        "--plane", type=int, action="append", default=None, help="Plane id (repeatable)"
    )
    dot.add_argument("--out", type=str, default=None, help="Output file or directory")

    geodesics = commands.add_parser("geodesics", help="Midpoint spread against distance")
    _add_source(geodesics)
    geodesics.add_argument("--samples", type=int, default=None, help="Random pairs to scan")
    geodesics.add_argument("--seed", type=int, default=None, help="Pair sampling seed")
    geodesics.add_argument("--out", type=str, default=None, help="Output file or directory")

    reduce = commands.add_parser("reduce", help="Search a null form for a path file")
    _add_source(reduce)
    reduce.add_argument("--path", type=str, required=True, help="Path file (vertex ids)")
    reduce.add_argument("--budget", type=int, default=None, help="Paths visited at most")
    reduce.add_argument("--out", type=str, default=None, help="Output file or directory")
    return parser


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("document", nargs="?", default=None, help="Complex document (JSON)")
    parser.add_argument(
        "--level", type=int, default=None, help="Build this level instead of reading a document"
    )
    parser.add_argument("--rules", type=str, default=None, help="JSON rule configuration file")


def _status(message: str, to_stdout: bool) -> None:
    """Progress line; kept off stdout while stdout carries the output itself."""
    print(f"Status: ✓ {message}", file=sys.stdout if to_stdout else sys.stderr)


def _load_source(args: argparse.Namespace) -> Complex:
    if args.document is not None:
        return ResultSerializer.load_document(Path(args.document))
    if args.level is None:
        raise ValueError("Give a document or --level")
    level = validate_level(args.level)
    return ComplexBuilder(load_rule_table(args.rules)).build(level)


def _with_overrides(settings: SuiteSettings, **overrides) -> SuiteSettings:
    update = {key: value for key, value in overrides.items() if value is not None}
    return settings.model_copy(update=update) if update else settings


def cmd_build(args: argparse.Namespace, settings: SuiteSettings) -> int:
    level = validate_level(args.level)
    table = load_rule_table(args.rules)
    complex_ = ComplexBuilder(table, with_pastings=not args.no_pastings).build(level)
    out = resolve_output(args.out, f"complex_level{level}.json")
    ResultSerializer.save_document(complex_, out)
    counts = complex_.counts()
    _status(
        f"Built level {level}: V={counts['vertices']}, E={counts['edges']}, "
        f"tiles={counts['tiles']}, planes={counts['planes']}, "
        f"pastings={len(complex_.pasting_log)}",
        out is not None,
    )
    if out is not None:
        print(f"Document saved to: {out}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, settings: SuiteSettings) -> int:
    settings = _with_overrides(
        settings,
        seed=args.seed,
        reduce_budget=args.budget,
        push_budget=args.budget,
        samples_per_lemma=args.samples,
        workers=args.workers,
    )
    complex_ = _load_source(args)
    selection = parse_lemma_selection(args.lemmas) if args.lemmas else None
    report = run_suite(complex_, selection, settings)
    out = resolve_output(args.out, f"report_level{report.level}.json")
    ResultSerializer.save_report(report, out, as_text=args.text)
    _status(f"Checked level {report.level}: {', '.join(lemma_verdicts(report))}", out is not None)
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_export_dot(args: argparse.Namespace, settings: SuiteSettings) -> int:
    complex_ = _load_source(args)
    text = export_dot(complex_, args.plane)
    out = resolve_output(args.out, f"complex_level{complex_.round + 1}.dot")
    write_text(text, out)
    _status(f"Exported {text.count('graph plane_')} plane(s)", out is not None)
    return EXIT_OK


def cmd_geodesics(args: argparse.Namespace, settings: SuiteSettings) -> int:
    settings = _with_overrides(settings, seed=args.seed, ellipticity_samples=args.samples)
    complex_ = _load_source(args)
    nested = sorted(corner_pairs(complex_), key=lambda p: p.level)
    pairs = [(p.upper_left, p.lower_right) for p in nested]
    pairs += sample_pairs(complex_, settings.ellipticity_samples, settings.seed)
    table = ellipticity_scan(complex_, pairs, settings.geodesic_cap)
    out = resolve_output(args.out, f"geodesics_level{complex_.round + 1}.tsv")
    ResultSerializer.save_table(table, out)
    summary = ellipticity_summary(table)
    _status(
        f"Scanned {summary['pairs']} pairs: min R/D={summary['min_ratio']:.3f}, "
        f"median R/D={summary['median_ratio']:.3f}",
        out is not None,
    )
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace, settings: SuiteSettings) -> int:
    budget = args.budget or settings.reduce_budget
    complex_ = _load_source(args)
    path_file = Path(args.path)
    validate_path_exists(path_file)
    path = parse_path(path_file.read_text(encoding="utf-8"))
    outcome = search_reduction(complex_, path, budget)
    if not outcome.found:
        reason = "no null form exists" if outcome.exhausted else f"budget of {budget} exhausted"
        print(f"Error: no reduction found ({reason})", file=sys.stderr)
        return EXIT_FAIL
    out = resolve_output(args.out, "moves.txt")
    ResultSerializer.save_moves(outcome.moves, out)
    _status(
        f"Reduced a length-{path.length} path in {len(outcome.moves)} moves "
        f"({outcome.visited} paths visited)",
        out is not None,
    )
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "check": cmd_check,
    "export-dot": cmd_export_dot,
    "geodesics": cmd_geodesics,
    "reduce": cmd_reduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entrypoint; returns the process exit status."""
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"Error: invalid settings: {e}", file=sys.stderr)
        return EXIT_ERROR
    setup_logging(settings.log_level)
    try:
        return COMMANDS[args.command](args, settings)
    except (ComplexError, ValidationError, FileNotFoundError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
