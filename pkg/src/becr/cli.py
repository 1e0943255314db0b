"""Command-line interface.

Four subcommands: ``concepts`` (enumerate and export the lattice),
``relevance`` (score concepts and rank them), ``bench`` (side-by-side index
comparison with timing), and ``generate`` (random coin-toss contexts).

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 tripped size guard (concept budget or intent guard).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import emit_csv, emit_scatter, run_comparison
from .context import FormalContext, parse_csv, parse_cxt, parse_fimi, serialize_cxt
from .generators import IntentTooLarge, minimal_generators
from .lattice import (
    DEFAULT_CONCEPT_BUDGET,
    ConceptBudgetExceeded,
    ContextTooLarge,
    build_covers,
    concepts_csv,
    enumerate_concepts,
)
from .relevance import BaseRule, becr, stability
from .synth import CoinTossSpec, coin_toss_context

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_GUARD = 3

_FORMATS = {".cxt": "cxt", ".csv": "csv", ".dat": "fimi", ".fimi": "fimi"}
_PARSERS = {"cxt": parse_cxt, "csv": parse_csv, "fimi": parse_fimi}


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2 for usage; remap to the contract's 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_context(path_str: str, fmt: str) -> FormalContext:
    path = Path(path_str)
    if fmt == "auto":
        fmt = _FORMATS.get(path.suffix.lower())
        if fmt is None:
            raise _CliFailure(
                EXIT_USAGE,
                f"cannot infer format from {path.name!r}; pass --format",
            )
    try:
        text = path.read_text()
    except OSError as err:
        raise _CliFailure(EXIT_PARSE, f"cannot read {path}: {err}") from None
    try:
        return _PARSERS[fmt](text)
    except ValueError as err:
        raise _CliFailure(EXIT_PARSE, f"{path}: {err}") from None


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _stats_line(ctx: FormalContext, n_concepts: int) -> str:
    if ctx.n_objects and ctx.n_attributes:
        theta = float(ctx.density())
    else:
        theta = 0.0
    return (
        f"{ctx.n_objects} {ctx.n_attributes} {ctx.n_incidences} "
        f"{n_concepts} {theta:.3f}"
    )


def _fmt6(value) -> str:
    return f"{float(value):.6f}"


def _cmd_concepts(args) -> int:
    ctx = _load_context(args.input, args.format)
    concepts = enumerate_concepts(ctx, budget=args.concept_budget)
    print(_stats_line(ctx, len(concepts)), file=sys.stderr)
    _write_output(concepts_csv(ctx, concepts), args.output)
    return EXIT_OK


def _cmd_relevance(args) -> int:
    ctx = _load_context(args.input, args.format)
    rule = BaseRule(args.base_rule)
    concepts = enumerate_concepts(ctx, budget=args.concept_budget)
    lattice = build_covers(concepts)
    with_becr = args.index in ("becr", "both")
    with_stability = args.index in ("stability", "both")

    header = ["concept_id", "extent_size", "intent_size"]
    if with_becr:
        header += ["alpha", "beta", "becr"]
    if with_stability:
        header += ["stability"]
    if with_becr:
        header += ["n_mingen", "n_base", "n_equiv"]

    records = []
    for i, concept in enumerate(concepts):
        fields = [str(i), str(concept.extent.bit_count()),
                  str(concept.intent.bit_count())]
        sort_values = {}
        if with_becr:
            breakdown = becr(ctx, lattice, concept, rule)
            fields += [_fmt6(breakdown.alpha), _fmt6(breakdown.beta),
                       _fmt6(breakdown.becr)]
            sort_values["becr"] = breakdown.becr
        if with_stability:
            try:
                score = stability(ctx, concept)
            except IntentTooLarge as err:
                raise IntentTooLarge(f"concept {i}: {err}") from None
            fields += [_fmt6(score.value)]
            sort_values["stability"] = score.value
        if with_becr:
            fields += [str(breakdown.generator_count),
                       str(breakdown.base_attributes.bit_count()),
                       str(breakdown.equivalent_attributes.bit_count())]
        key = sort_values["becr" if with_becr else "stability"]
        records.append((key, i, fields))

    records.sort(key=lambda rec: (-rec[0], rec[1]))
    lines = [",".join(header)] + [",".join(f) for _, _, f in records]
    _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    ctx = _load_context(args.input, args.format)
    repeats = 0 if args.no_timing else args.timing_repeats
    report = run_comparison(
        ctx,
        rule=BaseRule(args.base_rule),
        timing_repeats=repeats,
        concept_budget=args.concept_budget,
        threads=args.threads,
    )
    _write_output(emit_csv(report, include_timing=not args.no_timing),
                  args.output)
    if args.scatter:
        Path(args.scatter).write_text(emit_scatter(report))
    xi = "undefined" if report.pearson_xi is None else f"{report.pearson_xi:.4f}"
    print(
        f"xi={xi} tau_becr={report.mean_time_becr_ns:.0f} "
        f"tau_stability={report.mean_time_stability_ns:.0f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = CoinTossSpec(args.objects, args.attributes, args.density, args.seed)
    _write_output(serialize_cxt(coin_toss_context(spec)), args.output)
    return EXIT_OK


def _add_input_options(sub, with_budget=True):
    sub.add_argument("input", help="context file")
    sub.add_argument(
        "--format",
        choices=("auto", "cxt", "csv", "fimi"),
        default="auto",
        help="input format (default: by file extension)",
    )
    sub.add_argument("--output", metavar="PATH",
                     help="write to PATH instead of stdout")
    if with_budget:
        sub.add_argument(
            "--concept-budget",
            type=int,
            default=DEFAULT_CONCEPT_BUDGET,
            metavar="N",
            help=f"abort above N concepts (default {DEFAULT_CONCEPT_BUDGET})",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="becr",
                     description="Concept lattice relevance scoring.")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "concepts", help="enumerate concepts, print stats, export the list")
    _add_input_options(sub)
    sub.set_defaults(handler=_cmd_concepts)

    sub = commands.add_parser(
        "relevance", help="score and rank concepts")
    _add_input_options(sub)
    sub.add_argument("--index", choices=("becr", "stability", "both"),
                     default="becr",
                     help="which index to compute (default becr); 'both' "
                          "sorts by becr")
    sub.add_argument("--base-rule",
                     choices=tuple(r.value for r in BaseRule),
                     default=BaseRule.WORKED_EXAMPLE.value,
                     help="removal-set rule for base attributes")
    sub.set_defaults(handler=_cmd_relevance)

    sub = commands.add_parser(
        "bench", help="compare becr and stability with timing")
    _add_input_options(sub)
    sub.add_argument("--base-rule",
                     choices=tuple(r.value for r in BaseRule),
                     default=BaseRule.WORKED_EXAMPLE.value,
                     help="removal-set rule for base attributes")
    sub.add_argument("--timing-repeats", type=int, default=5, metavar="N",
                     help="timed runs per concept and index (default 5)")
    sub.add_argument("--no-timing", action="store_true",
                     help="skip the timing pass and omit timing columns")
    sub.add_argument("--scatter", metavar="PATH",
                     help="also write a becr,stability scatter CSV")
    sub.add_argument("--threads", type=int, default=1, metavar="N",
                     help="threads for the untimed scoring pass; timing is "
                          "always sequential (default 1)")
    sub.set_defaults(handler=_cmd_bench)

    sub = commands.add_parser(
        "generate", help="write a random coin-toss context as .cxt")
    sub.add_argument("--objects", type=int, required=True, metavar="N")
    sub.add_argument("--attributes", type=int, required=True, metavar="M")
    sub.add_argument("--density", type=float, required=True, metavar="P",
                     help="cell probability in [0, 1]")
    sub.add_argument("--seed", type=int, default=0, metavar="S")
    sub.add_argument("--output", metavar="PATH",
                     help="write to PATH instead of stdout")
    sub.set_defaults(handler=_cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "timing_repeats", 1) < 0:
        parser.error("--timing-repeats must be >= 0")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    if getattr(args, "concept_budget", 1) < 1:
        parser.error("--concept-budget must be >= 1")
    if args.command == "generate":
        if args.objects < 1 or args.attributes < 1:
            parser.error("--objects and --attributes must be >= 1")
        if not 0.0 <= args.density <= 1.0:
            parser.error("--density must lie in [0, 1]")
    try:
        return args.handler(args)
    except _CliFailure as err:
        print(f"becr: {err}", file=sys.stderr)
        return err.code
    except (ConceptBudgetExceeded, ContextTooLarge, IntentTooLarge) as err:
        print(f"becr: {err}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
