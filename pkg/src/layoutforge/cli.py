"""Command line front end: count, partition, build, score, compare.

Subcommands mirror the pipeline stages and each writes plain files
(TSV for tables, JSON for structured results) so stages can be rerun
and inspected independently. ``run-all`` chains the whole pipeline.
Outputs embed an echo of the knobs that produced them, never the input
paths, so the same inputs give byte-identical files on every run.

Exit codes: 0 on success, 2 for input or usage problems, 1 for bugs.
Errors are reported as a single JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Sequence

from .corpus import (AlphabetConfig, LetterStream, concat_streams, normalize_text,
                     read_corpus, tokenize)
from .errors import ConfigError, EmptyCorpus, LayoutForgeError
from .evaluator import (compare, evaluate, format_comparison, read_report_json,
                        write_report_json, write_report_tsv)
from .layout import Geometry, build_layout, load_geometry, load_layout, write_layout
from .partition import partition_all, read_partition_json, write_partition_json
from .stats import count_ngrams, read_ngram_tsv, write_ngram_tsv

CONFIG_ENV_VAR = "LAYOUTFORGE_CONFIG"


@dataclass
class PipelineConfig:
    """Every knob the pipeline accepts, with its resting default.

    Values come from three layers, strongest last: built-in defaults,
    the JSON file named by LAYOUTFORGE_CONFIG, command line flags.
    """

    alphabet_path: str | None = None
    geometry_path: str | None = None
    out_dir: str = "."
    coverage: int = 1
    balance_tiebreak: bool = False
    reset_on_boundary: bool = False
    span_boundaries: bool = False

    def echo(self) -> dict:
        """The fields worth stamping into output files.

        out_dir is omitted: it changes where results go, never what
        they contain.
        """
        return {
            "alphabet_path": self.alphabet_path,
            "geometry_path": self.geometry_path,
            "coverage": self.coverage,
            "balance_tiebreak": self.balance_tiebreak,
            "reset_on_boundary": self.reset_on_boundary,
            "span_boundaries": self.span_boundaries,
        }


def _env_defaults(environ=os.environ) -> dict:
    path = environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: config file must hold a JSON object")
    known = {f.name for f in fields(PipelineConfig)}
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"{path}: unknown config fields: {sorted(unknown)}")
    return doc


def resolve_config(args: argparse.Namespace, environ=os.environ) -> PipelineConfig:
    """Overlay flag values (when given) on the env-file values on the defaults."""
    config = PipelineConfig(**_env_defaults(environ))
    for name in (f.name for f in fields(PipelineConfig)):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    return config


def _load_alphabet(config: PipelineConfig) -> AlphabetConfig:
    if config.alphabet_path:
        return AlphabetConfig.load(config.alphabet_path)
    return AlphabetConfig()


def _load_geometry(config: PipelineConfig) -> Geometry:
    if config.geometry_path:
        return load_geometry(config.geometry_path)
    return Geometry()


def _read_input(paths: Sequence[str], alphabet: AlphabetConfig) -> LetterStream:
    """Corpus files, or stdin when none are named."""
    if paths:
        return read_corpus(paths, alphabet)
    text = normalize_text(sys.stdin.buffer.read())
    return tokenize(text, alphabet)


def _require_letters(stream: LetterStream) -> None:
    if stream.letter_count == 0:
        raise EmptyCorpus("empty corpus: input contains no alphabet letters")


def _out_dir(config: PipelineConfig) -> Path:
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_stats_files(stream: LetterStream, config: PipelineConfig, out: Path) -> None:
    echo = config.echo()
    names = {1: "monograms.tsv", 2: "digraphs.tsv", 3: "trigrams.tsv"}
    for n, filename in names.items():
        table = count_ngrams(stream, n, span_boundaries=config.span_boundaries)
        with open(out / filename, "w", encoding="utf-8") as handle:
            write_ngram_tsv(table, handle, config_echo=echo)
    summary = {
        "total_letters": stream.letter_count,
        "distinct_letters": len(set(stream.letters())),
        "config": echo,
    }
    with open(out / "summary.json", "w", encoding="utf-8") as handle:
        json.dump(summary, handle, ensure_ascii=False, indent=2)
        handle.write("\n")


# ---------------------------------------------------------------------------
# Subcommands. Each takes the parsed namespace and returns an exit code.

def cmd_stats(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    stream = _read_input(args.corpus, _load_alphabet(config))
    _require_letters(stream)
    _write_stats_files(stream, config, _out_dir(config))
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    if args.mono or args.digraphs:
        if args.corpus:
            raise ConfigError("give corpus files or --mono/--digraphs tables, not both")
        if not (args.mono and args.digraphs):
            raise ConfigError("--mono and --digraphs must be given together")
        mono = read_ngram_tsv(args.mono)
        digraphs = read_ngram_tsv(args.digraphs)
        if mono.n != 1 or digraphs.n != 2:
            raise ConfigError("--mono must be a 1-gram table and --digraphs a 2-gram table")
    else:
        stream = _read_input(args.corpus, _load_alphabet(config))
        _require_letters(stream)
        mono = count_ngrams(stream, 1)
        digraphs = count_ngrams(stream, 2, span_boundaries=config.span_boundaries)
    part = partition_all(mono, digraphs, coverage=config.coverage,
                         balance_tiebreak=config.balance_tiebreak)
    out = _out_dir(config)
    write_partition_json(part, mono, out / "partition.json", config_echo=config.echo())
    return 0


def cmd_layout(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    part, mono = read_partition_json(args.partition)
    layout = build_layout(part, mono, _load_geometry(config), name=args.name)
    write_layout(layout, _out_dir(config) / "layout.json")
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    stream = read_corpus(args.corpus, _load_alphabet(config))
    _require_letters(stream)
    out = _out_dir(config)
    for layout_path in args.layouts:
        layout = load_layout(layout_path)
        report = evaluate(layout, stream, reset_on_boundary=config.reset_on_boundary)
        write_report_json(report, out / f"report-{layout.name}.json",
                          config_echo=config.echo())
        with open(out / f"report-{layout.name}.tsv", "w", encoding="utf-8") as handle:
            write_report_tsv(report, handle)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    reports = [read_report_json(path) for path in args.reports]
    text = format_comparison(compare(reports))
    sys.stdout.write(text)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def cmd_run_all(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    alphabet = _load_alphabet(config)
    stream = _read_input(args.corpus, alphabet)
    _require_letters(stream)
    out = _out_dir(config)
    echo = config.echo()

    _write_stats_files(stream, config, out)
    mono = count_ngrams(stream, 1)
    digraphs = count_ngrams(stream, 2, span_boundaries=config.span_boundaries)
    part = partition_all(mono, digraphs, coverage=config.coverage,
                         balance_tiebreak=config.balance_tiebreak)
    write_partition_json(part, mono, out / "partition.json", config_echo=echo)

    layout = build_layout(part, mono, _load_geometry(config), name=args.name)
    write_layout(layout, out / "layout.json")

    report = evaluate(layout, stream, reset_on_boundary=config.reset_on_boundary)
    write_report_json(report, out / f"report-{layout.name}.json", config_echo=echo)
    with open(out / f"report-{layout.name}.tsv", "w", encoding="utf-8") as handle:
        write_report_tsv(report, handle)

    text = format_comparison(compare([report]))
    sys.stdout.write(text)
    (out / "comparison.txt").write_text(text, encoding="utf-8")
    return 0


# ---------------------------------------------------------------------------
# Parser assembly and entry points.

def _add_common(parser: argparse.ArgumentParser, *, alphabet=False, geometry=False,
                out=True, coverage=False, balance=False, reset=False, span=False,
                name=False) -> None:
    if alphabet:
        parser.add_argument("--alphabet", dest="alphabet_path", metavar="JSON",
                            help="alphabet config file (ranges, include, exclude)")
    if geometry:
        parser.add_argument("--geometry", dest="geometry_path", metavar="JSON",
                            help="geometry config file (rows, columns, layers)")
    if out:
        parser.add_argument("--out", dest="out_dir", metavar="DIR",
                            help="directory for output files (default: current)")
    if coverage:
        parser.add_argument("--coverage", type=int, metavar="N",
                            help="ignore letters occurring fewer than N times")
    if balance:
        parser.add_argument("--balance-tiebreak", dest="balance_tiebreak",
                            action="store_true", default=None,
                            help="send mixed-signal letters to the lighter hand")
    if reset:
        parser.add_argument("--reset-on-boundary", dest="reset_on_boundary",
                            action="store_true", default=None,
                            help="forget the previous hand at word boundaries")
    if span:
        parser.add_argument("--span-boundaries", dest="span_boundaries",
                            action="store_true", default=None,
                            help="let n-gram windows cross word boundaries")
    if name:
        parser.add_argument("--name", default="optimized",
                            help="name for the built layout (default: optimized)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layoutforge",
        description="derive and score two-handed keyboard layouts from a text corpus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="count n-grams and write frequency tables")
    p.add_argument("corpus", nargs="*", help="corpus text files (stdin when omitted)")
    _add_common(p, alphabet=True, span=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("partition", help="split the alphabet across two hands")
    p.add_argument("corpus", nargs="*", help="corpus text files (stdin when omitted)")
    p.add_argument("--mono", metavar="TSV", help="precomputed 1-gram table")
    p.add_argument("--digraphs", metavar="TSV", help="precomputed 2-gram table")
    _add_common(p, alphabet=True, coverage=True, balance=True, span=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("layout", help="place a partition onto the key grid")
    p.add_argument("partition", help="partition.json produced by the partition step")
    _add_common(p, geometry=True, name=True)
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("evaluate", help="score layouts against a corpus")
    p.add_argument("layouts", nargs="+", help="layout JSON files")
    p.add_argument("--corpus", nargs="+", required=True, help="corpus text files")
    _add_common(p, alphabet=True, reset=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="rank evaluation reports by hand switching")
    p.add_argument("reports", nargs="+", help="report JSON files")
    p.add_argument("--out", metavar="FILE", help="also write the table to a file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("run-all", help="run the whole pipeline in one go")
    p.add_argument("corpus", nargs="*", help="corpus text files (stdin when omitted)")
    _add_common(p, alphabet=True, geometry=True, coverage=True, balance=True,
                reset=True, span=True, name=True)
    p.set_defaults(func=cmd_run_all)

    return parser


def _report_error(exc: BaseException) -> None:
    line = json.dumps({"error": type(exc).__name__, "message": str(exc)},
                      ensure_ascii=False)
    print(line, file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except LayoutForgeError as exc:
        _report_error(exc)
        return 2
    except OSError as exc:
        _report_error(exc)
        return 2
    except Exception as exc:  # a bug, not a usage problem
        _report_error(exc)
        return 1


def run() -> None:
    raise SystemExit(main())
