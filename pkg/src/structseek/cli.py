"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 query syntax error, 3 I/O error.
Reports go to stdout; ``WARN path:line: message`` diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from . import corpus
from .extractor import compute_metrics, extract_units, find_sources, merge_methods, read_unit
from .extractor.diagnostics import Diagnostic
from .simcore import pass_count
from .tokens import QuerySyntaxError, parse_sequence

EXIT_OK, EXIT_USAGE, EXIT_QUERY, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means "query syntax" here
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _tsv(*fields: object) -> str:
    def esc(v: object) -> str:
        return str(v).replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n").replace("\r", "\\r")

    return "\t".join(esc(f) for f in fields)


def _pct(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.1f}%"


def _warn(diag: Diagnostic | str) -> None:
    print(str(diag), file=sys.stderr)


def _load_store(path: str) -> corpus.CorpusStore:
    return corpus.load(path)


def _collect_units(src: str, exts: Sequence[str]):
    root = Path(src)
    if not root.is_dir():
        raise OSError(f"not a readable directory: {src}")
    units, diags = [], []
    for path in find_sources(root, exts):
        unit, problems = read_unit(path, root)
        diags.extend(problems)
        if unit is not None:
            units.append(unit)
    return units, diags


def cmd_extract(args: argparse.Namespace) -> int:
    exts = [e.strip() for e in args.ext.split(",") if e.strip()]
    units, diags = _collect_units(args.src, exts)
    results = extract_units(units, jobs=args.jobs)
    for d in diags:
        _warn(d)
    for r in results:
        for d in r.diagnostics:
            _warn(d)
    store = corpus.CorpusStore.from_methods(merge_methods(results), source_root=str(args.src))
    corpus.save(store, args.out)
    if not store.methods:
        _warn(f"WARN {args.src}:0: no methods extracted")
    print(_tsv("files", len(units)))
    print(_tsv("methods", len(store.methods)))
    print(_tsv("terms", len(store.vocabulary)))
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    query = parse_sequence(args.sequence)
    store = _load_store(args.structures)
    rows = corpus.rank(store, args.model, query, top_k=args.top, min_sim=args.min_sim) if store.methods else []
    if args.format == "json":
        payload = [
            {
                "rank": r.rank,
                "method_id": r.method_id,
                "similarity": round(r.similarity, 3),
                "exact": r.exact,
                "partial": r.partial,
                "code_lines": r.code_lines,
            }
            for r in rows
        ]
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return EXIT_OK
    print(_tsv("rank", "method_id", "similarity", "exact", "partial", "code_lines"))
    for r in rows:
        exact = "" if r.exact is None else r.exact
        partial = "" if r.partial is None else r.partial
        print(_tsv(r.rank, r.method_id, f"{r.similarity:.3f}", exact, partial, r.code_lines))
    return EXIT_OK


def format_report(report: corpus.ComparisonReport) -> str:
    boundary = "n/a" if report.boundary_cosine is None else f"{report.boundary_cosine:.3f}"
    return _tsv(
        report.query,
        report.n_dsrm,
        report.n_dice,
        report.n_vsm,
        _pct(report.improvement_vs_dice),
        _pct(report.improvement_vs_vsm),
        boundary,
    )


def cmd_compare(args: argparse.Namespace) -> int:
    queries = [(raw, parse_sequence(raw)) for raw in args.sequence]
    store = _load_store(args.structures)
    print(_tsv("query", "n_dsrm", "n_dice", "n_vsm", "improvement_vs_dice", "improvement_vs_vsm", "boundary_cosine"))
    if not store.methods:
        for raw, _ in queries:
            print(format_report(corpus.ComparisonReport(raw.strip(), 0, 0, 0, None, None, None)))
        return EXIT_OK
    tfidf = corpus.build_tfidf(store)
    for raw, query in queries:
        print(format_report(corpus.compare(store, query, tfidf, label=raw.strip())))
    return EXIT_OK


def _read_queries(path: str) -> list[str]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def cmd_bench(args: argparse.Namespace) -> int:
    queries = [(raw, parse_sequence(raw)) for raw in _read_queries(args.queries)]
    store = _load_store(args.structures)
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    tfidf = corpus.build_tfidf(store) if store.methods else None
    print(_tsv("query", "model", "passes", "median_ms"))
    for raw, query in queries:
        for model in corpus.MODELS:
            times = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                if store.methods:
                    corpus.score(store, model, query, tfidf)
                times.append((time.perf_counter() - t0) * 1000.0)
            passes = 1 if model == "vsm" else pass_count(len(query))
            print(_tsv(raw, model, passes, f"{statistics.median(times):.3f}"))
    return EXIT_OK


STATS_LABELS = (
    ("Java Files", "files"),
    ("Classes", "classes"),
    ("Methods", "methods"),
    ("Lines of Code", "lines_of_code"),
    ("Comment Lines", "comment_lines"),
    ("Total Lines", "total_lines"),
)


def cmd_stats(args: argparse.Namespace) -> int:
    exts = [e.strip() for e in args.ext.split(",") if e.strip()]
    units, diags = _collect_units(args.src, exts)
    for d in diags:
        _warn(d)
    metrics = compute_metrics(units)
    for label, attr in STATS_LABELS:
        print(_tsv(label, f"{getattr(metrics, attr):,}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="structseek", description="Structural retrieval of Java methods.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", help="extract method structures from a source tree")
    p.add_argument("--src", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--ext", default=".java", help="comma-separated extensions")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("query", help="rank methods against a statement sequence")
    p.add_argument("--structures", required=True)
    p.add_argument("--model", required=True, choices=corpus.MODELS)
    p.add_argument("--sequence", required=True)
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--min-sim", type=float, default=0.0)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("compare", help="retrieved-count comparison of the three models")
    p.add_argument("--structures", required=True)
    p.add_argument("--sequence", required=True, action="append")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="time the three models over a query file")
    p.add_argument("--structures", required=True)
    p.add_argument("--queries", required=True)
    p.add_argument("--repeat", type=int, default=5)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("stats", help="file metrics of a source tree")
    p.add_argument("--src", required=True)
    p.add_argument("--ext", default=".java")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except corpus.UnknownModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuerySyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUERY
    except (OSError, corpus.CorpusFormatError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
