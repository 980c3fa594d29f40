"""Command line frontend: analyze one document or compare two.

`analyze` runs the full pipeline on one document and writes the four
chart SVGs, the dashboard, the CSV tables, the smoothed-curve CSVs and
`results.json` into the output directory. `compare` runs the same
pipeline for two documents into per-document subdirectories and adds a
`comparison.json` pairing the two distributions and score curves.

Exit codes: 0 success, 1 input/validation failure, 2 invariant violation
under --check. Zero-match documents succeed with empty artifacts;
warnings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis, render
from .corpus import PARAGRAPH_MODES, RawDocument, StopWordList, load_document, remove_stop_words, tokenize
from .errors import InsufficientDataError, LexsentError
from .lexicon import BingLexicon, NrcLexicon, Polarity, demo_bing_path, demo_nrc_path, load_bing, load_nrc
from .smoothing import LoessConfig, SmoothedCurve, loess_fit

CHART_W, CHART_H = 640, 480
DASHBOARD_W, DASHBOARD_H = 1280, 960

TITLE_FREQUENCY = "Common Words & Sentiments (Frequency)"
TITLE_DISTRIBUTION = "Sentiments (Distribution)"
TITLE_CONDITIONAL_MEAN = "Intertemporal Use of Sentiments (Conditional Mean)"
TITLE_SCORE = "Intertemporal Use of Sentiments (Score)"


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple[Path, ...]
    nrc_path: str
    bing_path: str
    out_dir: Path
    stopwords_path: Path | None = None
    custom_stopwords: tuple[str, ...] = ()
    min_count: int = 3
    span: float = 0.2
    degree: int = 2
    grid_points: int = 80
    paragraph_mode: str = "line"
    check: bool = False
    fmt: str = "all"

    def __post_init__(self):
        if len(self.inputs) not in (1, 2):
            raise ValueError("need 1 or 2 input documents")
        if self.min_count < 1:
            raise ValueError(f"min-count must be >= 1, got {self.min_count}")
        if self.paragraph_mode not in PARAGRAPH_MODES:
            raise ValueError(f"paragraph-mode must be one of {PARAGRAPH_MODES}")
        if self.fmt not in ("svg", "csv", "json", "all"):
            raise ValueError(f"format must be svg, csv, json or all, got {self.fmt!r}")
        LoessConfig(span=self.span, degree=self.degree, grid_points=self.grid_points)

    @property
    def loess(self) -> LoessConfig:
        return LoessConfig(span=self.span, degree=self.degree, grid_points=self.grid_points)


@dataclass
class DocumentRun:
    """Everything computed for one document before anything is written."""

    doc: RawDocument
    word_counts: list[analysis.WordSentimentCount]
    filtered_counts: list[analysis.WordSentimentCount]
    distribution: list[analysis.DistributionRow]
    line_counts: list[analysis.LineSentimentCount]
    scores: list[analysis.LineScore]
    matches: list[analysis.BingMatch]
    tokens: list
    conditional_mean_curve: SmoothedCurve | None = None
    score_curve: SmoothedCurve | None = None
    smoothing_failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _resolve_lexicon_path(value: str, demo_path: Path) -> Path:
    # the literal value "demo" selects the packaged synthetic lexicon
    return demo_path if value == "demo" else Path(value)


def load_lexicons(config: RunConfig) -> tuple[NrcLexicon, BingLexicon]:
    nrc = load_nrc(_resolve_lexicon_path(config.nrc_path, demo_nrc_path()))
    bing = load_bing(_resolve_lexicon_path(config.bing_path, demo_bing_path()))
    return nrc, bing


def load_stop_words(config: RunConfig) -> tuple[StopWordList, StopWordList]:
    standard = (StopWordList.load(config.stopwords_path)
                if config.stopwords_path is not None else StopWordList.builtin())
    custom = StopWordList.from_words(config.custom_stopwords)
    return standard, custom


def conditional_mean_series(rows: list[analysis.LineSentimentCount]) -> list[tuple[float, float]]:
    ordered = sorted(rows, key=lambda r: (r.line, r.sentiment.value))
    return [(float(r.line), float(r.n)) for r in ordered]


def score_series(rows: list[analysis.LineScore]) -> list[tuple[float, float]]:
    return [(float(r.line), float(r.score)) for r in rows]


def run_document(path: Path, config: RunConfig, standard: StopWordList,
                 custom: StopWordList, nrc: NrcLexicon, bing: BingLexicon) -> DocumentRun:
    doc = load_document(path, mode=config.paragraph_mode)
    tokens = remove_stop_words(tokenize(doc), standard, custom)

    word_counts = analysis.word_sentiment_counts(tokens, nrc)
    run = DocumentRun(
        doc=doc,
        word_counts=word_counts,
        filtered_counts=analysis.filter_min_count(word_counts, config.min_count),
        distribution=analysis.sentiment_distribution(tokens, nrc),
        line_counts=analysis.line_sentiment_counts(tokens, nrc),
        scores=analysis.line_scores(tokens, bing),
        matches=analysis.bing_matches(tokens, bing),
        tokens=tokens,
    )

    for label, series in (("conditional mean", conditional_mean_series(run.line_counts)),
                          ("score", score_series(run.scores))):
        if not series:
            run.warnings.append(f"{doc.source_name}: no lexicon matches for the {label} curve; smoothing skipped")
            continue
        try:
            curve = loess_fit(series, config.loess)
        except InsufficientDataError as exc:
            run.smoothing_failures.append(f"{doc.source_name}: {label} curve: {exc}")
            continue
        if label == "conditional mean":
            run.conditional_mean_curve = curve
        else:
            run.score_curve = curve
    return run


def _chart_specs(run: DocumentRun) -> dict[str, render.ChartSpec | None]:
    specs: dict[str, render.ChartSpec | None] = {}
    specs["frequency"] = (render.ChartSpec(TITLE_FREQUENCY, "sentiment (n)", "word",
                                           render.ChartKind.H_BAR_STACKED, run.filtered_counts)
                          if run.filtered_counts else None)
    specs["distribution"] = render.ChartSpec(TITLE_DISTRIBUTION, "n", "sentiment",
                                             render.ChartKind.H_BAR_PLAIN, run.distribution)
    specs["conditional_mean"] = (render.ChartSpec(TITLE_CONDITIONAL_MEAN, "document (line)",
                                                  "sentiment (conditional mean)",
                                                  render.ChartKind.SMOOTH_LINE, run.conditional_mean_curve)
                                 if run.conditional_mean_curve else None)
    specs["score"] = (render.ChartSpec(TITLE_SCORE, "document (line)", "sentiment (score)",
                                       render.ChartKind.SMOOTH_LINE, run.score_curve)
                      if run.score_curve else None)
    return specs


def _write_csv(path: Path, header: list[str], rows: list[tuple]) -> None:
    import csv

    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _table(columns: list[str], rows: list[list]) -> dict:
    return {"columns": columns, "rows": rows}


def _curve_json(curve: SmoothedCurve | None) -> dict | None:
    if curve is None:
        return None
    return _table(["x", "y_hat"], [[p.x, p.y_hat] for p in curve.points])


def results_payload(run: DocumentRun, config: RunConfig) -> dict:
    return {
        "document": run.doc.source_name,
        "paragraph_count": run.doc.paragraph_count,
        "word_sentiment_counts": _table(
            ["word", "sentiment", "n"],
            [[r.word, r.sentiment.value, r.n] for r in run.word_counts]),
        "distribution": _table(
            ["sentiment", "total"],
            [[r.sentiment.value, r.total] for r in run.distribution]),
        "line_sentiment_counts": _table(
            ["line", "sentiment", "n"],
            [[r.line, r.sentiment.value, r.n] for r in run.line_counts]),
        "line_scores": _table(
            ["line", "score"],
            [[r.line, r.score] for r in run.scores]),
        "conditional_mean_curve": _curve_json(run.conditional_mean_curve),
        "score_curve": _curve_json(run.score_curve),
        "config": {
            "nrc": config.nrc_path,
            "bing": config.bing_path,
            "stopwords": str(config.stopwords_path) if config.stopwords_path else "builtin",
            "custom_stopwords": list(config.custom_stopwords),
            "min_count": config.min_count,
            "span": config.span,
            "degree": config.degree,
            "grid_points": config.grid_points,
            "paragraph_mode": config.paragraph_mode,
        },
    }


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def emit_document(run: DocumentRun, out_dir: Path, config: RunConfig) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    name = run.doc.source_name
    fmt = config.fmt

    if fmt in ("csv", "all"):
        _write_csv(out_dir / f"{name}_word_sentiment_counts.csv", ["word", "sentiment", "n"],
                   [(r.word, r.sentiment.value, r.n) for r in run.word_counts])
        _write_csv(out_dir / f"{name}_distribution.csv", ["sentiment", "total"],
                   [(r.sentiment.value, r.total) for r in run.distribution])
        _write_csv(out_dir / f"{name}_line_sentiment_counts.csv", ["line", "sentiment", "n"],
                   [(r.line, r.sentiment.value, r.n) for r in run.line_counts])
        _write_csv(out_dir / f"{name}_line_scores.csv", ["line", "score"],
                   [(r.line, r.score) for r in run.scores])
        if run.conditional_mean_curve is not None:
            _write_csv(out_dir / f"{name}_conditional_mean_curve.csv", ["x", "y_hat"],
                       [(p.x, p.y_hat) for p in run.conditional_mean_curve.points])
        if run.score_curve is not None:
            _write_csv(out_dir / f"{name}_score_curve.csv", ["x", "y_hat"],
                       [(p.x, p.y_hat) for p in run.score_curve.points])

    if fmt in ("svg", "all"):
        specs = _chart_specs(run)
        for key, spec in specs.items():
            if spec is None:
                run.warnings.append(f"{name}: no data for the {key} chart; file skipped")
                continue
            (out_dir / f"{name}_{key}.svg").write_bytes(render.render_chart(spec, CHART_W, CHART_H))
        if all(spec is not None for spec in specs.values()):
            dashboard = render.Dashboard((specs["frequency"], specs["distribution"],
                                          specs["conditional_mean"], specs["score"]))
            (out_dir / f"{name}_dashboard.svg").write_bytes(
                render.render_dashboard(dashboard, DASHBOARD_W, DASHBOARD_H))
        else:
            run.warnings.append(f"{name}: dashboard skipped (not all four panels have data)")

    if fmt in ("json", "all"):
        _write_json(out_dir / "results.json", results_payload(run, config))


def invariant_violations(run: DocumentRun) -> list[str]:
    """Recompute the cross-analysis conservation laws on one run."""
    violations = []

    by_category = {row.sentiment: 0 for row in run.distribution}
    for row in run.word_counts:
        by_category[row.sentiment] = by_category.get(row.sentiment, 0) + row.n
    for row in run.distribution:
        if by_category.get(row.sentiment, 0) != row.total:
            violations.append(
                f"distribution total mismatch for {row.sentiment.value}: "
                f"word table gives {by_category.get(row.sentiment, 0)}, distribution says {row.total}")

    word_total = sum(row.n for row in run.word_counts)
    line_total = sum(row.n for row in run.line_counts)
    if word_total != line_total:
        violations.append(f"word table total {word_total} != line table total {line_total}")

    pos_neg: dict[int, tuple[int, int]] = {}
    for match in run.matches:
        p, n = pos_neg.get(match.line, (0, 0))
        if match.polarity is Polarity.POSITIVE:
            pos_neg[match.line] = (p + 1, n)
        else:
            pos_neg[match.line] = (p, n + 1)
    tokens_per_line: dict[int, int] = {}
    for token in run.tokens:
        tokens_per_line[token.line] = tokens_per_line.get(token.line, 0) + 1
    score_lines = {row.line for row in run.scores}
    if score_lines != set(pos_neg):
        violations.append("score table lines differ from matched lines")
    for row in run.scores:
        p, n = pos_neg.get(row.line, (0, 0))
        if row.score != p - n:
            violations.append(f"line {row.line}: score {row.score} != {p} - {n}")
        if not (abs(row.score) <= p + n <= tokens_per_line.get(row.line, 0)):
            violations.append(f"line {row.line}: |score| <= matches <= tokens violated")
    return violations


def _finish_document(run: DocumentRun, config: RunConfig) -> tuple[int, list[str]]:
    """Report warnings/failures and compute the document's exit status."""
    for message in run.warnings:
        _warn(message)
    for message in run.smoothing_failures:
        _error(message)
    violations = invariant_violations(run) if config.check else []
    for message in violations:
        _error(f"invariant violation: {message}")
    if violations:
        return 2, violations
    return (1 if run.smoothing_failures else 0), []


def analyze(config: RunConfig) -> int:
    try:
        standard, custom = load_stop_words(config)
        nrc, bing = load_lexicons(config)
        run = run_document(config.inputs[0], config, standard, custom, nrc, bing)
        emit_document(run, config.out_dir, config)
    except (LexsentError, OSError, ValueError) as exc:
        _error(str(exc))
        return 1
    status, _ = _finish_document(run, config)
    return status


def compare(config: RunConfig) -> int:
    try:
        standard, custom = load_stop_words(config)
        nrc, bing = load_lexicons(config)
    except (LexsentError, OSError, ValueError) as exc:
        _error(str(exc))
        return 1

    sub_names: list[str] = []
    for path in config.inputs:
        stem = Path(path).stem
        if stem in sub_names:
            stem = f"{stem}_b"
        sub_names.append(stem)

    statuses: list[int] = []
    runs: list[DocumentRun | None] = []
    for path, sub in zip(config.inputs, sub_names):
        try:
            run = run_document(path, config, standard, custom, nrc, bing)
            emit_document(run, config.out_dir / sub, config)
        except (LexsentError, OSError, ValueError) as exc:
            _error(f"{path}: {exc}")
            statuses.append(1)
            runs.append(None)
            continue
        status, _ = _finish_document(run, config)
        statuses.append(status)
        runs.append(run)

    if all(run is not None for run in runs):
        payload = {
            "documents": [run.doc.source_name for run in runs],
            "output_dirs": sub_names,
            "distributions": [
                _table(["sentiment", "total"],
                       [[r.sentiment.value, r.total] for r in run.distribution])
                for run in runs
            ],
            "score_curves": [_curve_json(run.score_curve) for run in runs],
        }
        config.out_dir.mkdir(parents=True, exist_ok=True)
        _write_json(config.out_dir / "comparison.json", payload)

    if 2 in statuses:
        return 2
    if 1 in statuses:
        return 1
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for --check
    def error(self, message):
        self.print_usage(sys.stderr)
        _error(message)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexsent",
                     description="Lexicon-based sentiment analysis of plain-text documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", required=True, type=Path, help="input TXT document")
        p.add_argument("--nrc", required=True,
                       help="NRC-format lexicon TSV, or 'demo' for the synthetic demo lexicon")
        p.add_argument("--bing", required=True,
                       help="Bing-format lexicon TSV, or 'demo' for the synthetic demo lexicon")
        p.add_argument("--stopwords", type=Path, default=None,
                       help="stop word file (default: built-in English list)")
        p.add_argument("--custom-stopword", action="append", default=[], metavar="WORD",
                       help="additional stop word (repeatable)")
        p.add_argument("--min-count", type=int, default=3,
                       help="minimum n for the frequency chart (default 3, i.e. n > 2)")
        p.add_argument("--span", type=float, default=0.2, help="LOESS span (default 0.2)")
        p.add_argument("--degree", type=int, choices=(1, 2), default=2,
                       help="LOESS polynomial degree (default 2)")
        p.add_argument("--grid-points", type=int, default=80,
                       help="LOESS evaluation grid size (default 80)")
        p.add_argument("--paragraph-mode", choices=PARAGRAPH_MODES, default="line",
                       help="paragraph unit: one per line, or blank-line separated blocks")
        p.add_argument("--out-dir", required=True, type=Path, help="output directory")
        p.add_argument("--check", action="store_true",
                       help="recompute cross-analysis invariants; exit 2 on violation")
        p.add_argument("--format", dest="fmt", choices=("svg", "csv", "json", "all"),
                       default="all", help="which artifact kinds to write (default all)")

    p_analyze = sub.add_parser("analyze", help="analyze one document")
    add_common(p_analyze)

    p_compare = sub.add_parser("compare", help="analyze and pair two documents")
    add_common(p_compare)
    p_compare.add_argument("--input-b", required=True, type=Path, help="second input TXT document")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    inputs = (args.input,) if args.command == "analyze" else (args.input, args.input_b)
    return RunConfig(
        inputs=inputs,
        nrc_path=args.nrc,
        bing_path=args.bing,
        out_dir=args.out_dir,
        stopwords_path=args.stopwords,
        custom_stopwords=tuple(args.custom_stopword),
        min_count=args.min_count,
        span=args.span,
        degree=args.degree,
        grid_points=args.grid_points,
        paragraph_mode=args.paragraph_mode,
        check=args.check,
        fmt=args.fmt,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        _error(str(exc))
        return 1
    if args.command == "analyze":
        return analyze(config)
    return compare(config)


if __name__ == "__main__":
    sys.exit(main())
