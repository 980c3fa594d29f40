"""Deterministic SVG rendering of the four analysis charts and the dashboard.

Charts are emitted as plain SVG 1.1 text with no timestamps, random ids,
or external fonts, so identical inputs give byte-identical files and
golden tests can diff them. Bar charts are horizontal; stacked bars carry
one colored segment per category with a fixed palette assigned in the
canonical category order (see PALETTE).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import ceil, floor, log10
from typing import Sequence, Union
from xml.sax.saxutils import escape

from .analysis import DistributionRow, WordSentimentCount
from .errors import EmptySeriesError
from .lexicon import CATEGORY_ORDER, SentimentCategory
from .smoothing import SmoothedCurve

PALETTE: dict[SentimentCategory, str] = {
    SentimentCategory.POSITIVE: "#4e9a06",
    SentimentCategory.NEGATIVE: "#cc0000",
    SentimentCategory.ANGER: "#f57900",
    SentimentCategory.FEAR: "#5c3566",
    SentimentCategory.ANTICIPATION: "#c4a000",
    SentimentCategory.TRUST: "#3465a4",
    SentimentCategory.SURPRISE: "#ad7fa8",
    SentimentCategory.SADNESS: "#729fcf",
    SentimentCategory.JOY: "#fce94f",
    SentimentCategory.DISGUST: "#8f5902",
}

_LINE_COLOR = "#3465a4"
_FONT = "font-family=\"sans-serif\""


class ChartKind(enum.Enum):
    H_BAR_STACKED = "h_bar_stacked"
    H_BAR_PLAIN = "h_bar_plain"
    SMOOTH_LINE = "smooth_line"


ChartSeries = Union[Sequence[WordSentimentCount], Sequence[DistributionRow], SmoothedCurve]


@dataclass(frozen=True)
class ChartSpec:
    title: str
    x_label: str
    y_label: str
    kind: ChartKind
    series: ChartSeries

    def __post_init__(self):
        if not self.title:
            raise ValueError("chart title must be non-empty")


@dataclass(frozen=True)
class Dashboard:
    """The four charts in reading order: frequency, distribution,
    conditional mean, score."""

    panels: tuple[ChartSpec, ChartSpec, ChartSpec, ChartSpec]

    def __post_init__(self):
        if len(self.panels) != 4:
            raise ValueError(f"dashboard needs exactly 4 panels, got {len(self.panels)}")


def _num(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    if abs(v - round(v)) < 1e-9:
        return str(int(round(v)))
    return f"{v:g}"


def _nice_step(span: float, target: int = 5) -> float:
    """Smallest 1/2/5 ladder step giving at most `target` intervals."""
    if span <= 0.0:
        return 1.0
    raw = span / target
    mag = 10.0 ** floor(log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * mag:
            return mult * mag
    return 10.0 * mag


def _text(x: float, y: float, s: str, anchor: str = "start", cls: str = "",
          size: int = 11, extra: str = "") -> str:
    cls_attr = f" class=\"{cls}\"" if cls else ""
    return (f"<text{cls_attr} x=\"{_num(x)}\" y=\"{_num(y)}\" {_FONT} "
            f"font-size=\"{size}\" text-anchor=\"{anchor}\"{extra}>{escape(s)}</text>")


def _frame_and_labels(out: list[str], spec: ChartSpec, width: float, height: float,
                      x0: float, y0: float, w: float, h: float) -> None:
    out.append(f"<rect class=\"frame\" x=\"{_num(x0)}\" y=\"{_num(y0)}\" width=\"{_num(w)}\" "
               f"height=\"{_num(h)}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>")
    out.append(_text(width / 2.0, 20.0, spec.title, anchor="middle", cls="title", size=14))
    out.append(_text(x0 + w / 2.0, height - 8.0, spec.x_label, anchor="middle", cls="x-label"))
    out.append(_text(0.0, 0.0, spec.y_label, anchor="middle", cls="y-label",
                     extra=f" transform=\"translate(14,{_num(y0 + h / 2.0)}) rotate(-90)\""))


def _value_axis(out: list[str], x0: float, y0: float, w: float, h: float,
                axis_max: float, step: float) -> None:
    v = 0.0
    while v <= axis_max + step * 1e-9:
        px = x0 + (v / axis_max) * w if axis_max > 0 else x0
        out.append(f"<line class=\"tick\" x1=\"{_num(px)}\" y1=\"{_num(y0)}\" x2=\"{_num(px)}\" "
                   f"y2=\"{_num(y0 + h)}\" stroke=\"#dddddd\" stroke-width=\"1\"/>")
        out.append(_text(px, y0 + h + 14.0, _tick_label(v), anchor="middle", cls="tick-label", size=10))
        v += step


def _bar_rows(out: list[str], rows: list[tuple[str, list[tuple[SentimentCategory, int]]]],
              x0: float, y0: float, w: float, h: float, axis_max: float) -> None:
    n_rows = len(rows)
    row_h = h / n_rows
    bar_h = row_h * 0.7
    for i, (label, segments) in enumerate(rows):
        y = y0 + i * row_h + row_h * 0.15
        out.append(_text(x0 - 6.0, y + bar_h / 2.0 + 4.0, label, anchor="end", cls="row-label", size=10))
        cum = 0
        for category, n in segments:
            seg_x = x0 + (cum / axis_max) * w
            seg_w = (n / axis_max) * w
            out.append(f"<rect class=\"bar\" x=\"{_num(seg_x)}\" y=\"{_num(y)}\" "
                       f"width=\"{_num(seg_w)}\" height=\"{_num(bar_h)}\" "
                       f"fill=\"{PALETTE[category]}\"/>")
            cum += n


def _legend(out: list[str], x: float, y: float) -> None:
    out.append("<g class=\"legend\">")
    for i, category in enumerate(CATEGORY_ORDER):
        sy = y + i * 18.0
        out.append(f"<rect class=\"swatch\" x=\"{_num(x)}\" y=\"{_num(sy)}\" width=\"10\" "
                   f"height=\"10\" fill=\"{PALETTE[category]}\"/>")
        out.append(_text(x + 16.0, sy + 9.0, category.value, cls="legend-label", size=10))
    out.append("</g>")


def _chart_body(spec: ChartSpec, width: int, height: int) -> list[str]:
    out: list[str] = []
    margin_top, margin_bottom = 36.0, 44.0
    if spec.kind is ChartKind.SMOOTH_LINE:
        margin_left, margin_right = 64.0, 20.0
    elif spec.kind is ChartKind.H_BAR_STACKED:
        margin_left, margin_right = 110.0, 130.0
    else:
        margin_left, margin_right = 110.0, 20.0
    x0, y0 = margin_left, margin_top
    w, h = width - margin_left - margin_right, height - margin_top - margin_bottom
    if w <= 0 or h <= 0:
        raise ValueError(f"chart size {width}x{height} too small for margins")

    if spec.kind is ChartKind.H_BAR_STACKED:
        table = list(spec.series)
        if not table:
            raise EmptySeriesError("stacked bar chart has no rows")
        totals: dict[str, int] = {}
        by_word: dict[str, dict[SentimentCategory, int]] = {}
        for row in table:
            totals[row.word] = totals.get(row.word, 0) + row.n
            by_word.setdefault(row.word, {})[row.sentiment] = row.n
        words = sorted(totals, key=lambda word: (-totals[word], word))
        vmax = max(totals.values())
        step = _nice_step(float(vmax))
        k = 1
        while k * step < vmax - step * 1e-9:
            k += 1
        axis_max = k * step
        rows = []
        for word in words:
            segments = [(c, by_word[word][c]) for c in CATEGORY_ORDER if c in by_word[word]]
            rows.append((word, segments))
        _value_axis(out, x0, y0, w, h, axis_max, step)
        _bar_rows(out, rows, x0, y0, w, h, axis_max)
        _legend(out, x0 + w + 16.0, y0)
    elif spec.kind is ChartKind.H_BAR_PLAIN:
        table = list(spec.series)
        if not table:
            raise EmptySeriesError("bar chart has no rows")
        vmax = max(row.total for row in table)
        step = _nice_step(float(max(vmax, 1)))
        k = 1
        while k * step < vmax - step * 1e-9:
            k += 1
        axis_max = k * step
        rows = [(row.sentiment.value, [(row.sentiment, row.total)]) for row in table]
        _value_axis(out, x0, y0, w, h, axis_max, step)
        _bar_rows(out, rows, x0, y0, w, h, axis_max)
    elif spec.kind is ChartKind.SMOOTH_LINE:
        points = spec.series.points if isinstance(spec.series, SmoothedCurve) else list(spec.series)
        if len(points) < 2:
            raise EmptySeriesError("smoothed line needs at least 2 points")
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        x_lo, x_hi = min(xs), max(xs)
        y_lo, y_hi = min(ys), max(ys)
        if y_hi == y_lo:
            pad = max(0.5, abs(y_hi) * 0.1)
            y_lo, y_hi = y_lo - pad, y_hi + pad
        y_step = _nice_step(y_hi - y_lo)
        y_lo = floor(y_lo / y_step) * y_step
        k = 1
        while y_lo + k * y_step < y_hi - y_step * 1e-9:
            k += 1
        y_hi = y_lo + k * y_step
        x_step = _nice_step(x_hi - x_lo)

        # y ticks
        v = y_lo
        while v <= y_hi + y_step * 1e-9:
            py = y0 + h - ((v - y_lo) / (y_hi - y_lo)) * h
            out.append(f"<line class=\"tick\" x1=\"{_num(x0)}\" y1=\"{_num(py)}\" "
                       f"x2=\"{_num(x0 + w)}\" y2=\"{_num(py)}\" stroke=\"#dddddd\" stroke-width=\"1\"/>")
            out.append(_text(x0 - 6.0, py + 4.0, _tick_label(v), anchor="end", cls="tick-label", size=10))
            v += y_step
        # x ticks at step multiples inside the data range
        v = ceil(x_lo / x_step) * x_step
        while v <= x_hi + x_step * 1e-9:
            px = x0 + ((v - x_lo) / (x_hi - x_lo)) * w if x_hi > x_lo else x0
            out.append(f"<line class=\"tick\" x1=\"{_num(px)}\" y1=\"{_num(y0)}\" x2=\"{_num(px)}\" "
                       f"y2=\"{_num(y0 + h)}\" stroke=\"#eeeeee\" stroke-width=\"1\"/>")
            out.append(_text(px, y0 + h + 14.0, _tick_label(v), anchor="middle", cls="tick-label", size=10))
            v += x_step

        coords = []
        for x, y in points:
            px = x0 + ((x - x_lo) / (x_hi - x_lo)) * w
            py = y0 + h - ((y - y_lo) / (y_hi - y_lo)) * h
            coords.append(f"{_num(px)},{_num(py)}")
        out.append(f"<polyline class=\"curve\" points=\"{' '.join(coords)}\" fill=\"none\" "
                   f"stroke=\"{_LINE_COLOR}\" stroke-width=\"2\"/>")
    else:
        raise ValueError(f"unknown chart kind {spec.kind!r}")

    _frame_and_labels(out, spec, float(width), float(height), x0, y0, w, h)
    return out


def render_chart(spec: ChartSpec, width_px: int, height_px: int) -> bytes:
    """Render one chart as a standalone SVG document."""
    if width_px <= 0 or height_px <= 0:
        raise ValueError("chart dimensions must be positive")
    body = _chart_body(spec, width_px, height_px)
    doc = ["<?xml version=\"1.0\" encoding=\"UTF-8\"?>",
           f"<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width_px}\" "
           f"height=\"{height_px}\" viewBox=\"0 0 {width_px} {height_px}\">",
           f"<rect x=\"0\" y=\"0\" width=\"{width_px}\" height=\"{height_px}\" fill=\"#ffffff\"/>"]
    doc.extend(body)
    doc.append("</svg>")
    return ("\n".join(doc) + "\n").encode("utf-8")


def render_dashboard(dashboard: Dashboard, width_px: int, height_px: int) -> bytes:
    """Render the 2x2 dashboard; panel k occupies quadrant k in reading order.

    Each panel is the body of a full-size chart scaled into its quadrant
    via a nested viewBox, so panel frames depend only on the dimensions.
    """
    if width_px <= 0 or height_px <= 0:
        raise ValueError("dashboard dimensions must be positive")
    half_w, half_h = width_px / 2.0, height_px / 2.0
    doc = ["<?xml version=\"1.0\" encoding=\"UTF-8\"?>",
           f"<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width_px}\" "
           f"height=\"{height_px}\" viewBox=\"0 0 {width_px} {height_px}\">",
           f"<rect x=\"0\" y=\"0\" width=\"{width_px}\" height=\"{height_px}\" fill=\"#ffffff\"/>"]
    for i, spec in enumerate(dashboard.panels):
        try:
            body = _chart_body(spec, width_px, height_px)
        except EmptySeriesError as exc:
            raise EmptySeriesError(f"panel {i}: {exc}") from None
        px = half_w if i % 2 else 0.0
        py = half_h if i >= 2 else 0.0
        doc.append(f"<svg class=\"panel\" x=\"{_num(px)}\" y=\"{_num(py)}\" width=\"{_num(half_w)}\" "
                   f"height=\"{_num(half_h)}\" viewBox=\"0 0 {width_px} {height_px}\">")
        doc.extend(body)
        doc.append("</svg>")
    doc.append("</svg>")
    return ("\n".join(doc) + "\n").encode("utf-8")
