"""Minimal self-contained SVG scatter plots and histograms.

Scatter circles have area proportional to their count, scaled so the
largest count gets ``max_area`` square pixels.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600
PALETTE = ["#1f77b4", "#e6b800", "#2ca02c", "#d62728", "#9467bd"]


@dataclass
class PlotSpec:
    kind: str  # "scatter" or "histogram"
    # scatter: (label, [(x, y, count)]); histogram: (label, [value, ...])
    series: list[tuple[str, list]]
    xlabel: str = ""
    ylabel: str = ""
    title: str = ""
    max_area: float = 600.0
    colors: list[str] = field(default_factory=lambda: list(PALETTE))


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = next(s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw)
    start = math.ceil(lo / step) * step
    out = []
    t = start
    while t <= hi + 1e-9:
        out.append(round(t, 10))
        t += step
    return out


def _fmt(v: float) -> str:
    return f"{v:g}"


class _Panel:
    def __init__(self, x0, y0, w, h, xr, yr):
        self.x0, self.y0, self.w, self.h = x0, y0, w, h
        self.xr, self.yr = xr, yr

    def sx(self, x):
        lo, hi = self.xr
        return self.x0 + (x - lo) / (hi - lo) * self.w

    def sy(self, y):
        lo, hi = self.yr
        return self.y0 + self.h - (y - lo) / (hi - lo) * self.h

    def axes(self, spec: PlotSpec) -> list[str]:
        out = [
            f'<rect x="{self.x0}" y="{self.y0}" width="{self.w}" height="{self.h}" '
            f'fill="none" stroke="#333"/>'
        ]
        for t in _ticks(*self.xr):
            x = self.sx(t)
            out.append(f'<line x1="{x:.2f}" y1="{self.y0 + self.h}" x2="{x:.2f}" y2="{self.y0 + self.h + 5}" stroke="#333"/>')
            out.append(f'<text x="{x:.2f}" y="{self.y0 + self.h + 18}" font-size="11" text-anchor="middle">{_fmt(t)}</text>')
        for t in _ticks(*self.yr):
            y = self.sy(t)
            out.append(f'<line x1="{self.x0 - 5}" y1="{y:.2f}" x2="{self.x0}" y2="{y:.2f}" stroke="#333"/>')
            out.append(f'<text x="{self.x0 - 8}" y="{y + 4:.2f}" font-size="11" text-anchor="end">{_fmt(t)}</text>')
        cx = self.x0 + self.w / 2
        out.append(f'<text x="{cx:.2f}" y="{self.y0 + self.h + 38}" font-size="13" text-anchor="middle">{escape(spec.xlabel)}</text>')
        cy = self.y0 + self.h / 2
        out.append(
            f'<text x="{self.x0 - 42}" y="{cy:.2f}" font-size="13" text-anchor="middle" '
            f'transform="rotate(-90 {self.x0 - 42} {cy:.2f})">{escape(spec.ylabel)}</text>'
        )
        if spec.title:
            out.append(f'<text x="{cx:.2f}" y="{self.y0 - 12}" font-size="14" text-anchor="middle">{escape(spec.title)}</text>')
        return out


def _pad(lo, hi, frac=0.08):
    if hi == lo:
        return lo - 1, hi + 1
    span = hi - lo
    return lo - frac * span, hi + frac * span


def circle_radius(count: int, max_count: int, max_area: float) -> float:
    return math.sqrt(count / max_count * max_area / math.pi)


def _scatter(spec: PlotSpec, panel_box) -> list[str]:
    pts = [(x, y, c) for _, data in spec.series for x, y, c in data]
    x0, y0, w, h = panel_box
    if not pts:
        panel = _Panel(x0, y0, w, h, (0, 1), (0, 1))
        return panel.axes(spec)
    xs = [float(x) for x, _, _ in pts]
    ys = [float(y) for _, y, _ in pts]
    panel = _Panel(x0, y0, w, h, _pad(min(xs), max(xs)), _pad(min(0.0, min(ys)), max(ys)))
    out = panel.axes(spec)
    max_count = max(c for _, _, c in pts)
    for k, (label, data) in enumerate(spec.series):
        color = spec.colors[k % len(spec.colors)]
        for x, y, c in data:
            r = circle_radius(c, max_count, spec.max_area)
            out.append(
                f'<circle cx="{panel.sx(float(x)):.2f}" cy="{panel.sy(float(y)):.2f}" r="{r:.4f}" '
                f'fill="{color}" fill-opacity="0.5" stroke="{color}" data-count="{c}"/>'
            )
    return out


def _histogram(spec: PlotSpec, panel_box) -> list[str]:
    x0, y0, w, h = panel_box
    counters = [(label, Counter(int(v) for v in data)) for label, data in spec.series]
    values = sorted({v for _, cnt in counters for v in cnt})
    if not values:
        return _Panel(x0, y0, w, h, (0, 1), (0, 1)).axes(spec)
    top = max(c for _, cnt in counters for c in cnt.values())
    panel = _Panel(x0, y0, w, h, (values[0] - 0.5, values[-1] + 0.5), (0, top * 1.05))
    out = panel.axes(spec)
    nser = len(counters)
    bar = (panel.sx(1) - panel.sx(0)) * 0.8 / max(nser, 1)
    for k, (label, cnt) in enumerate(counters):
        color = spec.colors[k % len(spec.colors)]
        for v, c in sorted(cnt.items()):
            left = panel.sx(v - 0.4) + k * bar
            ytop = panel.sy(c)
            out.append(
                f'<rect x="{left:.2f}" y="{ytop:.2f}" width="{bar:.2f}" height="{panel.sy(0) - ytop:.2f}" '
                f'fill="{color}" fill-opacity="0.7" data-bin="{v}" data-count="{c}"/>'
            )
    return out


def _legend(labels: Sequence[str], colors: Sequence[str]) -> list[str]:
    out = []
    for k, label in enumerate(labels):
        y = 20 + 18 * k
        color = colors[k % len(colors)]
        out.append(f'<rect x="{WIDTH - 170}" y="{y - 10}" width="12" height="12" fill="{color}"/>')
        out.append(f'<text x="{WIDTH - 152}" y="{y}" font-size="12">{escape(label)}</text>')
    return out


def render_svg(specs: Sequence[PlotSpec]) -> str:
    """Lay out the panels side by side in one 800x600 SVG document."""
    margin_l, margin_r, margin_t, margin_b = 70, 20, 60, 60
    k = max(len(specs), 1)
    slot = WIDTH / k
    body = []
    for i, spec in enumerate(specs):
        box = (i * slot + margin_l, margin_t, slot - margin_l - margin_r, HEIGHT - margin_t - margin_b)
        draw = _scatter if spec.kind == "scatter" else _histogram
        body += draw(spec, box)
    labels = []
    colors = specs[0].colors if specs else PALETTE
    if specs:
        labels = [label for label, _ in specs[0].series]
    if len(labels) > 1 or (labels and labels[0]):
        body += _legend(labels, colors)
    return (
        f'<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
        f'<rect width="100%" height="100%" fill="white"/>\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
