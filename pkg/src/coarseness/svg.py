"""Static SVG figures: instances with partitions or certificates, and scaling plots."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .geometry import convex_hull
from .pointset import RED

SIZE = 640
MARGIN = 40
FILL = {RED: "#d62728", -RED: "#1f77b4"}
SERIES = {"random": "#7f7f7f", "balanced": "#1f77b4", "optimized": "#d62728"}


def _f(v: float) -> str:
    return f"{v:.2f}"


class _Frame:
    """Maps data coordinates into the drawing square, y pointing up."""

    def __init__(self, xs, ys):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span = max(self.x1 - self.x0, self.y1 - self.y0) or 1
        self.scale = (SIZE - 2 * MARGIN) / span

    def __call__(self, x, y):
        return MARGIN + (x - self.x0) * self.scale, SIZE - MARGIN - (y - self.y0) * self.scale


def _clip_line(hp, x0, x1, y0, y1):
    a, b, c = hp.a, hp.b, hp.c
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


def render_instance(ps, partition=None, halfplanes=(), title: str = "") -> str:
    """Points in their colors, block hulls as outlines, certificate lines dashed."""
    xs = [p.x for p in ps.points] or [0]
    ys = [p.y for p in ps.points] or [0]
    fr = _Frame(xs, ys)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    if title:
        out.append(f'<text x="{MARGIN}" y="24" font-family="sans-serif" font-size="14">{escape(title)}</text>')
    if partition is not None:
        for block in partition.blocks:
            hull = convex_hull(ps.points[i] for i in block.members)
            pts = [fr(*v) for v in hull.vertices]
            if len(pts) == 1:
                out.append(f'<circle cx="{_f(pts[0][0])}" cy="{_f(pts[0][1])}" r="9" '
                           f'fill="none" stroke="#444" stroke-width="1.5"/>')
            else:
                coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
                out.append(f'<polygon points="{coords}" fill="#eeeeee" fill-opacity="0.6" '
                           f'stroke="#444" stroke-width="1.5" stroke-linejoin="round"/>')
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1)
    for hp in halfplanes:
        seg = _clip_line(hp, min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)
        if seg:
            (ax, ay), (bx, by) = fr(*seg[0]), fr(*seg[1])
            out.append(f'<line x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(bx)}" y2="{_f(by)}" '
                       f'stroke="#2ca02c" stroke-width="1.5" stroke-dasharray="6 4"/>')
    r = 5 if ps.n <= 200 else 2.5
    for p, c in zip(ps.points, ps.colors):
        x, y = fr(p.x, p.y)
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r}" fill="{FILL[c]}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_scaling(series: dict, title: str = "median D2 vs n") -> str:
    """Log-log plot of ``series[kind] = [(n, value), ...]`` with slope-1/4 and 1/2 guides.

    The guides start at the first point of the first series.
    """
    pts = [(n, v) for s in series.values() for n, v in s if n > 0 and v > 0]
    w, h = SIZE, SIZE * 3 // 4
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect width="{w}" height="{h}" fill="white"/>',
           f'<text x="{MARGIN}" y="24" font-family="sans-serif" font-size="14">{escape(title)}</text>']
    if not pts:
        out.append("</svg>")
        return "\n".join(out) + "\n"
    lx = [math.log2(n) for n, _ in pts]
    first = next((s[0] for s in series.values() if s), pts[0])
    guides = {"slope 1/4": 0.25, "slope 1/2": 0.5}
    ly = [math.log2(v) for _, v in pts]
    for k in guides.values():
        ly += [math.log2(first[1]) + k * (x - math.log2(first[0])) for x in (min(lx), max(lx))]
    x0, x1 = min(lx), max(lx) if max(lx) > min(lx) else min(lx) + 1
    y0, y1 = min(ly) - 0.25, max(ly) + 0.25

    def tr(n, v):
        x = MARGIN + (math.log2(n) - x0) / (x1 - x0) * (w - 2 * MARGIN - 100)
        y = h - MARGIN - (math.log2(v) - y0) / (y1 - y0) * (h - 2 * MARGIN)
        return x, y

    out.append(f'<line x1="{MARGIN}" y1="{h - MARGIN}" x2="{w - MARGIN - 100}" y2="{h - MARGIN}" stroke="black"/>')
    out.append(f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{h - MARGIN}" stroke="black"/>')
    for n in sorted({n for n, _ in pts}):
        x, _ = tr(n, 1)
        out.append(f'<text x="{_f(x)}" y="{h - MARGIN + 16}" font-family="sans-serif" '
                   f'font-size="11" text-anchor="middle">{n}</text>')
    for e in range(math.floor(y0), math.ceil(y1) + 1):
        if y0 <= e <= y1:
            _, y = tr(2, 2 ** e)
            out.append(f'<text x="{MARGIN - 6}" y="{_f(y + 4)}" font-family="sans-serif" '
                       f'font-size="11" text-anchor="end">{2 ** e}</text>')
    legend = 0
    for name, k in guides.items():
        n0, n1 = 2 ** x0, 2 ** x1
        v0 = first[1] * (n0 / first[0]) ** k
        v1 = first[1] * (n1 / first[0]) ** k
        (ax, ay), (bx, by) = tr(n0, v0), tr(n1, v1)
        dash = "2 3" if k < 0.4 else "8 4"
        out.append(f'<line x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(bx)}" y2="{_f(by)}" '
                   f'stroke="#999" stroke-dasharray="{dash}"/>')
        out.append(f'<text x="{w - MARGIN - 90}" y="{MARGIN + 16 * legend}" font-family="sans-serif" '
                   f'font-size="11" fill="#777">- - {name}</text>')
        legend += 1
    for kind, s in series.items():
        color = SERIES.get(kind, "black")
        coords = [tr(n, v) for n, v in s if n > 0 and v > 0]
        if len(coords) > 1:
            path = " ".join(f"{_f(x)},{_f(y)}" for x, y in coords)
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="2"/>')
        for x, y in coords:
            out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3.5" fill="{color}"/>')
        out.append(f'<text x="{w - MARGIN - 90}" y="{MARGIN + 16 * legend}" font-family="sans-serif" '
                   f'font-size="11" fill="{color}">{escape(kind)}</text>')
        legend += 1
    out.append("</svg>")
    return "\n".join(out) + "\n"
