"""Deterministic SVG figures of families, piercing lines and chord systems."""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .family import Family
from .geometry import Line

CANVAS = 800
FAMILY_COLORS = {1: "#d62728", 2: "#1f77b4", 3: "#2ca02c"}
LINE_COLOR = "#ff7f0e"


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _View:
    def __init__(self, lo: np.ndarray, hi: np.ndarray):
        span = float(max(hi - lo))
        span = span if span > 0 else 2.0
        pad = 0.08 * span
        center = (lo + hi) / 2
        self.lo = center - span / 2 - pad
        self.size = span + 2 * pad
        self.scale = CANVAS / self.size

    def xy(self, p) -> tuple[str, str]:
        x = (float(p[0]) - self.lo[0]) * self.scale
        y = CANVAS - (float(p[1]) - self.lo[1]) * self.scale
        return _fmt(x), _fmt(y)

    def clip_line(self, a: float, b: float, c: float):
        x0, y0 = self.lo
        x1, y1 = x0 + self.size, y0 + self.size
        pts = []
        if b != 0:
            for x in (x0, x1):
                y = (c - a * x) / b
                if y0 <= y <= y1:
                    pts.append((x, y))
        if a != 0:
            for y in (y0, y1):
                x = (c - b * y) / a
                if x0 <= x <= x1:
                    pts.append((x, y))
        pts = sorted(set(pts))
        return (pts[0], pts[-1]) if len(pts) >= 2 else None


def _member_colors(f: Family) -> list[str]:
    meta = f.construction or {}
    prov = meta.get("members")
    if prov and len(prov) == len(f):
        return [FAMILY_COLORS.get(int(m.get("family", 0)), "#333333") for m in prov]
    return ["#333333"] * len(f)


def render(f: Optional[Family] = None, lines: Sequence[Line] = (),
           chords: Optional[np.ndarray] = None, boundary: Optional[np.ndarray] = None,
           circle: Optional[bool] = None, title: str = "") -> str:
    """SVG text for a family, optional piercing lines and an optional chord system.

    ``chords`` rows are (x0, y0, x1, y1); ``boundary`` rows are points f_i.
    The unit circle is drawn for constructions, chord systems, or on request.
    """
    pts = []
    if f is not None:
        pts += [(float(v.x), float(v.y)) for v in f.vertices()]
    if circle is None:
        circle = chords is not None or (f is not None and f.construction is not None)
    if circle:
        pts += [(-1.0, -1.0), (1.0, 1.0)]
    if not pts:
        pts = [(-1.0, -1.0), (1.0, 1.0)]
    arr = np.array(pts)
    view = _View(arr.min(axis=0), arr.max(axis=0))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
           f'viewBox="0 0 {CANVAS} {CANVAS}">',
           f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>']
    if title:
        out.append(f'<title>{title}</title>')
    if circle:
        cx, cy = view.xy((0, 0))
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(view.scale)}" fill="none" '
                   'stroke="#000000" stroke-width="1.5"/>')
    for line in lines:
        seg = view.clip_line(float(line.a), float(line.b), float(line.c))
        if seg:
            (x1, y1), (x2, y2) = view.xy(seg[0]), view.xy(seg[1])
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{LINE_COLOR}" '
                       'stroke-width="1.5" stroke-dasharray="6 4"/>')
    if chords is not None:
        for row in chords:
            (x1, y1), (x2, y2) = view.xy(row[:2]), view.xy(row[2:])
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#555555" '
                       'stroke-width="2"/>')
    if boundary is not None:
        for i, p in enumerate(boundary):
            x, y = view.xy(p)
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#000000"/>')
            out.append(f'<text x="{x}" y="{y}" dx="6" dy="-6" font-size="14">f{i}</text>')
    if f is not None:
        for body, color, label in zip(f.members, _member_colors(f), f.labels):
            coords = [view.xy(v) for v in body.vertices]
            tip = f"<title>{label}</title>" if label else ""
            if len(coords) == 1:
                x, y = coords[0]
                out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{color}">{tip}</circle>')
            elif len(coords) == 2:
                (x1, y1), (x2, y2) = coords
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" '
                           f'stroke-width="2.5">{tip}</line>')
            else:
                pts_attr = " ".join(f"{x},{y}" for x, y in coords)
                out.append(f'<polygon points="{pts_attr}" fill="{color}" fill-opacity="0.5" '
                           f'stroke="{color}" stroke-width="1.5">{tip}</polygon>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
