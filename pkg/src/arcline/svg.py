"""SVG rendering of compression results: source polyline in black, result
in blue, result vertices as red circles."""

from __future__ import annotations

import math
from typing import List


def _fmt(v: float) -> str:
    return format(v, ".6f").rstrip("0").rstrip(".")


def render_svg(result, width: int = 800) -> str:
    src = result.source
    xs = [p[0] for p in src]
    ys = [p[1] for p in src]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    span = max(maxx - minx, maxy - miny) or 1.0
    pad = 0.05 * span
    view = (minx - pad, miny - pad, (maxx - minx) + 2 * pad, (maxy - miny) + 2 * pad)
    stroke = span / 300

    parts: List[str] = []
    parts.append(
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" viewBox="%s %s %s %s">'
        % (width, _fmt(view[0]), _fmt(-view[1] - view[3]), _fmt(view[2]), _fmt(view[3]))
    )
    parts.append('<g transform="scale(1,-1)">')

    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in src)
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="{_fmt(stroke)}"/>'
    )

    for prim in result.primitives:
        if prim.kind == "segment":
            parts.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="blue" stroke-width="%s"/>'
                % (_fmt(prim.start[0]), _fmt(prim.start[1]),
                   _fmt(prim.end[0]), _fmt(prim.end[1]), _fmt(stroke * 1.5))
            )
        else:
            large, sweep_flag = _arc_flags(prim)
            parts.append(
                '<path d="M %s %s A %s %s 0 %d %d %s %s" fill="none" stroke="blue" stroke-width="%s"/>'
                % (_fmt(prim.start[0]), _fmt(prim.start[1]),
                   _fmt(prim.radius), _fmt(prim.radius), large, sweep_flag,
                   _fmt(prim.end[0]), _fmt(prim.end[1]), _fmt(stroke * 1.5))
            )
    for prim in result.primitives:
        for p in (prim.start, prim.end):
            parts.append(
                '<circle cx="%s" cy="%s" r="%s" fill="red"/>'
                % (_fmt(p[0]), _fmt(p[1]), _fmt(stroke * 2.5))
            )
    parts.append("</g></svg>")
    return "\n".join(parts) + "\n"


def _arc_flags(prim) -> tuple:
    cx, cy = prim.center
    ta = math.atan2(prim.start[1] - cy, prim.start[0] - cx)
    tb = math.atan2(prim.end[1] - cy, prim.end[0] - cx)
    ccw = prim.orientation == "ccw"
    span = (tb - ta) % (2 * math.pi) if ccw else (ta - tb) % (2 * math.pi)
    large = 1 if span > math.pi else 0
    sweep_flag = 1 if ccw else 0
    return large, sweep_flag
