"""Overlap removal for collinear segments under the XOR rule.

Segments are grouped by the line they lie on, then endpoints act as parity
toggles for their index sets along that line: the output is one segment per
maximal interval with a nonempty accumulated set.  Indices occurring an even
number of times cancel, which keeps cell boundaries meaningful even when
rounded Voronoi cells self-intersect or overlap.

Integer segments are grouped the fast way: direction vector divided by its
gcd and sign-normalized, plus the (constant) cross product with an endpoint.
Rational endpoints fall back to exact slope/intercept keys.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .segments import IndexedSegment


def _line_key_int(s: IndexedSegment):
    dx = s.p1[0] - s.p0[0]
    dy = s.p1[1] - s.p0[1]
    g = gcd(abs(dx), abs(dy))
    vx, vy = dx // g, dy // g
    if vx < 0 or (vx == 0 and vy < 0):
        vx, vy = -vx, -vy
    return (vx, vy, vx * s.p0[1] - vy * s.p0[0])


def _line_key_exact(s: IndexedSegment):
    dx = s.p1[0] - s.p0[0]
    dy = s.p1[1] - s.p0[1]
    if dx == 0:
        return ("v", Fraction(s.p0[0]))
    slope = Fraction(dy) / Fraction(dx)
    intercept = Fraction(s.p0[1]) - slope * Fraction(s.p0[0])
    return (slope, intercept)


def remove_overlaps(segments: Sequence[IndexedSegment]) -> List[IndexedSegment]:
    segs = [s for s in segments if s.p0 != s.p1]
    exact = any(
        not (isinstance(s.p0[0], int) and isinstance(s.p0[1], int)
             and isinstance(s.p1[0], int) and isinstance(s.p1[1], int))
        for s in segs
    )
    key_fn = _line_key_exact if exact else _line_key_int

    groups: Dict[Tuple, Dict] = {}
    for s in segs:
        events = groups.setdefault(key_fn(s), {})
        for p in (s.p0, s.p1):
            cur = events.get(p)
            if cur is None:
                events[p] = [s.closest, s.farthest]
            else:
                cur[0] = cur[0] ^ s.closest
                cur[1] = cur[1] ^ s.farthest

    out: List[IndexedSegment] = []
    for events in groups.values():
        pts = sorted(p for p, (c, f) in events.items() if c or f)
        active_c = frozenset()
        active_f = frozenset()
        for i in range(len(pts) - 1):
            c, f = events[pts[i]]
            active_c ^= c
            active_f ^= f
            if active_c or active_f:
                out.append(IndexedSegment(pts[i], pts[i + 1], active_c, active_f))
    return out
