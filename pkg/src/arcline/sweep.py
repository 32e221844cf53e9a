"""Plane sweep over integer segments with exact rational event points.

Reports every event point where segments from both Voronoi diagrams meet
(crossings, endpoint touches, shared endpoints), carrying the union of the
closest and farthest site indices involved.

Vertical segments are removed up front by an exact shear (x, y) ->
(K*x + y, y) with K larger than any |dy|, so the status order is always a
plain (y at x, slope) comparison; event points are mapped back exactly.
Overlapping collinear segments must have been merged beforehand.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .segments import IndexedSegment

RPoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SweepEvent:
    point: RPoint
    closest_indices: FrozenSet[int]
    farthest_indices: FrozenSet[int]


def segment_intersection(a0, a1, b0, b1) -> Optional[RPoint]:
    """Exact intersection point of two segments, or None.

    Collinear overlapping inputs are rejected (the pipeline removes overlaps
    first); a shared endpoint or an endpoint on the interior counts.
    """
    d1x = a1[0] - a0[0]
    d1y = a1[1] - a0[1]
    d2x = b1[0] - b0[0]
    d2y = b1[1] - b0[1]
    den = d1x * d2y - d1y * d2x
    ex = b0[0] - a0[0]
    ey = b0[1] - a0[1]
    if den == 0:
        return None  # parallel; true overlaps are assumed removed
    t = Fraction(ex * d2y - ey * d2x, den)
    u = Fraction(ex * d1y - ey * d1x, den)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (a0[0] + t * d1x, a0[1] + t * d1y)
    return None


class _Seg:
    __slots__ = ("p0", "p1", "closest", "farthest", "slope", "_memo")

    def __init__(self, p0, p1, closest, farthest):
        if p1 < p0:
            p0, p1 = p1, p0
        self.p0 = p0
        self.p1 = p1
        self.closest = closest
        self.farthest = farthest
        self.slope = Fraction(p1[1] - p0[1], p1[0] - p0[0])
        self._memo = (None, None)

    def y_at(self, x) -> Fraction:
        mx, my = self._memo
        if mx == x:
            return my
        y = self.p0[1] + self.slope * (x - self.p0[0])
        self._memo = (x, y)
        return y

    def contains(self, p) -> bool:
        if not (self.p0 <= p <= self.p1):
            return False
        return (p[1] - self.p0[1]) * (self.p1[0] - self.p0[0]) == (p[0] - self.p0[0]) * (
            self.p1[1] - self.p0[1]
        )


def sweep_intersections(segments: Sequence[IndexedSegment]) -> List[SweepEvent]:
    segs_in = [s for s in segments if s.p0 != s.p1]
    if not segs_in:
        return []

    K = 0
    if any(s.p0[0] == s.p1[0] for s in segs_in):
        # shear steeper than every non-vertical slope so none becomes vertical
        K = 1
        for s in segs_in:
            dx = s.p1[0] - s.p0[0]
            if dx != 0:
                K = max(K, 1 + math.ceil(abs(Fraction(s.p1[1] - s.p0[1]) / Fraction(dx))))

    def fwd(p):
        return (K * p[0] + p[1], p[1]) if K else p

    def back(p) -> RPoint:
        x, y = p
        if K:
            return (Fraction(x - y, K), Fraction(y))
        return (Fraction(x), Fraction(y))

    segs = [_Seg(fwd(s.p0), fwd(s.p1), s.closest, s.farthest) for s in segs_in]

    queue: List[Tuple] = []
    starts: Dict[Tuple, List[_Seg]] = {}
    queued = set()

    def push(p):
        if p not in queued:
            queued.add(p)
            heapq.heappush(queue, p)

    for s in segs:
        push(s.p0)
        push(s.p1)
        starts.setdefault(s.p0, []).append(s)

    status: List[_Seg] = []
    events: List[SweepEvent] = []

    def locate(px, py) -> Tuple[int, int]:
        """Index range [lo, hi) of status segments passing through (px, py)."""
        lo, hi = 0, len(status)
        while lo < hi:  # first index with y_at >= py
            mid = (lo + hi) // 2
            if status[mid].y_at(px) < py:
                lo = mid + 1
            else:
                hi = mid
        first = lo
        hi = len(status)
        while lo < hi:  # first index with y_at > py
            mid = (lo + hi) // 2
            if status[mid].y_at(px) <= py:
                lo = mid + 1
            else:
                hi = mid
        return first, lo

    def check_cross(a: Optional[_Seg], b: Optional[_Seg], after):
        if a is None or b is None:
            return
        q = segment_intersection(a.p0, a.p1, b.p0, b.p1)
        if q is not None and q > after:
            push(q)

    while queue:
        p = heapq.heappop(queue)
        px, py = p
        U = starts.get(p, [])
        first, last = locate(px, py)
        through = status[first:last]
        L = [s for s in through if s.p1 == p]
        C = [s for s in through if s.p1 != p]

        involved = U + through
        if involved and len(U) + len(through) >= 1:
            cset = frozenset().union(*(s.closest for s in involved))
            fset = frozenset().union(*(s.farthest for s in involved))
            if cset and fset:
                events.append(SweepEvent(back(p), cset, fset))

        # remove everything through p, reinsert continuing + starting segments
        del status[first:last]
        insert = sorted(C + U, key=lambda s: s.slope)
        status[first:first] = insert
        if insert:
            check_cross(status[first - 1] if first > 0 else None, insert[0], p)
            top = first + len(insert)
            check_cross(insert[-1], status[top] if top < len(status) else None, p)
        else:
            check_cross(status[first - 1] if first > 0 else None,
                        status[first] if first < len(status) else None, p)

    return events
