import random
from fractions import Fraction

from arcline.overlaps import remove_overlaps
from arcline.segments import seg
from arcline.sweep import segment_intersection, sweep_intersections


def test_single_crossing():
    events = sweep_intersections([seg((0, 0), (4, 4), closest={1, 2}),
                                  seg((0, 4), (4, 0), farthest={3, 4})])
    assert len(events) == 1
    ev = events[0]
    assert ev.point == (2, 2)
    assert ev.closest_indices == frozenset({1, 2})
    assert ev.farthest_indices == frozenset({3, 4})


def test_parallel_no_events():
    assert sweep_intersections([seg((0, 0), (4, 0), closest={1}),
                                seg((0, 1), (4, 1), farthest={2})]) == []


def test_same_diagram_crossing_not_reported():
    assert sweep_intersections([seg((0, 0), (4, 4), closest={1}),
                                seg((0, 4), (4, 0), closest={2})]) == []


def test_shared_endpoint_and_vertical():
    events = sweep_intersections([seg((2, -3), (2, 3), closest={1}),
                                  seg((2, 0), (8, 1), farthest={2})])
    assert [e.point for e in events] == [(2, 0)]


def _on_segment(s, q):
    if not (min(s.p0, s.p1) <= (q[0], q[1]) <= max(s.p0, s.p1)):
        return False
    return (q[1] - s.p0[1]) * (s.p1[0] - s.p0[0]) == (q[0] - s.p0[0]) * (s.p1[1] - s.p0[1])


def brute_force_events(segs):
    cand = set()
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            q = segment_intersection(segs[i].p0, segs[i].p1, segs[j].p0, segs[j].p1)
            if q is not None:
                cand.add(q)
    for s in segs:
        for p in (s.p0, s.p1):
            cand.add((Fraction(p[0]), Fraction(p[1])))
    out = set()
    for q in cand:
        cs, fs = set(), set()
        for s in segs:
            if _on_segment(s, q):
                cs |= s.closest
                fs |= s.farthest
        if cs and fs:
            out.add(q)
    return out


def test_matches_brute_force_on_degenerate_grids():
    random.seed(50)
    for trial in range(120):
        raw = []
        for _ in range(random.randint(2, 14)):
            p0 = (random.randint(-8, 8), random.randint(-8, 8))
            p1 = (random.randint(-8, 8), random.randint(-8, 8))
            if p0 == p1:
                continue
            if random.random() < 0.5:
                raw.append(seg(p0, p1, closest={random.randint(0, 5)}))
            else:
                raw.append(seg(p0, p1, farthest={random.randint(0, 5)}))
        segs = remove_overlaps(raw)
        got = {e.point for e in sweep_intersections(segs)}
        assert got == brute_force_events(segs)


def test_event_multiset_input_order_invariant():
    random.seed(51)
    raw = []
    for _ in range(12):
        p0 = (random.randint(-6, 6), random.randint(-6, 6))
        p1 = (random.randint(-6, 6), random.randint(-6, 6))
        if p0 == p1:
            continue
        raw.append(seg(p0, p1, closest={random.randint(0, 3)}) if random.random() < 0.5
                   else seg(p0, p1, farthest={random.randint(0, 3)}))
    segs = remove_overlaps(raw)
    base = sorted((e.point, tuple(sorted(e.closest_indices)), tuple(sorted(e.farthest_indices)))
                  for e in sweep_intersections(segs))
    for _ in range(5):
        random.shuffle(segs)
        got = sorted((e.point, tuple(sorted(e.closest_indices)), tuple(sorted(e.farthest_indices)))
                     for e in sweep_intersections(segs))
        assert got == base
