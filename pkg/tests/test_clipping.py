import random
from fractions import Fraction

from arcline.clipping import clip_segments_square, zone
from arcline.segments import seg


def endpoints(pieces):
    return {tuple(map(Fraction, p)) for s in pieces for p in (s.p0, s.p1)}


def test_fully_inside_unchanged():
    out = clip_segments_square([seg((0, 1), (1, 0), closest={1})], 3)
    assert len(out) == 1
    assert (out[0].p0, out[0].p1) == ((0, 1), (1, 0))


def test_paper_projection_fixture():
    # (0,1)-(4,9) against half side 3 clips to (0,1)-(1,3) plus the outside
    # part projected along origin rays onto the outline ending at (4/3, 3)
    out = clip_segments_square([seg((0, 1), (4, 9), closest={1, 2})], 3)
    pts = endpoints(out)
    assert (Fraction(1), Fraction(3)) in pts
    assert (Fraction(4, 3), Fraction(3)) in pts
    pieces = sorted((tuple(map(Fraction, s.p0)), tuple(map(Fraction, s.p1))) for s in out)
    assert ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(3))) in pieces
    for s in out:
        assert s.closest == frozenset({1, 2})


def test_axis_split_fixture():
    # a segment spanning the north and south wedges splits on the OX axis
    out = clip_segments_square([seg((-4, 9), (2, -9), closest={1})], 3)
    assert (Fraction(-1), Fraction(0)) in endpoints(out)


def test_origin_endpoint():
    out = clip_segments_square([seg((0, 0), (9, 0), closest={1})], 3)
    assert len(out) == 1
    assert (out[0].p0, out[0].p1) == ((0, 0), (Fraction(3), Fraction(0)))


def test_diagonal_segment():
    out = clip_segments_square([seg((-5, -5), (7, 7), closest={1})], 3)
    pts = endpoints(out)
    assert (Fraction(-3), Fraction(-3)) in pts and (Fraction(3), Fraction(3)) in pts


def test_output_inside_and_no_diagonal_crossing():
    random.seed(30)
    h = 4
    for _ in range(1500):
        p0 = (random.randint(-12, 12), random.randint(-12, 12))
        p1 = (random.randint(-12, 12), random.randint(-12, 12))
        for s in clip_segments_square([seg(p0, p1, farthest={2})], h):
            for p in (s.p0, s.p1):
                assert abs(p[0]) <= h and abs(p[1]) <= h
            # projection artifacts (pieces not collinear with the input) are
            # confined to one wedge, so they never cross a diagonal strictly
            dx, dy = p1[0] - p0[0], p1[1] - p0[1]
            collinear = all(dx * (q[1] - p0[1]) == dy * (q[0] - p0[0])
                            for q in (s.p0, s.p1))
            if collinear:
                continue
            for sgn in (1, -1):
                a = s.p0[1] - sgn * s.p0[0]
                b = s.p1[1] - sgn * s.p1[0]
                assert not (a > 0 and b < 0) and not (a < 0 and b > 0)


def test_inside_portion_preserved_exactly():
    # points of the original segment inside the square stay on the output
    random.seed(31)
    h = 5
    for _ in range(300):
        p0 = (random.randint(-15, 15), random.randint(-15, 15))
        p1 = (random.randint(-15, 15), random.randint(-15, 15))
        if p0 == p1:
            continue
        out = clip_segments_square([seg(p0, p1, closest={7})], h)
        for k in range(11):
            t = Fraction(k, 10)
            q = (p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]))
            if abs(q[0]) < h and abs(q[1]) < h:
                on_out = any(_on_piece(q, s) for s in out)
                assert on_out, (p0, p1, q)


def _on_piece(q, s):
    if not (min(s.p0, s.p1) <= q <= max(s.p0, s.p1)):
        return False
    return (q[1] - s.p0[1]) * (s.p1[0] - s.p0[0]) == (q[0] - s.p0[0]) * (s.p1[1] - s.p0[1])
