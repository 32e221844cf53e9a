import math
import random

import pytest

from arcline.arcfit import (INF, arc_within_tolerance, densify,
                            direction_and_endpoint_check, fit_arc_by_tolerance,
                            fit_arc_least_squares, tolerance_intervals_point)


def deviation(a, b, p, s):
    """Radial deviation of p from the arc through a, b centered at bisector
    parameter s (signed distance from the chord midpoint)."""
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    dx, dy = b[0] - a[0], b[1] - a[1]
    ln = math.hypot(dx, dy)
    u = (-dy / ln, dx / ln)
    c = (mid[0] + s * u[0], mid[1] + s * u[1])
    r = math.hypot(ln / 2, s)
    return abs(math.dist(p, c) - r)


def sampled_feasible_set(a, b, p, tol, span=200.0, n=4001):
    xs = [-span + 2 * span * k / (n - 1) for k in range(n)]
    return [s for s in xs if deviation(a, b, p, s) <= tol]


def test_point_near_endpoint_full_line():
    ivs = tolerance_intervals_point((0, 0), (10, 0), (1, 0), 1.5)
    assert ivs == [(-INF, INF)]


def test_point_on_circle_interval_contains_center_param():
    # p on the circle through a, b centered at s0 = 0 (radius = half chord)
    a, b = (-10.0, 0.0), (10.0, 0.0)
    p = (0.0, 10.0)
    ivs = tolerance_intervals_point(a, b, p, 0.01)
    assert any(lo <= 0 <= hi for lo, hi in ivs)


def test_intervals_match_sampling_oracle():
    random.seed(70)
    for _ in range(150):
        a = (random.uniform(-30, 30), random.uniform(-30, 30))
        b = (random.uniform(-30, 30), random.uniform(-30, 30))
        if math.dist(a, b) < 1:
            continue
        p = (random.uniform(-30, 30), random.uniform(-30, 30))
        tol = random.uniform(0.1, 5)
        ivs = tolerance_intervals_point(a, b, p, tol)
        for s in sampled_feasible_set(a, b, p, tol):
            ok = any(lo - 1e-6 <= s <= hi + 1e-6 for lo, hi in ivs)
            assert ok, (a, b, p, tol, s, ivs)
        # and interval midpoints really satisfy the tolerance
        for lo, hi in ivs:
            mid = max(min((lo + hi) / 2 if math.isfinite(lo) and math.isfinite(hi)
                          else (lo + 1 if math.isfinite(lo) else hi - 1), 1e8), -1e8)
            assert deviation(a, b, p, mid) <= tol + 1e-6


def test_intervals_symmetric_in_endpoints():
    random.seed(71)
    for _ in range(60):
        a = (random.uniform(-20, 20), random.uniform(-20, 20))
        b = (random.uniform(-20, 20), random.uniform(-20, 20))
        if math.dist(a, b) < 1:
            continue
        p = (random.uniform(-20, 20), random.uniform(-20, 20))
        tol = random.uniform(0.1, 3)
        iv1 = tolerance_intervals_point(a, b, p, tol)
        iv2 = tolerance_intervals_point(b, a, p, tol)
        # swapping endpoints flips the bisector parameter sign
        flipped = sorted((-hi, -lo) for lo, hi in iv2)
        for (l1, h1), (l2, h2) in zip(sorted(iv1), flipped):
            assert math.isclose(l1, l2, rel_tol=1e-9, abs_tol=1e-9) or (l1 == l2)
            assert math.isclose(h1, h2, rel_tol=1e-9, abs_tol=1e-9) or (h1 == h2)


def _circle_points(cx, cy, r, angles):
    return [(cx + r * math.cos(t), cy + r * math.sin(t)) for t in angles]


def test_fit_exact_circle():
    pts = _circle_points(3, -2, 50, [0.1 * k for k in range(12)])
    arc = fit_arc_least_squares(pts)
    assert math.isclose(arc.radius, 50, rel_tol=1e-9)
    assert math.isclose(arc.center[0], 3, abs_tol=1e-6)
    assert math.isclose(arc.center[1], -2, abs_tol=1e-6)
    assert arc.sse < 1e-12


def test_fit_symmetric_points_center_on_axis():
    pts = [(-10.0, 0.0), (-6.0, 3.0), (0.0, 4.0), (6.0, 3.0), (10.0, 0.0)]
    arc = fit_arc_least_squares(pts)
    assert math.isclose(arc.center[0], 0, abs_tol=1e-9)


def test_fit_sse_close_to_golden_section_optimum():
    random.seed(72)
    for _ in range(40):
        r = random.uniform(20, 200)
        t0 = random.uniform(0, 5)
        pts = [(r * math.cos(t0 + 0.15 * k) + random.gauss(0, 0.5),
                r * math.sin(t0 + 0.15 * k) + random.gauss(0, 0.5)) for k in range(12)]
        arc = fit_arc_least_squares(pts)

        a, b = pts[0], pts[-1]
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        dx, dy = b[0] - a[0], b[1] - a[1]
        ln = math.hypot(dx, dy)
        u = (-dy / ln, dx / ln)

        def true_sse(s):
            c = (mid[0] + s * u[0], mid[1] + s * u[1])
            rr = math.hypot(ln / 2, s)
            return sum((math.dist(p, c) - rr) ** 2 for p in pts)

        lo, hi = -10 * r, 10 * r
        phi = (math.sqrt(5) - 1) / 2
        for _ in range(200):
            m1 = hi - phi * (hi - lo)
            m2 = lo + phi * (hi - lo)
            if true_sse(m1) <= true_sse(m2):
                hi = m2
            else:
                lo = m1
        best = true_sse((lo + hi) / 2)
        s_arc = (arc.center[0] - mid[0]) * u[0] + (arc.center[1] - mid[1]) * u[1]
        assert true_sse(s_arc) <= best * 1.01 + 1e-12


def test_collinear_is_segment_like():
    pts = [(float(i), 0.0) for i in range(6)]
    arc = fit_arc_least_squares(pts)
    assert arc.segment_like
    assert fit_arc_by_tolerance(pts, tol=0.0) is None or fit_arc_by_tolerance(pts, tol=0.0).segment_like


def test_fit_by_tolerance_exact_circle():
    pts = _circle_points(0, 0, 40, [0.2 * k for k in range(10)])
    arc = fit_arc_by_tolerance(pts, tol=0.5)
    assert arc is not None and math.isclose(arc.radius, 40, rel_tol=1e-6)


def test_fit_by_tolerance_soundness_and_oracle_agreement():
    random.seed(73)
    agree = 0
    for _ in range(200):
        r = random.uniform(10, 80)
        t0 = random.uniform(0, 5)
        noise = random.uniform(0, 2.0)
        pts = [(r * math.cos(t0 + 0.2 * k) + random.gauss(0, noise),
                r * math.sin(t0 + 0.2 * k) + random.gauss(0, noise)) for k in range(10)]
        tol = random.uniform(0.3, 3)
        arc = fit_arc_by_tolerance(pts, tol=tol)
        a, b = pts[0], pts[-1]
        # sampling oracle over the bisector with sign-change refinement
        span = 40 * r
        n = 10001
        feas_samples = []
        prev = None
        for k in range(n):
            s = -span + 2 * span * k / (n - 1)
            d = max(deviation(a, b, p, s) for p in pts)
            feas_samples.append(d <= tol)
        oracle_feasible = any(feas_samples)
        if arc is not None:
            # returned arcs satisfy the radial tolerance
            assert arc_within_tolerance(arc, pts, tol * (1 + 1e-9), check_span=False)
            if not oracle_feasible:
                continue  # oracle grid can miss a feasible sliver; fit proves it
            agree += 1
        else:
            assert not oracle_feasible, "fit said infeasible but oracle found a center"
            agree += 1
    assert agree >= 150


def test_arc_within_tolerance_examples():
    pts = _circle_points(0, 0, 30, [0.2 * k for k in range(8)])
    arc = fit_arc_least_squares(pts)
    assert arc_within_tolerance(arc, pts, 0.01)
    moved = list(pts)
    moved[3] = (moved[3][0] + 1.0, moved[3][1])
    assert not arc_within_tolerance(arc, moved, 0.4)


def test_arc_span_check_rejects_complement():
    # a point diametrically opposite the arc is radially fine but lies on
    # the complement arc
    pts = _circle_points(0, 0, 10, [0.0, 0.3, 0.6, 0.9])
    arc = fit_arc_least_squares(pts)
    bad = pts + [(-10.0, 0.0)]
    assert arc_within_tolerance(arc, pts, 0.1)
    assert not arc_within_tolerance(arc, bad, 0.1)


def test_densify():
    out = densify([(0, 0), (10, 0)], 5)
    assert out == [(0, 0), (5.0, 0.0), (10, 0)]
    dense = [(0, 0), (1, 0), (2, 0)]
    assert densify(dense, 5) == [(0, 0), (1, 0), (2, 0)]
    random.seed(74)
    for _ in range(50):
        pts = [(random.uniform(0, 50), random.uniform(0, 50)) for _ in range(6)]
        step = random.uniform(0.5, 5)
        out = densify(pts, step)
        for q, p in zip(out, out[1:]):
            assert math.dist(q, p) <= step + 1e-9
        assert all(p in out for p in [tuple(p) for p in pts])
    with pytest.raises(ValueError):
        densify([(0, 0)], 0)


def test_direction_check():
    pts = _circle_points(0, 0, 20, [0.1 * k for k in range(10)])
    arc = fit_arc_least_squares(pts)
    assert direction_and_endpoint_check(pts, arc)
    assert not direction_and_endpoint_check(list(reversed(pts)), arc)
    seg = ((0.0, 0.0), (10.0, 0.0))
    assert direction_and_endpoint_check([(0, 0), (3, 1), (7, -1), (10, 0)], seg)
    assert not direction_and_endpoint_check([(0, 0), (7, 1), (3, -1), (10, 0)], seg)
    # backward wiggle within the slack is tolerated
    assert direction_and_endpoint_check([(0, 0), (5, 1), (4.6, -1), (10, 0)], seg, slack=0.5)
    assert not direction_and_endpoint_check([(0, 0), (5, 1), (4.4, -1), (10, 0)], seg, slack=0.5)


def test_fallback_accepts_when_least_squares_violates():
    # instances where the least-squares optimum misses the tolerance but a
    # feasible interval-endpoint center exists (deterministic seeds)
    hit = 0
    for seed, tol in ((5, 1.223586), (10, 1.539972), (15, 1.638093)):
        rng = random.Random(seed)
        r = rng.uniform(20, 60)
        t0 = rng.uniform(0, 5)
        pts = [(r * math.cos(t0 + 0.25 * k) + rng.gauss(0, 1.0),
                r * math.sin(t0 + 0.25 * k) + rng.gauss(0, 1.0)) for k in range(8)]
        ls = fit_arc_least_squares(pts)
        assert not arc_within_tolerance(ls, pts, tol, check_span=False)
        arc = fit_arc_by_tolerance(pts, tol=tol)
        assert arc is not None
        assert arc_within_tolerance(arc, pts, tol * (1 + 1e-9), check_span=False)
        hit += 1
    assert hit == 3
