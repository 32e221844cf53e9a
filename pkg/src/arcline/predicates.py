"""Exact planar predicates and constructions on integer or rational points.

Points are plain (x, y) tuples.  Integer inputs keep every predicate exact
because Python integers are arbitrary precision; rational inputs (Fraction)
stay exact as well, which the inversion-based constructions rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

Point = Tuple  # (x, y) of int or Fraction

NEGATIVE, ZERO, POSITIVE = -1, 0, 1


def sign(value) -> int:
    if value > 0:
        return POSITIVE
    if value < 0:
        return NEGATIVE
    return ZERO


def cross(o: Point, a: Point, b: Point):
    """Cross product (a-o) x (b-o); twice the signed triangle area."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of (b-a) x (c-a); positive means counterclockwise."""
    return sign(cross(a, b, c))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """Exact in-circle test.

    For counterclockwise (a, b, c): positive iff d lies strictly inside the
    circumcircle, zero iff cocircular, negative iff outside.  Swapping two of
    a, b, c flips the sign.
    """
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )
    return sign(det)


def incircle_farthest(a: Point, b: Point, c: Point, d: Point) -> int:
    """In-circle test for the farthest Delaunay diagram: negated incircle."""
    return -incircle(a, b, c, d)


def invert_point(p: Point, o: Point) -> Tuple[Fraction, Fraction]:
    """Invert p about the unit circle centered at o: o + (p-o)/|p-o|^2."""
    dx = Fraction(p[0] - o[0])
    dy = Fraction(p[1] - o[1])
    norm_sq = dx * dx + dy * dy
    if norm_sq == 0:
        raise ValueError("inversion center coincides with point")
    return (o[0] + dx / norm_sq, o[1] + dy / norm_sq)


@dataclass(frozen=True)
class ExactCircle:
    """Circle with exact rational center and squared radius."""

    center: Tuple[Fraction, Fraction]
    radius_sq: Fraction


def circumcircle(a: Point, b: Point, c: Point) -> ExactCircle:
    """Exact circumcircle of three non-collinear points."""
    d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if d == 0:
        raise ValueError("degenerate circumcircle")
    na = a[0] * a[0] + a[1] * a[1]
    nb = b[0] * b[0] + b[1] * b[1]
    nc = c[0] * c[0] + c[1] * c[1]
    ux = Fraction(na * (b[1] - c[1]) + nb * (c[1] - a[1]) + nc * (a[1] - b[1]), 1) / d
    uy = Fraction(na * (c[0] - b[0]) + nb * (a[0] - c[0]) + nc * (b[0] - a[0]), 1) / d
    r_sq = (ux - a[0]) ** 2 + (uy - a[1]) ** 2
    return ExactCircle((ux, uy), r_sq)


def dist_sq(a: Point, b: Point):
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def incircle_determinant(a: Point, b: Point, c: Point, d: Point):
    """Raw 4x4 determinant with rows (x, y, x^2+y^2, 1), expanded by minors.

    Independent of :func:`incircle`; used as a cross-check oracle.
    """
    rows = [
        (a[0], a[1], a[0] * a[0] + a[1] * a[1]),
        (b[0], b[1], b[0] * b[0] + b[1] * b[1]),
        (c[0], c[1], c[0] * c[0] + c[1] * c[1]),
        (d[0], d[1], d[0] * d[0] + d[1] * d[1]),
    ]

    def det3(r0, r1, r2):
        return (
            r0[0] * (r1[1] * r2[2] - r2[1] * r1[2])
            - r0[1] * (r1[0] * r2[2] - r2[0] * r1[2])
            + r0[2] * (r1[0] * r2[1] - r2[0] * r1[1])
        )

    # Laplace expansion along the all-ones column.
    return (
        -det3(rows[1], rows[2], rows[3])
        + det3(rows[0], rows[2], rows[3])
        - det3(rows[0], rows[1], rows[3])
        + det3(rows[0], rows[1], rows[2])
    )
