"""Exact sign evaluation for expressions with one or two square roots.

Annulus widths are sqrt(outer) - sqrt(inner) with rational radicands; these
helpers compare such quantities without ever leaving rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def surd_sign(p, q, b) -> int:
    """Sign of p + q*sqrt(b) for rationals p, q and b >= 0."""
    if b < 0:
        raise ValueError("negative radicand")
    if q == 0 or b == 0:
        return _sign(p)
    if p == 0:
        return _sign(q)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # p and q have opposite signs: multiply by the conjugate p - q*sqrt(b)
    s = _sign(p * p - q * q * b)
    return s if p > 0 else -s


def sqrt_diff_vs_rational(outer_sq, inner_sq, bound) -> int:
    """Sign of (sqrt(outer_sq) - sqrt(inner_sq)) - bound, all rational inputs.

    Requires outer_sq >= inner_sq >= 0.
    """
    if bound < 0:
        return 1  # the width is nonnegative
    # sqrt(O) <=> bound + sqrt(I); both sides nonnegative, compare squares:
    # O - I - bound^2 <=> 2*bound*sqrt(I)
    lhs = outer_sq - inner_sq - bound * bound
    return surd_sign(lhs, -2 * bound, inner_sq)


def width_leq(outer_sq, inner_sq, bound) -> bool:
    """sqrt(outer_sq) - sqrt(inner_sq) <= bound, exactly."""
    return sqrt_diff_vs_rational(outer_sq, inner_sq, Fraction(bound)) <= 0


def sqrt_sum_sign(a, d, c, b) -> int:
    """Sign of (sqrt(a) + sqrt(d)) - (sqrt(c) + sqrt(b)), rationals >= 0."""
    if a == d == c == b == 0:
        return 0
    # compare squares: (a + d - c - b) + 2*sqrt(a*d) - 2*sqrt(c*b)
    r = a + d - c - b
    u = a * d
    v = c * b
    # sign of (r + 2*sqrt(u)) - 2*sqrt(v)
    w_sign = surd_sign(r, Fraction(2), u)
    if w_sign < 0:
        return -1 if v >= 0 else 1
    if w_sign == 0:
        return -_sign(v)
    # both sides nonnegative: square again
    return surd_sign(r * r + 4 * u - 4 * v, 4 * r, u)


def width_compare(outer_a, inner_a, outer_b, inner_b) -> int:
    """Compare annulus widths sqrt(Oa)-sqrt(Ia) <=> sqrt(Ob)-sqrt(Ib), exactly."""
    # (sqrt(Oa) + sqrt(Ib)) <=> (sqrt(Ob) + sqrt(Ia))
    return sqrt_sum_sign(outer_a, inner_b, outer_b, inner_a)
