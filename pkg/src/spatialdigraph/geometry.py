"""Exact geometric predicates on rational points.

Points are 3-tuples of ``int`` or ``Fraction``.  Nothing here rounds; the
only floating point use is a conservative filter in
:func:`coplanar_candidates`, whose uncertain cases fall back to exact
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

Point = tuple


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def scale(k, a: Point) -> Point:
    return (k * a[0], k * a[1], k * a[2])


def dot(a: Point, b: Point):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Point, b: Point) -> Point:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def lerp(a: Point, b: Point, t) -> Point:
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2]))


def orient3d(a: Point, b: Point, c: Point, d: Point):
    """Signed volume (times 6) of the tetrahedron abcd."""
    return dot(sub(b, a), cross(sub(c, a), sub(d, a)))


def orient2d(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def sign(x) -> int:
    return (x > 0) - (x < 0)


def collinear(a: Point, b: Point, c: Point) -> bool:
    return cross(sub(b, a), sub(c, a)) == (0, 0, 0)


def _on_segment_collinear(p, a, b) -> bool:
    """For p known collinear with ab: is p within the closed segment?"""
    return all(min(a[i], b[i]) <= p[i] <= max(a[i], b[i]) for i in range(len(a)))


def _drop_axis(n: Point) -> tuple[int, int]:
    k = max(range(3), key=lambda i: abs(n[i]))
    return tuple(i for i in range(3) if i != k)


def segments_intersect(p0: Point, p1: Point, q0: Point, q1: Point) -> bool:
    """Whether closed segments p0p1 and q0q1 share a point."""
    if orient3d(p0, p1, q0, q1) != 0:
        return False
    n = cross(sub(p1, p0), sub(q1, q0))
    if n == (0, 0, 0):
        n = cross(sub(p1, p0), sub(q0, p0))
    if n == (0, 0, 0):
        # all four points collinear
        return any(_on_segment_collinear(x, p0, p1) for x in (q0, q1)) or \
            any(_on_segment_collinear(x, q0, q1) for x in (p0, p1))
    i, j = _drop_axis(n)
    a, b, c, d = ((x[i], x[j]) for x in (p0, p1, q0, q1))
    return segments_intersect_2d(a, b, c, d)


def segments_intersect_2d(a, b, c, d) -> bool:
    o1, o2, o3, o4 = orient2d(a, b, c), orient2d(a, b, d), orient2d(c, d, a), orient2d(c, d, b)
    if o1 == 0 and _on_segment_collinear(c, a, b):
        return True
    if o2 == 0 and _on_segment_collinear(d, a, b):
        return True
    if o3 == 0 and _on_segment_collinear(a, c, d):
        return True
    if o4 == 0 and _on_segment_collinear(b, c, d):
        return True
    return sign(o1) * sign(o2) < 0 and sign(o3) * sign(o4) < 0


def touch_only_at(p0: Point, p1: Point, q0: Point, q1: Point, shared: Point) -> bool:
    """For segments with common endpoint ``shared``: is that their only common point?"""
    u = sub(p1 if p0 == shared else p0, shared)
    v = sub(q1 if q0 == shared else q0, shared)
    if cross(u, v) != (0, 0, 0):
        return True
    return dot(u, v) < 0


def segment_sqdist(p0: Point, p1: Point, q0: Point, q1: Point) -> Fraction:
    """Exact squared distance between two closed segments."""
    d1, d2, r = sub(p1, p0), sub(q1, q0), sub(p0, q0)
    a, e, f = dot(d1, d1), dot(d2, d2), dot(d2, r)
    c, b = dot(d1, r), dot(d1, d2)
    cands = []
    denom = a * e - b * b
    if denom != 0:
        s = Fraction(b * f - c * e, denom)
        t = Fraction(a * f - b * c, denom)
        if 0 <= s <= 1 and 0 <= t <= 1:
            cands.append((s, t))
    # boundary minima: one parameter clamped, the other optimal and clamped
    for s in (Fraction(0), Fraction(1)):
        t = Fraction(b * s + f, e) if e else Fraction(0)
        cands.append((s, min(max(t, Fraction(0)), Fraction(1))))
    for t in (Fraction(0), Fraction(1)):
        s = Fraction(b * t - c, a) if a else Fraction(0)
        cands.append((min(max(s, Fraction(0)), Fraction(1)), t))
    best = None
    for s, t in cands:
        w = sub(lerp(p0, p1, s), lerp(q0, q1, t))
        dd = dot(w, w)
        if best is None or dd < best:
            best = dd
    return Fraction(best)


def point_segment_sqdist(p: Point, a: Point, b: Point) -> Fraction:
    return segment_sqdist(p, p, a, b)


def coplanar_candidates(P0: np.ndarray, P1: np.ndarray, Q0: np.ndarray, Q1: np.ndarray) -> np.ndarray:
    """Mask of segment pairs whose orient3d sign is not certified nonzero in floating point.

    Inputs are (k, 3) float arrays.  The bound is far above the rounding error
    of the determinant, so unmasked pairs are certainly non-coplanar.
    """
    a = P1 - P0
    b = Q0 - P0
    c = Q1 - P0
    det = (a[:, 0] * (b[:, 1] * c[:, 2] - b[:, 2] * c[:, 1])
           - a[:, 1] * (b[:, 0] * c[:, 2] - b[:, 2] * c[:, 0])
           + a[:, 2] * (b[:, 0] * c[:, 1] - b[:, 1] * c[:, 0]))
    A, B, C = np.abs(a), np.abs(b), np.abs(c)
    perm = (A[:, 0] * (B[:, 1] * C[:, 2] + B[:, 2] * C[:, 1])
            + A[:, 1] * (B[:, 0] * C[:, 2] + B[:, 2] * C[:, 0])
            + A[:, 2] * (B[:, 0] * C[:, 1] + B[:, 1] * C[:, 0]))
    return np.abs(det) <= 1e-9 * perm


def parse_rational(s) -> Fraction | int:
    f = Fraction(s)
    return f.numerator if f.denominator == 1 else f


def fmt_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def normalize(p: Sequence) -> Point:
    """Coerce coordinates to ``int`` where integral, else ``Fraction``."""
    return tuple(parse_rational(x) for x in p)
