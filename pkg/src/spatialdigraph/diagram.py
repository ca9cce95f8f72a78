"""Projections of polygons: crossings, linking numbers, knot determinants.

Projection along the direction (p, q, 1) is done by shearing space with
(x, y, z) -> (x - p z, y - q z, z) and reading off the xy-plane; the
sheared z-coordinate says which strand is over.  The shear has determinant
1, so crossing signs keep their meaning.  A crossing is positive when the
over strand, turned counterclockwise by less than a half turn, points
along the under strand (right-handed convention).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .geometry import orient2d, sign

Direction = tuple  # (p, q) for the projection direction (p, q, 1)

_FIXED = [(0, 0), (Fraction(1, 7), Fraction(2, 11)), (Fraction(-3, 13), Fraction(1, 5)),
          (Fraction(2, 17), Fraction(-5, 19)), (Fraction(-1, 23), Fraction(-3, 29)),
          (Fraction(5, 31), Fraction(1, 37))]


class DegenerateProjection(RuntimeError):
    """No direction in the schedule gave a generic diagram."""


class NonGeneric(Exception):
    """Internal: the current direction is not generic."""


class CurvesIntersect(ValueError):
    """Two polygons that were required to be disjoint meet in space."""


def direction_schedule(limit: int = 64) -> Iterator[Direction]:
    """The fixed sequence of projection directions tried in order."""
    yield from _FIXED
    rng = random.Random(20240607)
    for _ in range(limit - len(_FIXED)):
        yield (Fraction(rng.randint(-97, 97), rng.randint(101, 997)),
               Fraction(rng.randint(-97, 97), rng.randint(101, 997)))


def shear(pt, d: Direction):
    p, q = d
    x, y, z = pt
    return (x - p * z, y - q * z, z)


def _segments(poly: Sequence, d: Direction) -> list[tuple]:
    pts = [shear(p, d) for p in poly]
    n = len(pts)
    segs = []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a[0] == b[0] and a[1] == b[1]:
            raise NonGeneric("segment projects to a point")
        segs.append((a, b))
    return segs


def _between(p, a, b) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def crossing(s: tuple, t: tuple):
    """Crossing of two projected segments sharing no endpoint.

    Returns ``None`` or ``(lam, mu, s_over, sign)``.  Raises NonGeneric on
    touching or overlapping projections and CurvesIntersect when the
    segments meet in space.
    """
    a0, a1 = s
    b0, b1 = t
    if max(a0[0], a1[0]) < min(b0[0], b1[0]) or max(b0[0], b1[0]) < min(a0[0], a1[0]) or \
            max(a0[1], a1[1]) < min(b0[1], b1[1]) or max(b0[1], b1[1]) < min(a0[1], a1[1]):
        return None
    o1, o2 = orient2d(a0, a1, b0), orient2d(a0, a1, b1)
    o3, o4 = orient2d(b0, b1, a0), orient2d(b0, b1, a1)
    if (o1 == 0 and _between(b0, a0, a1)) or (o2 == 0 and _between(b1, a0, a1)) or \
            (o3 == 0 and _between(a0, b0, b1)) or (o4 == 0 and _between(a1, b0, b1)):
        raise NonGeneric("projected segments touch")
    if sign(o1) * sign(o2) >= 0 or sign(o3) * sign(o4) >= 0:
        return None
    lam = Fraction(o3, 1) / (o3 - o4)
    mu = Fraction(o1, 1) / (o1 - o2)
    za = a0[2] + lam * (a1[2] - a0[2])
    zb = b0[2] + mu * (b1[2] - b0[2])
    if za == zb:
        raise CurvesIntersect("segments meet in space")
    da = (a1[0] - a0[0], a1[1] - a0[1])
    db = (b1[0] - b0[0], b1[1] - b0[1])
    s_over = za > zb
    over, under = (da, db) if s_over else (db, da)
    return lam, mu, s_over, sign(over[0] * under[1] - over[1] * under[0])


def _with_schedule(fn, direction: Direction | None):
    if direction is not None:
        try:
            return fn(direction)
        except NonGeneric as exc:
            raise DegenerateProjection(f"direction {direction} is not generic: {exc}") from None
    for d in direction_schedule():
        try:
            return fn(d)
        except NonGeneric:
            continue
    raise DegenerateProjection("no generic projection direction found in the schedule")


def polygon_linking_number(P: Sequence, Q: Sequence, direction: Direction | None = None,
                           both_sides: bool = False):
    """Linking number of two disjoint closed polygons (lists of vertices).

    Counts signed crossings where ``P`` passes over ``Q``.  With
    ``both_sides`` also returns the total signed crossing count, which is
    twice the linking number.
    """
    def run(d):
        sp, sq = _segments(P, d), _segments(Q, d)
        over = total = 0
        for s in sp:
            for t in sq:
                c = crossing(s, t)
                if c is None:
                    continue
                total += c[3]
                if c[2]:
                    over += c[3]
        return (over, total) if both_sides else over

    return _with_schedule(run, direction)


@dataclass(frozen=True)
class KnotDiagram:
    """Crossings of a single polygon, with positions along the curve."""

    n_segments: int
    crossings: tuple  # (over_seg, over_param, under_seg, under_param, sign)
    direction: Direction

    def coloring_matrix(self) -> list[list[int]]:
        """Fox coloring matrix: one row per crossing, one column per arc."""
        events = []
        for k, (os_, op, us, up, _) in enumerate(self.crossings):
            events.append(((os_, op), "over", k))
            events.append(((us, up), "under", k))
        events.sort(key=lambda e: e[0])
        n = len(self.crossings)
        unders = [e for e in events if e[1] == "under"]
        under_rank = {e[2]: i for i, e in enumerate(unders)}
        # arc i ends at the i-th undercrossing and arc (i+1) % n starts there
        over_arc = {}
        seen_under = 0
        for pos, kind, k in events:
            if kind == "under":
                seen_under += 1
            else:
                over_arc[k] = seen_under % n
        rows = []
        for k in range(n):
            i = under_rank[k]
            row = [0] * n
            row[over_arc[k]] += 2
            row[i] -= 1
            row[(i + 1) % n] -= 1
            rows.append(row)
        return rows

    def determinant(self) -> int:
        n = len(self.crossings)
        if n <= 1:
            return 1
        m = [row[:-1] for row in self.coloring_matrix()[:-1]]
        return abs(bareiss_det(m))


def knot_diagram(P: Sequence, direction: Direction | None = None) -> KnotDiagram:
    """Generic diagram of a closed polygon (no triple points, no vertex on another segment)."""
    def run(d):
        segs = _segments(P, d)
        n = len(segs)
        found = []
        params: dict[int, set] = {}
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    a0, a1 = segs[i]
                    b0, b1 = segs[j]
                    v, u, w = (a1, a0, b1) if j == i + 1 else (a0, a1, b0)
                    if orient2d(v, u, w) == 0 and \
                            (u[0] - v[0]) * (w[0] - v[0]) + (u[1] - v[1]) * (w[1] - v[1]) > 0:
                        raise NonGeneric("adjacent segments fold over")
                    continue
                c = crossing(segs[i], segs[j])
                if c is None:
                    continue
                lam, mu, i_over, sg = c
                for seg, par in ((i, lam), (j, mu)):
                    if par in params.setdefault(seg, set()):
                        raise NonGeneric("triple point")
                    params[seg].add(par)
                found.append((i, lam, j, mu, sg) if i_over else (j, mu, i, lam, sg))
        return KnotDiagram(n, tuple(found), d)

    return _with_schedule(run, direction)


def bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sgn = -sgn
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sgn * a[-1][-1]


def arf_from_determinant(det: int) -> int:
    """Arf invariant from the determinant: 0 when det = +-1 mod 8, 1 when det = +-3 mod 8."""
    r = det % 8
    if r in (1, 7):
        return 0
    if r in (3, 5):
        return 1
    raise ValueError(f"knot determinants are odd, got {det}")
