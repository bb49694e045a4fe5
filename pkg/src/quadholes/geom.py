"""Exact predicates over integer points.

Points are ``(x, y)`` tuples of Python ints, a point set is any sequence of
them and a quad is a 4-tuple of indices into that sequence.  Every predicate
here is evaluated in integer arithmetic, so there are no tolerances anywhere.
"""
from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Sequence, Tuple

from .errors import CoordinateRangeError, DegenerateInputError

Point = Tuple[int, int]
Quad = Tuple[int, int, int, int]

COORD_LIMIT = 1 << 30


def check_point(p: Point) -> None:
    x, y = p
    if not (isinstance(x, int) and isinstance(y, int)):
        raise CoordinateRangeError(f"non-integer coordinate in {p!r}")
    if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
        raise CoordinateRangeError(f"coordinate of {p!r} exceeds 2^30 in magnitude")


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle (o, a, b); unchecked hot-path helper."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 for a counterclockwise turn a->b->c, -1 for clockwise, 0 if collinear."""
    for p in (a, b, c):
        check_point(p)
    d = cross(a, b, c)
    return (d > 0) - (d < 0)


def in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """True iff p lies strictly inside triangle abc (either orientation)."""
    d1 = cross(a, b, p)
    d2 = cross(b, c, p)
    d3 = cross(c, a, p)
    return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)


def same_side(p: Point, q: Point, a: Point, b: Point) -> bool:
    """True iff p and q lie strictly on the same side of line ab."""
    return cross(a, b, p) * cross(a, b, q) > 0


def convex_hull(points: Sequence[Point], indices: Sequence[int] | None = None) -> list[int]:
    """Hull vertices in counterclockwise order, starting at the bottommost point.

    The bottommost point is the one with the smallest ``(y, x)``.  Collinear
    boundary points are dropped.
    """
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) < 3:
        raise DegenerateInputError("convex hull needs at least 3 points")
    idx.sort(key=lambda i: points[i])
    lower: list[int] = []
    for i in idx:
        while len(lower) >= 2 and cross(points[lower[-2]], points[lower[-1]], points[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(idx):
        while len(upper) >= 2 and cross(points[upper[-2]], points[upper[-1]], points[i]) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    start = min(range(len(hull)), key=lambda k: (points[hull[k]][1], points[hull[k]][0]))
    return hull[start:] + hull[:start]


def find_degeneracy(points: Sequence[Point]) -> tuple[int, ...] | None:
    """Indices of a duplicate pair or collinear triple, or None in general position.

    Sort-based: around each point, two others in the same (or opposite)
    direction are collinear with it.  O(n^2 log n).
    """
    n = len(points)
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            return (seen[p], i)
        seen[p] = i
    for i in range(n):
        xi, yi = points[i]
        dirs: dict[tuple[int, int], int] = {}
        for j in range(i + 1, n):
            dx = points[j][0] - xi
            dy = points[j][1] - yi
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            key = (dx, dy)
            if key in dirs:
                return (i, dirs[key], j)
            dirs[key] = j
    return None


def degeneracy(points: Sequence[Point]) -> tuple[int, ...] | None:
    """find_degeneracy, vectorised for large int64-safe inputs."""
    from . import _vec

    if len(points) <= 64 or not _vec.int64_safe(points):
        return find_degeneracy(points)
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            return (seen[p], i)
        seen[p] = i
    return _vec.find_collinear(*_vec.coords(points))


def is_general_position(points: Sequence[Point]) -> bool:
    """True iff the points are pairwise distinct and no three are collinear."""
    return degeneracy(points) is None


def validate_points(points: Sequence[Point]) -> None:
    """Raise unless every coordinate is in range and the set is in general position."""
    for p in points:
        check_point(p)
    bad = degeneracy(points)
    if bad is not None:
        kind = "duplicate points" if len(bad) == 2 else "collinear points"
        raise DegenerateInputError(f"{kind} at indices {bad}")


def ccw_quad(q: Sequence[int], points: Sequence[Point]) -> Quad | None:
    """The four indices in counterclockwise convex order, or None if not convex.

    The result starts at the smallest index so equal quads compare equal.
    """
    a, b, c, d = q
    # d is outside triangle abc and the quad is convex iff exactly one
    # arrangement has all four turns of the same sign.
    for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
        ps = [points[i] for i in order]
        s = [cross(ps[k], ps[(k + 1) % 4], ps[(k + 2) % 4]) for k in range(4)]
        if all(v > 0 for v in s):
            return _rotate_min(order)
        if all(v < 0 for v in s):
            return _rotate_min(order[::-1])
    return None


def _rotate_min(order: Sequence[int]) -> Quad:
    k = min(range(4), key=lambda t: order[t])
    return tuple(order[k:]) + tuple(order[:k])  # type: ignore[return-value]


def point_in_convex(p: Point, poly: Sequence[Point]) -> bool:
    """Strict containment in a counterclockwise convex polygon."""
    m = len(poly)
    for k in range(m):
        if cross(poly[k], poly[(k + 1) % m], p) <= 0:
            return False
    return True


def quad_is_hole(q: Sequence[int], points: Sequence[Point], among: Sequence[int] | None = None) -> bool:
    """True iff the quad is convex and no other point of ``among`` is strictly inside.

    ``among`` defaults to the whole point set.
    """
    if len(set(q)) != 4:
        return False
    cq = ccw_quad(q, points)
    if cq is None:
        return False
    poly = [points[i] for i in cq]
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = poly
    minx = min(x0, x1, x2, x3)
    maxx = max(x0, x1, x2, x3)
    miny = min(y0, y1, y2, y3)
    maxy = max(y0, y1, y2, y3)
    pool = range(len(points)) if among is None else among
    qs = set(cq)
    for i in pool:
        if i in qs:
            continue
        x, y = points[i]
        if x <= minx or x >= maxx or y <= miny or y >= maxy:
            continue
        if point_in_convex((x, y), poly):
            return False
    return True


def convex_polygons_compatible(p1: Sequence[Point], p2: Sequence[Point]) -> bool:
    """True iff two counterclockwise convex polygons have disjoint interiors.

    Separating-axis test restricted to edge lines, which is exact for convex
    polygons: if the interiors are disjoint, some edge line of one of them
    weakly separates the two.
    """
    # an axis-parallel line already separates the boxes
    if (max(p[0] for p in p1) <= min(p[0] for p in p2) or max(p[0] for p in p2) <= min(p[0] for p in p1)
            or max(p[1] for p in p1) <= min(p[1] for p in p2) or max(p[1] for p in p2) <= min(p[1] for p in p1)):
        return True
    for poly, other in ((p1, p2), (p2, p1)):
        m = len(poly)
        for k in range(m):
            a = poly[k]
            b = poly[(k + 1) % m]
            if all(cross(a, b, v) <= 0 for v in other):
                return True
    return False


def quads_compatible(q1: Sequence[int], q2: Sequence[int], points: Sequence[Point]) -> bool:
    """True iff the two (convex) quads have disjoint interiors."""
    c1 = ccw_quad(q1, points)
    c2 = ccw_quad(q2, points)
    if c1 is None or c2 is None:
        raise DegenerateInputError("quads_compatible needs convex quads")
    return convex_polygons_compatible([points[i] for i in c1], [points[i] for i in c2])


def brute_force_hull(points: Sequence[Point]) -> set[int]:
    """Hull vertex set by the O(n^4) definition: not inside any triangle of others."""
    n = len(points)
    out = set()
    for i in range(n):
        others = [j for j in range(n) if j != i]
        if not any(in_triangle(points[i], points[a], points[b], points[c])
                   for a, b, c in combinations(others, 3)):
            out.add(i)
    return out
