"""Splitting a point set into two sides plus a bridging 4-hole.

The split follows the case tree of the good-split lemma: sort around the
lowest point a1, cut after s-1 points, then pick the bridge from a handful
of attack points and hull neighbours.  Every outcome is re-checked exactly;
when a case misfires the lemma is re-run from other hull vertices and in
the mirrored sweep direction before giving up.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

import numpy as np

from . import _vec
from .errors import ContradictionError, PreconditionError
from .geom import Point, Quad, ccw_quad, convex_hull, cross, in_triangle
from .radial import bottommost

log = logging.getLogger(__name__)


class PointArrays:
    """Coordinates as numpy columns; int64 when exact, Python ints otherwise."""

    def __init__(self, points: Sequence[Point]):
        self.points = points
        dtype = np.int64 if _vec.int64_safe(points) else object
        arr = np.asarray(points, dtype=dtype).reshape(-1, 2)
        self.X = arr[:, 0]
        self.Y = arr[:, 1]
        self.fX = self.X.astype(float)
        self.fY = self.Y.astype(float)

    def cr(self, o: int, a: int, idx: np.ndarray) -> np.ndarray:
        """cross(p_o, p_a, p_k) for every k in idx."""
        ox, oy = self.points[o]
        ax, ay = self.points[a]
        return (ax - ox) * (self.Y[idx] - oy) - (ay - oy) * (self.X[idx] - ox)

    def inside_quad(self, q: Quad, idx: np.ndarray) -> np.ndarray:
        """Mask of idx points strictly inside the ccw quad q."""
        m = np.ones(len(idx), dtype=bool)
        for k in range(4):
            m &= self.cr(q[k], q[(k + 1) % 4], idx) > 0
        return m


@dataclass
class GoodSplit:
    side_a: np.ndarray
    side_b: np.ndarray
    bridge: Quad
    separator: tuple[int, int]  # side_a weakly left of the directed line, side_b weakly right
    case: str


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _first_met(P: PointArrays, apex: int, start: int, cand: np.ndarray, sgn: int) -> int | None:
    """Point of ``cand`` first met by a half-line at ``apex`` turning from ray apex->start.

    All candidates must lie strictly on side ``sgn`` of that ray's line, so
    the turning angles are in (0, pi) and the order is exact via cross signs.
    """
    if len(cand) == 0:
        return None
    if len(cand) == 1:
        return int(cand[0])
    ax, ay = P.points[apex]
    sx, sy = P.points[start]
    rx, ry = float(sx - ax), float(sy - ay)

    def angles(pool):
        dx = P.fX[pool] - ax
        dy = P.fY[pool] - ay
        return np.arctan2(sgn * (rx * dy - ry * dx), rx * dx + ry * dy)

    pool = cand
    while len(pool) > 1:
        p = int(pool[int(np.argmin(angles(pool)))])
        # y is met before p iff sgn * cross(apex, y, p) > 0
        px, py = P.points[p]
        earlier = sgn * ((px - ax) * (P.Y[pool] - ay) - (py - ay) * (P.X[pool] - ax)) < 0
        if not earlier.any():
            return p
        pool = pool[earlier]
    return int(pool[0])


def _cone_interior(P: PointArrays, a: int, b: int, c: int, idx: np.ndarray) -> np.ndarray:
    """Points of idx strictly inside cone C(a; b, c) (angle bac below pi)."""
    s = _sign(cross(P.points[a], P.points[b], P.points[c]))
    m = (P.cr(a, b, idx) * s > 0) & (P.cr(a, c, idx) * s < 0)
    return idx[m]


def attack_point(points: Sequence[Point], a: int, b: int, c: int,
                 candidates: Sequence[int] | None = None, arrays: PointArrays | None = None) -> int:
    """First point met by the half-line at p_a turning from ray ab to ray ac.

    Only points strictly inside the cone count.  Raises PreconditionError
    when the cone interior is empty.
    """
    P = arrays or PointArrays(points)
    idx = np.arange(len(points)) if candidates is None else np.asarray(candidates, dtype=np.int64)
    idx = idx[(idx != a) & (idx != b) & (idx != c)]
    inner = _cone_interior(P, a, b, c, idx)
    if len(inner) == 0:
        raise PreconditionError("attack point of an empty cone")
    s = _sign(cross(points[a], points[b], points[c]))
    return _first_met(P, a, b, inner, s)  # type: ignore[return-value]


def _attack_or_end(P, a, b, c, idx) -> int:
    idx = idx[(idx != a) & (idx != b) & (idx != c)]
    inner = _cone_interior(P, a, b, c, idx)
    if len(inner) == 0:
        return c
    return _first_met(P, a, b, inner, _sign(cross(P.points[a], P.points[b], P.points[c])))  # type: ignore


def _wrap(P: PointArrays, v: int, cand: np.ndarray, orient: int) -> int | None:
    """p in cand with every candidate weakly left (orient=1) or right (-1) of v->p.

    None when no such point exists, i.e. v is inside the hull of cand.
    """
    cand = cand[cand != v]
    if len(cand) == 0:
        return None
    vx, vy = P.points[v]
    dx = P.fX[cand] - vx
    dy = P.fY[cand] - vy
    norm = np.hypot(dx, dy)
    rx, ry = (dx / norm).sum(), (dy / norm).sum()
    ang = np.arctan2(rx * dy - ry * dx, rx * dx + ry * dy) * orient
    order = np.argsort(ang, kind="stable")
    for k in order[:8]:
        p = int(cand[k])
        if (orient * P.cr(v, p, cand) >= 0).all():
            return p
    # exact linear scan; valid whenever the candidates span less than a half-turn
    pts = P.points
    best = int(cand[0])
    for x in cand.tolist():
        if orient * cross(pts[v], pts[best], pts[x]) < 0:
            best = x
    if (orient * P.cr(v, best, cand) >= 0).all():
        return best
    return None


def find_separator(P: PointArrays, first: np.ndarray, second: np.ndarray) -> tuple[int, int] | None:
    """A directed line (i, j) through two input points with ``first`` weakly left and ``second`` weakly right.

    Exists iff the two hulls have disjoint interiors.  Candidates are the hull
    edges of the smaller set and the tangents from its hull vertices to the
    larger set; one of them is a separating line whenever any exists.
    """
    swap = len(first) > len(second)
    small, big = (second, first) if swap else (first, second)
    hull = convex_hull(P.points, small.tolist())
    found = None
    for k in range(len(hull)):
        u, v = hull[k], hull[(k + 1) % len(hull)]
        if (P.cr(u, v, big) <= 0).all():
            found = (u, v)
            break
    if found is None:
        for x in hull:
            for orient in (1, -1):
                p = _wrap(P, x, big, orient)
                if p is None:
                    continue
                # big is weakly on the orient-left of x->p
                if (orient * P.cr(x, p, small) <= 0).all():
                    found = (p, x) if orient == 1 else (x, p)
                    break
            if found is not None:
                break
    if found is None:
        return None
    # found has small weakly left and big weakly right
    return (found[1], found[0]) if swap else found


@dataclass
class SplitCheck:
    ok: bool
    reason: str = ""
    separator: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_split(P: PointArrays, idx: np.ndarray, side_a: np.ndarray, side_b: np.ndarray,
                bridge: Sequence[int], r: int, s: int) -> SplitCheck:
    """Check every good-split invariant exactly."""
    if len(side_a) < s or len(side_b) < r:
        return SplitCheck(False, f"side sizes {len(side_a)}, {len(side_b)} below {s}, {r}")
    q = ccw_quad(bridge, P.points)
    if q is None:
        return SplitCheck(False, "bridge not convex")
    covered = np.union1d(np.union1d(side_a, side_b), np.asarray(q))
    if len(covered) != len(idx) or not np.array_equal(covered, np.sort(idx)):
        return SplitCheck(False, "sides and bridge do not cover the set")
    if P.inside_quad(q, idx).any():
        return SplitCheck(False, "bridge not empty")
    sep = find_separator(P, side_a, side_b)
    if sep is None:
        return SplitCheck(False, "side hulls overlap")
    qa = np.asarray(q)
    if find_separator(P, qa, side_a) is None:
        return SplitCheck(False, "bridge overlaps side a")
    if find_separator(P, qa, side_b) is None:
        return SplitCheck(False, "bridge overlaps side b")
    return SplitCheck(True, separator=sep)


def verify_good_split(points: Sequence[Point], split: GoodSplit, r: int, s: int,
                      indices: Sequence[int] | None = None) -> SplitCheck:
    P = PointArrays(points)
    idx = np.arange(len(points)) if indices is None else np.asarray(indices, dtype=np.int64)
    return check_split(P, idx, np.asarray(split.side_a), np.asarray(split.side_b), split.bridge, r, s)


def _angular_prefix(P: PointArrays, a1: int, rest: np.ndarray, k: int, orient: int) -> list[int]:
    """The k points of ``rest`` met first by a ray at a1 sweeping counterclockwise (orient=1) or clockwise."""
    pts = P.points
    before = cmp_to_key(lambda p, q: -_sign(orient * cross(pts[a1], pts[p], pts[q])))
    if len(rest) <= 4 * k + 16:
        return sorted(rest.tolist(), key=before)[:k]
    ax, ay = pts[a1]
    dx = P.fX[rest] - ax
    dy = P.fY[rest] - ay
    norm = np.hypot(dx, dy)
    rx, ry = (dx / norm).sum(), (dy / norm).sum()
    ang = np.arctan2(rx * dy - ry * dx, rx * dx + ry * dy) * orient
    m = min(len(rest) - 1, k + 8)
    near = rest[np.argpartition(ang, m)[: m + 1]]
    pref = sorted(near.tolist(), key=before)[:k]
    # exact: precisely k-1 points come before the k-th one
    last = pref[-1]
    if int((orient * P.cr(a1, last, rest) < 0).sum()) == k - 1:
        return pref
    return sorted(rest.tolist(), key=before)[:k]


def _lemma(P: PointArrays, idx: np.ndarray, r: int, s: int, a1: int, orient: int):
    """One run of the case tree; returns (case, bridge, side_a, side_b)."""
    pts = P.points
    rest = idx[idx != a1]
    pref = _angular_prefix(P, a1, rest, s + 1, orient)
    a2, b1, b2 = pref[s - 2], pref[s - 1], pref[s]
    A = np.array([a1] + pref[: s - 1], dtype=np.int64)
    in_a = np.isin(idx, A)
    B = idx[~in_a]

    def minus(arr, *drop):
        return arr[~np.isin(arr, drop)]

    def plus(arr, *add):
        return np.concatenate([arr, np.asarray(add, dtype=np.int64)])

    if not in_triangle(pts[b1], pts[a1], pts[a2], pts[b2]):
        return "a", (a1, a2, b1, b2), A, plus(minus(B, b1), a1)

    cone = _cone_interior(P, b1, b2, a2, idx)
    if len(cone):
        if np.isin(cone, A).any():
            hull = convex_hull(pts, A.tolist())
            a3 = hull[(hull.index(a2) - orient) % len(hull)]
            return "b-A", (b1, b2, a3, a2), A, plus(minus(B, b1), a1)
        b3 = _wrap(P, b2, plus(minus(B, b1, b2), a1), orient)
        if b3 is None:
            raise ContradictionError("no hull successor of b2")
        return "b-B", (b1, b2, b3, a2), A, plus(minus(B, b1), a1)

    a3 = _attack_or_end(P, b1, a1, a2, idx)
    t = _attack_or_end(P, b1, a1, b2, idx)
    if t != b2 and cross(pts[b1], pts[a3], pts[t]) * cross(pts[b1], pts[a3], pts[a1]) > 0:
        return "c", (b1, a3, a1, t), plus(minus(A, a1), b1), B

    up = -_sign(cross(pts[a2], pts[b2], pts[a1]))  # side of l(a2, b2) away from a1
    b_up = B[P.cr(a2, b2, B) * up > 0]
    if len(b_up) == 0:
        b3 = _attack_or_end(P, b1, b2, a1, idx)
        return "d", (b1, b3, b2, a2), plus(A, b1), plus(minus(B, b2), a1)

    a_up = A[P.cr(a2, b2, A) * up > 0]
    if len(a_up):
        # first points met turning away from the segment a2 b2 at either end
        b3 = _first_met(P, b2, a2, b_up, _sign(cross(pts[b2], pts[a2], pts[b_up[0]])))
        a4 = _first_met(P, a2, b2, a_up, _sign(cross(pts[a2], pts[b2], pts[a_up[0]])))
        return "e", (a2, b2, b3, a4), plus(A, b1), plus(B, a1)

    a4 = _attack_or_end(P, b1, a2, a3, idx)
    b4 = _attack_or_end(P, a2, b1, b2, idx)
    return ("f:b4=b2" if b4 == b2 else "f"), (b1, b4, a2, a4), plus(minus(A, a2), b1), plus(minus(B, b1), a2)


def good_split(points: Sequence[Point], r: int, s: int, indices: Sequence[int] | None = None,
               arrays: PointArrays | None = None) -> GoodSplit:
    """Sides with at least s and r points plus a 4-hole compatible with both.

    ``side_a`` is the side with at least s points.  Every point of the set is
    in a side or is a bridge vertex; bridge vertices may also sit in a side.
    """
    if r < 4 or s < 4:
        raise PreconditionError("good split needs r, s >= 4")
    P = arrays or PointArrays(points)
    idx = np.arange(len(points)) if indices is None else np.asarray(indices, dtype=np.int64)
    if len(idx) < r + s:
        raise PreconditionError(f"{len(idx)} points, need at least r + s = {r + s}")
    low = bottommost(points, idx.tolist()) if len(idx) < 64 else _lowest(P, idx)
    attempts = [(low, 1), (low, -1)]
    failures = []
    for k, (a1, orient) in enumerate(_variants(P, idx, attempts)):
        tag = "" if k == 0 else f"variant{k}:"
        try:
            case, bridge, side_a, side_b = _lemma(P, idx, r, s, a1, orient)
        except ContradictionError as exc:
            failures.append(str(exc))
            continue
        chk = check_split(P, idx, side_a, side_b, bridge, r, s)
        if chk:
            if k:
                log.warning("good split: case tree failed from the lowest point (%s); used pivot %d",
                            "; ".join(failures), a1)
            q = ccw_quad(bridge, points)
            return GoodSplit(np.unique(side_a), np.unique(side_b), q, chk.separator, tag + case)  # type: ignore
        failures.append(f"{case}: {chk.reason}")
    raise ContradictionError("no good split found: " + "; ".join(failures))


def _lowest(P: PointArrays, idx: np.ndarray) -> int:
    y = P.Y[idx]
    cand = idx[y == y.min()]
    return int(cand[np.argmin(P.X[cand])])


def _variants(P, idx, first):
    yield from first
    hull = convex_hull(P.points, idx.tolist())
    for v in hull:
        for orient in (1, -1):
            if (v, orient) not in first:
                yield v, orient
