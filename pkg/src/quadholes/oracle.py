"""Brute-force ground truth: 4-hole enumeration, exact maximum, and the verifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _vec
from .errors import PreconditionError
from .geom import (Point, Quad, ccw_quad, convex_polygons_compatible, degeneracy, find_degeneracy,
                   quad_is_hole)

DEFAULT_CAP = 11


@dataclass
class HoleCatalog:
    holes: list[Quad]
    conflict: list[int] = field(repr=False)  # bitmask of incompatible holes per hole
    n: int = 0

    def compatible(self, a: int, b: int) -> bool:
        return not (self.conflict[a] >> b) & 1


def enumerate_4holes(points: Sequence[Point], among: Sequence[int] | None = None) -> HoleCatalog:
    """Every 4-subset of ``among`` that is a hole with respect to ``among``."""
    idx = list(range(len(points))) if among is None else list(among)
    if len(idx) < 4:
        raise PreconditionError("need at least 4 points")
    holes: list[Quad] = []
    for q in combinations(idx, 4):
        if quad_is_hole(q, points, idx):
            holes.append(ccw_quad(q, points))  # type: ignore[arg-type]
    polys = [[points[i] for i in h] for h in holes]
    conflict = [0] * len(holes)
    for a in range(len(holes)):
        for b in range(a + 1, len(holes)):
            if not convex_polygons_compatible(polys[a], polys[b]):
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a
    for a in range(len(holes)):
        conflict[a] |= 1 << a
    return HoleCatalog(holes, conflict, len(idx))


def _max_clique(adj: list[int], candidates: int, need: int | None = None) -> list[int]:
    """Maximum clique by branch and bound with greedy-colouring bounds.

    With ``need`` set, stops as soon as a clique of that size is found.
    """
    best: list[int] = []

    def colour_sort(P: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        colours: list[int] = []
        c = 0
        while P:
            c += 1
            Q = P
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~low & ~adj[v]
                P &= ~low
                order.append(v)
                colours.append(c)
        return order, colours

    def expand(R: list[int], P: int) -> bool:
        nonlocal best
        order, colours = colour_sort(P)
        for k in range(len(order) - 1, -1, -1):
            if len(R) + colours[k] <= len(best):
                return False
            v = order[k]
            R.append(v)
            NP = P & adj[v]
            if NP:
                if expand(R, NP):
                    return True
            elif len(R) > len(best):
                best = list(R)
                if need is not None and len(best) >= need:
                    return True
            R.pop()
            P &= ~(1 << v)
        return False

    expand([], candidates)
    return best


def _compat_adjacency(cat: HoleCatalog) -> list[int]:
    full = (1 << len(cat.holes)) - 1
    return [full & ~c for c in cat.conflict]


def max_compatible(cat: HoleCatalog, cap: int | None = DEFAULT_CAP) -> tuple[int, list[Quad]]:
    """Exact maximum number of pairwise compatible holes, with a witness.

    This is a maximum independent set in the conflict graph.  Raises
    PreconditionError above ``cap`` points (pass ``cap=None`` to override).
    """
    if cap is not None and cat.n > cap:
        raise PreconditionError(f"{cat.n} points exceeds the oracle cap of {cap}; "
                                "use greedy_compatible for a lower bound")
    if not cat.holes:
        return 0, []
    adj = _compat_adjacency(cat)
    clique = _max_clique(adj, (1 << len(cat.holes)) - 1)
    return len(clique), [cat.holes[v] for v in sorted(clique)]


def greedy_compatible(cat: HoleCatalog) -> list[Quad]:
    """A maximal (not maximum) compatible set; labelled lower-bound mode."""
    chosen: list[int] = []
    blocked = 0
    for v in sorted(range(len(cat.holes)), key=lambda v: bin(cat.conflict[v]).count("1")):
        if not (blocked >> v) & 1:
            chosen.append(v)
            blocked |= cat.conflict[v]
    return [cat.holes[v] for v in chosen]


def find_compatible(points: Sequence[Point], k: int, among: Sequence[int] | None = None) -> list[Quad] | None:
    """Some k pairwise compatible holes of ``among``, or None if there are none."""
    cat = enumerate_4holes(points, among)
    if k <= 0:
        return []
    if not cat.holes:
        return None
    clique = _max_clique(_compat_adjacency(cat), (1 << len(cat.holes)) - 1, need=k)
    if len(clique) < k:
        return None
    return [cat.holes[v] for v in sorted(clique)[:k]]


@dataclass
class VerifyResult:
    ok: bool
    reason: str = ""
    where: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(points: Sequence[Point], quads: Iterable[Sequence[int]],
                    check_general_position: bool = True) -> VerifyResult:
    """Check general position, then each quad is a hole, then pairwise compatibility.

    Reports the first violation found in that order.
    """
    quads = [tuple(q) for q in quads]
    n = len(points)
    fast = n > 64 and _vec.int64_safe(points)
    if check_general_position:
        bad = _degeneracy(points, fast)
        if bad is not None:
            kind = "duplicate points" if len(bad) == 2 else "collinear points"
            return VerifyResult(False, kind, bad)
    ccw: list[Quad] = []
    for k, q in enumerate(quads):
        if len(q) != 4 or len(set(q)) != 4 or not all(0 <= i < n for i in q):
            return VerifyResult(False, "malformed quad", (k, q))
        c = ccw_quad(q, points)
        if c is None:
            return VerifyResult(False, "quad not in convex position", (k, q))
        ccw.append(c)
    if fast and quads:
        X, Y = _vec.coords(points)
        arr = np.asarray(ccw, dtype=np.int64)
        hit = _vec.first_nonempty_quad(arr, X, Y)
        if hit is not None:
            return VerifyResult(False, "quad not empty", (hit[0], quads[hit[0]], hit[1]))
        pair = _vec.first_incompatible_pair(arr, X, Y)
        if pair is not None:
            return VerifyResult(False, "quads overlap", pair)
        return VerifyResult(True)
    for k, q in enumerate(ccw):
        if not quad_is_hole(q, points):
            inside = _point_inside(q, points)
            return VerifyResult(False, "quad not empty", (k, quads[k], inside))
    pair = _first_overlap([[points[i] for i in q] for q in ccw])
    if pair is not None:
        return VerifyResult(False, "quads overlap", pair)
    return VerifyResult(True)


def _first_overlap(polys: list) -> tuple[int, int] | None:
    """Smallest (a, b) with overlapping interiors; sweeps by x so only box-overlapping pairs are tested."""
    boxes = [(min(p[0] for p in q), max(p[0] for p in q), min(p[1] for p in q), max(p[1] for p in q))
             for q in polys]
    order = sorted(range(len(polys)), key=lambda k: boxes[k][0])
    found = None
    for t, a in enumerate(order):
        _, ax1, ay0, ay1 = boxes[a]
        for b in order[t + 1:]:
            bx0, _, by0, by1 = boxes[b]
            if bx0 >= ax1:
                break
            if by0 >= ay1 or ay0 >= by1:
                continue
            if not convex_polygons_compatible(polys[a], polys[b]):
                pair = (min(a, b), max(a, b))
                if found is None or pair < found:
                    found = pair
    return found


def _degeneracy(points: Sequence[Point], fast: bool):
    return degeneracy(points) if fast else find_degeneracy(points)


def _point_inside(q: Quad, points: Sequence[Point]) -> int:
    from .geom import point_in_convex
    poly = [points[i] for i in q]
    for i, p in enumerate(points):
        if i not in q and point_in_convex(p, poly):
            return i
    return -1
