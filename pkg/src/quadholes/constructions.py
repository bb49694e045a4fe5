"""Reusable hole constructions over a radial order.

Positions are radial labels: position ``i`` means point ``R.labels[i]``.
Every function returns quads as counterclockwise tuples of point indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContradictionError, PreconditionError
from .geom import Point, Quad, ccw_quad, convex_hull, cross, in_triangle, quad_is_hole, same_side
from .radial import RadialOrder, SignatureSequence, radial_order, signature_sequence


@dataclass
class ConstructionResult:
    quads: list[Quad]
    consumed: tuple[int, int]
    case: str
    forbidden_minus: frozenset[int] = frozenset()
    forbidden_plus: frozenset[int] = frozenset()


def as_quad(labels: Sequence[int], points: Sequence[Point]) -> Quad:
    q = ccw_quad(labels, points)
    if q is None:
        raise ContradictionError(f"points {tuple(labels)} are not in convex position")
    return q


def fan_partition(poly: Sequence[int], points: Sequence[Point]) -> list[Quad]:
    """Split a convex polygon with an even number of vertices (given in boundary order) into quads."""
    if len(poly) % 2 or len(poly) < 4:
        raise PreconditionError("fan partition needs an even vertex count >= 4")
    v0 = poly[0]
    return [as_quad((v0, poly[t], poly[t + 1], poly[t + 2]), points)
            for t in range(1, len(poly) - 2, 2)]


def _signs(R: RadialOrder, points, sig):
    return sig if sig is not None else signature_sequence(R, points)


def quads_from_plus_run(i: int, j: int, R: RadialOrder, points: Sequence[Point],
                        sig: SignatureSequence | None = None) -> ConstructionResult:
    """k holes partitioning the hull of p_{i-1}..p_{j+1} for an all-plus block of length 2k."""
    sig = _signs(R, points, sig)
    length = j - i + 1
    if length <= 0 or length % 2:
        raise PreconditionError(f"plus block [{i}, {j}] must have positive even length")
    if any(sig.at(t) != "+" for t in range(i, j + 1)):
        raise PreconditionError(f"block [{i}, {j}] is not all '+'")
    lab = R.labels
    quads = fan_partition([lab[t] for t in range(i - 1, j + 2)], points)
    return ConstructionResult(quads, (i - 1, j + 1), "obs1")


def quads_from_minus_run(i: int, j: int, R: RadialOrder, points: Sequence[Point],
                         sig: SignatureSequence | None = None) -> ConstructionResult:
    """k+1 fan holes at p0 for an all-minus block of length 2k+1."""
    sig = _signs(R, points, sig)
    length = j - i + 1
    if length <= 0 or length % 2 == 0:
        raise PreconditionError(f"minus block [{i}, {j}] must have odd length")
    if any(sig.at(t) != "-" for t in range(i, j + 1)):
        raise PreconditionError(f"block [{i}, {j}] is not all '-'")
    lab = R.labels
    quads = [as_quad((lab[0], lab[t - 1], lab[t], lab[t + 1]), points) for t in range(i, j + 1, 2)]
    return ConstructionResult(quads, (i - 1, j + 1), "obs2")


def quads_even_minus(i: int, k: int, R: RadialOrder, points: Sequence[Point],
                     sig: SignatureSequence | None = None, first: str = "left") -> ConstructionResult:
    """k+1 compatible holes for an all-minus block at positions i+1..i+2k.

    Uses p0 and p_{i-1}..p_{i+2k+2}.  The case tag is one of ``a``, ``bJ``,
    ``a_rev``, ``bJ_rev`` or ``c``; the forbidden sets say where the neighbouring
    observations may no longer be applied.  ``first`` picks which outer point
    (p_{i-1} or p_{i+2k+2}) is examined first.
    """
    sig = _signs(R, points, sig)
    lab = R.labels
    n = len(lab)
    if k < 1:
        raise PreconditionError("even-minus block needs k >= 1")
    lo, hi = i - 1, i + 2 * k + 2
    if lo < 1 or hi > n - 1:
        raise PreconditionError(f"positions {lo}..{hi} are not all available")
    if any(sig.at(t) != "-" for t in range(i + 1, i + 2 * k + 1)):
        raise PreconditionError(f"block [{i + 1}, {i + 2 * k}] is not all '-'")

    P = lambda t: points[lab[t]]  # noqa: E731
    p0 = P(0)

    def below(t: int, j: int) -> bool:
        # strictly on p0's side of the line through p_{i+j} and p_{i+2k+1-j}
        return same_side(P(t), p0, P(i + j), P(i + 2 * k + 1 - j))

    top = [lab[t] for t in range(i, i + 2 * k + 2)]

    def left_case():
        if below(lo, 0):
            quads = [as_quad((lab[0], lab[lo], lab[i], lab[i + 2 * k + 1]), points)]
            quads += fan_partition(top, points)
            return quads, "a", frozenset({lo}), frozenset()
        for j in range(1, k + 1):
            if below(lo, j):
                quads = [as_quad((lab[lo], lab[i + j], lab[i + 2 * k + 1 - j], lab[i + j - 1]), points)]
                if j < k:
                    quads += fan_partition([lab[t] for t in range(i + j, i + 2 * k + 2 - j)], points)
                lower = [lab[0]] + [lab[t] for t in range(i, i + j)] + \
                        [lab[t] for t in range(i + 2 * k + 1 - j, i + 2 * k + 2)]
                quads += fan_partition(lower, points)
                return quads, f"b{j}", frozenset(), frozenset({lo})
        return None

    def right_case():
        if below(hi, 0):
            quads = [as_quad((lab[0], lab[i], lab[i + 2 * k + 1], lab[hi]), points)]
            quads += fan_partition(top, points)
            return quads, "a_rev", frozenset({hi}), frozenset()
        for j in range(1, k + 1):
            if below(hi, j):
                quads = [as_quad((lab[hi], lab[i + 2 * k + 1 - j], lab[i + j], lab[i + 2 * k + 2 - j]), points)]
                if j < k:
                    quads += fan_partition([lab[t] for t in range(i + j, i + 2 * k + 2 - j)], points)
                lower = [lab[0]] + [lab[t] for t in range(i, i + j + 1)] + \
                        [lab[t] for t in range(i + 2 * k + 2 - j, i + 2 * k + 2)]
                quads += fan_partition(lower, points)
                return quads, f"b{j}_rev", frozenset(), frozenset({hi})
        return None

    order = (left_case, right_case) if first == "left" else (right_case, left_case)
    found = order[0]() or order[1]()
    if found is None:
        quads = [as_quad((lab[lo], lab[hi], lab[i + k + 1], lab[i + k]), points)]
        quads += fan_partition(top, points)
        found = (quads, "c", frozenset(), frozenset({lo, hi}))
    quads, case, fmin, fplus = found
    if len(quads) != k + 1:
        raise ContradictionError(f"even-minus case {case} produced {len(quads)} quads")
    return ConstructionResult(quads, (lo, hi), case, fmin, fplus)


def quads_six_set(points: Sequence[Point], indices: Sequence[int] | None = None) -> list[Quad]:
    """Two compatible holes in a 6-set whose hull has 5 or 6 vertices."""
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) != 6:
        raise PreconditionError("six-set lemma needs exactly six points")
    hull = convex_hull(points, idx)
    if len(hull) == 6:
        return [as_quad(hull[0:4], points), as_quad((hull[0], hull[3], hull[4], hull[5]), points)]
    if len(hull) != 5:
        raise PreconditionError(f"hull has {len(hull)} vertices; the six-set lemma needs 5 or 6")
    (x,) = [v for v in idx if v not in hull]
    h = hull
    for t in range(5):
        if in_triangle(points[x], points[h[t]], points[h[(t + 1) % 5]], points[h[(t + 3) % 5]]):
            return [as_quad((x, h[(t + 1) % 5], h[(t + 2) % 5], h[(t + 3) % 5]), points),
                    as_quad((x, h[(t + 3) % 5], h[(t + 4) % 5], h[t]), points)]
    raise ContradictionError("interior point not covered by the five triangles")


def cone_partition_solver(points: Sequence[Point], group: int = 5) -> list[Quad]:
    """Baseline: cut the radial order into wedges and solve each exhaustively.

    ``group=3`` gives floor((n-2)/3) holes from 5-point wedges, ``group=5``
    gives 2*floor((n-2)/5) from 7-point wedges.  Consecutive wedges share
    their boundary ray.
    """
    from .small import solve5, solve7

    if group not in (3, 5):
        raise PreconditionError("group must be 3 or 5")
    n = len(points)
    if n < group + 2:
        raise PreconditionError(f"need at least {group + 2} points")
    R = radial_order(points)
    lab = R.labels
    out: list[Quad] = []
    for t in range((n - 2) // group):
        wedge = [lab[0]] + [lab[group * t + u] for u in range(1, group + 2)]
        sub = [points[v] for v in wedge]
        sol = solve5(sub) if group == 3 else solve7(sub)
        out.extend(tuple(wedge[v] for v in q) for q in sol.quads)
    return [as_quad(q, points) for q in out]


def _corner_region(R: RadialOrder, points: Sequence[Point], end: str):
    lab = R.labels
    if end == "start":
        u, v = points[lab[1]], points[lab[2]]
    else:
        u, v = points[lab[-1]], points[lab[-2]]
    return points[lab[0]], u, v


def corner_region_clear(quads: Sequence[Quad], R: RadialOrder, points: Sequence[Point],
                        end: str = "start") -> bool:
    """True iff no quad interior meets the open part of cone C(p0; p1, p2) above l_{1,2}.

    With ``end="end"`` the region is the mirror one at p_{n-2}, p_{n-1}.
    The region is an unbounded convex polygon with vertices u = p1, v = p2
    and rays from u and v pointing away from p0, so two convex sets with
    disjoint interiors are separated by an edge line of one of them.
    """
    p0, u, v = _corner_region(R, points, end)
    # each boundary line as (a, b, s): the region is where s * cross(a, b, x) > 0
    s_v = 1 if cross(p0, u, v) > 0 else -1
    bounds = ((p0, u, s_v), (p0, v, -s_v), (u, v, -(1 if cross(u, v, p0) > 0 else -1)))
    du = (u[0] - p0[0], u[1] - p0[1])
    dv = (v[0] - p0[0], v[1] - p0[1])
    for q in quads:
        poly = [points[t] for t in as_quad(q, points)]
        if any(all(s * cross(a, b, x) <= 0 for x in poly) for a, b, s in bounds):
            continue
        separated = False
        for k in range(4):
            a, b = poly[k], poly[(k + 1) % 4]
            ex, ey = b[0] - a[0], b[1] - a[1]
            # ccw quad: outside of edge ab is cross(a, b, x) <= 0
            if (cross(a, b, u) <= 0 and cross(a, b, v) <= 0
                    and ex * du[1] - ey * du[0] <= 0 and ex * dv[1] - ey * dv[0] <= 0):
                separated = True
                break
        if not separated:
            return False
    return True


def holes_all_valid(quads: Sequence[Quad], points: Sequence[Point], among: Sequence[int]) -> bool:
    return all(quad_is_hole(q, points, among) for q in quads)
