"""Top-level recursion: peel 11-point sides off with good splits."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ContradictionError, PreconditionError
from .geom import Point, Quad, validate_points
from .oracle import verify_solution
from .partition import PointArrays, good_split
from .small import FLOOR, solve7, solve11, solve_small, wedge_reduce


def lower_bound_formula(n: int) -> int:
    return max(0, 5 * n // 11 - 1)


@dataclass
class Solution:
    quads: list[Quad]
    floor: int
    trace: list[str] = field(default_factory=list)


def _solve_side(points, idx: list[int], size: int, solver) -> tuple[list[Quad], str]:
    if len(idx) > size:
        idx = wedge_reduce(points, size, idx)
    sol = solver(points, idx)
    return list(sol.quads), sol.method


def _split_text(sp, n: int) -> str:
    return f"split n={n} case={sp.case} sep={sp.separator[0]},{sp.separator[1]} bridge={','.join(map(str, sp.bridge))}"


def solve(points: Sequence[Point], check_input: bool = True) -> Solution:
    """At least floor(5n/11)-1 pairwise compatible 4-holes, verified before returning."""
    n = len(points)
    if n < 3:
        raise PreconditionError("need at least 3 points")
    if check_input:
        validate_points(points)
    floor = lower_bound_formula(n)
    quads: list[Quad] = []
    trace: list[str] = []
    arrays = PointArrays(points) if n >= 14 else None
    rest = np.arange(n)
    while len(rest) >= 15:
        m = len(rest)
        sp = good_split(points, m - 11, 11, rest, arrays)
        trace.append(_split_text(sp, m))
        side, method = _solve_side(points, sp.side_a.tolist(), 11, solve11)
        trace.append(f"solve11 {method}")
        quads.append(sp.bridge)
        quads.extend(side)
        rest = sp.side_b
    m = len(rest)
    if m == 14:
        sp = good_split(points, 7, 7, rest, arrays)
        trace.append(_split_text(sp, m))
        quads.append(sp.bridge)
        for s in (sp.side_a, sp.side_b):
            side, method = _solve_side(points, s.tolist(), 7, solve7)
            trace.append(f"solve7 {method}")
            quads.extend(side)
    elif m >= 5:
        sol = solve_small(points, rest.tolist())
        size = max(s for s in FLOOR if s <= m)
        trace.append(f"solve{size} {sol.method}")
        quads.extend(sol.quads)
    res = verify_solution(points, quads, check_general_position=False)
    if not res:
        raise ContradictionError(f"pooled solution failed verification: {res.reason} {res.where}")
    if len(quads) < floor:
        raise ContradictionError(f"{len(quads)} quads, below the floor {floor}")
    return Solution(quads, floor, trace)
