"""Certified solvers for 5-, 7-, 9- and 11-point sets.

The 9- and 11-point solvers follow a case analysis on the signature word.
Every branch is certified (holes among the subset, pairwise compatible,
enough of them); when a branch fails, the solver logs it and falls back to
an exhaustive search, tagging the result ``fallback:<branch>``.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from . import oracle
from .constructions import (ConstructionResult, as_quad, corner_region_clear, quads_even_minus,
                            quads_from_minus_run, quads_from_plus_run, quads_six_set)
from .errors import ContradictionError, PreconditionError
from .geom import Point, Quad, ccw_quad, convex_polygons_compatible, cross, quad_is_hole, same_side
from .radial import RadialOrder, SignatureSequence, radial_order, signature_sequence

log = logging.getLogger(__name__)

FLOOR = {5: 1, 7: 2, 9: 3, 11: 4}

# branch tag -> number of fallbacks taken; read by the stress harness
fallback_counts: Counter = Counter()


@dataclass
class SmallSolution:
    quads: list[Quad]
    method: str
    corners_clear: bool = False

    @property
    def fell_back(self) -> bool:
        return self.method.startswith("fallback:")


class BranchFailure(Exception):
    pass


def wedge_reduce(points: Sequence[Point], m: int, indices: Sequence[int] | None = None) -> list[int]:
    """Indices of p0, p1, ..., p_{m-1}: the bottommost point and a radial prefix.

    Every dropped point lies beyond the ray p0 p_{m-1}, outside the hull of
    the kept ones, so a hole of the reduced set is a hole of the full set.
    """
    idx = list(range(len(points))) if indices is None else list(indices)
    if not 5 <= m < len(idx):
        raise PreconditionError(f"cannot reduce {len(idx)} points to {m}")
    return list(radial_order(points, idx).labels[:m])


def certified(quads: Sequence[Quad], points: Sequence[Point], among: Sequence[int], need: int) -> bool:
    if len(quads) < need or len(set(quads)) != len(quads):
        return False
    for q in quads:
        if not quad_is_hole(q, points, among):
            return False
    polys = [[points[i] for i in q] for q in quads]
    for a, b in combinations(range(len(polys)), 2):
        if not convex_polygons_compatible(polys[a], polys[b]):
            return False
    return True


def _exhaustive(points, among, need, tag) -> list[Quad]:
    found = oracle.find_compatible(points, need, among)
    if found is None:
        raise ContradictionError(f"no {need} compatible holes among {len(among)} points ({tag})")
    return found


def solve5(points: Sequence[Point], indices: Sequence[int] | None = None) -> SmallSolution:
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) != 5:
        raise PreconditionError("solve5 needs exactly 5 points")
    for q in combinations(idx, 4):
        if quad_is_hole(q, points, idx):
            return SmallSolution([ccw_quad(q, points)], "exhaustive")
    raise ContradictionError("5-set without a 4-hole")


def solve7(points: Sequence[Point], indices: Sequence[int] | None = None) -> SmallSolution:
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) != 7:
        raise PreconditionError("solve7 needs exactly 7 points")
    holes = [ccw_quad(q, points) for q in combinations(idx, 4) if quad_is_hole(q, points, idx)]
    polys = [[points[i] for i in h] for h in holes]
    for a in range(len(holes)):
        for b in range(a + 1, len(holes)):
            if convex_polygons_compatible(polys[a], polys[b]):
                return SmallSolution([holes[a], holes[b]], "exhaustive")  # type: ignore[list-item]
    raise ContradictionError("7-set without two compatible holes")


class Frame:
    """One radial labelling of a 9- or 11-set plus the quads collected so far."""

    def __init__(self, points: Sequence[Point], R: RadialOrder, sig: SignatureSequence, tag: str = ""):
        self.points = points
        self.R = R
        self.lab = R.labels
        self.sig = sig
        self.n = len(self.lab)
        self.quads: list[Quad] = []
        self.tag = tag
        self.obs1: list[tuple[int, int]] = []
        self.obs2: list[tuple[int, int]] = []
        self.forbidden_minus: set[int] = set()
        self.forbidden_plus: set[int] = set()
        self.active = self

    def mirror(self) -> "Frame":
        return Frame(self.points, self.R.reversed(), self.sig.reversed(), self.tag)

    def P(self, t: int) -> Point:
        return self.points[self.lab[t]]

    def q(self, *pos: int) -> Quad:
        return as_quad([self.lab[t] for t in pos], self.points)

    def below(self, t: int, a: int, b: int) -> bool:
        """p_t strictly on p0's side of l_{a,b}."""
        return same_side(self.P(t), self.P(0), self.P(a), self.P(b))

    def above(self, t: int, a: int, b: int) -> bool:
        pa, pb = self.P(a), self.P(b)
        return cross(pa, pb, self.P(t)) * cross(pa, pb, self.P(0)) < 0

    def branch(self, name: str) -> None:
        self.tag += ":" + name

    def take(self, *pos_quads: tuple[int, ...]) -> None:
        self.quads.extend(self.q(*p) for p in pos_quads)

    def use_obs1(self, i: int, j: int) -> None:
        self.obs1.append((i, j))
        self.quads.extend(quads_from_plus_run(i, j, self.R, self.points, self.sig).quads)

    def use_obs2(self, i: int, j: int) -> None:
        self.obs2.append((i, j))
        self.quads.extend(quads_from_minus_run(i, j, self.R, self.points, self.sig).quads)

    def lemma(self, i: int, k: int, first: str = "left") -> ConstructionResult:
        res = quads_even_minus(i, k, self.R, self.points, self.sig, first)
        self.forbidden_minus |= res.forbidden_minus
        self.forbidden_plus |= res.forbidden_plus
        self.quads.extend(res.quads)
        self.branch("lemma-" + res.case)
        return res

    def six(self, *pos: int) -> None:
        self.quads.extend(quads_six_set(self.points, [self.lab[t] for t in pos]))

    def check_assertions(self) -> None:
        for i, j in self.obs1:
            if any(i <= t <= j for t in self.forbidden_plus):
                raise BranchFailure(f"plus block [{i}, {j}] is forbidden after the even-minus lemma")
        for i, j in self.obs2:
            if any(i <= t <= j for t in self.forbidden_minus):
                raise BranchFailure(f"minus block [{i}, {j}] is forbidden after the even-minus lemma")

    def pool(self) -> list[Quad]:
        """Candidate holes for completing a branch: chain quads and p0 fans."""
        lab, pts, n = self.lab, self.points, self.n
        cands = [(a, a + 1, a + 2, a + 3) for a in range(1, n - 3)]
        cands += [(0, a, b, c) for a, b, c in combinations(range(1, n), 3)]
        out = []
        for pos in cands:
            q = ccw_quad([lab[t] for t in pos], pts)
            if q is not None:
                out.append(q)
        return out

    def complete(self, need: int) -> None:
        """Add quads from :meth:`pool` until ``need`` compatible holes are collected."""
        pts, among = self.points, self.lab
        have = list(self.quads)
        polys = [[pts[i] for i in q] for q in have]
        cands = []
        for q in self.pool():
            if q in have or not quad_is_hole(q, pts, among):
                continue
            poly = [pts[i] for i in q]
            if all(convex_polygons_compatible(poly, p) for p in polys):
                cands.append((q, poly))

        def dfs(start: int, chosen: list[int]) -> list[int] | None:
            if len(have) + len(chosen) >= need:
                return chosen
            for k in range(start, len(cands)):
                if all(convex_polygons_compatible(cands[k][1], cands[c][1]) for c in chosen):
                    got = dfs(k + 1, chosen + [k])
                    if got is not None:
                        return got
            return None

        got = dfs(0, [])
        if got is None:
            raise BranchFailure("completion pool exhausted")
        self.quads.extend(cands[k][0] for k in got)
        self.branch("completed")


# --- signature bookkeeping -------------------------------------------------------

def run_count(word: str) -> int:
    """Holes available from plus and minus runs alone."""
    total = 0
    for r in SignatureSequence(word).runs:
        total += r.length // 2 if r.sign == "+" else (r.length + 1) // 2
    return total


def apply_runs(F: Frame) -> None:
    for r in F.sig.runs:
        if r.sign == "+" and r.length >= 2:
            F.use_obs1(r.start, r.start + 2 * (r.length // 2) - 1)
        elif r.sign == "-":
            odd = r.length if r.length % 2 else r.length - 1
            F.use_obs2(r.start, r.start + odd - 1)


# --- 9-sets ------------------------------------------------------------------------

def _h9_pmmppp(F: Frame) -> None:
    # +--+|++
    res = F.lemma(2, 1)
    F.take((1, 6, 7, 8) if res.case == "c" else (4, 6, 7, 8))


def _h9_pmmmmp(F: Frame) -> None:
    F.lemma(2, 2)


def _h9_pmmpmm(F: Frame) -> None:
    # +--+|-|-
    F.lemma(2, 1)
    F.use_obs2(7, 7)


def _h9_pmmpmp(F: Frame) -> None:
    if F.below(1, 2, 5):
        F.branch("p1<l25")
        F.take((0, 1, 2, 5), (2, 3, 4, 5), (0, 5, 6, 7))
    elif F.below(1, 3, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2), (0, 2, 4, 5), (0, 5, 6, 7))
    elif F.above(6, 3, 4):
        F.branch("p6>l34")
        F.take((1, 6, 4, 3), (2, 3, 4, 5), (0, 5, 6, 7))
    elif F.above(6, 2, 5):
        F.branch("p6>l25")
        F.take((0, 2, 3, 5), (3, 4, 6, 5), (0, 5, 6, 7))
    elif F.above(8, 5, 6):
        F.branch("p8>l56")
        F.take((4, 8, 6, 5), (2, 3, 4, 5), (0, 5, 6, 7))
    elif F.above(8, 5, 7):
        F.branch("p8>l57")
        F.take((5, 6, 8, 7), (2, 3, 4, 5), (0, 2, 5, 7))
    else:
        F.branch("p8<l57")
        F.take((2, 3, 4, 5), (2, 5, 6, 7), (0, 2, 7, 8))


HANDLERS9: dict[str, Callable[[Frame], None]] = {
    "+--+++": _h9_pmmppp,
    "+----+": _h9_pmmmmp,
    "+--+--": _h9_pmmpmm,
    "+--+-+": _h9_pmmpmp,
}


# --- 11-sets -----------------------------------------------------------------------

def _h11_pmmppppp(F: Frame) -> None:
    # +--+|++++
    res = F.lemma(2, 1)
    if res.case == "c":
        F.take((1, 6, 7, 8), (1, 8, 9, 10))
    else:
        F.take((4, 6, 7, 8), (4, 8, 9, 10))


def _h11_pppmmppp(F: Frame) -> None:
    # ++|+--+|++
    res = F.lemma(4, 1)
    if res.case == "c":
        F.take((1, 2, 3, 8), (1, 8, 9, 10))
    else:
        F.take((1, 2, 3, 5), (6, 8, 9, 10))


def _h11_pmpppmmp(F: Frame) -> None:
    # +|-|++|+--+
    F.use_obs2(3, 3)
    res = F.lemma(6, 1)
    F.take((3, 4, 5, 10) if res.case == "c" else (3, 4, 5, 7))


def _h11_pmmmmppp(F: Frame) -> None:
    # +----+|++
    F.lemma(2, 2)
    F.use_obs1(8, 9)


def _h11_pmmmmmmp(F: Frame) -> None:
    F.lemma(2, 3)


def _h11_pmpmmppp(F: Frame) -> None:
    if F.below(8, 4, 7):
        F.branch("p8<l47")
        F.take((0, 2, 3, 4), (4, 5, 6, 7), (6, 9, 8, 7), (0, 4, 7, 8))
    else:
        F.branch("six")
        F.six(5, 6, 7, 8, 9, 10)
        F.take((0, 2, 3, 4), (0, 4, 5, 7))


def _h11_pmmpmppp(F: Frame) -> None:
    tail = (7, 10, 9, 8)
    if F.below(1, 2, 5):
        F.branch("p1<l25")
        F.take((0, 1, 2, 5), (2, 3, 4, 5), (0, 5, 6, 7), tail)
    elif F.below(1, 3, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2), (0, 2, 4, 5), (0, 5, 6, 7), tail)
    elif F.above(6, 3, 4):
        F.branch("p6>l34")
        F.take((1, 6, 4, 3), (2, 3, 4, 5), (0, 5, 6, 7), tail)
    elif F.above(6, 2, 5):
        F.branch("p6>l25")
        F.take((6, 5, 3, 4), (0, 2, 3, 5), (0, 5, 6, 7), tail)
    elif F.below(8, 5, 7):
        F.branch("p8<l57")
        F.take((2, 3, 4, 5), (2, 5, 6, 7), (0, 2, 7, 8), tail)
    else:
        F.branch("six")
        F.six(5, 6, 7, 8, 9, 10)
        F.take((0, 2, 5, 7), (2, 3, 4, 5))


def _h11_pmmppmmp(F: Frame) -> None:
    if F.below(1, 2, 5):
        F.branch("p1<l25")
        F.take((0, 1, 2, 5), (2, 3, 4, 5))
    elif F.below(1, 3, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2), (0, 2, 4, 5))
    elif F.below(10, 6, 9):
        F.branch("p10<l69")
        F.take((0, 6, 9, 10), (6, 7, 8, 9))
    elif F.below(10, 7, 8):
        F.branch("p10<l78")
        F.take((10, 8, 7, 9), (0, 6, 7, 9))
    elif F.above(7, 3, 4):
        F.branch("p7>l34")
        F.take((1, 7, 4, 3))
    elif F.above(8, 3, 4):
        F.branch("p8>l34")
        F.take((1, 8, 4, 3))
    elif F.above(4, 7, 8):
        F.branch("p4>l78")
        F.take((10, 4, 7, 8))
    elif F.above(3, 7, 8):
        F.branch("p3>l78")
        F.take((10, 3, 7, 8))
    elif F.below(2, 5, 6):
        F.branch("p2<l56")
        F.take((0, 2, 5, 6))
    elif F.below(9, 5, 6):
        F.branch("p9<l56")
        F.take((0, 5, 6, 9))
    else:
        F.branch("six")
        F.six(3, 4, 5, 6, 7, 8)
        F.take((0, 2, 3, 5), (0, 6, 8, 9))
    if len(F.quads) < 4:
        F.complete(4)


def _h11_pmmpmpmp(F: Frame) -> None:
    base = ((0, 5, 6, 7), (0, 7, 8, 9))
    if F.below(1, 2, 5):
        F.branch("p1<l25")
        F.take((0, 1, 2, 5), (2, 3, 4, 5), *base)
    elif F.below(1, 3, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2), (0, 2, 4, 5), *base)
    elif F.above(6, 3, 4):
        F.branch("p6>l34")
        F.take((1, 6, 4, 3), (2, 3, 4, 5), *base)
    elif F.above(6, 2, 5):
        F.branch("p6>l25")
        F.take((6, 5, 3, 4), (0, 2, 3, 5), *base)
    elif F.above(8, 5, 6):
        F.branch("p8>l56")
        F.take((2, 3, 4, 5), (4, 8, 6, 5), *base)
    elif F.above(8, 5, 7):
        F.branch("p8>l57")
        F.take((0, 2, 5, 7), (2, 3, 4, 5), (0, 7, 8, 9), (5, 6, 8, 7))
    elif F.below(10, 7, 9):
        F.branch("p10<l79")
        F.take((0, 2, 9, 10), (2, 3, 4, 5), (2, 5, 6, 7), (2, 7, 8, 9))
    elif F.below(10, 7, 8):
        F.branch("p10<l78")
        F.take((7, 8, 10, 9), (2, 3, 4, 5), (2, 5, 6, 7), (0, 2, 7, 9))
    else:
        F.branch("p10>l78")
        F.take((6, 10, 8, 7), (2, 3, 4, 5), (0, 5, 6, 7), (0, 7, 8, 9))


def _pmpmmpmp_tail(F: Frame) -> None:
    # p8 (and so p9) below l47
    if F.below(10, 7, 9):
        F.branch("p10<l79")
        F.take((0, 2, 3, 4), (4, 5, 6, 7), (4, 7, 8, 9), (0, 4, 9, 10))
    elif F.below(10, 7, 8):
        F.branch("p10<l78")
        F.take((7, 8, 10, 9), (4, 5, 6, 7), (0, 4, 7, 9), (0, 2, 3, 4))
    else:
        F.branch("p10>l78")
        F.take((0, 2, 3, 4), (4, 5, 6, 7), (0, 7, 8, 9), (6, 10, 8, 7))


def _h11_pmpmmpmp(F: Frame) -> None:
    if F.below(8, 4, 7):
        F.branch("p8<l47")
        _pmpmmpmp_tail(F)
    elif F.below(3, 4, 7):
        F.branch("p3<l47:mirror")
        M = F.mirror()
        _pmpmmpmp_tail(M)
        F.tag = M.tag
        F.quads.extend(M.quads)
    else:
        F.branch("lemma")
        F.lemma(4, 1)
        F.use_obs2(3, 3)
        F.use_obs2(8, 8)


def _h11_pmpmmmmp(F: Frame) -> None:
    lines = ((4, 9), (5, 8), (6, 7))
    if any(F.below(10, a, b) for a, b in lines):
        F.branch("p10<L")
        F.lemma(4, 2, first="right")
        F.use_obs2(3, 3)
    elif F.above(3, 4, 9):
        F.branch("p3>l49")
        F.lemma(4, 2)
        F.use_obs2(3, 3)
    elif F.above(1, 3, 4):
        F.branch("p1>l34")
        F.take((1, 5, 4, 3))
        F.complete(4)
    elif F.above(1, 2, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2), (0, 2, 4, 9), (4, 5, 8, 9), (5, 6, 7, 8))
    else:
        # p1 can also fall below l24, where p1p3p4p2 is not convex
        F.branch("p1<l24")
        F.take((0, 1, 2, 4))
        F.complete(4)


def _h11_pmmpmmmp(F: Frame) -> None:
    if F.below(1, 2, 5):
        F.branch("p1<l25")
        F.take((2, 3, 4, 5), (0, 1, 2, 5), (0, 5, 6, 7), (0, 7, 8, 9))
        return
    if F.below(1, 3, 4):
        F.branch("p1<l34")
        F.take((1, 3, 4, 2))
    elif F.above(1, 4, 5):
        F.branch("p1>l45")
        F.take((1, 6, 5, 4))
    elif F.above(1, 3, 5):
        F.branch("p1>l35")
        F.take((1, 4, 5, 3))
    elif F.below(1, 2, 9):
        F.branch("p1<l29")
        F.take((0, 1, 2, 9), (2, 3, 4, 5), (5, 6, 7, 8), (2, 5, 8, 9))
    elif F.above(6, 3, 4):
        F.branch("p6>l34")
        F.take((1, 6, 4, 3))
    elif F.above(6, 3, 5):
        F.branch("p6>l35")
        F.take((3, 4, 6, 5))
    elif F.above(4, 5, 7):
        F.branch("p4>l57")
        F.take((4, 6, 7, 5), (2, 3, 4, 5), (5, 7, 8, 9), (0, 2, 5, 9))
    else:
        F.branch("p4<l57")
        F.take((5, 6, 7, 8), (3, 4, 5, 8), (1, 3, 8, 2), (0, 2, 8, 9))
    if len(F.quads) < 4:
        F.complete(4)


HANDLERS11: dict[str, Callable[[Frame], None]] = {
    "+--+++++": _h11_pmmppppp,
    "+++--+++": _h11_pppmmppp,
    "+-+++--+": _h11_pmpppmmp,
    "+----+++": _h11_pmmmmppp,
    "+------+": _h11_pmmmmmmp,
    "+-+--+++": _h11_pmpmmppp,
    "+--+-+++": _h11_pmmpmppp,
    "+--++--+": _h11_pmmppmmp,
    "+--+-+-+": _h11_pmmpmpmp,
    "+-+--+-+": _h11_pmpmmpmp,
    "+-+----+": _h11_pmpmmmmp,
    "+--+---+": _h11_pmmpmmmp,
}


# --- drivers -------------------------------------------------------------------------

def _dispatch(F: Frame, table: dict, need: int) -> Frame:
    """Run the run-count rule or the matching handler; returns the frame that holds the quads."""
    word = F.sig.signs
    if run_count(word) >= need:
        F.branch("runs")
        apply_runs(F)
        return F
    if word in table:
        F.branch(word)
        table[word](F)
        return F
    if word[::-1] in table:
        M = F.mirror()
        F.active = M
        M.branch("rev" + word[::-1])
        table[word[::-1]](M)
        return M
    raise BranchFailure(f"no rule for signature {word}")


def _corners_clear(quads: Sequence[Quad], R: RadialOrder, sig: SignatureSequence, points) -> bool:
    """Exact check of the corner-region property at each end where the word has a '-'."""
    ends = [e for e, s in (("start", sig.signs[0]), ("end", sig.signs[-1])) if s == "-"]
    return bool(ends) and all(corner_region_clear(quads, R, points, e) for e in ends)


def _finish(points, R: RadialOrder, need: int, run: Callable[[], tuple[list[Quad], str]]) -> SmallSolution:
    among = R.labels
    tag = "?"
    try:
        quads, tag = run()
        if certified(quads, points, among, need):
            return SmallSolution(quads[:need] if len(quads) > need else quads, tag)
        reason = "branch output not certified"
    except (BranchFailure, ContradictionError, PreconditionError) as exc:
        tag = getattr(exc, "tag", tag)
        reason = str(exc)
    fallback_counts[tag] += 1
    log.warning("case branch %s failed (%s); using exhaustive search", tag, reason)
    return SmallSolution(_exhaustive(points, among, need, tag), "fallback:" + tag)


def _run_frame(points, R: RadialOrder, sig: SignatureSequence, table, need, prefix):
    F = Frame(points, R, sig, prefix)
    try:
        G = _dispatch(F, table, need)
        G.check_assertions()
    except (BranchFailure, ContradictionError, PreconditionError) as exc:
        exc.tag = F.active.tag  # type: ignore[attr-defined]
        raise
    return G.quads, G.tag


def _solve9_order(points, R: RadialOrder) -> SmallSolution:
    sig = signature_sequence(R, points)
    sol = _finish(points, R, 3, lambda: _run_frame(points, R, sig, HANDLERS9, 3, "9"))
    sol.corners_clear = _corners_clear(sol.quads, R, sig, points)
    return sol


def _solve11_order(points, R: RadialOrder) -> SmallSolution:
    sig = signature_sequence(R, points)
    word = sig.signs

    def run():
        for frame_R, w, name in ((R, word, ""), (R.reversed(), word[::-1], "rev")):
            if w[0] == "-":
                sub = _solve9_order(points, frame_R.without(1, 2))
                lab = frame_R.labels
                extra = as_quad((lab[0], lab[1], lab[2], lab[3]), points)
                return sub.quads + [extra], f"11{name}:drop12>{sub.method}"
        for frame_R, w, name in ((R, word, ""), (R.reversed(), word[::-1], "rev")):
            if w.startswith("++-"):
                sub_R = frame_R.without(1, 2)
                sub = _solve9_order(points, sub_R)
                tag = f"11{name}:drop12-corner>{sub.method}"
                if not corner_region_clear(sub.quads, sub_R, points, "start"):
                    err = BranchFailure("corner region of the 9-subset is not clear")
                    err.tag = tag  # type: ignore[attr-defined]
                    raise err
                lab = frame_R.labels
                extra = as_quad((lab[1], lab[2], lab[3], lab[4]), points)
                return sub.quads + [extra], tag
        return _run_frame(points, R, sig, HANDLERS11, 4, "11")

    sol = _finish(points, R, 4, run)
    sol.corners_clear = _corners_clear(sol.quads, R, sig, points)
    return sol


def _order(points, indices, size) -> RadialOrder:
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) != size:
        raise PreconditionError(f"solve{size} needs exactly {size} points, got {len(idx)}")
    return radial_order(points, idx)


def solve9(points: Sequence[Point], indices: Sequence[int] | None = None) -> SmallSolution:
    """Three compatible holes in a 9-point set (``indices`` picks a subset of ``points``)."""
    return _solve9_order(points, _order(points, indices, 9))


def solve11(points: Sequence[Point], indices: Sequence[int] | None = None) -> SmallSolution:
    """Four compatible holes in an 11-point set."""
    return _solve11_order(points, _order(points, indices, 11))


SOLVERS = {5: solve5, 7: solve7, 9: solve9, 11: solve11}


def solve_small(points: Sequence[Point], indices: Sequence[int] | None = None) -> SmallSolution:
    """Wedge-reduce to the largest base size that fits and run its solver."""
    idx = list(range(len(points))) if indices is None else list(indices)
    n = len(idx)
    if n < 5:
        return SmallSolution([], "trivial")
    size = max(s for s in FLOOR if s <= n)
    if n > size:
        idx = wedge_reduce(points, size, idx)
    return SOLVERS[size](points, idx)
