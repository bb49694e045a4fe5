import math
import random
from collections import Counter

import numpy as np
import pytest

from conftest import brute_cross, random_gp
from fixtures import TWO_CLUSTERS
from quadholes.errors import PreconditionError
from quadholes.generate import generate
from quadholes.geom import convex_hull, convex_polygons_compatible, quad_is_hole
from quadholes.partition import PointArrays, attack_point, find_separator, good_split, verify_good_split


def independent_check(pts, sp, r, s):
    A, B = [int(v) for v in sp.side_a], [int(v) for v in sp.side_b]
    assert len(A) >= s and len(B) >= r
    assert set(A) | set(B) | set(sp.bridge) == set(range(len(pts)))
    assert quad_is_hole(sp.bridge, pts)
    ha = [pts[i] for i in convex_hull(pts, A)]
    hb = [pts[i] for i in convex_hull(pts, B)]
    q = [pts[i] for i in sp.bridge]
    assert convex_polygons_compatible(ha, hb)
    assert convex_polygons_compatible(q, ha) and convex_polygons_compatible(q, hb)
    i, j = sp.separator
    assert all(brute_cross(pts[i], pts[j], pts[k]) >= 0 for k in A)
    assert all(brute_cross(pts[i], pts[j], pts[k]) <= 0 for k in B)


def brute_attack(pts, a, b, c):
    """Interior points of cone C(a; b, c) sorted by float angle from ray ab."""
    def ang(p):
        ux, uy = pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]
        vx, vy = p[0] - pts[a][0], p[1] - pts[a][1]
        return abs(math.atan2(ux * vy - uy * vx, ux * vx + uy * vy))
    s = 1 if brute_cross(pts[a], pts[b], pts[c]) > 0 else -1
    inner = [k for k in range(len(pts)) if k not in (a, b, c)
             and s * brute_cross(pts[a], pts[b], pts[k]) > 0 and s * brute_cross(pts[a], pts[c], pts[k]) < 0]
    return sorted(inner, key=lambda k: ang(pts[k]))


def test_attack_point_examples():
    pts = [(0, 0), (10, 0), (0, 10), (5, 3)]
    assert attack_point(pts, 0, 1, 2) == 3
    pts = [(0, 0), (10, 0), (0, 10), (5, 3), (3, 5)]
    assert attack_point(pts, 0, 1, 2) == 3
    assert attack_point(pts, 0, 2, 1) == 4
    with pytest.raises(PreconditionError):
        attack_point([(0, 0), (10, 0), (0, 10), (-5, 5)], 0, 1, 2)


def test_attack_point_matches_angle_sort():
    rng = random.Random(3)
    hits = 0
    for seed in range(500):
        pts = random_gp(15, seed, 10_000)
        a, b, c = rng.sample(range(15), 3)
        expect = brute_attack(pts, a, b, c)
        if expect:
            assert attack_point(pts, a, b, c) == expect[0]
            hits += 1
    assert hits > 100


def test_good_split_fourteen():
    pts = random_gp(14, 21)
    sp = good_split(pts, 7, 7)
    assert verify_good_split(pts, sp, 7, 7)
    independent_check(pts, sp, 7, 7)


def test_good_split_two_clusters():
    pts = TWO_CLUSTERS
    sp = good_split(pts, 4, 4)
    independent_check(pts, sp, 4, 4)
    left = {0, 1, 2, 3}
    # the bridge uses points from both clusters and the separator crosses the gap
    assert set(sp.bridge) & left and set(sp.bridge) - left
    i, j = sp.separator
    assert {i, j} & left and {i, j} - left


def test_good_split_random_invariants_and_case_coverage():
    rng = random.Random(8)
    cases = Counter()
    for seed in range(1500):
        r, s = rng.randint(4, 20), rng.randint(4, 20)
        pts = generate("random", r + s, seed, bbox=1 << 12)
        sp = good_split(pts, r, s)
        independent_check(pts, sp, r, s)
        cases[sp.case] += 1
    assert set(cases) >= {"a", "b-A", "b-B", "c", "d", "e", "f", "f:b4=b2"}, cases


def test_good_split_accepts_larger_sets():
    pts = random_gp(30, 5)
    sp = good_split(pts, 8, 11)
    independent_check(pts, sp, 8, 11)


def test_good_split_preconditions():
    pts = random_gp(10, 1)
    with pytest.raises(PreconditionError):
        good_split(pts, 3, 7)
    with pytest.raises(PreconditionError):
        good_split(pts, 6, 6)


def test_find_separator_detects_overlap():
    pts = [(0, 0), (10, 0), (10, 10), (0, 10), (5, -5), (15, 5), (5, 15), (-5, 5)]
    P = PointArrays(pts)
    assert find_separator(P, np.array([0, 1, 2, 3]), np.array([4, 5, 6, 7])) is None
    pts2 = [(0, 0), (10, 0), (10, 10), (0, 10), (20, 0), (30, 0), (30, 10), (20, 10)]
    sep = find_separator(PointArrays(pts2), np.array([0, 1, 2, 3]), np.array([4, 5, 6, 7]))
    assert sep is not None


def test_large_coordinates_use_exact_objects():
    base = generate("random", 16, 4, bbox=1 << 29)
    mx = min(x for x, _ in base)
    # scaling by 2 keeps general position; the smallest x lands exactly on -2^30
    pts = [(2 * (x - mx) - (1 << 30), 2 * y) for x, y in base]
    assert PointArrays(pts).X.dtype == object
    sp = good_split(pts, 5, 11)
    independent_check(pts, sp, 5, 11)
