import math
import random

import pytest
from hypothesis import given

from conftest import brute_general_position, gp_sets
from quadholes.errors import CoordinateRangeError, DegenerateInputError
from quadholes.geom import (COORD_LIMIT, brute_force_hull, ccw_quad, convex_hull, degeneracy, find_degeneracy,
                            is_general_position, orientation, quad_is_hole, quads_compatible, validate_points)


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (1, 0), (2, 0)) == 0
    assert orientation((0, 0), (0, 1), (1, 0)) == -1


def test_orientation_exact_at_coordinate_limit():
    big = COORD_LIMIT
    assert orientation((-big, -big), (big, big - 1), (big, big)) == 1
    assert orientation((-big, -big), (0, 0), (big, big)) == 0


def test_hull_examples():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert convex_hull(square) == [0, 1, 2, 3]
    with_center = [(0, 0), (3, 0), (3, 3), (0, 3), (1, 1)]
    assert set(convex_hull(with_center)) == {0, 1, 2, 3}
    assert set(convex_hull(with_center)) == brute_force_hull(with_center)
    pent = [(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)]
    assert sorted(convex_hull(pent)) == [0, 1, 2, 3, 4]


@given(gp_sets(3, 14))
def test_hull_matches_brute_force(pts):
    hull = convex_hull(pts)
    assert set(hull) == brute_force_hull(pts)
    m = len(hull)
    assert all(orientation(pts[hull[k]], pts[hull[(k + 1) % m]], pts[hull[(k + 2) % m]]) > 0 for k in range(m))


def test_general_position_examples():
    assert is_general_position([(0, 0), (1, 0), (0, 1)])
    assert not is_general_position([(0, 0), (1, 1), (2, 2)])
    assert not is_general_position([(0, 0), (0, 0), (1, 2)])


@given(gp_sets(3, 10, box=8))
def test_degeneracy_matches_brute_force(pts):
    assert (find_degeneracy(pts) is None) == brute_general_position(pts)


def test_vectorised_degeneracy_agrees(rng):
    for _ in range(20):
        pts = list({(rng.randrange(40), rng.randrange(40)) for _ in range(90)})
        assert (degeneracy(pts) is None) == (find_degeneracy(pts) is None)


def test_validate_points():
    with pytest.raises(CoordinateRangeError):
        validate_points([(0, 0), (COORD_LIMIT + 1, 0), (0, 1)])
    with pytest.raises(DegenerateInputError):
        validate_points([(0, 0), (1, 1), (2, 2)])


def test_quad_is_hole_examples():
    sq = [(0, 0), (10, 0), (10, 10), (0, 10)]
    assert quad_is_hole((0, 1, 2, 3), sq)
    assert not quad_is_hole((0, 1, 2, 3), sq + [(4, 5)])
    five = [(0, 0), (10, 0), (10, 10), (0, 10), (4, 5)]
    assert quad_is_hole((0, 1, 2, 4), five)
    # non-convex quadruple is never a hole
    assert not quad_is_hole((0, 1, 2, 4), [(0, 0), (10, 0), (10, 10), (0, 10), (8, 3)])


def test_ccw_quad_normalises():
    sq = [(0, 0), (10, 0), (10, 10), (0, 10)]
    assert ccw_quad((2, 0, 3, 1), sq) == (0, 1, 2, 3)
    assert ccw_quad((0, 1, 2, 4), sq + [(5, 5)]) is None
    assert ccw_quad((3, 2, 1, 0), sq) == (0, 1, 2, 3)


def test_compatible_examples():
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (2, 0), (2, 1)]
    assert not quads_compatible((0, 1, 2, 3), (0, 1, 2, 3), pts)
    assert quads_compatible((0, 1, 2, 3), (1, 4, 5, 2), pts)


@given(gp_sets(5, 9))
def test_quads_sharing_three_vertices_conflict(pts):
    from itertools import combinations
    quads = [q for q in combinations(range(len(pts)), 4) if ccw_quad(q, pts)]
    for a, b in combinations(quads, 2):
        if len(set(a) & set(b)) == 3:
            assert not quads_compatible(a, b, pts)


def _bezout(x, y):
    if y == 0:
        return 1, 0
    q, r = divmod(x, y)
    s, t = _bezout(y, r)
    return t, s - q * t


def test_parallel_pairs_survive_float_angle_ties():
    # near the coordinate limit, a non-parallel direction can share the float
    # angle of two parallel ones and sit between them after sorting
    import numpy as np
    from quadholes._vec import parallel_pairs

    rng = random.Random(2)
    checked = 0
    while checked < 300:
        a, b = rng.randrange(1 << 26, 1 << 28), rng.randrange(1 << 26, 1 << 28)
        if math.gcd(a, b) != 1:
            continue
        u, v = _bezout(a, b)
        vecs = [(a, b), (a - v, b + u), (2 * a, 2 * b), (2 * a - v, 2 * b + u), (1, 5), (7, -3)]
        rng.shuffle(vecs)
        dx = np.array([p[0] for p in vecs], dtype=np.int64)
        dy = np.array([p[1] for p in vecs], dtype=np.int64)
        found = {frozenset(p) for p in parallel_pairs(dx, dy)}
        want = {frozenset((i, j)) for i in range(6) for j in range(i + 1, 6)
                if vecs[i][0] * vecs[j][1] == vecs[i][1] * vecs[j][0]}
        assert found == want
        checked += 1
