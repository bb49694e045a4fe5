from itertools import combinations
from math import comb

import pytest

from conftest import random_gp
from quadholes.errors import PreconditionError
from quadholes.generate import generate
from quadholes.geom import quad_is_hole
from quadholes.oracle import enumerate_4holes, find_compatible, greedy_compatible, max_compatible, verify_solution


def test_convex_hexagon_has_every_subset_as_hole():
    pts = generate("convex", 6, 1)
    assert len(enumerate_4holes(pts).holes) == 15
    for n in (4, 7, 9):
        assert len(enumerate_4holes(generate("convex", n, n)).holes) == comb(n, 4)


def test_square_with_center():
    pts = [(0, 0), (10, 0), (10, 10), (0, 10), (4, 5)]
    holes = {frozenset(h) for h in enumerate_4holes(pts).holes}
    assert frozenset({0, 1, 2, 3}) not in holes
    for tri in combinations(range(4), 3):
        q = frozenset(tri) | {4}
        assert (q in holes) == quad_is_hole(tuple(q), pts)
    assert len(holes) == 2


def test_catalog_matches_brute_force(rng):
    for seed in range(30):
        pts = random_gp(8, seed, 100)
        got = {frozenset(h) for h in enumerate_4holes(pts).holes}
        want = {frozenset(q) for q in combinations(range(8), 4) if quad_is_hole(q, pts)}
        assert got == want


def test_five_sets_have_max_one():
    for seed in range(100):
        pts = random_gp(5, seed, 50)
        best, wit = max_compatible(enumerate_4holes(pts))
        assert best == 1 and verify_solution(pts, wit)


@pytest.mark.parametrize("n", range(4, 11))
def test_convex_position_max(n):
    pts = generate("convex", n, 3 * n)
    best, wit = max_compatible(enumerate_4holes(pts))
    assert best == n // 2 - 1 and verify_solution(pts, wit)


def test_upper_bound_and_small_theorems():
    for seed in range(20):
        for n, floor in ((9, 3), (11, 4)):
            pts = random_gp(n, 50 * seed + n)
            best, wit = max_compatible(enumerate_4holes(pts))
            assert floor <= best <= n - 3
            assert verify_solution(pts, wit)


def test_cap():
    cat = enumerate_4holes(random_gp(12, 1))
    with pytest.raises(PreconditionError):
        max_compatible(cat)
    best, _ = max_compatible(cat, cap=None)
    greedy = greedy_compatible(cat)
    assert best >= len(greedy) >= 1


def test_find_compatible():
    pts = random_gp(7, 2)
    got = find_compatible(pts, 2)
    assert got is not None and len(got) == 2 and verify_solution(pts, got)
    assert find_compatible(generate("convex", 5, 1), 2) is None


def test_verify_reports_first_violation():
    pts = [(0, 0), (10, 0), (10, 10), (0, 10), (4, 5), (20, 5)]
    res = verify_solution(pts, [(0, 1, 2, 3)])
    assert not res and res.reason == "quad not empty"
    pts2 = [(0, 0), (10, 0), (10, 10), (0, 10), (5, -3), (12, 5), (5, 13)]
    res = verify_solution(pts2, [(0, 1, 2, 3), (4, 5, 6, 0)])
    assert not res and res.reason == "quads overlap" and res.where == (0, 1)
    res = verify_solution([(0, 0), (1, 1), (2, 2), (3, 0)], [])
    assert not res and res.reason == "collinear points"
    res = verify_solution(pts2, [(0, 1, 2)])
    assert not res and res.reason == "malformed quad"


def test_verify_fast_path_agrees():
    pts = generate("random", 200, 3)
    from quadholes.solver import solve
    quads = solve(pts).quads
    assert verify_solution(pts, quads)
    bad = list(quads) + [quads[0]]
    res = verify_solution(pts, bad)
    assert not res and res.reason == "quads overlap"
