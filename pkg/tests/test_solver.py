import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gp_sets, random_gp
from quadholes.errors import DegenerateInputError, PreconditionError
from quadholes.generate import generate
from quadholes.oracle import enumerate_4holes, max_compatible, verify_solution
from quadholes.solver import lower_bound_formula, solve


def test_lower_bound_formula():
    assert lower_bound_formula(11) == 4
    assert lower_bound_formula(22) == 9
    assert lower_bound_formula(3) == 0
    assert lower_bound_formula(14) == 5
    assert lower_bound_formula(25) == 10


def test_tiny_sets():
    assert solve([(0, 0), (5, 1), (2, 7)]).quads == []
    assert solve([(0, 0), (5, 1), (2, 7), (6, 6)]).quads == []
    with pytest.raises(PreconditionError):
        solve([(0, 0), (1, 1)])
    with pytest.raises(DegenerateInputError):
        solve([(0, 0), (1, 1), (2, 2), (5, 0)])


def test_fourteen_gives_five():
    for seed in range(50):
        pts = random_gp(14, seed)
        sol = solve(pts)
        assert len(sol.quads) == 5 and verify_solution(pts, sol.quads)
        assert sol.trace[0].startswith("split n=14")


def test_twenty_five():
    pts = random_gp(25, 99)
    sol = solve(pts)
    assert sol.floor == 10 and len(sol.quads) >= 10 and verify_solution(pts, sol.quads)


@given(gp_sets(3, 40, box=1 << 16))
def test_random_sets_meet_floor(pts):
    sol = solve(pts)
    assert len(sol.quads) >= lower_bound_formula(len(pts))
    assert verify_solution(pts, sol.quads)


@settings(max_examples=15)
@given(st.sampled_from(["random", "convex", "clustered"]), st.integers(15, 150), st.integers(0, 10 ** 6))
def test_generated_sets_meet_floor(kind, n, seed):
    pts = generate(kind, n, seed)
    sol = solve(pts)
    assert len(sol.quads) >= sol.floor == lower_bound_formula(n)
    assert verify_solution(pts, sol.quads)


def test_oracle_dominates_solver():
    for n in range(5, 12):
        for seed in range(5):
            pts = random_gp(n, 31 * n + seed)
            best, _ = max_compatible(enumerate_4holes(pts))
            assert best >= len(solve(pts).quads)


def test_deterministic():
    pts = generate("random", 300, 5)
    a, b = solve(pts), solve(list(pts))
    assert a.quads == b.quads and a.trace == b.trace


def test_large_coordinates():
    base = generate("random", 40, 2, bbox=1 << 29)
    mx = min(x for x, _ in base)
    pts = [(2 * (x - mx) - (1 << 30), 2 * y) for x, y in base]
    sol = solve(pts)
    assert len(sol.quads) >= sol.floor and verify_solution(pts, sol.quads)
