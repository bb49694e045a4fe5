import math
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


def brute_cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_general_position(pts):
    if len(set(pts)) != len(pts):
        return False
    n = len(pts)
    return all(brute_cross(pts[i], pts[j], pts[k]) != 0
               for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))


def angle_order(pts):
    """Radial order by float angles: bottommost first, then clockwise from the negative x-axis."""
    o = min(range(len(pts)), key=lambda i: (pts[i][1], pts[i][0]))
    rest = [i for i in range(len(pts)) if i != o]
    rest.sort(key=lambda i: -math.atan2(pts[i][1] - pts[o][1], pts[i][0] - pts[o][0]))
    return [o] + rest


def random_gp(n, seed, box=1 << 20):
    rng = random.Random(seed)
    while True:
        pts = list({(rng.randrange(box), rng.randrange(box)) for _ in range(n)})
        if len(pts) == n and brute_general_position(pts):
            rng.shuffle(pts)
            return pts


@st.composite
def gp_sets(draw, min_size=4, max_size=12, box=1000):
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2 ** 32))
    return random_gp(n, seed, box)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[k])
