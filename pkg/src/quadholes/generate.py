"""Deterministic point-set generators (random, convex, clustered)."""
from __future__ import annotations

import math
import random

import numpy as np

from . import _vec
from .errors import PreconditionError
from .geom import Point, cross

DEFAULT_BBOX = 1 << 20
KINDS = ("random", "convex", "clustered")


def _offenders(pts: list[Point]) -> set[int]:
    """Indices whose removal leaves a general-position set (duplicates assumed absent).

    A collinear triple is seen from its smallest index as two equal
    directions; the later of the two is marked.
    """
    n = len(pts)
    if n <= 64 or not _vec.int64_safe(pts):
        bad: set[int] = set()
        for i in range(n):
            dirs: dict[tuple[int, int], int] = {}
            for j in range(i + 1, n):
                if j in bad or i in bad:
                    continue
                key = _direction(pts[i], pts[j])
                if key in dirs:
                    bad.add(j)
                else:
                    dirs[key] = j
        return bad
    X, Y = _vec.coords(pts)
    alive = np.ones(n, dtype=bool)
    for i in range(n - 2):
        if not alive[i]:
            continue
        js = np.nonzero(alive[i + 1:])[0] + i + 1
        pairs = _vec.parallel_pairs(X[js] - X[i], Y[js] - Y[i])
        if not pairs:
            continue
        groups: dict[tuple[int, int], list[int]] = {}
        for j in sorted({int(js[t]) for pair in pairs for t in pair}):
            groups.setdefault(_direction(pts[i], pts[j]), []).append(j)
        for g in groups.values():
            alive[g[1:]] = False
    return set(np.nonzero(~alive)[0].tolist())


def _direction(p: Point, q: Point) -> tuple[int, int]:
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = math.gcd(dx, dy)
    dx //= g
    dy //= g
    return (-dx, -dy) if dx < 0 or (dx == 0 and dy < 0) else (dx, dy)


def _fits(p: Point, others: list[Point]) -> bool:
    """p is new and not collinear with any two of ``others``."""
    seen = set()
    for q in others:
        if q == p:
            return False
        key = _direction(p, q)
        if key in seen:
            return False
        seen.add(key)
    return True


def _repair(pts: list[Point], draw, rng: random.Random, budget: int) -> list[Point]:
    """Redraw points until the set is in general position."""
    bad = _offenders(pts)
    keep = [p for k, p in enumerate(pts) if k not in bad]
    for k in sorted(bad):
        for _ in range(budget):
            p = draw()
            if _fits(p, keep):
                break
        else:
            raise PreconditionError("bounding box too small for a general-position set of this size")
        keep.append(p)
        pts[k] = p
    return pts


def _distinct(n: int, draw, bbox: int) -> list[Point]:
    seen: set[Point] = set()
    out: list[Point] = []
    tries = 0
    while len(out) < n:
        p = draw()
        tries += 1
        if tries > 20 * n + 1000:
            raise PreconditionError("bounding box too small for this many distinct points")
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def random_points(n: int, seed: int, bbox: int = DEFAULT_BBOX) -> list[Point]:
    rng = random.Random(seed)
    draw = lambda: (rng.randrange(bbox), rng.randrange(bbox))  # noqa: E731
    return _repair(_distinct(n, draw, bbox), draw, rng, 50 + n)


def clustered_points(n: int, seed: int, bbox: int = DEFAULT_BBOX) -> list[Point]:
    """Two clusters in the left and right 40% strips of the box."""
    rng = random.Random(seed)
    w = max(1, (2 * bbox) // 5)

    def draw_left():
        return (rng.randrange(w), rng.randrange(bbox))

    def draw_right():
        return (bbox - 1 - rng.randrange(w), rng.randrange(bbox))

    half = n // 2
    pts = _distinct(half, draw_left, bbox) + _distinct(n - half, draw_right, bbox)
    flip = [True]

    def draw():
        flip[0] = not flip[0]
        return draw_left() if flip[0] else draw_right()

    return _repair(pts, draw, rng, 50 + n)


def _chain_steps(vals: list[int], rng: random.Random) -> list[int]:
    lo, hi = vals[0], vals[-1]
    a, b = lo, lo
    steps = []
    for v in vals[1:-1]:
        if rng.random() < 0.5:
            steps.append(v - a)
            a = v
        else:
            steps.append(b - v)
            b = v
    steps.append(hi - a)
    steps.append(b - hi)
    return steps


def _separate(vecs: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """Sort edge vectors by angle, nudging parallel neighbours apart.

    A nudge moves one unit of x between two parallel vectors, which keeps
    the vector sum at zero.
    """
    for _ in range(len(vecs) + 10):
        vecs.sort(key=lambda v: math.atan2(v[1], v[0]))
        clash = False
        for k in range(len(vecs)):
            (a, b), (c, d) = vecs[k - 1], vecs[k]
            if a * d - b * c == 0 and a * c + b * d > 0:
                clash = True
                if abs(a) > 1:
                    vecs[k - 1], vecs[k] = (a - (a > 0) + (a < 0), b), (c + (a > 0) - (a < 0), d)
                elif abs(c) > 1:
                    vecs[k - 1], vecs[k] = (a + (c > 0) - (c < 0), b), (c - (c > 0) + (c < 0), d)
                else:
                    return None
        if not clash:
            return vecs
    return None


def convex_points(n: int, seed: int, bbox: int = DEFAULT_BBOX) -> list[Point]:
    """Strictly convex integer polygon by Valtr's random construction.

    Edge vectors are integer, so the vertices are exact; draws with parallel
    edges (which would create a straight angle) are rejected.
    """
    if n > bbox:
        raise PreconditionError("bounding box too small for a convex set of this size")
    rng = random.Random(seed)
    for _ in range(200):
        xs = sorted(rng.sample(range(bbox), n))
        ys = sorted(rng.sample(range(bbox), n))
        dx = _chain_steps(xs, rng)
        dy = _chain_steps(ys, rng)
        rng.shuffle(dy)
        vecs = _separate(list(zip(dx, dy)))
        if vecs is None:
            continue
        pts = []
        x = y = 0
        for vx, vy in vecs:
            pts.append((x, y))
            x += vx
            y += vy
        if any(cross(pts[k - 2], pts[k - 1], pts[k]) <= 0 for k in range(n)):
            continue
        mx = min(p[0] for p in pts)
        my = min(p[1] for p in pts)
        pts = [(px - mx, py - my) for px, py in pts]
        rng.shuffle(pts)
        return pts
    raise PreconditionError("could not draw a strictly convex set in this bounding box")


def generate(kind: str, n: int, seed: int, bbox: int = DEFAULT_BBOX) -> list[Point]:
    if n < 3:
        raise PreconditionError("n must be at least 3")
    if bbox < 2 or bbox > (1 << 30):
        raise PreconditionError("bbox must be in [2, 2^30]")
    if kind == "random":
        return random_points(n, seed, bbox)
    if kind == "convex":
        return convex_points(n, seed, bbox)
    if kind == "clustered":
        return clustered_points(n, seed, bbox)
    raise PreconditionError(f"unknown kind {kind!r}")
