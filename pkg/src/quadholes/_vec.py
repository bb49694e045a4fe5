"""Vectorised exact predicates for large point sets.

All arithmetic stays in int64 and is exact as long as every coordinate is
strictly below 2^30 in magnitude: coordinate differences then fit in 31 bits,
products in 62 and a difference of two products in 63.  Callers must check
:func:`int64_safe` and use the pure-Python predicates otherwise.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .geom import Point

_SAFE = (1 << 30) - 1


def int64_safe(points: Sequence[Point]) -> bool:
    return all(-_SAFE <= x <= _SAFE and -_SAFE <= y <= _SAFE for x, y in points)


def coords(points: Sequence[Point]) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(points, dtype=np.int64).reshape(-1, 2)
    return arr[:, 0].copy(), arr[:, 1].copy()


def cross_many(ax, ay, bx, by, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """cross(a, b, P) for every P = (X[k], Y[k])."""
    return (bx - ax) * (Y - ay) - (by - ay) * (X - ax)


ANGLE_EPS = 1e-9


def parallel_pairs(dx: np.ndarray, dy: np.ndarray) -> list[tuple[int, int]]:
    """Pairs (a, b) of positions whose direction vectors are parallel.

    Directions are sorted by float angle modulo pi, so parallel vectors land
    within rounding error of each other.  Adjacent pairs are confirmed
    exactly; runs of nearly equal angles (and the wrap-around at 0 and pi)
    are checked pairwise, so every parallel class shows up through at least
    one reported pair even when distinct directions round together.
    """
    if len(dx) < 2:
        return []
    th = np.mod(np.arctan2(dy.astype(float), dx.astype(float)), np.pi)
    order = np.argsort(th, kind="stable")
    ts = th[order]
    a, b = order[:-1], order[1:]
    par = dx[a] * dy[b] - dy[a] * dx[b] == 0
    out = [(int(a[k]), int(b[k])) for k in np.nonzero(par)[0]]
    close = np.diff(ts) < ANGLE_EPS
    groups = []
    if (close & ~par).any():
        # maximal runs of close neighbours
        k = 0
        while k < len(close):
            if close[k]:
                e = k
                while e < len(close) and close[e]:
                    e += 1
                groups.append(order[k:e + 1])
                k = e
            else:
                k += 1
    groups.append(np.concatenate([order[ts < ANGLE_EPS], order[ts > np.pi - ANGLE_EPS]]))
    for g in groups:
        g = [int(v) for v in g]
        for u in range(len(g)):
            for v in range(u + 1, len(g)):
                p, q = g[u], g[v]
                if dx[p] * dy[q] - dy[p] * dx[q] == 0:
                    out.append((p, q))
    return out


def find_collinear(X: np.ndarray, Y: np.ndarray, block: int = 64) -> tuple[int, int, int] | None:
    """A collinear triple (i, j, k), or None.  Assumes distinct points.

    Rows are screened in blocks by sorting float angles: a row whose angles
    are all more than ANGLE_EPS apart (modulo pi) has no parallel pair.  Only
    rows that fail the screen go through the exact check.
    """
    n = len(X)
    Xf, Yf = X.astype(float), Y.astype(float)
    for s in range(0, n - 2, block):
        e = min(n - 2, s + block)
        th = np.mod(np.arctan2(Yf[None, s + 1:] - Yf[s:e, None], Xf[None, s + 1:] - Xf[s:e, None]), np.pi)
        # row r only looks at points after s + r
        th[np.arange(e - s)[:, None] >= np.arange(1, n - s)[None, :]] = np.nan
        th.sort(axis=1)
        with np.errstate(invalid="ignore"):
            close = (np.diff(th, axis=1) < ANGLE_EPS).any(axis=1)
            close |= (np.nanmin(th, axis=1) < ANGLE_EPS) & (np.nanmax(th, axis=1) > np.pi - ANGLE_EPS)
        for r in np.nonzero(close)[0]:
            i = s + int(r)
            pairs = parallel_pairs(X[i + 1:] - X[i], Y[i + 1:] - Y[i])
            if pairs:
                a, b = pairs[0]
                return (i, min(a, b) + i + 1, max(a, b) + i + 1)
    return None


def first_nonempty_quad(quads: np.ndarray, X: np.ndarray, Y: np.ndarray) -> tuple[int, int] | None:
    """(quad position, point index) of the first quad with a point strictly inside.

    ``quads`` is an (m, 4) array of counterclockwise vertex indices.
    """
    order = np.argsort(X, kind="stable")
    xs = X[order]
    for qi in range(len(quads)):
        q = quads[qi]
        qx = X[q]
        qy = Y[q]
        lo = np.searchsorted(xs, qx.min(), side="right")
        hi = np.searchsorted(xs, qx.max(), side="left")
        if hi <= lo:
            continue
        cand = order[lo:hi]
        cy = Y[cand]
        keep = (cy > qy.min()) & (cy < qy.max())
        cand = cand[keep]
        if len(cand) == 0:
            continue
        px = X[cand]
        py = Y[cand]
        inside = np.ones(len(cand), dtype=bool)
        for k in range(4):
            a = q[k]
            b = q[(k + 1) % 4]
            inside &= cross_many(X[a], Y[a], X[b], Y[b], px, py) > 0
        if inside.any():
            return qi, int(cand[np.argmax(inside)])
    return None


PROJECTIONS = ((1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1), (1, 4), (4, 1), (1, -4), (4, -1))


def first_incompatible_pair(quads: np.ndarray, X: np.ndarray, Y: np.ndarray,
                            chunk: int = 200_000) -> tuple[int, int] | None:
    """First pair (i, j), i < j, of counterclockwise quads whose interiors overlap."""
    m = len(quads)
    if m < 2:
        return None
    QX = X[quads]
    QY = Y[quads]
    minx, maxx = QX.min(1), QX.max(1)
    miny, maxy = QY.min(1), QY.max(1)
    order = np.argsort(minx, kind="stable")
    sminx = minx[order]
    pairs_i = []
    pairs_j = []
    for pos in range(m):
        i = order[pos]
        hi = np.searchsorted(sminx, maxx[i], side="left")
        if hi <= pos + 1:
            continue
        js = order[pos + 1:hi]
        js = js[(miny[js] < maxy[i]) & (maxy[js] > miny[i])]
        if len(js):
            pairs_i.append(np.full(len(js), i))
            pairs_j.append(js)
    if not pairs_i:
        return None
    I = np.concatenate(pairs_i)
    J = np.concatenate(pairs_j)
    # disjoint projections onto any direction separate the pair; thin quads
    # overlap in their boxes far more often than along these diagonals
    for ux, uy in PROJECTIONS:
        P = ux * QX + uy * QY
        pmin, pmax = P.min(1), P.max(1)
        keep = (pmin[J] < pmax[I]) & (pmin[I] < pmax[J])
        I, J = I[keep], J[keep]
    if not len(I):
        return None
    lo = np.minimum(I, J)
    hi = np.maximum(I, J)
    srt = np.lexsort((hi, lo))
    I, J = lo[srt], hi[srt]
    for s in range(0, len(I), chunk):
        a, b = I[s:s + chunk], J[s:s + chunk]
        sep = _separated(QX[a], QY[a], QX[b], QY[b]) | _separated(QX[b], QY[b], QX[a], QY[a])
        bad = np.nonzero(~sep)[0]
        if len(bad):
            return int(a[bad[0]]), int(b[bad[0]])
    return None


def _separated(AX, AY, BX, BY) -> np.ndarray:
    """Per row: some edge line of polygon A has all of B on its closed outer side."""
    out = np.zeros(len(AX), dtype=bool)
    for k in range(4):
        ax, ay = AX[:, k:k + 1], AY[:, k:k + 1]
        bx, by = AX[:, (k + 1) % 4:(k + 1) % 4 + 1], AY[:, (k + 1) % 4:(k + 1) % 4 + 1]
        c = (bx - ax) * (BY - ay) - (by - ay) * (BX - ax)
        out |= (c <= 0).all(axis=1)
    return out
