"""Radial ordering around the bottommost point and the +/- signature word."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import groupby
from typing import NamedTuple, Sequence

from .errors import PreconditionError
from .geom import Point, cross, in_triangle


def bottommost(points: Sequence[Point], indices: Sequence[int] | None = None) -> int:
    """Index of the point with the smallest y, ties broken by smallest x."""
    idx = range(len(points)) if indices is None else indices
    return min(idx, key=lambda i: (points[i][1], points[i][0]))


@dataclass(frozen=True)
class RadialOrder:
    """``origin`` is p0; ``order`` lists p1..p_{n-1} clockwise from the negative x-axis."""

    origin: int
    order: tuple[int, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        """Point indices by radial label: ``labels[i]`` is the index of p_i."""
        return (self.origin,) + self.order

    def __len__(self) -> int:
        return len(self.order) + 1

    def reversed(self) -> "RadialOrder":
        # Relabelling p_i -> p_{n-i} is what a mirror image of the set sees.
        return RadialOrder(self.origin, self.order[::-1])

    def without(self, *positions: int) -> "RadialOrder":
        drop = set(positions)
        if 0 in drop:
            raise PreconditionError("cannot drop the origin")
        return RadialOrder(self.origin, tuple(p for k, p in enumerate(self.order, 1) if k not in drop))

    def prefix(self, m: int) -> "RadialOrder":
        """p0 together with p1..p_{m-1}."""
        return RadialOrder(self.origin, self.order[: m - 1])


def radial_order(points: Sequence[Point], indices: Sequence[int] | None = None) -> RadialOrder:
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) < 2:
        raise PreconditionError("radial order needs at least two points")
    o = bottommost(points, idx)
    p0 = points[o]

    def clockwise_first(a: int, b: int) -> int:
        d = cross(p0, points[a], points[b])
        return 1 if d > 0 else -1 if d < 0 else 0

    rest = sorted((i for i in idx if i != o), key=cmp_to_key(clockwise_first))
    return RadialOrder(o, tuple(rest))


class Run(NamedTuple):
    sign: str
    start: int  # radial position of the first entry
    length: int

    @property
    def stop(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class SignatureSequence:
    """Signs of p_2..p_{n-2}; ``signs[k]`` belongs to radial position ``k + 2``."""

    signs: str

    def at(self, i: int) -> str:
        if not 2 <= i <= len(self.signs) + 1:
            raise IndexError(f"no signature at radial position {i}")
        return self.signs[i - 2]

    @property
    def runs(self) -> tuple[Run, ...]:
        out = []
        pos = 2
        for sign, grp in groupby(self.signs):
            length = sum(1 for _ in grp)
            out.append(Run(sign, pos, length))
            pos += length
        return tuple(out)

    def reversed(self) -> "SignatureSequence":
        return SignatureSequence(self.signs[::-1])

    def __str__(self) -> str:
        return self.signs


def signature_sequence(R: RadialOrder, points: Sequence[Point]) -> SignatureSequence:
    """'+' at p_i iff p_i lies strictly inside triangle p0 p_{i-1} p_{i+1}."""
    lab = R.labels
    n = len(lab)
    if n < 4:
        raise PreconditionError("signature sequence needs at least 4 points")
    p0 = points[lab[0]]
    signs = "".join(
        "+" if in_triangle(points[lab[i]], p0, points[lab[i - 1]], points[lab[i + 1]]) else "-"
        for i in range(2, n - 1)
    )
    return SignatureSequence(signs)


def minus_count(delta: SignatureSequence | str) -> int:
    return str(delta).count("-")
