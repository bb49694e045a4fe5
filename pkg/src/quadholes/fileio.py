"""Text formats for point sets and solutions."""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParseError
from .geom import COORD_LIMIT, Point, Quad, degeneracy

_INT = re.compile(r"[+-]?\d+\Z")
SOLUTION_MAGIC = "quadholes-solution 1"


def _int(tok: str, line: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"not an integer: {tok!r}", line)
    return int(tok)


def format_points(points: Sequence[Point]) -> str:
    return "".join([f"{len(points)}\n"] + [f"{x} {y}\n" for x, y in points])


def parse_points(text: str, check_general_position: bool = True) -> list[Point]:
    """Parse ``n`` then n lines ``x y``; line numbers in errors are 1-based."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty file", 1)
    n = _int(lines[0].strip(), 1)
    if n < 0:
        raise ParseError("negative point count", 1)
    if len(lines) - 1 != n:
        raise ParseError(f"header says {n} points, found {len(lines) - 1} lines", min(len(lines), n + 1) + 1)
    points: list[Point] = []
    for k, raw in enumerate(lines[1:], start=2):
        toks = raw.split(" ")
        if len(toks) != 2:
            raise ParseError("expected two integers separated by one space", k)
        x, y = _int(toks[0], k), _int(toks[1], k)
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise ParseError(f"coordinate magnitude exceeds 2^30: {raw!r}", k)
        points.append((x, y))
    if check_general_position:
        bad = degeneracy(points)
        if bad is not None:
            kind = "duplicate point" if len(bad) == 2 else "collinear triple"
            raise ParseError(f"{kind} at point indices {bad}", max(bad) + 2)
    return points


def read_points(path: str) -> list[Point]:
    with open(path, encoding="ascii", errors="replace") as f:
        return parse_points(f.read())


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(text)


def checksum(points: Sequence[Point]) -> str:
    return "sha256:" + hashlib.sha256(format_points(points).encode()).hexdigest()


@dataclass
class SolutionFile:
    checksum: str
    n: int
    floor: int
    quads: list[Quad]
    trace: list[str] = field(default_factory=list)


def format_solution(sol: SolutionFile) -> str:
    out = [SOLUTION_MAGIC, f"checksum {sol.checksum}", f"n {sol.n}", f"floor {sol.floor}",
           f"quads {len(sol.quads)}"]
    out += [" ".join(map(str, q)) for q in sol.quads]
    out.append(f"trace {len(sol.trace)}")
    out += [t.replace("\n", " ") for t in sol.trace]
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> SolutionFile:
    lines = text.splitlines()
    pos = 0

    def take(key: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"missing '{key}' line", pos + 1)
        head, _, rest = lines[pos].partition(" ")
        if head != key:
            raise ParseError(f"expected '{key}'", pos + 1)
        pos += 1
        return rest

    if not lines or lines[0] != SOLUTION_MAGIC:
        raise ParseError("not a solution file", 1)
    pos = 1
    chk = take("checksum")
    n = _int(take("n"), pos)
    floor = _int(take("floor"), pos)
    count = _int(take("quads"), pos)
    quads = []
    for _ in range(count):
        if pos >= len(lines):
            raise ParseError("truncated quad list", pos + 1)
        toks = lines[pos].split(" ")
        pos += 1
        if len(toks) != 4:
            raise ParseError("a quad needs four indices", pos)
        quads.append(tuple(_int(t, pos) for t in toks))
    ntrace = _int(take("trace"), pos)
    trace = lines[pos:pos + ntrace]
    if len(trace) != ntrace or len(lines) != pos + ntrace:
        raise ParseError("trace length does not match its header", pos + 1)
    return SolutionFile(chk, n, floor, quads, trace)  # type: ignore[arg-type]


def read_solution(path: str) -> SolutionFile:
    with open(path, encoding="ascii", errors="replace") as f:
        return parse_solution(f.read())

