"""Command-line entry point: gen, solve, verify, oracle, stress, bench, render."""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import small
from .errors import ContradictionError, ParseError, QuadHoleError
from .fileio import (SolutionFile, checksum, format_points, format_solution, read_points,
                     read_solution, write_text)
from .generate import DEFAULT_BBOX, KINDS, generate
from .oracle import enumerate_4holes, max_compatible, verify_solution
from .render import render_svg
from .solver import lower_bound_formula, solve

EXIT_VERIFY_FAIL = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_CONTRADICTION = 5


def threads() -> int:
    try:
        return max(1, int(os.environ.get("QUADHOLE_THREADS", "1")))
    except ValueError:
        return 1


def _cmd_gen(a) -> int:
    pts = generate(a.kind, a.n, a.seed, a.bbox)
    write_text(a.output, format_points(pts))
    return 0


def _cmd_solve(a) -> int:
    pts = read_points(a.input)
    sol = solve(pts, check_input=False)
    if a.verify:
        res = verify_solution(pts, sol.quads)
        if not res:
            raise ContradictionError(f"solution failed verification: {res.reason} {res.where}")
    out = SolutionFile(checksum(pts), len(pts), sol.floor, sol.quads, sol.trace)
    write_text(a.output, format_solution(out))
    print(f"n={len(pts)} floor={sol.floor} quads={len(sol.quads)}")
    return 0


def check_solution_file(pts, sf: SolutionFile) -> str | None:
    """Reason the solution does not fit the points, or None."""
    if sf.checksum != checksum(pts):
        return "checksum does not match the point set"
    if sf.n != len(pts):
        return f"solution is for n={sf.n}, point set has {len(pts)}"
    if sf.floor != lower_bound_formula(len(pts)):
        return f"floor {sf.floor} differs from the bound {lower_bound_formula(len(pts))}"
    if len(sf.quads) < sf.floor:
        return f"{len(sf.quads)} quads, fewer than the floor {sf.floor}"
    res = verify_solution(pts, sf.quads)
    if not res:
        return f"{res.reason} at {res.where}"
    return None


def _cmd_verify(a) -> int:
    pts = read_points(a.input)
    sf = read_solution(a.solution)
    why = check_solution_file(pts, sf)
    if why is not None:
        print(f"FAIL: {why}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    print(f"OK: {len(sf.quads)} compatible 4-holes (floor {sf.floor})")
    return 0


def _cmd_oracle(a) -> int:
    pts = read_points(a.input)
    cat = enumerate_4holes(pts)
    print(f"holes {len(cat.holes)}")
    if a.max:
        best, _ = max_compatible(cat)
        print(f"max {best}")
    return 0


def stress_chunk(size: int, seed: int, start: int, stop: int) -> tuple[list[int], dict]:
    """Indices of failing instances and the fallback tally for instances [start, stop)."""
    solver = small.SOLVERS[size]
    need = small.FLOOR[size]
    bad = []
    small.fallback_counts.clear()
    for i in range(start, stop):
        pts = generate("random", size, seed * 1_000_003 + i)
        try:
            sol = solver(pts)
            ok = len(sol.quads) >= need and bool(verify_solution(pts, sol.quads))
        except ContradictionError:
            ok = False
        if not ok:
            bad.append(i)
    return bad, dict(small.fallback_counts)


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, -(-total // parts))
    return [(s, min(total, s + step)) for s in range(0, total, step)]


def stress(size: int, iters: int, seed: int) -> tuple[list[int], dict]:
    """Failing instance indices and the merged fallback tally over ``iters`` random sets."""
    t = threads()
    spans = _chunks(iters, t * 4 if t > 1 else 1)
    if t > 1:
        with ProcessPoolExecutor(t) as ex:
            results = list(ex.map(stress_chunk, *zip(*[(size, seed, s, e) for s, e in spans])))
    else:
        results = [stress_chunk(size, seed, s, e) for s, e in spans]
    bad = sorted(i for r in results for i in r[0])
    fallbacks: dict = {}
    for _, fb in results:
        for k, v in fb.items():
            fallbacks[k] = fallbacks.get(k, 0) + v
    return bad, fallbacks


def _cmd_stress(a) -> int:
    bad, fallbacks = stress(a.size, a.iters, a.seed)
    print(f"size={a.size} iters={a.iters} failures={len(bad)} fallbacks={sum(fallbacks.values())}")
    for k in sorted(fallbacks):
        print(f"  fallback {k}: {fallbacks[k]}")
    for i in bad[:10]:
        print(f"  counterexample: instance {i} (generate random {a.size} seed {a.seed * 1_000_003 + i})")
    return 1 if bad else 0


def bench_one(n: int, seed: int) -> tuple[int, float, int, int]:
    pts = generate("random", n, seed)
    t0 = time.perf_counter()
    sol = solve(pts, check_input=False)
    res = verify_solution(pts, sol.quads, check_general_position=False)
    dt = time.perf_counter() - t0
    if not res:
        raise ContradictionError(f"bench solution for n={n} failed verification")
    return n, dt, len(sol.quads), sol.floor


def _cmd_bench(a) -> int:
    ns = [int(x) for x in a.n_list.split(",") if x.strip()]
    rows = [bench_one(n, a.seed) for n in ns]
    lines = ["n,seconds,count,floor"] + [f"{n},{dt:.4f},{c},{f}" for n, dt, c, f in rows]
    text = "\n".join(lines) + "\n"
    if a.output:
        write_text(a.output, text)
    sys.stdout.write(text)
    return 0


def _cmd_render(a) -> int:
    pts = read_points(a.input)
    sf = read_solution(a.solution)
    if sf.checksum != checksum(pts):
        print("FAIL: checksum does not match the point set", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    write_text(a.output, render_svg(pts, sf.quads))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quadholes", description="Compatible empty quadrilaterals in planar point sets.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a point set")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--bbox", type=int, default=DEFAULT_BBOX)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="find at least floor(5n/11)-1 compatible 4-holes")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--verify", dest="verify", action="store_true", default=True)
    s.add_argument("--no-verify", dest="verify", action="store_false")
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against its point set")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-s", "--solution", required=True)
    v.set_defaults(func=_cmd_verify)

    o = sub.add_parser("oracle", help="count 4-holes; exact maximum with --max")
    o.add_argument("-i", "--input", required=True)
    o.add_argument("--max", action="store_true")
    o.set_defaults(func=_cmd_oracle)

    st = sub.add_parser("stress", help="randomized check of the 9- and 11-point solvers")
    st.add_argument("--size", type=int, choices=(9, 11), required=True)
    st.add_argument("--iters", type=int, required=True)
    st.add_argument("--seed", type=int, required=True)
    st.set_defaults(func=_cmd_stress)

    b = sub.add_parser("bench", help="time solve plus verify on random sets")
    b.add_argument("--n-list", default="100,500,1000,5000")
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("-o", "--output")
    b.set_defaults(func=_cmd_bench)

    r = sub.add_parser("render", help="draw a solution as SVG")
    r.add_argument("-i", "--input", required=True)
    r.add_argument("-s", "--solution", required=True)
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=_cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (QuadHoleError, ValueError) as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
