"""Command-line interface.

Every command except ``gen`` reads an instance file (path or stdin) and
prints a JSON report.  Exit status: 0 on success, 2 on invalid input or an
invalid partition, 3 when a computation would exceed its budget.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import kernels
from .approx import approximate_coarseness
from .coloring import ColoringSearchConfig, balanced_coloring, minimize_coarseness_coloring, random_coloring
from .discrepancy import disc, max_disc_halfplane, max_disc_k, max_disc_wedge, sample_islands, shatter_classes
from .errors import BudgetExceeded, CoarsenessError
from .experiment import median_series, rows_to_csv, run_scaling_experiment, summarize
from .generate import SHAPES, generate_points, in_convex_position
from .io import InstanceFile, ReportRecord, format_instance, parse_blocks
from .islands import DEFAULT_BUDGET, Island
from .partitions import (
    DEFAULT_LIMIT,
    PartitionViolation,
    exact_coarseness,
    partition_disc,
    validate_partition,
)
from .pointset import BLUE, RED, ColoredPointSet
from .svg import render_instance, render_scaling

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load(args) -> ColoredPointSet:
    return InstanceFile.parse(_read_text(args.instance)).pointset


def _record(command: str, ps: ColoredPointSet, **kw) -> ReportRecord:
    return ReportRecord(command=command, n=ps.n, r=ps.r, b=ps.b, disc=disc(ps, ps.full_mask), **kw)


def _island(isl: Island) -> dict:
    return {"members": list(isl.members), "certificate": [h.to_list() for h in isl.certificate]}


def cmd_gen(args):
    pts = generate_points(args.shape, args.n, args.seed, args.span)
    if args.coloring == "random":
        ps = random_coloring(pts, args.seed)
    elif args.coloring == "balanced":
        ps = balanced_coloring(pts, args.seed)
    else:
        c = RED if args.coloring == "red" else BLUE
        ps = ColoredPointSet(tuple(pts), (c,) * len(pts))
    header = [f"{args.shape} n={args.n} seed={args.seed} coloring={args.coloring}"]
    return None, format_instance(ps, header), EXIT_OK


def cmd_disc(args):
    ps = _load(args)
    rec = _record("disc", ps)
    if args.members is not None:
        members = [int(t) for t in args.members.replace(",", " ").split()]
        if any(not 0 <= i < ps.n for i in members):
            raise ValueError("member index out of range")
        rec.details = {"members": sorted(set(members)), "members_disc": disc(ps, members)}
    return rec, None, EXIT_OK


def cmd_d1(args):
    ps = _load(args)
    res = max_disc_halfplane(ps)
    return _record("d1", ps, d1=res.value, details={"island": _island(res.witness)}), None, EXIT_OK


def cmd_d2(args):
    ps = _load(args)
    d1 = max_disc_halfplane(ps).value
    res = max_disc_wedge(ps)
    return _record("d2", ps, d1=d1, d2=res.value, details={"island": _island(res.witness)}), None, EXIT_OK


def cmd_dk(args):
    ps = _load(args)
    res = max_disc_k(ps, args.k, args.budget)
    return _record("dk", ps, details={"k": args.k, "dk": res.value, "island": _island(res.witness)}), None, EXIT_OK


def cmd_coarse_exact(args):
    ps = _load(args)
    res = exact_coarseness(ps, args.limit)
    rec = _record("coarse-exact", ps, witness=res.witness.index_lists(),
                  details={"coarseness": res.value, "partitions_examined": res.partitions_examined})
    return rec, None, EXIT_OK


def cmd_coarse_approx(args):
    ps = _load(args)
    res = approximate_coarseness(ps)
    d1 = max_disc_halfplane(ps).value
    rec = _record("coarse-approx", ps, d1=d1, d2=res.d2, lower=res.lower, upper=res.upper,
                  witness=res.witness.index_lists(), details={"witness_disc": res.witness_disc})
    return rec, None, EXIT_OK


def cmd_color(args):
    ps = _load(args)
    if args.mode == "random":
        out = random_coloring(ps.points, args.seed)
    elif args.mode == "balanced":
        out = balanced_coloring(ps.points, args.seed)
    else:
        config = ColoringSearchConfig(seed=args.seed, restarts=args.restarts, max_flips=args.max_flips,
                                      objective=args.objective, workers=args.workers, budget=args.budget)
        out, _ = minimize_coarseness_coloring(ps.points, config)
    d1 = max_disc_halfplane(out).value
    d2 = max_disc_wedge(out).value
    colors = "".join("R" if c == RED else "B" for c in out.colors)
    rec = _record("color", out, d1=d1, d2=d2, upper=16 * d2,
                  details={"mode": args.mode, "seed": args.seed, "colors": colors})
    if args.out:
        Path(args.out).write_text(format_instance(out, [f"color --mode {args.mode} --seed {args.seed}"]))
    return rec, None, EXIT_OK


def cmd_check_partition(args):
    ps = _load(args)
    blocks = parse_blocks(Path(args.blocks).read_text())
    res = validate_partition(ps, blocks)
    if isinstance(res, PartitionViolation):
        rec = _record("check-partition", ps, witness=[list(b) for b in blocks], details={
            "valid": False, "violation": res.kind, "blocks": [list(b) for b in res.blocks],
            "message": res.message})
        return rec, None, EXIT_INVALID
    rec = _record("check-partition", ps, witness=res.index_lists(),
                  details={"valid": True, "partition_disc": partition_disc(ps, res)})
    return rec, None, EXIT_OK


def cmd_shatter(args):
    ps = _load(args)
    family = sample_islands(ps, args.k, args.m, args.seed, args.budget)
    sc = shatter_classes(ps, family, args.k)
    convex = in_convex_position(ps.points)
    bound = 4 * sc.k * sc.m if convex else (sc.k ** 2 + 4 * sc.k) * sc.m ** 2
    rec = _record("shatter", ps, details={
        "k": sc.k, "m": sc.m, "classes": sc.classes, "convex_position": convex,
        "bound": bound, "within_bound": sc.classes <= bound,
        "family": [list(i.members) for i in family]})
    return rec, None, EXIT_OK


def cmd_experiment(args):
    def progress(row):
        if args.verbose:
            print(f"n={row.n} seed={row.seed} {row.kind}: d2={row.d2} ({row.elapsed_ms:.0f} ms)",
                  file=sys.stderr, flush=True)

    rows = run_scaling_experiment(args.sizes, args.seeds, args.objective, shape=args.shape,
                                  restarts=args.restarts, max_flips=args.max_flips,
                                  budget=args.budget, workers=args.workers, progress=progress)
    timing = not args.no_timing
    if args.csv:
        Path(args.csv).write_text(rows_to_csv(rows, timing))
    if args.svg:
        Path(args.svg).write_text(render_scaling(median_series(rows)))
    summary = summarize(rows)
    summary["rows"] = [
        {k: v for k, v in vars(r).items() if timing or k != "elapsed_ms"} for r in rows]
    rec = ReportRecord(command="experiment scaling", n=0, r=0, b=0, disc=0, details=summary)
    return rec, None, EXIT_OK


def cmd_svg(args):
    ps = _load(args)
    partition = None
    lines = ()
    details = {"out": args.out}
    if args.blocks:
        res = validate_partition(ps, parse_blocks(Path(args.blocks).read_text()))
        if isinstance(res, PartitionViolation):
            raise ValueError(f"invalid partition: {res.message}")
        partition = res
    elif args.show == "approx":
        partition = approximate_coarseness(ps).witness
    elif args.show == "exact":
        partition = exact_coarseness(ps, args.limit).witness
    if args.show in ("d1", "d2"):
        res = (max_disc_halfplane if args.show == "d1" else max_disc_wedge)(ps)
        lines = res.witness.certificate
        details["island"] = _island(res.witness)
    if partition is not None:
        details["blocks"] = partition.index_lists()
    Path(args.out).write_text(render_instance(ps, partition, lines, title=args.title or ""))
    return _record("svg", ps, details=details), None, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="threads for parallel stages")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="work budget for enumerations")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from the report")

    def inst(p):
        p.add_argument("instance", nargs="?", default="-", help="instance file (default: stdin)")

    parser = argparse.ArgumentParser(prog="coarseness", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s (backend: {kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate an instance file")
    p.add_argument("shape", choices=SHAPES)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", type=int, default=None, help="grid spacing or radius")
    p.add_argument("--coloring", choices=("random", "balanced", "red", "blue"), default="random")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("disc", parents=[common], help="discrepancy of S or of given members")
    inst(p)
    p.add_argument("--members", default=None, help="comma separated indices")
    p.set_defaults(func=cmd_disc)

    for name, func, text in (("d1", cmd_d1, "max discrepancy over halfplanes"),
                             ("d2", cmd_d2, "max discrepancy over two-halfplane islands"),
                             ("coarse-approx", cmd_coarse_approx, "certified coarseness bounds")):
        p = sub.add_parser(name, parents=[common], help=text)
        inst(p)
        p.set_defaults(func=func)

    p = sub.add_parser("dk", parents=[common], help="max discrepancy over k-separable islands")
    inst(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dk)

    p = sub.add_parser("coarse-exact", parents=[common], help="exact coarseness by enumeration")
    inst(p)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest n to enumerate")
    p.set_defaults(func=cmd_coarse_exact)

    p = sub.add_parser("color", parents=[common], help="recolor the instance")
    inst(p)
    p.add_argument("--mode", choices=("random", "balanced", "minimize"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--max-flips", type=int, default=10_000)
    p.add_argument("--objective", choices=("D1", "D2"), default="D2")
    p.add_argument("--out", default=None, help="also write the recolored instance here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check-partition", parents=[common], help="validate a convex partition")
    inst(p)
    p.add_argument("--blocks", required=True, help="blocks file: JSON index lists or one block per line")
    p.set_defaults(func=cmd_check_partition)

    p = sub.add_parser("shatter", parents=[common], help="equivalence classes of random islands")
    inst(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_shatter)

    p = sub.add_parser("experiment", help="run experiments")
    esub = p.add_subparsers(dest="experiment", required=True)
    e = esub.add_parser("scaling", parents=[common], help="D2 of colorings on growing grids")
    e.add_argument("--sizes", type=int, nargs="+", required=True)
    e.add_argument("--seeds", type=int, nargs="+", required=True)
    e.add_argument("--objective", choices=("D1", "D2"), default="D1")
    e.add_argument("--shape", choices=SHAPES, default="grid")
    e.add_argument("--restarts", type=int, default=1)
    e.add_argument("--max-flips", type=int, default=100_000)
    e.add_argument("--csv", default=None, help="write rows here")
    e.add_argument("--svg", default=None, help="write the log-log plot here")
    e.add_argument("--verbose", action="store_true", help="print progress to stderr")
    e.set_defaults(func=cmd_experiment, budget=2 * 10**10)

    p = sub.add_parser("svg", parents=[common], help="draw the instance")
    inst(p)
    p.add_argument("--out", required=True)
    p.add_argument("--blocks", default=None, help="partition to outline")
    p.add_argument("--show", choices=("none", "d1", "d2", "approx", "exact"), default="none")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--title", default=None)
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        rec, text, code = args.func(args)
    except BudgetExceeded as exc:
        print(f"coarseness: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CoarsenessError, ValueError, OSError) as exc:
        print(f"coarseness: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if rec is not None:
        rec.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
        sys.stdout.write(rec.to_json(timing=not args.no_timing))
    if text is not None:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
