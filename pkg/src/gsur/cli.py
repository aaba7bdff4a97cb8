"""Command-line interface: gen, construct, solve, reduce, gabriel, simulate,
verify.

Exit codes are a stable interface:
  0  success
  1  verification failure
  2  bad input (malformed document, invalid parameters)
  3  theorem hypothesis violated (offending bicoloring indices on stderr)
  4  infeasible (all uncoverable bicoloring indices on stderr)
  5  solver budget exhausted
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from pathlib import Path

from . import constructions, fileio
from .core import (
    IndexInterval,
    enumerate_candidate_intervals,
    gsur_failures,
    verify_certificate,
)
from .errors import (
    BudgetExceeded,
    CertificateError,
    DimensionError,
    Disconnected,
    GsurError,
    InfeasibleRow,
    InvalidParams,
    NonQualifyingBicoloring,
    NoSeparatingAxis,
    NotMRestricted,
)
from .gabriel import edge_list_text, gabriel_graph, spanning_tree
from .instances import (
    gen_2k_tightness,
    gen_embedded_line,
    gen_m_restricted_family,
    gen_prefix_family,
)
from .random_sim import run_experiment
from .solver import (
    build_coverage,
    exact_cover,
    extract_set_cover,
    greedy_cover,
    reduce_from_set_cover,
)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParams(message)


def _parse_vector(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as e:
        raise InvalidParams(f"bad vector {text!r}: expected comma-separated numbers") from e


def cmd_gen(args) -> int:
    if args.family == "prefix":
        _require(args.n is not None, "--n is required for --family prefix")
        inst = gen_prefix_family(args.n)
        ps, fam = inst.ps, inst.fam
    elif args.family == "m-restricted":
        _require(
            args.n is not None and args.m is not None,
            "--n and --m are required for --family m-restricted",
        )
        inst = gen_m_restricted_family(args.n, args.m)
        ps, fam = inst.ps, inst.fam
    elif args.family == "2k-tight":
        _require(args.k is not None, "--k is required for --family 2k-tight")
        inst = gen_2k_tightness(args.k)
        ps, fam = inst.ps, inst.fam
    elif args.family == "embedded-line":
        _require(
            args.n is not None and args.d is not None,
            "--n and --d are required for --family embedded-line",
        )
        direction = _parse_vector(args.direction) if args.direction else (1.0,) * args.d
        inst = gen_embedded_line(args.n, args.d, direction)
        ps, fam = inst.ps, inst.fam
    else:  # from-set-cover
        _require(args.set_cover is not None, "--set-cover is required")
        ro = reduce_from_set_cover(fileio.read_set_cover(args.set_cover))
        ps, fam = ro.ps, ro.fam
    _emit(fileio.instance_to_text(ps, fam), args.out)
    return 0


def cmd_construct(args) -> int:
    ps, fam = fileio.read_instance(args.instance)
    if args.method == "adjacent":
        g = constructions.consecutive_interval_gsur(ps, fam)
    elif args.method == "size2k":
        _require(args.k is not None, "--k is required for --method size2k")
        g = constructions.size2k_interval_gsur(ps, fam, args.k)
    elif args.method == "m-restricted":
        _require(args.m is not None, "--m is required for --method m-restricted")
        g = constructions.m_restricted_gsur(ps, fam, args.m)
    elif args.method == "balls":
        g = constructions.ball_gsur(ps, fam)
    else:
        g = constructions.box_gsur(ps, fam)
    verified = verify_certificate(ps, fam, g)
    _emit(fileio.gsur_document_text(g, method=args.method, verified=verified), args.out)
    return 0


def _make_candidates(spec: str, ps):
    if spec == "all-intervals":
        return enumerate_candidate_intervals(ps)
    if spec == "adjacent":
        if ps.dim != 1:
            raise DimensionError("adjacent interval candidates require a 1D point set")
        return [IndexInterval(i, i + 1) for i in range(ps.n - 1)]
    mm = re.fullmatch(r"pairs-2k=(\d+)", spec)
    if mm:
        k = int(mm.group(1))
        if ps.dim != 1:
            raise DimensionError("window candidates require a 1D point set")
        if k < 1 or 2 * k > ps.n:
            raise InvalidParams(f"pairs-2k={k} needs 1 <= 2k <= n = {ps.n}")
        return [IndexInterval(j, j + 2 * k - 1) for j in range(ps.n - 2 * k + 1)]
    mm = re.fullmatch(r"file=(.+)", spec)
    if mm:
        return fileio.read_candidates(mm.group(1))
    raise InvalidParams(
        f"unknown candidate spec {spec!r}; "
        "expected all-intervals, adjacent, pairs-2k=K, or file=PATH"
    )


def cmd_solve(args) -> int:
    ps, fam = fileio.read_instance(args.instance)
    candidates = _make_candidates(args.candidates, ps)
    cm = build_coverage(ps, fam, candidates)
    t0 = time.perf_counter()
    if args.greedy:
        g = greedy_cover(cm)
        method, optimal = "greedy", False
    else:
        g = exact_cover(cm, budget_limit=args.budget)
        method, optimal = "exact", True
    runtime = time.perf_counter() - t0
    meta = {
        "method": method,
        "optimal": optimal,
        "candidates": args.candidates,
        "runtime_seconds": round(runtime, 6),
    }
    if args.budget is not None:
        meta["budget"] = args.budget
    _emit(fileio.gsur_document_text(g, **meta), args.out)
    return 0


def cmd_reduce(args) -> int:
    sc = fileio.read_set_cover(args.set_cover)
    ro = reduce_from_set_cover(sc)
    if args.extract is not None:
        g, _doc = fileio.read_gsur(args.extract)
        failures = gsur_failures(ro.ps, ro.fam, g.ranges)
        if failures:
            print(f"first failing bicoloring index: {failures[0]}", file=sys.stderr)
            print("all failing indices: " + " ".join(map(str, failures)), file=sys.stderr)
            return 1
        chosen = extract_set_cover(ro, g)
        _emit(json.dumps({"chosen_sets": chosen}, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    _emit(fileio.instance_to_text(ro.ps, ro.fam), args.out)
    return 0


def cmd_gabriel(args) -> int:
    ps, _fam = fileio.read_instance(args.instance)
    g = gabriel_graph(ps)
    if g.near_boundary:
        print(
            f"warning: {len(g.near_boundary)} point triples sit within tolerance "
            "of a diametral-ball boundary; edges there depend on the tie rule",
            file=sys.stderr,
        )
    _emit(edge_list_text(spanning_tree(g) if args.tree else g), args.out)
    return 0


def cmd_simulate(args) -> int:
    res = run_experiment(args.model, args.m, args.n, args.trials, args.seed)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.model == "discrete":
        w.writerow(["trial_index", "t_stat", "s_stat", "event_e"])
        if not args.summary_only:
            for i, r in enumerate(res.records):
                w.writerow([i, r.t_stat, r.s_stat, int(r.event_e)])
        w.writerow(["summary", res.means["t_stat"], res.means["s_stat"], res.p_event_e])
        print(f"P(S=2) = {res.p_s2}; P(E) = {res.p_event_e}", file=sys.stderr)
    else:
        w.writerow(["trial_index", "m_len", "l_len"])
        if not args.summary_only:
            for i, r in enumerate(res.records):
                w.writerow([i, r.m_len, r.l_len])
        w.writerow(["summary", res.means["m_len"], res.means["l_len"]])
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    ps, fam = fileio.read_instance(args.instance)
    g, _doc = fileio.read_gsur(args.solution)
    failures = gsur_failures(ps, fam, g.ranges)
    if failures:
        print(f"first failing bicoloring index: {failures[0]}", file=sys.stderr)
        print("all failing indices: " + " ".join(map(str, failures)), file=sys.stderr)
        return 1
    print("ok: every bicoloring has a balanced range", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gsur",
        description="Balanced-range systems for bicolored point sets: "
        "generate, construct, solve, reduce, simulate, verify.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a benchmark instance document")
    g.add_argument(
        "--family",
        required=True,
        choices=["prefix", "m-restricted", "2k-tight", "embedded-line", "from-set-cover"],
    )
    g.add_argument("--n", type=int, help="number of points")
    g.add_argument("--m", type=int, help="restriction parameter (m-restricted)")
    g.add_argument("--k", type=int, help="window parameter (2k-tight)")
    g.add_argument("--d", type=int, help="dimension (embedded-line)")
    g.add_argument("--direction", help="comma-separated direction vector (default all ones)")
    g.add_argument("--set-cover", dest="set_cover", help="set-cover file (from-set-cover)")
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("construct", help="build a range system by a theorem construction")
    c.add_argument("instance", help="instance document path")
    c.add_argument(
        "--method",
        required=True,
        choices=["adjacent", "size2k", "m-restricted", "balls", "boxes"],
    )
    c.add_argument("--k", type=int, help="half window size (size2k)")
    c.add_argument("--m", type=int, help="restriction parameter (m-restricted)")
    c.add_argument("--out", help="output path (default stdout)")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("solve", help="find a small range system via set cover")
    s.add_argument("instance", help="instance document path")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="minimum size (default)")
    mode.add_argument("--greedy", action="store_true", help="ln-factor greedy")
    s.add_argument(
        "--candidates",
        default="all-intervals",
        help="all-intervals | adjacent | pairs-2k=K | file=PATH",
    )
    s.add_argument("--budget", type=int, help="largest acceptable cover size")
    s.add_argument("--out", help="output path (default stdout)")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="reduce a set-cover instance to a line instance")
    r.add_argument("set_cover", help="set-cover document path")
    r.add_argument(
        "--extract",
        help="range-system document to map back to chosen subset indices",
    )
    r.add_argument("--out", help="output path (default stdout)")
    r.set_defaults(func=cmd_reduce)

    gb = sub.add_parser("gabriel", help="Gabriel graph of an instance, as an edge list")
    gb.add_argument("instance", help="instance document path")
    gb.add_argument("--tree", action="store_true", help="emit a BFS spanning tree instead")
    gb.add_argument("--out", help="output path (default stdout)")
    gb.set_defaults(func=cmd_gabriel)

    sim = sub.add_parser("simulate", help="random balanced-interval trials, CSV output")
    sim.add_argument("--model", required=True, choices=["discrete", "continuous"])
    sim.add_argument("--m", type=int, required=True, help="red point count")
    sim.add_argument("--n", type=int, required=True, help="blue point count")
    sim.add_argument("--trials", type=int, default=1000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--summary-only", action="store_true", help="omit per-trial rows")
    sim.add_argument("--out", help="output path (default stdout)")
    sim.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="re-check a range-system document against an instance")
    v.add_argument("instance", help="instance document path")
    v.add_argument("solution", help="range-system document path")
    v.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NonQualifyingBicoloring, NotMRestricted) as e:
        print(f"error: {e}", file=sys.stderr)
        print(f"offending bicoloring index: {e.index}", file=sys.stderr)
        return 3
    except (NoSeparatingAxis, Disconnected) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except CertificateError as e:
        print(f"error: {e}", file=sys.stderr)
        print("uncoverable bicolorings: " + " ".join(map(str, e.uncovered)), file=sys.stderr)
        return 4
    except InfeasibleRow as e:
        print(f"error: {e}", file=sys.stderr)
        print("uncoverable bicolorings: " + " ".join(map(str, e.rows)), file=sys.stderr)
        return 4
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    except (GsurError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
