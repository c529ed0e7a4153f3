"""``locdom`` command line: check, solve, exact, gen and experiment.

Exit codes: 0 on success, 1 when the instance falls outside an algorithm's
scope (or a search is too large), 2 for malformed input files or flags.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass
from typing import Callable

from .digraph import Digraph, connectivity
from .errors import InputError, LocDomError, ParseError
from .generators import FAMILIES, K_FAMILIES, FamilySpec, generate
from .io import read_instance, render_dot, render_instance
from .ldcore import DEFAULT_CUTOFF, CertifiedSet, Kind, evaluate_set, exact_min_set, tournament_ld_set
from .nonroundable import (
    require_connected_local_tournament,
    separator_decomposition,
    solve_local_tournament,
    solve_nonroundable,
)
from .roundable import solve_roundable
from .structure import classify, round_decomposition, twin_report
from .supervising import find_supervising_vertex, solve_supervising

ALGORITHMS = ("auto", "tournament", "roundable", "nonroundable", "supervising")
EXPERIMENT_CUTOFF = 14


@dataclass
class ResultRecord:
    algorithm: str
    vertices: tuple[int, ...]
    bound: int
    verified: bool | None
    exact: int | None = None
    wall_time: float | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)


def _solve_tournament(d: Digraph) -> CertifiedSet:
    if not classify(d).tournament:
        raise InputError("not a tournament")
    found = tournament_ld_set(d)
    return CertifiedSet(found.vertices, found.kind, found.claimed_bound, found.verified, "tournament")


def _solve_nonroundable(d: Digraph) -> CertifiedSet:
    require_connected_local_tournament(d)
    return solve_nonroundable(d)


def solve_auto(d: Digraph) -> CertifiedSet:
    """Local tournaments go to the ceil(n/2) solvers, everything else to the supervising pipeline."""
    if classify(d).local_tournament:
        return solve_local_tournament(d)
    return solve_supervising(d)


SOLVERS: dict[str, Callable[[Digraph], CertifiedSet]] = {
    "auto": solve_auto,
    "tournament": _solve_tournament,
    "roundable": solve_roundable,
    "nonroundable": _solve_nonroundable,
    "supervising": solve_supervising,
}


def run_solver(d: Digraph, algorithm: str, verify: bool = True) -> ResultRecord:
    start = time.perf_counter()
    result = SOLVERS[algorithm](d)
    elapsed = time.perf_counter() - start
    verified = evaluate_set(d, result.vertices).ld if verify else None
    return ResultRecord(result.trace_tag, tuple(result.vertices), result.claimed_bound, verified,
                        wall_time=elapsed)


def _fmt_set(vs) -> str:
    return "{" + ", ".join(map(str, vs)) + "}"


def _verified_word(v: bool | None) -> str:
    return "skipped" if v is None else ("yes" if v else "NO")


def check_report(d: Digraph) -> str:
    cls = classify(d)
    connected, strong = connectivity(d)
    tw = twin_report(d)
    if cls.tournament:
        kind = "tournament"
    elif cls.local_tournament:
        kind = "local tournament"
    else:
        kind = "not a local tournament"
    conn = "strong" if strong else ("connected, not strong" if connected else "not connected")
    if not tw.twin_free:
        twins = "has twins"
    elif tw.quasi_twins:
        twins = "twin-free"
    else:
        twins = "quasi-twin-free"
    lines = [
        f"summary: {kind}, {conn}, {twins}",
        f"vertices: {d.n}",
        f"arcs: {d.arc_count}",
        f"locally in-semicomplete: {'yes' if cls.locally_in_semicomplete else 'no'}",
        f"locally out-semicomplete: {'yes' if cls.locally_out_semicomplete else 'no'}",
    ]
    if tw.open_twins:
        lines.append(f"open twins: {tw.open_twins[0]} ({len(tw.open_twins)} pairs)")
    if tw.closed_twins:
        lines.append(f"closed twins: {tw.closed_twins[0]} ({len(tw.closed_twins)} pairs)")
    if tw.quasi_twins:
        lines.append(f"quasi-twins: {tw.quasi_twins[0]} ({len(tw.quasi_twins)} pairs)")
    s = find_supervising_vertex(d)
    lines.append(f"supervising vertex: {'none' if s is None else s}")
    if not cls.local_tournament or not connected or d.n == 0:
        lines.append("roundable: n/a")
    elif cls.tournament and strong:
        lines.append("roundable: n/a (strong tournament)")
    else:
        dec = round_decomposition(d)
        if dec is None:
            lines.append("roundable: no")
            sdec = separator_decomposition(d)
            lines.append(f"separator: {_fmt_set(sdec.X)} (case {sdec.case_id})")
        else:
            lines.append(f"roundable: yes ({dec.r} blocks)")
            lines.append("blocks: " + " ".join(_fmt_set(b) for b in dec.blocks))
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    sys.stdout.write(check_report(read_instance(args.path)))
    return 0


def cmd_solve(args) -> int:
    d = read_instance(args.path)
    rec = run_solver(d, args.algorithm, args.verify)
    if args.format == "dot":
        head = f"// algorithm={rec.algorithm} size={rec.size} bound={rec.bound} verified={_verified_word(rec.verified)}\n"
        sys.stdout.write(head + render_dot(d, rec.vertices))
    else:
        lines = [
            f"algorithm: {rec.algorithm}",
            f"set: {_fmt_set(rec.vertices)}",
            f"size: {rec.size}",
            f"bound: {rec.bound}",
            f"verified: {_verified_word(rec.verified)}",
        ]
        if args.timing:
            lines.append(f"time: {rec.wall_time:.6f}s")
        sys.stdout.write("\n".join(lines) + "\n")
    return 1 if rec.verified is False else 0


def cmd_exact(args) -> int:
    d = read_instance(args.path)
    kind = Kind.parse(args.kind)
    start = time.perf_counter()
    found = exact_min_set(d, kind, cutoff=args.cutoff).vertices
    elapsed = time.perf_counter() - start
    lines = [f"kind: {kind.value}", f"set: {_fmt_set(found)}", f"value: {len(found)}"]
    if args.timing:
        lines.append(f"time: {elapsed:.6f}s")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _family_params(family: str, value: int, args) -> dict:
    if family in K_FAMILIES:
        return {"k": value}
    params: dict = {"n": value}
    if family == "random-digraph":
        params["p"] = args.p
        params["filters"] = tuple(args.filters.split(","))
    return params


def _param_label(params: dict) -> str:
    return ";".join(f"{k}={','.join(v) if isinstance(v, tuple) else v}" for k, v in params.items())


def cmd_gen(args) -> int:
    value = args.k if args.family in K_FAMILIES else args.n
    if value is None:
        raise InputError(f"family {args.family} needs --{'k' if args.family in K_FAMILIES else 'n'}")
    params = _family_params(args.family, value, args)
    d = generate(FamilySpec(args.family, params, args.seed))
    text = render_instance(d, f"{args.family} {_param_label(params)} seed={args.seed}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_range(text: str) -> range:
    try:
        lo, _, hi = text.partition("..")
        a, b = int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


COLUMNS = ["family", "params", "seed", "n", "algorithm", "size", "bound", "exact", "verified", "ratio"]


def experiment_rows(family: str, values: range, trials: int, seed: int, algorithm: str,
                    cutoff: int, args, timing: bool = False):
    """One row per (parameter value, trial), in that order; trial ``i`` uses seed ``seed + i``."""
    for value in values:
        params = _family_params(family, value, args)
        for i in range(trials):
            s = seed + i
            d = generate(FamilySpec(family, params, s))
            rec = run_solver(d, algorithm)
            exact = exact_min_set(d, Kind.LD, cutoff).size if d.n <= cutoff else None
            row = {
                "family": family,
                "params": _param_label(params),
                "seed": s,
                "n": d.n,
                "algorithm": rec.algorithm,
                "size": rec.size,
                "bound": rec.bound,
                "exact": "" if exact is None else exact,
                "verified": str(bool(rec.verified)).lower(),
                "ratio": f"{rec.size / rec.bound:.4f}" if rec.bound else "",
            }
            if timing:
                row["wall_time"] = f"{rec.wall_time:.6f}"
            yield row


def cmd_experiment(args) -> int:
    columns = COLUMNS + (["wall_time"] if args.timing else [])
    out = open(args.out, "w", newline="") if args.out and args.out != "-" else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        failed = 0
        for row in experiment_rows(args.family, args.params_range, args.trials, args.seed,
                                   args.algorithm, args.cutoff, args, args.timing):
            failed += row["verified"] != "true" or (row["bound"] and row["size"] > row["bound"])
            writer.writerow(row)
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="locdom", description="Locating-dominating sets in digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report structural properties of an instance")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="construct a certified locating-dominating set")
    p.add_argument("path")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                   help="re-check the set before printing (default: on)")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--timing", action="store_true", help="also print wall time")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="minimum set by exhaustive search")
    p.add_argument("path")
    p.add_argument("--kind", choices=("ld", "locating", "dominating"), default="ld")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.3, help="arc probability (random-digraph)")
    p.add_argument("--filters", default="strong,quasi-twin-free", help="random-digraph filters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="batch runs written as CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--params-range", type=_parse_range, required=True,
                   help="A..B over k (triangle families) or n (random families)")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--cutoff", type=int, default=EXPERIMENT_CUTOFF,
                   help="largest n for which the exact optimum is computed")
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--filters", default="strong,quasi-twin-free")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--timing", action="store_true", help="add a wall_time column")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LocDomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
