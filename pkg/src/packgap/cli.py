"""Command-line interface: ``packgap <command> ...``.

Exit codes: 0 success or pass, 1 usage or input error, 2 claim failure,
3 result truncated by a budget.  Vertex ids printed by commands are 0-based;
graph and coloring files are 1-based.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .families import (
    CaterpillarSpec,
    FamilyInstance,
    LobsterSpec,
    SpiderSpec,
    corona_k1,
    gen_caterpillar,
    gen_lobster,
    gen_spider,
    generate,
)
from .formats import (
    format_coloring,
    format_graph,
    instance_metadata,
    read_coloring,
    read_graph,
    write_instance,
)
from .gap import gap_report
from .graph import Graph, GraphError, bfs_distances
from .harness import (
    CLAIMS,
    EXPLORATORY,
    SweepConfig,
    parse_duration,
    read_config,
    replay_witness,
    run_claim,
    write_report,
    write_witnesses,
)
from .solver import SolveBudget, chi_p, verify_coloring

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_TRUNCATED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the exit-code contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ----------------------------------------------------------------- helpers


def _budget(args) -> SolveBudget:
    try:
        limit = parse_duration(args.time_limit) if args.time_limit else None
    except ValueError as exc:
        raise UsageError(f"bad --time-limit {args.time_limit!r}: {exc}") from exc
    return SolveBudget(node_limit=args.node_limit, time_limit=limit)


def _load(args) -> tuple[Graph, Optional[tuple[int, ...]]]:
    """Graph and spine (if known) from --gen or --input."""
    if args.gen:
        inst = generate(args.gen[0], args.gen[1:])
        return inst.graph, inst.spine
    g = read_graph(args.input)
    meta = Path(str(args.input) + ".json")
    spine = None
    if meta.exists():
        stored = json.loads(meta.read_text()).get("spine")
        if stored:
            spine = tuple(v - 1 for v in stored)
    return g, spine


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", nargs="+", metavar="ARG",
                     help="family name followed by its parameters, e.g. --gen cycle 7")
    src.add_argument("--input", type=Path, help="graph file (p pcg n m / e u v)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-limit", type=int, default=None, help="search node budget")
    p.add_argument("--time-limit", default=None, help="time budget, e.g. 10s, 5m, 1h")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=1, sort_keys=True))


# ----------------------------------------------------------------- commands


def cmd_chi(args) -> int:
    g, _ = _load(args)
    res = chi_p(g, _budget(args))
    if args.witness:
        Path(args.witness).write_text(format_coloring(res.witness.colors))
    if args.json:
        _emit_json({
            "command": "chi", "n": g.n, "m": g.m, "chi": res.chi, "exact": not res.exhausted,
            "nodes_expanded": res.nodes_expanded, "witness": list(res.witness.colors),
            "witness_file": str(args.witness) if args.witness else None,
        })
    else:
        label = "chi_p" if not res.exhausted else "chi_p <="
        print(f"{label} {res.chi}")
        print(f"nodes {res.nodes_expanded}")
        print("exact" if not res.exhausted else "bounded (budget exhausted)")
        if args.witness:
            print(f"witness written to {args.witness}")
    return EXIT_TRUNCATED if res.exhausted else EXIT_OK


def cmd_gap(args) -> int:
    g, spine = _load(args)
    if g.n == 0:
        raise UsageError("the gap of the empty graph is undefined")
    if args.spine_only and spine is None:
        raise UsageError("--spine-only needs a graph with a designated spine")
    rep = gap_report(g, _budget(args), spine=spine if args.spine_only else None)
    table = [
        {"vertex": v, "chi_minus_v": rep.per_vertex[v], "delta": rep.deltas[v]}
        for v in range(g.n) if rep.per_vertex[v] is not None
    ]
    if args.json:
        out = {"command": "gap", "n": g.n, "chi": rep.chi, "mu": rep.mu,
               "delta_set": list(rep.delta_set), "argmax": list(rep.argmax),
               "critical": rep.critical, "exact": rep.exact,
               "spine_only": rep.spine_only}
        if args.per_vertex:
            out["per_vertex"] = table
        _emit_json(out)
    else:
        print(f"chi_p {rep.chi}")
        print(f"mu {rep.mu}")
        print(f"delta set {{{', '.join(map(str, rep.delta_set))}}}")
        print(f"critical {'yes' if rep.critical else 'no'}")
        if args.per_vertex:
            print("vertex chi_p(G-v) delta")
            for row in table:
                print(f"{row['vertex']} {row['chi_minus_v']} {row['delta']}")
        if not rep.exact:
            print("bounded (budget exhausted)")
    return EXIT_OK if rep.exact else EXIT_TRUNCATED


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


def _build(family: str, params: Sequence[str], args) -> FamilyInstance:
    family = family.replace("-", "_")
    if family == "corona":
        if not args.base:
            return generate("corona", list(params))
        return corona_k1(_build(args.base, params, args))
    if family == "caterpillar" and args.leaves is not None:
        return gen_caterpillar(CaterpillarSpec(_int_list(args.leaves)))
    if family == "spider" and args.legs is not None:
        return gen_spider(SpiderSpec(_int_list(args.legs)))
    if family == "lobster" and args.branches is not None:
        return gen_lobster(LobsterSpec(tuple(_int_list(b) for b in args.branches.split("/"))))
    return generate(family, list(params))


def cmd_gen(args) -> int:
    inst = _build(args.family, args.params, args)
    if args.out:
        path = write_instance(args.out, inst)
        print(f"wrote {path} ({inst.graph.n} vertices, {inst.graph.m} edges)")
    else:
        meta = instance_metadata(inst)
        sys.stdout.write(format_graph(inst.graph, (f"{meta['label']}",)))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    colors = read_coloring(args.coloring, g.n)
    bad = verify_coloring(g, colors)
    rows = [(u, v, c, bfs_distances(g, u)[v]) for u, v, c in bad]
    if args.json:
        _emit_json({"command": "verify", "valid": not rows,
                    "violations": [{"u": u, "v": v, "color": c, "distance": d}
                                   for u, v, c, d in rows]})
    elif not rows:
        print("ok")
    else:
        print(f"{len(rows)} violation(s) (u, v, color, distance):")
        for row in rows:
            print(f"({', '.join(map(str, row))})")
    return EXIT_OK if not rows else EXIT_FAIL


# sweep --max-n goes to the family ceiling of each claim
MAX_N_KEYS = {
    "closed-forms": ("path_max_n", "cycle_max_n"),
    "caterpillar-gap": ("caterpillar_max_n",),
    "corona": ("corona_max_base_n",),
    "lobster-search": ("lobster_max_n",),
    "oracle": ("oracle_max_n",),
    "diameter-two": ("diameter_max_n",),
}


def sweep_config(args) -> SweepConfig:
    cfg = SweepConfig(workers=os.cpu_count() or 1)
    if args.config:
        cfg.update(read_config(args.config))
    if args.max_n is not None:
        if args.tag not in MAX_N_KEYS:
            raise UsageError(f"--max-n does not apply to {args.tag}")
        for key in MAX_N_KEYS[args.tag]:
            setattr(cfg, key, args.max_n)
    overrides = {"lobster_ct_max": args.ct_max, "spider_max_legs": args.max_legs,
                 "spider_max_leg_len": args.max_leg_len, "workers": args.workers,
                 "node_limit": args.node_limit}
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    if args.time_limit:
        cfg.time_limit = parse_duration(args.time_limit)
    if args.exact_k7:
        cfg.exact_k7 = True
    if cfg.oracle_max_n > 9:
        raise UsageError("the brute-force oracle handles at most 9 vertices")
    return cfg


def cmd_sweep(args) -> int:
    if args.tag not in CLAIMS:
        raise UsageError(f"unknown claim tag {args.tag!r}; available: {', '.join(CLAIMS)}")
    cfg = sweep_config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    checkpoint = out / f"{args.tag}.partial.jsonl"
    if checkpoint.exists() and not args.resume:
        checkpoint.unlink()
    report = run_claim(args.tag, cfg, checkpoint)
    json_path, csv_path = write_report(report, out)
    checkpoint.unlink(missing_ok=True)
    keys = [f["key"] for f in report.failures]
    if args.tag == "lobster-search" and (report.notes.get("max_mu") or 0) >= 3:
        keys += [w["key"] for w in report.extremal if w["key"] not in keys]
    witnesses = write_witnesses(report, out / "witnesses", keys) if keys else []
    summary = {
        "command": "sweep", "claim": report.claim, "passed": report.passed,
        "exploratory": args.tag in EXPLORATORY, "instance_count": report.instance_count,
        "failure_count": len(report.failures), "budget_flags": report.budget_flags,
        "wall_time": report.wall_time, "report_json": str(json_path),
        "report_csv": str(csv_path), "witness_files": [str(p) for p in witnesses],
        "notes": report.notes,
    }
    if args.json:
        _emit_json(summary)
    else:
        status = "PASS" if report.passed else "FAIL"
        if args.tag in EXPLORATORY:
            status = "DONE" if report.passed else "DONE (with check failures)"
        print(f"{report.claim}: {status} over {report.instance_count} instances "
              f"in {report.wall_time:.1f}s")
        for key, value in report.notes.items():
            print(f"  {key}: {json.dumps(value, sort_keys=True)}")
        for f in report.failures[:20]:
            print(f"  failure {f['key']}: {'; '.join(f['problems'])}")
        print(f"report: {json_path} {csv_path}")
        for p in witnesses:
            print(f"witness: {p}")
    if args.tag in EXPLORATORY:
        return EXIT_OK
    if not report.passed:
        return EXIT_FAIL
    return EXIT_TRUNCATED if report.budget_flags else EXIT_OK


def cmd_replay(args) -> int:
    result = replay_witness(args.witness)
    if args.json:
        _emit_json({"command": "replay", **result})
    else:
        print("replay matches" if result["matches"] else "replay differs")
        print(json.dumps(result["transcript"], sort_keys=True))
    return EXIT_OK if result["matches"] else EXIT_FAIL


def cmd_fixtures(args) -> int:
    from .patterns import regenerate_fixtures

    if not args.regenerate:
        raise UsageError("nothing to do (pass --regenerate)")
    out = args.out or Path(__file__).parent / "data" / "figure3"
    for path in regenerate_fixtures(out):
        print(f"wrote {path}")
    return EXIT_OK


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="packgap", description="Packing chromatic number and gap tools")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", help="exact packing chromatic number")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--witness", type=Path, help="write the witness coloring here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("gap", help="packing coloring gap and per-vertex drops")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--per-vertex", action="store_true", help="print the per-vertex table")
    p.add_argument("--spine-only", action="store_true", help="delete spine vertices only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("gen", aliases=["generate"], help="write a family instance")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--leaves", help="caterpillar leaf counts, e.g. 2,0,3")
    p.add_argument("--legs", help="spider leg lengths, e.g. 3,2,2")
    p.add_argument("--branches", help="lobster branches per spine vertex, e.g. 2,0/1/0")
    p.add_argument("--base", help="base family for corona")
    p.add_argument("--out", type=Path, help="graph file to write (metadata goes to OUT.json)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--coloring", type=Path, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a claim sweep and write CSV/JSON reports")
    p.add_argument("tag", help=f"one of: {', '.join(CLAIMS)}")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--ct-max", type=int, default=None)
    p.add_argument("--max-legs", type=int, default=None)
    p.add_argument("--max-leg-len", type=int, default=None)
    p.add_argument("--exact-k7", action="store_true",
                   help="also attempt the exact k=7 fixture run (node-budgeted)")
    p.add_argument("--out", default="reports")
    p.add_argument("--config", type=Path, help="key=value sweep configuration file")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: available CPUs)")
    p.add_argument("--resume", action="store_true", help="reuse rows from an interrupted run")
    _add_budget(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("replay", help="recompute a sweep witness file")
    p.add_argument("witness", type=Path)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("fixtures", help="rebuild the committed gap-1 caterpillar fixtures")
    p.add_argument("--regenerate", action="store_true")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"packgap {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
