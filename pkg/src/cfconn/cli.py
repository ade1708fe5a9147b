"""Batch command-line front end.

Subcommands: verify (check a coloring), solve (exact connection numbers),
reduce (build gadget instances), generate (graph families), selftest (the
acceptance suites).

Exit codes: 0 success / verdict true, 1 verdict false or failing suite,
2 usage or parse error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys

from .coloring import EdgeColoring, PairSet, VertexColoring
from .formats import (
    read_edge_coloring,
    read_graph,
    read_pairs,
    read_partial,
    read_vertex_coloring,
    write_coloring,
    write_graph,
    write_maps,
    write_pairs,
    write_partial,
)
from .graph import Graph, GraphError
from .reductions import (
    PartialEdgeColoring,
    parse_dimacs_cnf,
    reduce_kcolor_to_subset,
    reduce_partial2_to_subset,
    reduce_subset_star_to_scfc,
    reduce_3sat_to_partial2,
)
from .solve import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    solve_cfc,
    solve_rc_small,
    solve_scfc,
    solve_vcfc,
)
from .verify import verify_cfc_edge, verify_cfc_vertex, verify_scfc, verify_scfc_subset

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return read_graph(_read_file(path))


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    if args.mode == "vcfc":
        c = read_vertex_coloring(_read_file(args.coloring), g)
        report = verify_cfc_vertex(g, c)
    else:
        ec = read_edge_coloring(_read_file(args.coloring), g)
        if args.mode == "cfc":
            report = verify_cfc_edge(g, ec)
        elif args.mode == "scfc":
            report = verify_scfc(g, ec)
        else:  # scfc-subset
            if args.pairs is None:
                raise GraphError("mode scfc-subset requires --pairs")
            p = read_pairs(_read_file(args.pairs), g.n)
            report = verify_scfc_subset(g, ec, p)
    if report.ok:
        print("verdict=true witness=none")
        print("OK")
        return EXIT_OK
    u, v = report.witness_pair
    print(f"verdict=false witness={u},{v}")
    print(f"pair {u},{v} is not connected as required")
    return EXIT_FALSE


_SOLVERS = {
    "cfc": solve_cfc,
    "vcfc": solve_vcfc,
    "scfc": solve_scfc,
    "rc": solve_rc_small,
}


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    result = _SOLVERS[args.mode](g, budget=args.budget)
    if result.status == "inconclusive":
        lo, hi = result.bounds
        print(f"inconclusive bounds=[{lo},{hi}]")
        return EXIT_BUDGET
    print(f"value={result.value}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_coloring(result.witness))
    return EXIT_OK


def _write_instance(out_dir: str, inst, partial_assigned=None) -> None:
    os.makedirs(out_dir, exist_ok=True)

    def put(name: str, text: str) -> None:
        with open(os.path.join(out_dir, name), "w", encoding="utf-8") as fh:
            fh.write(text)

    put("graph.txt", write_graph(inst.graph))
    if inst.pairs is not None:
        put("pairs.txt", write_pairs(inst.pairs))
    if partial_assigned is not None:
        put("partial.txt", write_partial(partial_assigned))
    put("maps.txt", write_maps(inst.maps))


def cmd_reduce(args) -> int:
    if args.mode == "sat2partial":
        if args.cnf is None:
            raise GraphError("mode sat2partial requires --cnf")
        from dataclasses import replace

        from .reductions import clause_pairs

        f = parse_dimacs_cnf(_read_file(args.cnf))
        inst = reduce_3sat_to_partial2(f)
        inst = replace(inst, pairs=clause_pairs(inst))
        g = inst.graph
        uncolored = g.m - len(inst.partial.assigned)
        _write_instance(args.out, inst, partial_assigned=inst.partial.assigned)
        print(f"V'={g.n} E'={g.m} uncolored={uncolored}")
    elif args.mode == "partial2subset":
        if args.partial is None:
            raise GraphError("mode partial2subset requires --partial")
        g = _load_graph(args.graph)
        assigned = read_partial(_read_file(args.partial))
        inst = reduce_partial2_to_subset(g, PartialEdgeColoring(host=g, assigned=assigned))
        _write_instance(args.out, inst)
        print(f"V'={inst.graph.n} E'={inst.graph.m} |P|={len(inst.pairs)}")
    elif args.mode == "kcolor2subset":
        if args.k is None:
            raise GraphError("mode kcolor2subset requires --k")
        g = _load_graph(args.graph)
        inst = reduce_kcolor_to_subset(g, args.k)
        _write_instance(args.out, inst)
        print(f"V'={inst.graph.n} E'={inst.graph.m} |P|={len(inst.pairs)}")
    else:  # star2scfc
        if args.pairs is None:
            raise GraphError("mode star2scfc requires --pairs")
        star = _load_graph(args.graph)
        p = read_pairs(_read_file(args.pairs), star.n)
        inst = reduce_subset_star_to_scfc(star, p)
        _write_instance(args.out, inst)
        print(f"V'={inst.graph.n} E'={inst.graph.m}")
    return EXIT_OK


def cmd_generate(args) -> int:
    from .families import generate_family

    params: dict = {"n": args.n, "seed": args.seed, "count": args.count}
    if args.p is not None:
        params["p"] = args.p
    texts = [write_graph(g) for g in generate_family(args.family, **params)]
    body = "".join(texts)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(scale=args.scale, seed=args.seed)
    ok = True
    for r in results:
        print(r.summary())
        for fail in r.failures[:10]:
            print(f"    counterexample: {fail}")
        ok = ok and r.ok
    print("ALL SUITES PASS" if ok else "SUITE FAILURES")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfconn",
        description="Conflict-free connectivity: verify, solve, reduce, generate, selftest.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring against a connectivity mode")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", required=True, choices=["cfc", "vcfc", "scfc", "scfc-subset"])
    p.add_argument("--pairs")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", help="exact connection number with witness")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", required=True, choices=sorted(_SOLVERS))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write the witness coloring here")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("reduce", help="build a gadget instance")
    p.add_argument("--mode", required=True,
                   choices=["sat2partial", "partial2subset", "kcolor2subset", "star2scfc"])
    p.add_argument("--graph")
    p.add_argument("--cnf", help="DIMACS CNF input (sat2partial)")
    p.add_argument("--partial", help="partial coloring input (partial2subset)")
    p.add_argument("--pairs", help="pair set input (star2scfc)")
    p.add_argument("--k", type=int)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("generate", help="emit graphs from a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("selftest", help="run the acceptance suites")
    p.add_argument("--scale", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        lo, hi = exc.bounds
        print(f"inconclusive bounds=[{lo},{hi}]")
        return EXIT_BUDGET
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
