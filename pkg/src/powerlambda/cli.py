"""Command-line entry point: ``powerlambda <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import euler_phi, factorize
from .errors import GroupSpecError, PreconditionError, TheoremViolation
from .groups import build_group, parse_spec
from .hampath import DEFAULT_NODE_BUDGET, backtracking_hamiltonian, build_constructive_hamiltonian
from .labelling import labelling_from_path, lambda_of_group, verify_l21
from .powergraph import build_power_graph, export_dot, export_edges, punctured_complement
from .spectrum import cyclic_classes, stratum
from . import checks


def _basis_text(n: int) -> str:
    b = factorize(n)
    return " * ".join(p if a == 1 else f"{p}^{a}" for p, a in zip(map(str, b.primes), b.exponents))


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> int:
    G = build_group(args.spec)
    dec = cyclic_classes(G)
    counts = [len(dec.classes[d]) for d in dec.spectrum]
    print(f"group: {G.name}")
    print(f"order: {G.order}")
    if G.order > 1:
        print(f"prime basis: {_basis_text(G.order)}")
    print(f"spectrum: ({', '.join(map(str, dec.spectrum))})")
    print(f"classes: ({', '.join(map(str, counts))})")
    print(f"{'d':>6} {'|Lambda(d)|':>12} {'phi(d)':>7} {'m(d)':>6} {'length':>7}")
    for d, m in zip(dec.spectrum, counts):
        print(f"{d:>6} {m * euler_phi(d):>12} {euler_phi(d):>7} {m:>6} {dec.length_of(d):>7}")
    print("strata:")
    for k, ds in dec.strata.items():
        size = len(stratum(dec, G, k))
        print(f"  k={k}: orders {' '.join(map(str, ds))} ({size} elements)")
    return 0


def cmd_classes(args) -> int:
    G = build_group(args.spec)
    dec = cyclic_classes(G)
    for d in dec.spectrum:
        for t, c in enumerate(dec.classes[d], start=1):
            names = ", ".join(G.display(g) for g in c.members)
            print(f"d={d} F{t}: {names}")
    return 0


def cmd_graph(args) -> int:
    G = build_group(args.spec)
    pg = build_power_graph(G)
    g = punctured_complement(pg) if args.complement else pg
    text = export_dot(g) if args.format == "dot" else export_edges(g)
    _emit(text, args.output)
    return 0


def _find_path(G, pg, oracle: bool, budget: int):
    if oracle:
        res = backtracking_hamiltonian(punctured_complement(pg), budget)
        return res.path, None, res.status
    path, trace = build_constructive_hamiltonian(G, cyclic_classes(G), pg)
    return path, trace, "found"


def cmd_hamiltonian(args) -> int:
    G = build_group(args.spec)
    pg = build_power_graph(G)
    try:
        path, trace, status = _find_path(G, pg, args.oracle, args.budget)
    except (PreconditionError, TheoremViolation) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    if path is None:
        print(f"no path: search {status}", file=sys.stderr)
        return 1 if status == "exhausted" else 2
    names = [G.display(v) for v in path]
    if args.format == "json":
        text = json.dumps(names) + "\n"
    else:
        text = "".join(n + "\n" for n in names)
    _emit(text, args.output)
    if args.trace and trace is not None:
        for k in trace.block_order:
            print(f"block k={k}: {len(trace.blocks[k])} vertices", file=sys.stderr)
        for g, h, hi, lo in trace.junctions:
            print(f"junction {G.display(g)} -> {G.display(h)} (stratum {hi} -> {lo})", file=sys.stderr)
    return 0


def cmd_label(args) -> int:
    G = build_group(args.spec)
    pg = build_power_graph(G)
    try:
        path, _, status = _find_path(G, pg, args.oracle, args.budget)
    except (PreconditionError, TheoremViolation) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    if path is None:
        print(f"no path: search {status}", file=sys.stderr)
        return 1 if status == "exhausted" else 2
    lab = labelling_from_path(pg, path)
    verdict = verify_l21(pg, lab)
    for g in sorted(lab.labels):
        print(f"{lab.labels[g]:>6}  {G.display(g)}")
    print(f"span = {lab.span}, verified = {verdict.valid}")
    return 0 if verdict.valid else 1


def cmd_lambda(args) -> int:
    G = build_group(args.spec)
    rep = lambda_of_group(G, str(parse_spec(args.spec)), exact=args.exact, max_span=args.max_span)
    print(rep.summary())
    if rep.note:
        print(rep.note, file=sys.stderr)
    if args.json:
        if rep.labelling is None:
            print("no witness labelling; JSON not written", file=sys.stderr)
        else:
            Path(args.json).write_text(rep.to_json(G))
    return 0 if rep.exact else 2


def cmd_check(args) -> int:
    results = checks.run_suite(args.suite)
    for r in results:
        print(r.line())
        for f in r.failures:
            print(f"  {f}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerlambda",
        description="Power graphs of finite groups and their L(2,1) lambda numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    spec_help = "group spec, e.g. A5, PSL2_7, D4, Q3, E2_3, X(C2,C3)"

    p = sub.add_parser("info", help="order, spectrum, cyclic classes and strata")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classes", help="list cyclic classes by order")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("graph", help="export the power graph")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--complement", action="store_true", help="punctured complement instead")
    p.add_argument("--format", choices=("dot", "edges"), default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    for name, func, text in (
        ("hamiltonian", cmd_hamiltonian, "Hamiltonian path in the punctured complement"),
        ("label", cmd_label, "L(2,1)-labelling of span |G| from a Hamiltonian path"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("spec", help=spec_help)
        p.add_argument("--oracle", action="store_true", help="use backtracking search")
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
        if name == "hamiltonian":
            p.add_argument("--format", choices=("text", "json"), default="text")
            p.add_argument("--trace", action="store_true", help="print blocks and junctions to stderr")
            p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("lambda", help="lambda number report")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--exact", action="store_true", help="force exhaustive search")
    p.add_argument("--max-span", type=int, default=None)
    p.add_argument("--json", metavar="FILE", help="write the witness labelling")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("check", help="run brute-force property suites")
    p.add_argument("suite", choices=("lemma21", "prop22", "thm23", "thm24", "thm11", "all"))
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupSpecError as exc:
        parser.print_usage(sys.stderr)
        print(f"powerlambda: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
