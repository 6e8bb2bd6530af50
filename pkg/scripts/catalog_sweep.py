#!/usr/bin/env python
"""Sweep lambda over a roster of catalog groups and print a table.

Usage:
    python scripts/catalog_sweep.py [--max-order N] [--csv out.csv] [SPEC ...]

Each row records which route settled the value (closed form for prime
order, the class construction, exhaustive search, or bounds only) and, for
comparison, the verdict of the backtracking path oracle.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from powerlambda import checks
from powerlambda.groups import build_group
from powerlambda.hampath import backtracking_hamiltonian
from powerlambda.labelling import lambda_of_group
from powerlambda.powergraph import build_power_graph, punctured_complement

DEFAULT = (
    checks.SMALL_ROSTER
    + checks.MEDIUM_ROSTER
    + ("S5", "PSL2_7", "A6", "PSL2_11", "PSL2_13", "A7", "D20", "Q8", "X(A5,C2)")
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("specs", nargs="*")
    ap.add_argument("--max-order", type=int, default=3000)
    ap.add_argument("--oracle-budget", type=int, default=200_000)
    ap.add_argument("--csv")
    args = ap.parse_args(argv)

    rows = []
    for spec in args.specs or DEFAULT:
        G = build_group(spec)
        if G.order > args.max_order:
            continue
        t0 = time.perf_counter()
        pg = build_power_graph(G)
        rep = lambda_of_group(G, spec, pg=pg)
        oracle = backtracking_hamiltonian(punctured_complement(pg), args.oracle_budget).status
        rows.append({
            "group": spec,
            "order": G.order,
            "method": rep.method,
            "lambda": rep.value if rep.value is not None else f">={rep.lower}",
            "equals_order": rep.value == G.order,
            "oracle": oracle,
            "seconds": round(time.perf_counter() - t0, 3),
        })
        r = rows[-1]
        print(f"{spec:<16} {G.order:>6} {r['method']:<13} {str(r['lambda']):>8} {oracle:<10} {r['seconds']:>7}")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
