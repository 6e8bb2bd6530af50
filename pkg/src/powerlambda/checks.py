"""Brute-force property suites over a fixed roster of catalog groups.

Adjacency here is recomputed from element powers, never read from the
power-graph bitsets, so each suite is an independent check on the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .groups import FiniteGroup, build_group
from .hampath import backtracking_hamiltonian, build_constructive_hamiltonian, check_preconditions, path_problem
from .labelling import exact_lambda, lambda_of_group
from .powergraph import build_power_graph, punctured_complement
from .spectrum import cyclic_classes, stratum

SIMPLE_ROSTER = ("A5", "A6", "A7", "PSL2_5", "PSL2_7", "PSL2_11", "PSL2_13")
TWO_STRATA_ROSTER = ("PSL2_7", "A6", "PSL2_11", "PSL2_13")
SMALL_ROSTER = tuple(
    [f"C{n}" for n in range(2, 13)]
    + ["D3", "D4", "D5", "D6", "Q2", "Q3", "E2_2", "E3_2", "E2_3", "S2", "S3", "A3", "A4"]
    + ["X(C2,C2)", "X(C2,C3)", "X(C2,C4)", "X(C2,C5)", "X(C2,C6)", "X(C3,C3)",
       "X(C3,C4)", "X(C2,X(C2,C2))"]
)
MEDIUM_ROSTER = tuple(
    ["C15", "C30", "D7", "D10", "D12", "D15", "Q4", "Q5", "Q6", "Q15", "E2_4", "E2_5", "E3_3",
     "E5_2", "E7_2", "S4", "A5", "PSL2_5", "X(C2,A4)", "X(C3,S3)", "X(S3,S3)", "X(E2_2,C5)",
     "X(C5,C5)", "X(S3,C5)", "X(A4,C5)", "X(E2_2,C3)", "X(C6,C6)"]
)
# (spec, clause of the classification it falls under)
KNOWN_RESULTS = (
    ("D3", "i"), ("D4", "i"), ("D5", "i"), ("D6", "i"),
    ("Q3", "ii"),
    ("E2_2", "iii-iv"), ("E3_2", "iii-iv"), ("E2_3", "iii-v"),
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.checked} checks, {len(self.failures)} failures"


@lru_cache(maxsize=None)
def group(spec: str) -> FiniteGroup:
    return build_group(spec)


@lru_cache(maxsize=None)
def _power_sets(spec: str) -> tuple[frozenset, ...]:
    G = group(spec)
    return tuple(frozenset(G.powers(x)) for x in range(G.order))


def brute_adjacent(G: FiniteGroup, x: int, y: int) -> bool:
    """Whether some positive power of x is y, or of y is x."""
    if G.spec is not None:
        sets = _power_sets(str(G.spec))
        return y in sets[x] or x in sets[y]
    return y in G.powers(x) or x in G.powers(y)


def lemma21(roster=SIMPLE_ROSTER, max_order=None) -> SuiteResult:
    res = SuiteResult("lemma21")
    for spec in roster:
        G = group(spec)
        if max_order is not None and G.order > max_order:
            continue
        dec = cyclic_classes(G)
        for d in dec.spectrum:
            res.checked += 1
            if len(dec.classes[d]) < 2:
                res.failures.append(f"{spec}: order {d} has {len(dec.classes[d])} cyclic class")
    return res


def prop22(roster=("PSL2_7",)) -> SuiteResult:
    res = SuiteResult("prop22")
    for spec in roster:
        G = group(spec)
        dec = cyclic_classes(G)
        if len(dec.basis.primes) < 2:
            continue
        level = {d: [g for g in range(G.order) if G.orders[g] == d] for d in dec.spectrum}
        for d1, d2 in combinations(dec.spectrum, 2):
            if dec.length_of(d1) != dec.length_of(d2):
                continue
            for x in level[d1]:
                for y in level[d2]:
                    res.checked += 1
                    if brute_adjacent(G, x, y):
                        res.failures.append(f"{spec}: {G.display(x)} ~ {G.display(y)}")
    return res


def thm23(roster=TWO_STRATA_ROSTER) -> SuiteResult:
    res = SuiteResult("thm23")
    for spec in roster:
        G = group(spec)
        dec = cyclic_classes(G)
        levels = {k: sorted(stratum(dec, G, k)) for k in dec.strata}
        for lo, hi in combinations(sorted(levels), 2):
            for g in levels[hi]:
                res.checked += 1
                if all(brute_adjacent(G, g, h) for h in levels[lo]):
                    res.failures.append(f"{spec}: {G.display(g)} adjacent to all of stratum {lo}")
    return res


def thm24(roster=SMALL_ROSTER) -> SuiteResult:
    """exact lambda = |G| exactly when the punctured complement has a Hamiltonian path."""
    res = SuiteResult("thm24")
    for spec in roster:
        G = group(spec)
        pg = build_power_graph(G)
        lam = exact_lambda(pg)
        search = backtracking_hamiltonian(punctured_complement(pg))
        res.checked += 1
        if search.status == "budget" or lam.status != "exact":
            res.failures.append(f"{spec}: inconclusive ({lam.status}, {search.status})")
        elif (lam.value == G.order) != search.found:
            res.failures.append(f"{spec}: lambda {lam.value} vs path {search.status}")
        elif lam.value < G.order:
            res.failures.append(f"{spec}: lambda {lam.value} below |G|")
    return res


def thm11(cases=KNOWN_RESULTS) -> SuiteResult:
    res = SuiteResult("thm11")
    for spec, clause in cases:
        G = group(spec)
        rep = lambda_of_group(G, spec)
        res.checked += 1
        if not (rep.exact and rep.value == G.order):
            res.failures.append(f"{spec} ({clause}): {rep.summary()}")
    return res


def cross_oracle(roster=SMALL_ROSTER + MEDIUM_ROSTER, max_order=60) -> SuiteResult:
    """The search oracle finds a path wherever the construction does.

    ``checked`` counts the groups on which the construction applies.
    """
    res = SuiteResult("cross-oracle")
    for spec in roster:
        G = group(spec)
        if G.order > max_order:
            continue
        pg = build_power_graph(G)
        dec = cyclic_classes(G)
        search = backtracking_hamiltonian(punctured_complement(pg))
        if search.found and path_problem(pg, search.path.vertices):
            res.failures.append(f"{spec}: oracle path fails validation")
        if check_preconditions(dec):
            continue
        res.checked += 1
        build_constructive_hamiltonian(G, dec, pg)
        if not search.found:
            res.failures.append(f"{spec}: constructive path exists but oracle reports {search.status}")
    return res


SUITES = {
    "lemma21": lemma21,
    "prop22": lambda: prop22(("PSL2_7", "A6", "PSL2_11", "S4", "X(A4,C5)", "D15", "X(S3,S3)")),
    "thm23": thm23,
    "thm24": thm24,
    "thm11": thm11,
}


def run_suite(name: str) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[n]() for n in names]
