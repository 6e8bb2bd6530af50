"""L(2,1)-labellings: verification, construction from a path, exact search."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .arith import is_prime
from .errors import DomainError, PreconditionError
from .groups import FiniteGroup
from .hampath import HamiltonianPath, build_constructive_hamiltonian, path_problem
from .powergraph import Graph, PowerGraph, bits, build_power_graph
from .spectrum import cyclic_classes

EXACT_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class L21Labelling:
    labels: Mapping[int, int]
    span: int = field(default=-1)

    def __post_init__(self):
        real = max(self.labels.values()) - min(self.labels.values()) if self.labels else 0
        if self.span == -1:
            object.__setattr__(self, "span", real)
        elif self.span != real:
            raise DomainError(f"stored span {self.span} differs from label range {real}")


@dataclass(frozen=True)
class Verdict:
    valid: bool
    pair: tuple[int, int] | None = None
    condition: str | None = None  # "i" (adjacent, gap < 2) or "ii" (distance two, equal)

    def __bool__(self):
        return self.valid


def verify_l21(graph: Graph, lab: L21Labelling) -> Verdict:
    f = lab.labels
    missing = [v for v in graph.vertices if v not in f]
    if missing:
        raise DomainError(f"vertex {missing[0]} has no label")
    by_label: dict[int, int] = {}
    for v in graph.vertices:
        by_label[f[v]] = by_label.get(f[v], 0) | (1 << v)
    for u in graph.vertices:
        x = f[u]
        near = by_label.get(x - 1, 0) | by_label.get(x, 0) | by_label.get(x + 1, 0)
        hit = graph.rows[u] & near
        if hit:
            v = (hit & -hit).bit_length() - 1
            return Verdict(False, (min(u, v), max(u, v)), "i")
        hit = graph.distance_two_mask(u) & by_label.get(x, 0)
        if hit:
            v = (hit & -hit).bit_length() - 1
            return Verdict(False, (min(u, v), max(u, v)), "ii")
    return Verdict(True)


def labelling_from_path(pg: PowerGraph, path: HamiltonianPath) -> L21Labelling:
    """Identity gets 0 and the i-th path vertex gets i + 1, so the span is |G|."""
    problem = path_problem(pg, list(path))
    if problem:
        raise DomainError(f"not a Hamiltonian path of the punctured complement: {problem}")
    labels = {0: 0}
    for i, v in enumerate(path, start=1):
        labels[v] = i + 1
    return L21Labelling(labels)


# ---------------------------------------------------------------------------
# exact search


@dataclass(frozen=True)
class ExactResult:
    status: str  # "exact" or "cap"
    value: int | None
    labelling: L21Labelling | None
    last_infeasible: int | None


def _feasible(order, pos_nbr, pos_d2, pos_twin, distinct, s):
    n = len(order)
    full = (1 << (s + 1)) - 1
    doms = [full] * n
    # reflection f -> s - f lets the first vertex take the lower half
    doms[0] = (1 << (s // 2 + 1)) - 1
    labels = [0] * n

    def go(i, doms):
        if i == n:
            return True
        for lab in bits(doms[i]):
            near = ~(7 << lab >> 1)
            same = ~(1 << lab)
            above = ~((2 << lab) - 1)
            new = doms[:]
            ok = True
            for j in pos_nbr[i]:
                new[j] &= near
                if not new[j]:
                    ok = False
                    break
            if ok:
                for j in pos_d2[i]:
                    new[j] &= same
                    if not new[j]:
                        ok = False
                        break
            if ok:
                for j in pos_twin[i]:
                    new[j] &= above
                    if not new[j]:
                        ok = False
                        break
            if ok and distinct:
                free = 0
                for j in range(i + 1, n):
                    free |= new[j]
                ok = free.bit_count() >= n - i - 1
            if ok:
                labels[i] = lab
                if go(i + 1, new):
                    return True
        return False

    return labels if go(0, doms) else None


def twin_classes(graph: Graph) -> list[list[int]]:
    """Vertices with equal open or equal closed neighbourhoods.

    Swapping the labels of two such vertices keeps every L(2,1) constraint,
    so the search may require labels to increase along each class. Isolated
    vertices are skipped: they may share a label.
    """
    key: dict[tuple[str, int], list[int]] = {}
    for v in graph.vertices:
        row = graph.rows[v] & graph.vertex_mask
        if not row:
            continue
        closed = row | (1 << v)
        key.setdefault(("open", row), []).append(v)
        key.setdefault(("closed", closed), []).append(v)
    out, used = [], set()
    for members in key.values():
        members = [v for v in members if v not in used]
        if len(members) > 1:
            out.append(members)
            used.update(members)
    return out


def exact_lambda(graph: Graph, span_cap: int | None = None) -> ExactResult:
    """Least span of an L(2,1)-labelling, by depth-first search over spans upward."""
    verts = list(graph.vertices)
    if not verts:
        return ExactResult("exact", 0, L21Labelling({}), None)
    order = sorted(verts, key=lambda v: (-graph.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    later = lambda i, ws: [pos[w] for w in ws if pos[w] > i]
    pos_nbr = [later(i, bits(graph.rows[v] & graph.vertex_mask)) for i, v in enumerate(order)]
    pos_d2 = [later(i, bits(graph.distance_two_mask(v) & graph.vertex_mask)) for i, v in enumerate(order)]
    pos_twin = [[] for _ in order]
    for cls in twin_classes(graph):
        ps = sorted(pos[v] for v in cls)
        for a, b in zip(ps, ps[1:]):
            pos_twin[a].append(b)
    # every pair adjacent or at distance two forces pairwise distinct labels
    distinct = all(
        len(pos_nbr[i]) + len(pos_d2[i]) == len(order) - 1 - i for i in range(len(order))
    )
    top = graph.max_degree()
    start = top + 1 if top else 0
    if span_cap is None:
        span_cap = max(2 * (len(verts) - 1), start)
    last_bad = start - 1 if start else None
    for s in range(start, span_cap + 1):
        found = _feasible(order, pos_nbr, pos_d2, pos_twin, distinct, s)
        if found is not None:
            lab = L21Labelling({v: found[pos[v]] for v in sorted(verts)})
            return ExactResult("exact", lab.span, lab, last_bad)
        last_bad = s
    return ExactResult("cap", None, None, last_bad)


# ---------------------------------------------------------------------------
# reports


@dataclass
class LambdaReport:
    group: str
    order: int
    method: str  # "constructive", "exact-search", "closed-form" or "bounds"
    value: int | None
    lower: int
    upper: int | None
    labelling: L21Labelling | None
    verified: bool
    note: str = ""

    @property
    def exact(self) -> bool:
        return self.value is not None and self.verified

    def summary(self) -> str:
        if self.exact:
            tag = self.method if self.method == "closed-form" else f"{self.method}, verified"
            return f"lambda = {self.value} ({tag})"
        hi = "?" if self.upper is None else str(self.upper)
        return f"{self.lower} <= lambda <= {hi} (bounds only)"

    def to_json(self, G: FiniteGroup) -> str:
        if self.labelling is None:
            raise DomainError("no witness labelling to serialize")
        labels = self.labelling.labels
        doc = {
            "group": self.group,
            "order": self.order,
            "method": self.method,
            "span": self.labelling.span,
            "labels": [{"element": G.display(g), "label": labels[g]} for g in sorted(labels)],
            "verified": self.verified,
        }
        return json.dumps(doc, indent=2) + "\n"


def lambda_of_group(
    G: FiniteGroup,
    spec: str | None = None,
    exact: bool = False,
    max_span: int | None = None,
    pg: PowerGraph | None = None,
) -> LambdaReport:
    name = spec or G.name
    n = G.order
    pg = pg or build_power_graph(G)

    def from_search(note=""):
        res = exact_lambda(pg, max_span)
        if res.status == "exact":
            ok = verify_l21(pg, res.labelling).valid
            return LambdaReport(name, n, "exact-search", res.value, res.value, res.value,
                                res.labelling, ok, note)
        lower = max(n, (res.last_infeasible or 0) + 1)
        return LambdaReport(name, n, "bounds", None, lower, None, None, False,
                            note or "exact search hit the span cap")

    if exact:
        return from_search()
    if is_prime(n):
        lab = L21Labelling({g: 2 * g for g in range(n)})
        ok = verify_l21(pg, lab).valid
        return LambdaReport(name, n, "closed-form", 2 * (n - 1), 2 * (n - 1), 2 * (n - 1), lab, ok)
    dec = cyclic_classes(G)
    try:
        path, _ = build_constructive_hamiltonian(G, dec, pg)
    except PreconditionError as exc:
        note = f"construction not applicable: {exc}"
    else:
        lab = labelling_from_path(pg, path)
        ok = verify_l21(pg, lab).valid and lab.span == n
        return LambdaReport(name, n, "constructive", n, n, n, lab, ok)
    if n <= EXACT_VERTEX_LIMIT:
        return from_search(note)
    return LambdaReport(name, n, "bounds", None, n, None, None, False, note)
