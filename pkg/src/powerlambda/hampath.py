"""Hamiltonian paths in the punctured complement of a power graph.

Two routes: the constructive algorithm built from cyclic classes and length
strata, and a generic depth-first search used as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError, PreconditionError, TheoremViolation
from .groups import FiniteGroup
from .powergraph import Graph, PowerGraph, bits, mask_of
from .spectrum import ClassDecomposition, CyclicClass, stratum

DEFAULT_NODE_BUDGET = 10**7
SCATTER_CHECK_LIMIT = 400


@dataclass(frozen=True)
class HamiltonianPath:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class Block:
    """One length stratum as an ordered list of per-order class sequences.

    The vertex sequence is the concatenation of the interleaved class paths.
    """

    length: int
    gammas: tuple[tuple[CyclicClass, ...], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(cs[0].order for cs in self.gammas)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for cs in self.gammas for v in gamma_path(cs))


@dataclass
class ConstructionTrace:
    gammas: dict[int, tuple[int, ...]] = field(default_factory=dict)
    blocks: dict[int, tuple[int, ...]] = field(default_factory=dict)
    junctions: list[tuple[int, int, int, int]] = field(default_factory=list)
    block_order: list[int] = field(default_factory=list)


def path_problem(
    pg: Graph, vertices: Sequence[int], expected: Iterable[int] | None = None
) -> str | None:
    """First defect of ``vertices`` as a path avoiding power-graph edges, or None.

    ``expected`` is the vertex set the path must cover; it defaults to every
    non-identity element.
    """
    want = set(expected) if expected is not None else set(pg.vertices) - {0}
    if len(set(vertices)) != len(vertices):
        return "repeated vertex"
    if set(vertices) != want:
        return f"covers {len(set(vertices))} vertices, expected {len(want)}"
    for a, b in zip(vertices, vertices[1:]):
        if pg.rows[a] >> b & 1:
            return f"consecutive vertices {a} and {b} are adjacent in the power graph"
    return None


def is_valid_path(pg: Graph, vertices: Sequence[int], expected: Iterable[int] | None = None) -> bool:
    return path_problem(pg, vertices, expected) is None


# ---------------------------------------------------------------------------
# constructive route


def gamma_path(classes: Sequence[CyclicClass]) -> tuple[int, ...]:
    """Interleave the classes of one order column by column."""
    if not classes:
        return ()
    d = classes[0].order
    if len(classes) < 2:
        raise PreconditionError(f"order {d} has a single cyclic class", [d])
    width = len(classes[0].members)
    return tuple(c.members[j] for j in range(width) for c in classes)


def join_same_length(paths: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(v for p in paths for v in p)


def make_block(dec: ClassDecomposition, k: int) -> Block:
    return Block(k, tuple(dec.classes[d] for d in dec.strata[k]))


def descend_junction(g: int, lower: Iterable[int], pg: PowerGraph) -> int:
    """Least vertex of ``lower`` not adjacent to ``g`` in the power graph."""
    cand = mask_of(lower) & ~pg.rows[g] & ~(1 << g)
    if not cand:
        raise TheoremViolation(f"vertex {g} is adjacent to the whole lower stratum")
    return (cand & -cand).bit_length() - 1


def rotate_block_to_start(block: Block, h: int) -> Block:
    """Reorder ``block`` so that its vertex sequence starts at ``h``."""
    for gi, classes in enumerate(block.gammas):
        for ci, c in enumerate(classes):
            if h in c.members:
                break
        else:
            continue
        pos = c.members.index(h)
        first = CyclicClass(c.order, c.members[pos:] + c.members[:pos])
        reordered = (first,) + classes[:ci] + classes[ci + 1:]
        rest = block.gammas[:gi] + block.gammas[gi + 1:]
        return Block(block.length, (reordered,) + rest)
    raise DomainError(f"vertex {h} is not in block of length {block.length}")


def check_preconditions(dec: ClassDecomposition) -> list[int]:
    """Orders with fewer than two cyclic classes."""
    return [d for d in dec.spectrum if len(dec.classes[d]) < 2]


def build_constructive_hamiltonian(
    G: FiniteGroup, dec: ClassDecomposition, pg: PowerGraph
) -> tuple[HamiltonianPath, ConstructionTrace]:
    bad = check_preconditions(dec)
    if bad:
        raise PreconditionError(
            "orders with a single cyclic class: " + ", ".join(map(str, bad)), bad
        )
    trace = ConstructionTrace()
    for d in dec.spectrum:
        trace.gammas[d] = gamma_path(dec.classes[d])
    lengths = sorted(dec.strata)
    top = make_block(dec, lengths[-1])
    path = list(top.vertices)
    trace.blocks[top.length] = tuple(path)
    trace.block_order.append(top.length)
    for hi, lo in zip(lengths[::-1], lengths[-2::-1]):
        g = path[-1]
        h = descend_junction(g, stratum(dec, G, lo), pg)
        block = rotate_block_to_start(make_block(dec, lo), h)
        seq = block.vertices
        trace.junctions.append((g, h, hi, lo))
        trace.blocks[lo] = seq
        trace.block_order.append(lo)
        path.extend(seq)
    problem = path_problem(pg, path)
    if problem:
        raise TheoremViolation(f"constructed sequence is not a Hamiltonian path: {problem}")
    return HamiltonianPath(tuple(path)), trace


# ---------------------------------------------------------------------------
# backtracking oracle


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found", "exhausted" or "budget"
    path: HamiltonianPath | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def _dead_end(graph: Graph, cur: int, unvisited: int) -> bool:
    # an unvisited vertex with <= 1 usable neighbour must be the final vertex
    live = unvisited | (1 << cur)
    ends = 0
    for u in bits(unvisited):
        deg = (graph.rows[u] & live).bit_count()
        if deg == 0:
            return True
        if deg == 1:
            ends += 1
            if ends > 1:
                return True
    return False


def _twin_classes(graph: Graph) -> list[list[int]]:
    groups: dict[tuple[bool, int], list[int]] = {}
    for v in graph.vertices:
        row = graph.rows[v] & graph.vertex_mask
        groups.setdefault((False, row), []).append(v)
        groups.setdefault((True, row | (1 << v)), []).append(v)
    out, used = [], set()
    for members in groups.values():
        members = [v for v in members if v not in used]
        if len(members) > 1:
            out.append(members)
            used.update(members)
    return out


def _components(graph: Graph, alive: int) -> int:
    count = 0
    while alive:
        frontier = alive & -alive
        seen = 0
        while frontier:
            seen |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= graph.rows[v]
            frontier = nxt & alive & ~seen
        alive &= ~seen
        count += 1
    return count


def _too_scattered(graph: Graph, classes: list[list[int]]) -> bool:
    """A path survives deleting X only if at most |X| + 1 pieces remain.

    Cut sets tried: the empty set, the neighbourhood of each vertex and of
    each twin class.
    """
    full = graph.vertex_mask
    cuts = {graph.rows[v] & full for v in graph.vertices}
    cuts.update(graph.rows[cls[0]] & full & ~mask_of(cls) for cls in classes)
    cuts.add(0)
    return any(_components(graph, full & ~x) > x.bit_count() + 1 for x in cuts)


def backtracking_hamiltonian(graph: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    verts = graph.vertices
    if len(verts) <= 1:
        return SearchResult("found", HamiltonianPath(tuple(verts)), 0)
    full = graph.vertex_mask
    degree = {v: (graph.rows[v] & full).bit_count() for v in verts}
    if any(d == 0 for d in degree.values()) or sum(d == 1 for d in degree.values()) > 2:
        return SearchResult("exhausted", None, 0)

    # twins are interchangeable on a path: visit each twin class in index order
    earlier_twin = {v: 0 for v in verts}
    for cls in _twin_classes(graph):
        for i, v in enumerate(cls):
            earlier_twin[v] = mask_of(cls[:i])

    def expand(v, unvisited):
        cands = [c for c in bits(graph.rows[v] & unvisited) if not earlier_twin[c] & unvisited]
        cands.sort(key=lambda c: ((graph.rows[c] & unvisited).bit_count(), c))
        return iter(cands)

    if len(verts) <= SCATTER_CHECK_LIMIT and _too_scattered(graph, _twin_classes(graph)):
        return SearchResult("exhausted", None, 0)
    nodes = 0
    for start in sorted(verts, key=lambda v: (degree[v], v)):
        if earlier_twin[start]:
            continue
        path = [start]
        unvisited = full & ~(1 << start)
        if _dead_end(graph, start, unvisited):
            continue
        stack = [expand(start, unvisited)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                unvisited |= 1 << path.pop()
                continue
            nodes += 1
            if nodes > node_budget:
                return SearchResult("budget", None, nodes)
            path.append(nxt)
            unvisited &= ~(1 << nxt)
            if not unvisited:
                return SearchResult("found", HamiltonianPath(tuple(path)), nodes)
            if _dead_end(graph, nxt, unvisited):
                path.pop()
                unvisited |= 1 << nxt
                continue
            stack.append(expand(nxt, unvisited))
    return SearchResult("exhausted", None, nodes)
