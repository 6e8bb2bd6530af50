"""Power graphs, their punctured complements, and graph export.

Adjacency rows are Python ints used as bitsets: bit v of ``rows[u]`` is set
when u and v are adjacent. Row ``u`` exists for every id up to the largest
vertex; ids outside ``vertices`` have an empty row.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError
from .groups import FiniteGroup


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


class Graph:
    """Simple undirected graph on integer vertex ids."""

    def __init__(self, vertices: Sequence[int], rows: Sequence[int], orders=None):
        self.vertices = tuple(vertices)
        self.rows = list(rows)
        self.orders = orders
        self.vertex_mask = mask_of(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_adjacent(self, u: int, v: int) -> bool:
        if u == v:
            raise DomainError("adjacency is not defined for a vertex and itself")
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(u) for u in self.vertices), default=0)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def distance_two_mask(self, u: int) -> int:
        reach = 0
        for w in bits(self.rows[u]):
            reach |= self.rows[w]
        return reach & ~self.rows[u] & ~(1 << u)

    def at_distance_two(self, u: int, v: int) -> bool:
        if u == v:
            raise DomainError("distance is zero for a vertex and itself")
        if self.rows[u] >> v & 1:
            return False
        return bool(self.rows[u] & self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in self.vertices:
            for v in bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        m = mask_of(keep)
        rows = [0] * len(self.rows)
        for v in keep:
            rows[v] = self.rows[v] & m
        return Graph(keep, rows, self.orders)


class PowerGraph(Graph):
    """Power graph of a group: x ~ y iff one lies in the cyclic subgroup of the other."""

    def __init__(self, group: FiniteGroup, rows: Sequence[int]):
        super().__init__(range(group.order), rows, group.orders)
        self.group = group


class PuncturedComplement(Graph):
    """Complement of the power graph with the identity vertex removed."""

    def __init__(self, pg: PowerGraph):
        verts = range(1, pg.group.order)
        full = mask_of(verts)
        rows = [0] + [full & ~pg.rows[v] & ~(1 << v) for v in verts]
        super().__init__(verts, rows, pg.orders)
        self.power_graph = pg


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise DomainError("self-loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(range(n), rows)


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(range(n), [0] * n)


def build_power_graph(G: FiniteGroup) -> PowerGraph:
    if G.order < 2:
        raise DomainError("power graph needs a non-trivial group")
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    ar = np.arange(n)
    for pw in G.power_arrays():
        adj[ar, pw] = True
    adj |= adj.T
    adj[ar, ar] = False
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
    return PowerGraph(G, rows)


def punctured_complement(pg: PowerGraph) -> PuncturedComplement:
    return PuncturedComplement(pg)


def is_adjacent(pg: Graph, u: int, v: int) -> bool:
    return pg.is_adjacent(u, v)


def at_distance_two(pg: Graph, u: int, v: int) -> bool:
    return pg.at_distance_two(u, v)


def _vertex_label(g: Graph, v: int) -> str:
    if g.orders is None:
        return f"v{v}"
    return f"v{v} (ord={int(g.orders[v])})"


def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  v{v} [label="{_vertex_label(g, v)}"];')
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edges(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def read_edges(text: str, n: int) -> Graph:
    pairs = []
    for line in text.splitlines():
        if line.strip():
            u, v = line.split()
            pairs.append((int(u), int(v)))
    return from_edges(n, pairs)
