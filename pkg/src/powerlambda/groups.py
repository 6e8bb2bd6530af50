"""Finite groups as indexed element tables.

Every group is enumerated by breadth-first closure over an ordered list of
generators, so element indices are reproducible: index 0 is the identity and
later indices follow shortest words first, ties broken by generator order.
Groups up to ``TABLE_LIMIT`` elements carry a full Cayley table; larger ones
multiply representatives on the fly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Hashable, Sequence

import numpy as np

from .arith import is_prime
from .errors import ClosureSizeError, DomainError, GroupSpecError

TABLE_LIMIT = 2048
DEFAULT_CAP = 10_000
MAX_ORDER = 10_000


class FiniteGroup:
    """A finite group on indices ``0..order-1`` with 0 the identity."""

    def __init__(
        self,
        elements: list[Hashable],
        mul: Callable[[Hashable, Hashable], Hashable],
        display: Callable[[Hashable], str],
        gen_indices: Sequence[int] = (),
        right_maps: Sequence[np.ndarray] = (),
        parents: Sequence[tuple[int, int]] = (),
        name: str = "group",
        simple: bool = False,
    ):
        self.elements = elements
        self.order = len(elements)
        self.name = name
        self.simple = simple
        self.gen_indices = tuple(gen_indices)
        self.spec = None
        self._mul = mul
        self._display = display
        self._index = {e: i for i, e in enumerate(elements)}
        self._powers: dict[int, tuple[int, ...]] = {}
        self.table = None
        if self.order <= TABLE_LIMIT:
            self.table = _cayley_table(self.order, right_maps, parents)
        self.orders = self._element_orders()

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __len__(self):
        return self.order

    def index_of(self, rep: Hashable) -> int:
        return self._index[rep]

    def display(self, g: int) -> str:
        return self._display(self.elements[g])

    def multiply(self, g: int, h: int) -> int:
        if self.table is not None:
            return int(self.table[g, h])
        return self._index[self._mul(self.elements[g], self.elements[h])]

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def powers(self, g: int) -> tuple[int, ...]:
        """``(g^0, g^1, ..., g^(d-1))`` where d is the order of g."""
        cached = self._powers.get(g)
        if cached is None:
            seq = [0]
            cur = g
            while cur != 0:
                seq.append(cur)
                cur = self.multiply(cur, g)
            cached = self._powers[g] = tuple(seq)
        return cached

    def power(self, g: int, m: int) -> int:
        if m < 0:
            raise DomainError("negative exponents are not supported")
        p = self.powers(g)
        return p[m % len(p)]

    def inverse(self, g: int) -> int:
        return self.power(g, self.element_order(g) - 1)

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    def power_arrays(self):
        """Yield arrays ``a_m`` with ``a_m[x] = x^m`` for m = 1 .. max element order."""
        n = self.order
        top = int(self.orders.max())
        if self.table is not None:
            ar = np.arange(n)
            pw = ar.copy()
            for _ in range(top):
                yield pw
                pw = self.table[pw, ar]
        else:
            for m in range(1, top + 1):
                yield np.fromiter((self.power(x, m) for x in range(n)), dtype=np.int64, count=n)

    def _element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        if self.table is not None:
            ar = np.arange(n)
            pw = ar.copy()
            m = 1
            while True:
                hit = (pw == 0) & (orders == 0)
                orders[hit] = m
                if orders.all():
                    return orders
                pw = self.table[pw, ar]
                m += 1
        for g in range(n):
            orders[g] = len(self.powers(g))
        return orders


def _cayley_table(n, right_maps, parents) -> np.ndarray:
    # column k equals column parent(k) pushed through right multiplication by its generator
    dtype = np.int16 if n < 2**15 else np.int32
    table = np.empty((n, n), dtype=dtype)
    table[:, 0] = np.arange(n)
    for k in range(1, n):
        pk, gi = parents[k]
        table[:, k] = right_maps[gi][table[:, pk]]
    return table


def closure(
    identity: Hashable,
    generators: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    display: Callable[[Hashable], str] = str,
    cap: int = DEFAULT_CAP,
    name: str = "group",
    simple: bool = False,
) -> FiniteGroup:
    """Enumerate the group generated by ``generators`` breadth-first."""
    elements = [identity]
    index = {identity: 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    right: list[list[int]] = [[] for _ in generators]
    i = 0
    while i < len(elements):
        x = elements[i]
        for gi, gen in enumerate(generators):
            y = mul(x, gen)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise ClosureSizeError(f"closure exceeds {cap} elements")
                index[y] = j
                elements.append(y)
                parents.append((i, gi))
            right[gi].append(j)
        i += 1
    gen_idx = [index[g] for g in generators]
    right_maps = [np.asarray(r, dtype=np.int64) for r in right]
    return FiniteGroup(elements, mul, display, gen_idx, right_maps, parents, name, simple)


# ---------------------------------------------------------------------------
# permutations


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """Apply g first, then h."""
    return tuple(h[x] for x in g)


def cycle_notation(p: tuple[int, ...], labels: Sequence[str] | None = None) -> str:
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        names = [labels[c] if labels else str(c) for c in cyc]
        parts.append("(" + " ".join(names) + ")")
    return "".join(parts) or "()"


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> tuple[int, ...]:
    p = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[a] = b
    return tuple(p)


def close_generators(
    perms: Sequence[Sequence[int]],
    degree: int | None = None,
    cap: int = DEFAULT_CAP,
    name: str = "perm",
    labels: Sequence[str] | None = None,
    simple: bool = False,
) -> FiniteGroup:
    """Subgroup of Sym(degree) generated by ``perms``; the empty set gives the trivial group."""
    gens = [tuple(int(x) for x in p) for p in perms]
    if degree is None:
        degree = len(gens[0]) if gens else 0
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise DomainError(f"{p} is not a permutation of range({degree})")
    return closure(
        tuple(range(degree)),
        gens,
        compose,
        lambda p: cycle_notation(p, labels),
        cap=cap,
        name=name,
        simple=simple,
    )


# ---------------------------------------------------------------------------
# catalog


def _word(parts: Sequence[tuple[str, int]]) -> str:
    out = [s if e == 1 else f"{s}^{e}" for s, e in parts if e]
    return " ".join(out) or "1"


def cyclic(n: int) -> FiniteGroup:
    return closure(
        0,
        [1 % n],
        lambda x, y: (x + y) % n,
        lambda x: _word([("a", x)]),
        name=f"C{n}",
        simple=is_prime(n),
    )


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: a^n = b^2 = 1, b^-1 a b = a^-1; elements stored as (i, j) = a^i b^j."""

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        return ((i1 + (-1) ** j1 * i2) % n, (j1 + j2) % 2)

    return closure(
        (0, 0),
        [(1, 0), (0, 1)],
        mul,
        lambda x: _word([("a", x[0]), ("b", x[1])]),
        name=f"D{n}",
    )


def quaternion(n: int) -> FiniteGroup:
    """Order 4n: a^n = b^2, a^2n = 1, b^-1 a b = a^-1; elements stored as a^i b^j."""
    m = 2 * n

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        i = i1 + (-1) ** j1 * i2 + (n if j1 + j2 == 2 else 0)
        return (i % m, (j1 + j2) % 2)

    return closure(
        (0, 0),
        [(1, 0), (0, 1)],
        mul,
        lambda x: _word([("a", x[0]), ("b", x[1])]),
        name=f"Q{n}",
    )


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    gens = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    return closure(
        (0,) * k,
        gens,
        lambda x, y: tuple((a + b) % p for a, b in zip(x, y)),
        lambda x: _word([(f"a{i + 1}", e) for i, e in enumerate(x)]),
        name=f"E{p}_{k}",
        simple=k == 1,
    )


def symmetric(n: int) -> FiniteGroup:
    gens = [perm_from_cycles(n, (0, 1)), perm_from_cycles(n, tuple(range(n)))] if n > 2 else [
        perm_from_cycles(n, (0, 1))
    ]
    return close_generators(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n == 3:
        gens = [perm_from_cycles(3, (0, 1, 2))]
    else:
        long = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens = [perm_from_cycles(n, (0, 1, 2)), perm_from_cycles(n, long)]
    return close_generators(gens, n, name=f"A{n}", simple=n >= 5 or n == 3)


def psl2(p: int) -> FiniteGroup:
    """PSL(2, p) acting on the projective line {0, ..., p-1, oo}; point p stands for oo."""
    inf = p
    shift = tuple(list((x + 1) % p for x in range(p)) + [inf])

    def neg_inv(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, p)) % p

    flip = tuple(neg_inv(x) for x in range(p + 1))
    labels = [str(x) for x in range(p)] + ["oo"]
    return close_generators([shift, flip], p + 1, name=f"PSL2_{p}", labels=labels, simple=True)


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    if g.order * h.order > MAX_ORDER:
        raise GroupSpecError(f"product order {g.order * h.order} exceeds {MAX_ORDER}")
    gens = [(a, 0) for a in g.gen_indices] + [(0, b) for b in h.gen_indices]
    return closure(
        (0, 0),
        gens,
        lambda x, y: (g.multiply(x[0], y[0]), h.multiply(x[1], y[1])),
        lambda x: f"({g.display(x[0])}, {h.display(x[1])})",
        name=name or f"X({g.name},{h.name})",
    )


# ---------------------------------------------------------------------------
# spec strings


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = field(default=())

    def __str__(self):
        f, p = self.family, self.params
        if f == "product":
            return f"X({self.factors[0]},{self.factors[1]})"
        if f == "elementary-abelian":
            return f"E{p[0]}_{p[1]}"
        if f == "psl2":
            return f"PSL2_{p[0]}"
        tag = {"cyclic": "C", "dihedral": "D", "generalized-quaternion": "Q",
               "symmetric": "S", "alternating": "A"}[f]
        return f"{tag}{p[0]}"

    def expected_order(self) -> int:
        f, p = self.family, self.params
        if f == "cyclic":
            return p[0]
        if f == "dihedral":
            return 2 * p[0]
        if f == "generalized-quaternion":
            return 4 * p[0]
        if f == "elementary-abelian":
            return p[0] ** p[1]
        if f == "symmetric":
            return factorial(p[0])
        if f == "alternating":
            return factorial(p[0]) // 2
        if f == "psl2":
            q = p[0]
            return q * (q - 1) * (q + 1) // 2
        a, b = self.factors
        return a.expected_order() * b.expected_order()

    def validate(self) -> "GroupSpec":
        f, p = self.family, self.params
        bad = None
        if f == "cyclic" and not 2 <= p[0] <= 2048:
            bad = "C<n> needs 2 <= n <= 2048"
        elif f == "dihedral" and p[0] < 3:
            bad = "D<n> needs n >= 3"
        elif f == "generalized-quaternion" and p[0] < 2:
            bad = "Q<n> needs n >= 2"
        elif f == "elementary-abelian" and not (is_prime(p[0]) and p[1] >= 1 and p[0] ** p[1] <= 2048):
            bad = "E<p>_<k> needs p prime, k >= 1, p^k <= 2048"
        elif f == "symmetric" and not 2 <= p[0] <= 7:
            bad = "S<n> needs 2 <= n <= 7"
        elif f == "alternating" and not 3 <= p[0] <= 7:
            bad = "A<n> needs 3 <= n <= 7"
        elif f == "psl2" and not (is_prime(p[0]) and 5 <= p[0] <= 13):
            bad = "PSL2_<p> needs p prime, 5 <= p <= 13"
        elif f == "product":
            for sub in self.factors:
                sub.validate()
            if self.expected_order() > MAX_ORDER:
                bad = f"product order exceeds {MAX_ORDER}"
        if bad:
            raise GroupSpecError(f"{self}: {bad}")
        if self.expected_order() > MAX_ORDER:
            raise GroupSpecError(f"{self}: order exceeds {MAX_ORDER}")
        return self


_ATOM = re.compile(r"PSL2_(\d+)|E(\d+)_(\d+)|([CDQSA])(\d+)")
_TAGS = {"C": "cyclic", "D": "dihedral", "Q": "generalized-quaternion", "S": "symmetric", "A": "alternating"}


def parse_spec(text: str) -> GroupSpec:
    text = text.strip()
    spec, pos = _parse(text, 0)
    if pos != len(text):
        raise GroupSpecError(f"trailing input in group spec {text!r} at {pos}")
    return spec.validate()


def _parse(text: str, pos: int) -> tuple[GroupSpec, int]:
    if text.startswith("X(", pos):
        left, pos = _parse(text, pos + 2)
        if not text.startswith(",", pos):
            raise GroupSpecError(f"expected ',' at {pos} in {text!r}")
        right, pos = _parse(text, pos + 1)
        if not text.startswith(")", pos):
            raise GroupSpecError(f"expected ')' at {pos} in {text!r}")
        return GroupSpec("product", (), (left, right)), pos + 1
    m = _ATOM.match(text, pos)
    if not m:
        raise GroupSpecError(f"unknown group spec at {pos} in {text!r}")
    if m.group(1):
        spec = GroupSpec("psl2", (int(m.group(1)),))
    elif m.group(2):
        spec = GroupSpec("elementary-abelian", (int(m.group(2)), int(m.group(3))))
    else:
        spec = GroupSpec(_TAGS[m.group(4)], (int(m.group(5)),))
    return spec, m.end()


def build_group(spec: GroupSpec | str) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    else:
        spec.validate()
    f, p = spec.family, spec.params
    if f == "cyclic":
        G = cyclic(p[0])
    elif f == "dihedral":
        G = dihedral(p[0])
    elif f == "generalized-quaternion":
        G = quaternion(p[0])
    elif f == "elementary-abelian":
        G = elementary_abelian(*p)
    elif f == "symmetric":
        G = symmetric(p[0])
    elif f == "alternating":
        G = alternating(p[0])
    elif f == "psl2":
        G = psl2(p[0])
    else:
        G = direct_product(build_group(spec.factors[0]), build_group(spec.factors[1]))
    G.name = str(spec)
    G.spec = spec
    assert G.order == spec.expected_order(), (str(spec), G.order)
    return G
