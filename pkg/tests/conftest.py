from functools import lru_cache
from itertools import permutations, product

import pytest

from powerlambda.groups import build_group
from powerlambda.powergraph import build_power_graph
from powerlambda.spectrum import cyclic_classes


@lru_cache(maxsize=None)
def cached(spec):
    G = build_group(spec)
    pg = build_power_graph(G)
    return G, pg, cyclic_classes(G)


@pytest.fixture
def bundle():
    return cached


# independent oracles ---------------------------------------------------------


def perm_order(p):
    """Order of a permutation tuple via lcm of cycle lengths."""
    from math import lcm

    seen, out = set(), 1
    for s in range(len(p)):
        if s in seen:
            continue
        k, x = 0, s
        while x not in seen:
            seen.add(x)
            x = p[x]
            k += 1
        out = lcm(out, k)
    return out


def is_even(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def alternating_orders(n):
    return sorted(perm_order(p) for p in permutations(range(n)) if is_even(p))


def psl2_orders(q):
    """Element orders of PSL(2, q) from 2x2 determinant-one matrices modulo +-I."""
    mats = [m for m in product(range(q), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % q == 1]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)

    ident, minus = (1, 0, 0, 1), (q - 1, 0, 0, q - 1)
    orders = []
    seen = set()
    for m in mats:
        neg = tuple((-x) % q for x in m)
        if neg in seen:
            continue
        seen.add(m)
        k, cur = 1, m
        while cur not in (ident, minus):
            cur = mul(cur, m)
            k += 1
        orders.append(k)
    return sorted(orders)
