from itertools import combinations

import pytest

from powerlambda.errors import DomainError
from powerlambda.powergraph import (
    at_distance_two,
    complete_graph,
    empty_graph,
    export_dot,
    export_edges,
    from_edges,
    is_adjacent,
    punctured_complement,
    read_edges,
)
from powerlambda.spectrum import stratum

UP_TO_360 = ["C5", "C6", "C12", "D3", "D6", "Q2", "Q3", "E2_2", "E2_3", "S4", "A4", "A5",
             "X(C2,C6)", "X(S3,S3)", "S5", "PSL2_7", "A6"]
NON_PRIME_POWER = ["C6", "C12", "D3", "D6", "Q3", "S4", "A4", "A5", "X(C2,C6)", "X(S3,S3)",
                   "S5", "PSL2_7", "A6"]


def brute_power_adjacent(G, x, y):
    # literal definition: x^a = y or y^b = x for some positive a, b
    def reaches(u, v):
        cur = u
        while cur != v:
            if cur == 0:
                return False
            cur = G.multiply(cur, u)
        return True

    return reaches(x, y) or reaches(y, x)


def test_cyclic_prime_is_complete(bundle):
    G, pg, _ = bundle("C5")
    assert all(pg.is_adjacent(u, v) for u, v in combinations(range(5), 2))
    comp = punctured_complement(pg)
    assert comp.n == 4 and comp.edges() == []


def test_cyclic_6(bundle):
    G, pg, _ = bundle("C6")
    o2 = [g for g in range(6) if G.orders[g] == 2]
    o3 = [g for g in range(6) if G.orders[g] == 3]
    for x in o2:
        for y in o3:
            assert not is_adjacent(pg, x, y)
            assert at_distance_two(pg, x, y)
    comp = punctured_complement(pg)
    want = sorted(tuple(sorted((x, y))) for x in o2 for y in o3)
    assert comp.edges() == want


def test_klein_four_complement_is_triangle(bundle):
    _, pg, _ = bundle("E2_2")
    comp = punctured_complement(pg)
    assert comp.edges() == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("spec", UP_TO_360)
def test_identity_is_universal(bundle, spec):
    G, pg, _ = bundle(spec)
    assert all(pg.is_adjacent(0, g) for g in range(1, G.order))


def test_power_of_element_is_adjacent(bundle):
    G, pg, _ = bundle("PSL2_7")
    for g in range(1, G.order):
        if G.orders[g] >= 3:
            assert pg.is_adjacent(g, G.power(g, 2))


def test_self_adjacency_is_an_error(bundle):
    _, pg, _ = bundle("C6")
    with pytest.raises(DomainError):
        pg.is_adjacent(3, 3)
    with pytest.raises(DomainError):
        pg.at_distance_two(3, 3)


def test_distance_two_on_small_graphs():
    k3 = complete_graph(3)
    assert not any(k3.at_distance_two(u, v) for u, v in combinations(range(3), 2))
    e2 = empty_graph(2)
    assert not e2.at_distance_two(0, 1)


@pytest.mark.parametrize("spec", UP_TO_360)
def test_adjacency_matches_power_definition(bundle, spec):
    G, pg, _ = bundle(spec)
    n = G.order
    if n > 200:
        pairs = [(x, y) for x in range(0, n, 7) for y in range(n) if x != y]
    else:
        pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for x, y in pairs:
        assert pg.is_adjacent(x, y) == brute_power_adjacent(G, x, y), (x, y)


@pytest.mark.parametrize("spec", UP_TO_360)
def test_symmetric_irreflexive_diameter_two(bundle, spec):
    G, pg, _ = bundle(spec)
    for u in range(G.order):
        assert not pg.rows[u] >> u & 1
        for v in range(u + 1, G.order):
            assert pg.is_adjacent(u, v) == pg.is_adjacent(v, u)
            assert pg.is_adjacent(u, v) or pg.at_distance_two(u, v)


@pytest.mark.parametrize("spec", NON_PRIME_POWER)
def test_same_length_orders_never_adjacent(bundle, spec):
    G, pg, dec = bundle(spec)
    for d1, d2 in combinations(dec.spectrum, 2):
        if dec.length_of(d1) != dec.length_of(d2):
            continue
        xs = [g for g in range(G.order) if G.orders[g] == d1]
        ys = [g for g in range(G.order) if G.orders[g] == d2]
        for x in xs:
            for y in ys:
                assert not brute_power_adjacent(G, x, y)


@pytest.mark.parametrize("spec", ["PSL2_7", "A6", "PSL2_11"])
def test_descent_partner_exists(bundle, spec):
    G, pg, dec = bundle(spec)
    levels = sorted(dec.strata)
    assert len(levels) >= 2
    for lo, hi in combinations(levels, 2):
        lower = stratum(dec, G, lo)
        for g in stratum(dec, G, hi):
            assert any(not brute_power_adjacent(G, g, h) for h in lower)


def test_dot_export():
    assert export_dot(complete_graph(2)) == (
        'graph G {\n  v0 [label="v0"];\n  v1 [label="v1"];\n  v0 -- v1;\n}\n'
    )
    text = export_dot(empty_graph(3))
    assert text.count("label=") == 3 and "--" not in text


def test_dot_export_power_graph(bundle):
    _, pg, _ = bundle("C3")
    text = export_dot(pg)
    assert 'v0 [label="v0 (ord=1)"]' in text and 'v1 [label="v1 (ord=3)"]' in text
    assert [l.strip() for l in text.splitlines() if "--" in l] == [
        "v0 -- v1;", "v0 -- v2;", "v1 -- v2;"
    ]


@pytest.mark.parametrize("spec", ["D6", "PSL2_7"])
def test_edge_list_round_trip(bundle, spec):
    G, pg, _ = bundle(spec)
    text = export_edges(pg)
    lines = text.splitlines()
    pairs = [tuple(map(int, l.split())) for l in lines]
    assert pairs == sorted(pairs) and all(u < v for u, v in pairs)
    back = read_edges(text, G.order)
    assert back.rows == pg.rows


def test_from_edges_rejects_loops():
    with pytest.raises(DomainError):
        from_edges(2, [(1, 1)])
