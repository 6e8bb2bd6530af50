from collections import Counter
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from powerlambda.errors import ClosureSizeError, DomainError, GroupSpecError
from powerlambda.groups import (
    GroupSpec,
    build_group,
    close_generators,
    compose,
    cycle_notation,
    parse_spec,
    perm_from_cycles,
)

from conftest import alternating_orders, psl2_orders

SMALL = ["C2", "C7", "C12", "D3", "D4", "D7", "Q2", "Q3", "Q5", "E2_3", "E3_2", "S3", "S4",
         "A4", "A5", "PSL2_5", "X(C2,C3)", "X(S3,C2)"]


def test_dihedral_3_orders():
    G = build_group("D3")
    assert G.order == 6
    assert sorted(G.orders.tolist()) == [1, 2, 2, 2, 3, 3]


def test_alternating_5_matches_enumeration():
    G = build_group("A5")
    assert sorted(G.orders.tolist()) == alternating_orders(5)


@pytest.mark.parametrize("q", [5, 7])
def test_psl2_matches_matrix_enumeration(q):
    G = build_group(f"PSL2_{q}")
    assert sorted(G.orders.tolist()) == psl2_orders(q)


def test_psl2_7_spectrum():
    G = build_group("PSL2_7")
    assert G.order == 168
    assert sorted(set(G.orders.tolist()) - {1}) == [2, 3, 4, 7]


@pytest.mark.parametrize(
    "spec, order",
    [("C9", 9), ("D6", 12), ("Q4", 16), ("E2_4", 16), ("E5_2", 25), ("S5", 120), ("A6", 360),
     ("PSL2_11", 660), ("PSL2_13", 1092), ("A7", 2520), ("X(C3,D4)", 24), ("X(A5,C2)", 120)],
)
def test_advertised_orders(spec, order):
    G = build_group(spec)
    assert G.order == order == parse_spec(spec).expected_order()
    assert G.element_order(0) == 1
    assert int((G.orders == 1).sum()) == 1


def test_close_generators_examples():
    c3 = close_generators([perm_from_cycles(3, (0, 1, 2))])
    assert c3.order == 3
    s3 = close_generators([perm_from_cycles(3, (0, 1, 2)), perm_from_cycles(3, (0, 1))])
    assert s3.order == 6
    trivial = close_generators([])
    assert trivial.order == 1


def test_close_generators_rejects_non_permutation():
    with pytest.raises(DomainError):
        close_generators([(0, 0, 1)])


def test_close_generators_cap():
    gens = [perm_from_cycles(8, (0, 1)), perm_from_cycles(8, tuple(range(8)))]
    with pytest.raises(ClosureSizeError):
        close_generators(gens)
    assert close_generators(gens[:1], cap=10).order == 2


def test_power_examples():
    G = build_group("C6")
    a = G.gen_indices[0]
    assert G.power(a, 0) == 0
    assert G.element_order(G.power(a, 3)) == 2
    for g in range(G.order):
        assert G.power(g, G.element_order(g)) == 0
        assert G.power(g, 0) == 0


@pytest.mark.parametrize("spec", SMALL)
def test_group_axioms(spec):
    G = build_group(spec)
    T = G.table.astype(np.int64)
    n = G.order
    assert (T[0] == np.arange(n)).all() and (T[:, 0] == np.arange(n)).all()
    # associativity over all triples, vectorized over the third element
    for a in range(n):
        assert (T[T[a]] == T[a][T]).all()
    for g in range(n):
        assert G.multiply(g, G.inverse(g)) == 0 == G.multiply(G.inverse(g), g)
        assert sorted(T[g].tolist()) == list(range(n))
    assert all(n % d == 0 for d in G.orders.tolist())


@pytest.mark.parametrize("spec", SMALL + ["PSL2_7"])
def test_orders_are_minimal(spec):
    G = build_group(spec)
    for g in range(G.order):
        d = G.element_order(g)
        cur = g
        for m in range(1, d):
            assert cur != 0
            cur = G.multiply(cur, g)
        assert cur == 0


def test_untabled_group_multiplies_like_permutations():
    G = build_group("A7")
    assert G.table is None
    rng = np.random.default_rng(0)
    for _ in range(200):
        i, j = (int(x) for x in rng.integers(0, G.order, 2))
        assert G.elements[G.multiply(i, j)] == compose(G.elements[i], G.elements[j])


@pytest.mark.parametrize("n", range(3, 13))
def test_dihedral_involution_count(n):
    G = build_group(f"D{n}")
    count = int((G.orders == 2).sum())
    # brute force over the normal form a^i b^j of the presentation
    brute = 0
    for i, j in product(range(n), range(2)):
        x = (i, j)
        sq = ((i + (-1) ** j * i) % n, 0)
        brute += x != (0, 0) and sq == (0, 0)
    assert count == brute == (n if n % 2 else n + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_quaternion_single_involution(n):
    G = build_group(f"Q{n}")
    assert G.order == 4 * n
    assert int((G.orders == 2).sum()) == 1


def test_quaternion_relations():
    G = build_group("Q3")
    a, b = G.gen_indices
    assert G.power(a, 3) == G.power(b, 2)
    assert G.power(a, 6) == 0
    conj = G.multiply(G.multiply(G.inverse(b), a), b)
    assert conj == G.inverse(a)


@pytest.mark.parametrize(
    "text, family, params",
    [("C12", "cyclic", (12,)), ("D4", "dihedral", (4,)), ("Q3", "generalized-quaternion", (3,)),
     ("E2_3", "elementary-abelian", (2, 3)), ("S4", "symmetric", (4,)),
     ("A5", "alternating", (5,)), ("PSL2_7", "psl2", (7,))],
)
def test_parse_atoms(text, family, params):
    spec = parse_spec(text)
    assert spec.family == family and spec.params == params
    assert str(spec) == text


def test_parse_nested_product():
    spec = parse_spec("X(C2,X(C3,D4))")
    assert spec.family == "product"
    assert str(spec) == "X(C2,X(C3,D4))"
    assert build_group(spec).order == 2 * 3 * 8


@pytest.mark.parametrize(
    "text",
    ["Z5", "C1", "C4096", "D2", "Q1", "E4_2", "E2_12", "S8", "A2", "PSL2_3", "PSL2_17",
     "PSL2_9", "X(C2,C3", "X(C2)", "C5x", "X(A7,S4)", ""],
)
def test_parse_rejects(text):
    with pytest.raises(GroupSpecError):
        parse_spec(text)


def test_cycle_notation():
    assert cycle_notation((0, 1, 2)) == "()"
    assert cycle_notation((1, 2, 0, 4, 3)) == "(0 1 2)(3 4)"


def test_indexing_is_deterministic():
    a, b = build_group("PSL2_7"), build_group("PSL2_7")
    assert a.elements == b.elements
    assert [a.display(g) for g in range(a.order)] == [b.display(g) for g in range(b.order)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_power_laws(spec, data):
    G = build_group(spec)
    g = data.draw(st.integers(0, G.order - 1))
    m = data.draw(st.integers(0, 50))
    k = data.draw(st.integers(0, 50))
    assert G.multiply(G.power(g, m), G.power(g, k)) == G.power(g, m + k)
    assert G.power(G.power(g, m), k) == G.power(g, m * k)


def test_simple_flags():
    assert build_group("A5").simple and build_group("PSL2_7").simple
    assert not build_group("S5").simple and not build_group("A4").simple
    assert build_group("C7").simple
