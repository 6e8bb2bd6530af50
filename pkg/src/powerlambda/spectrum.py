"""Order spectrum, cyclic classes and length strata of a finite group."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PrimeBasis, coprime_residues, euler_phi, factorize, order_length
from .errors import DomainError
from .groups import FiniteGroup


@dataclass(frozen=True)
class CyclicClass:
    """Generators of one cyclic subgroup of order ``order``, ascending by index."""

    order: int
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class ClassDecomposition:
    basis: PrimeBasis
    spectrum: tuple[int, ...]
    classes: dict[int, tuple[CyclicClass, ...]]
    strata: dict[int, tuple[int, ...]]

    def count(self, d: int) -> int:
        return class_count(self, d)

    def all_classes(self):
        for d in self.spectrum:
            yield from self.classes[d]

    def length_of(self, d: int) -> int:
        return order_length(d, self.basis)


def order_spectrum(G: FiniteGroup) -> tuple[int, ...]:
    if G.order < 2:
        raise DomainError("the trivial group has an empty order spectrum")
    return tuple(sorted(set(G.orders[1:].tolist())))


def elements_of_order(G: FiniteGroup, d: int) -> set[int]:
    return {g for g in range(G.order) if G.orders[g] == d}


def cyclic_classes(G: FiniteGroup) -> ClassDecomposition:
    spectrum = order_spectrum(G)
    basis = factorize(G.order)
    seen = [False] * G.order
    seen[0] = True
    found: dict[int, list[CyclicClass]] = {d: [] for d in spectrum}
    # g is the least unassigned index, so it is the least member of its class
    for g in range(1, G.order):
        if seen[g]:
            continue
        pw = G.powers(g)
        d = len(pw)
        members = tuple(sorted(pw[i] for i in coprime_residues(d)))
        for x in members:
            seen[x] = True
        found[d].append(CyclicClass(d, members))
    strata: dict[int, list[int]] = {}
    for d in spectrum:
        strata.setdefault(order_length(d, basis), []).append(d)
    return ClassDecomposition(
        basis=basis,
        spectrum=spectrum,
        classes={d: tuple(cs) for d, cs in found.items()},
        strata={k: tuple(ds) for k, ds in sorted(strata.items())},
    )


def class_count(dec: ClassDecomposition, d: int) -> int:
    if d not in dec.classes:
        raise DomainError(f"{d} is not an element order of this group")
    return len(dec.classes[d])


def stratum(dec: ClassDecomposition, G: FiniteGroup, k: int) -> set[int]:
    """Elements whose order has exponent-vector length ``k``."""
    if k < 1:
        raise DomainError("strata are indexed from k = 1")
    out: set[int] = set()
    for d in dec.strata.get(k, ()):
        for c in dec.classes[d]:
            out.update(c.members)
    return out


def lambda_sizes(dec: ClassDecomposition) -> dict[int, int]:
    """``|elements of order d|`` recovered as (number of classes) * phi(d)."""
    return {d: len(dec.classes[d]) * euler_phi(d) for d in dec.spectrum}
