"""Power graphs of finite groups and optimal L(2,1)-labellings."""

from .groups import FiniteGroup, GroupSpec, build_group, close_generators, parse_spec
from .hampath import (
    HamiltonianPath,
    backtracking_hamiltonian,
    build_constructive_hamiltonian,
)
from .labelling import L21Labelling, exact_lambda, lambda_of_group, verify_l21
from .powergraph import PowerGraph, build_power_graph, punctured_complement
from .spectrum import ClassDecomposition, cyclic_classes, order_spectrum

__all__ = [
    "ClassDecomposition",
    "FiniteGroup",
    "GroupSpec",
    "HamiltonianPath",
    "L21Labelling",
    "PowerGraph",
    "backtracking_hamiltonian",
    "build_constructive_hamiltonian",
    "build_group",
    "build_power_graph",
    "close_generators",
    "cyclic_classes",
    "exact_lambda",
    "lambda_of_group",
    "order_spectrum",
    "parse_spec",
    "punctured_complement",
    "verify_l21",
]
