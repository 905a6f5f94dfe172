"""Signed and multisigned complete graphs: Hamiltonian cycle multisigns
from triangle multisigns, with brute-force verification."""

from .classify import (
    BalanceResult,
    Basis,
    HamiltonianClass,
    HamiltonianKind,
    TriangleClass,
    TriangleKind,
    classify_hamiltonian,
    classify_triangles,
    hourglass_condition,
    hourglass_swap,
    is_balanced,
)
from .core import (
    Multisign,
    MultisignedCompleteGraph,
    canonical_cycle,
    cycle_multisign,
    edge_sign,
    ms_from_text,
    ms_identity,
    ms_mul,
    ms_pow_parity,
    ms_to_text,
    triangle_multisign,
)
from .gen import GenSpec, gen_constant, gen_planted_mixed, gen_random, graph_space_iterator, switch
from .io import ParseError, parse_graph, serialize_graph
from .kernels import BACKEND
from .oracle import (
    enumerate_all_cycles,
    enumerate_hamiltonian,
    exhaustive_agreement,
    fan_decomposition_check,
)

__version__ = "0.1.0"
