"""Polynomial-time classification of triangle and Hamiltonian-cycle multisigns.

For ``n >= 4`` the Hamiltonian cycles of a multisigned K_n share a single
multisign exactly when all triangles do.  If every triangle has multisign
``h``, every Hamiltonian cycle has multisign ``h**(n-2)``: ``h`` for odd
``n`` and the identity for even ``n``.  Otherwise at least two Hamiltonian
multisigns occur.  No Hamiltonian cycle is ever enumerated on that path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .core import (
    CycleError,
    Multisign,
    MultisignedCompleteGraph,
    cycle_multisign,
    ms_pow_parity,
)

__all__ = [
    "BalanceResult",
    "Basis",
    "HamiltonianClass",
    "HamiltonianKind",
    "TriangleClass",
    "TriangleKind",
    "classify_hamiltonian",
    "classify_triangles",
    "hourglass_condition",
    "hourglass_swap",
    "is_balanced",
]

Triple = tuple[int, int, int]


class TriangleKind(enum.Enum):
    ALL_EQUAL = "ALL_EQUAL"
    MIXED = "MIXED"


class HamiltonianKind(enum.Enum):
    ALL_SAME = "ALL_SAME"
    MIXED = "MIXED"


class Basis(enum.Enum):
    THEOREM = "THEOREM"
    BRUTE_FORCE = "BRUTE_FORCE"


@dataclass(frozen=True)
class TriangleClass:
    kind: TriangleKind
    value: Multisign | None = None
    witness: tuple[tuple[Triple, Multisign], tuple[Triple, Multisign]] | None = None

    def __str__(self) -> str:
        if self.kind is TriangleKind.ALL_EQUAL:
            return f"ALL_EQUAL {self.value}"
        (t1, g1), (t2, g2) = self.witness
        return f"MIXED {t1}={g1} {t2}={g2}"


@dataclass(frozen=True)
class HamiltonianClass:
    kind: HamiltonianKind
    value: Multisign | None
    basis: Basis

    def __str__(self) -> str:
        if self.kind is HamiltonianKind.ALL_SAME:
            return f"ALL_SAME {self.value}"
        return "MIXED"


@dataclass(frozen=True)
class BalanceResult:
    """Balance verdict; ``certificate`` is a non-identity triangle when unbalanced."""

    balanced: bool
    certificate: Triple | None = None

    def __bool__(self) -> bool:
        return self.balanced


def classify_triangles(graph: MultisignedCompleteGraph) -> TriangleClass:
    """Sweep all triangles in lexicographic order.

    A MIXED witness pairs (0, 1, 2) with the lexicographically first
    triangle whose multisign differs from it.
    """
    first, other = kernels.triangle_sweep(graph.n, graph.edges)
    g = Multisign(graph.m, first)
    if other is None:
        return TriangleClass(TriangleKind.ALL_EQUAL, g)
    a, b, c = other
    h = Multisign(graph.m, graph.bits(a, b) ^ graph.bits(b, c) ^ graph.bits(a, c))
    return TriangleClass(TriangleKind.MIXED, witness=(((0, 1, 2), g), (other, h)))


def classify_hamiltonian(graph: MultisignedCompleteGraph) -> HamiltonianClass:
    n = graph.n
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n == 3:
        # K_3 has one Hamiltonian cycle, the triangle itself
        return HamiltonianClass(
            HamiltonianKind.ALL_SAME, cycle_multisign(graph, (0, 1, 2)), Basis.BRUTE_FORCE
        )
    tri = classify_triangles(graph)
    if tri.kind is TriangleKind.MIXED:
        return HamiltonianClass(HamiltonianKind.MIXED, None, Basis.THEOREM)
    return HamiltonianClass(
        HamiltonianKind.ALL_SAME, ms_pow_parity(tri.value, n - 2), Basis.THEOREM
    )


def is_balanced(graph: MultisignedCompleteGraph) -> BalanceResult:
    """Check balance in O(n^2) with the vertex potential theta(v) = sigma(0v).

    The graph is balanced iff sigma(uv) = theta(u) theta(v) on every edge.
    The first violating edge ``(u, v)`` gives the certificate ``(0, u, v)``,
    which is also the lexicographically first non-identity triangle.
    """
    bad = kernels.potential_violation(graph.n, graph.edges)
    if bad is None:
        return BalanceResult(True)
    return BalanceResult(False, (0, bad[0], bad[1]))


def _hourglass_corners(cycle: Sequence[int], i: int, j: int) -> tuple[int, int, int, int]:
    k = len(cycle)
    if k < 4:
        raise CycleError("an hourglass swap needs a cycle of length >= 4")
    if not 0 <= i < j < k:
        raise CycleError(f"positions must satisfy 0 <= i < j < {k}, got i={i}, j={j}")
    corners = (cycle[i], cycle[(i + 1) % k], cycle[j], cycle[(j + 1) % k])
    if len(set(corners)) != 4:
        raise CycleError(f"boundary vertices {corners} are not distinct")
    return corners


def hourglass_swap(cycle: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Reverse the segment at positions ``i+1 .. j`` (0-based, inclusive)."""
    cycle = tuple(cycle)
    if len(set(cycle)) != len(cycle):
        raise CycleError(f"repeated vertex in cycle {cycle}")
    _hourglass_corners(cycle, i, j)
    return cycle[: i + 1] + cycle[i + 1 : j + 1][::-1] + cycle[j + 1 :]


def hourglass_condition(
    graph: MultisignedCompleteGraph, cycle: Sequence[int], i: int, j: int
) -> bool:
    """True iff sigma(a a') sigma(b b') = sigma(a b) sigma(a' b').

    Here ``a, a'`` are the vertices at positions ``i, i+1`` and ``b, b'`` those
    at ``j, j+1`` (cyclically).  This holds exactly when the cycle and its
    :func:`hourglass_swap` have the same multisign.
    """
    a, a2, b, b2 = _hourglass_corners(tuple(cycle), i, j)
    for v in (a, a2, b, b2):
        if not 0 <= v < graph.n:
            raise CycleError(f"vertex {v} out of range [0, {graph.n})")
    return graph.bits(a, a2) ^ graph.bits(b, b2) == graph.bits(a, b) ^ graph.bits(a2, b2)
