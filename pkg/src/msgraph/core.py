"""Multisign group arithmetic and the complete-graph data model.

A multisign of width ``m`` is an element of ``{-1, +1}^m``.  It is stored as
an ``m``-bit integer where bit ``i`` set means component ``i`` is ``-1``, so
the group product is exclusive-or and every element is its own inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_WIDTH = 64

__all__ = [
    "MAX_WIDTH",
    "CycleError",
    "InvalidWidthError",
    "MultisignedCompleteGraph",
    "Multisign",
    "SignParseError",
    "VertexError",
    "WidthMismatchError",
    "canonical_cycle",
    "cycle_multisign",
    "edge_sign",
    "ms_from_text",
    "ms_identity",
    "ms_mul",
    "ms_pow_parity",
    "ms_to_text",
    "pair_index",
    "triangle_multisign",
    "validate_cycle",
]


class InvalidWidthError(ValueError):
    pass


class WidthMismatchError(ValueError):
    pass


class SignParseError(ValueError):
    """Malformed sign string; ``position`` is the 0-based offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class VertexError(ValueError):
    pass


class CycleError(ValueError):
    pass


def _check_width(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= MAX_WIDTH:
        raise InvalidWidthError(f"multisign width must be in [1, {MAX_WIDTH}], got {m!r}")


@dataclass(frozen=True, order=True)
class Multisign:
    width: int
    bits: int

    def __post_init__(self) -> None:
        _check_width(self.width)
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits:#x} do not fit width {self.width}")

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(-1 if (self.bits >> i) & 1 else 1 for i in range(self.width))

    def is_identity(self) -> bool:
        return self.bits == 0

    def __mul__(self, other: Multisign) -> Multisign:
        return ms_mul(self, other)

    def __str__(self) -> str:
        return ms_to_text(self)

    def __repr__(self) -> str:
        return f"Multisign({ms_to_text(self)!r})"

    @classmethod
    def from_components(cls, components: Sequence[int]) -> Multisign:
        bits = 0
        for i, c in enumerate(components):
            if c == -1:
                bits |= 1 << i
            elif c != 1:
                raise ValueError(f"component {i} must be +1 or -1, got {c!r}")
        return cls(len(components), bits)


def ms_identity(m: int) -> Multisign:
    _check_width(m)
    return Multisign(m, 0)


def ms_mul(a: Multisign, b: Multisign) -> Multisign:
    if a.width != b.width:
        raise WidthMismatchError(f"cannot multiply widths {a.width} and {b.width}")
    return Multisign(a.width, a.bits ^ b.bits)


def ms_pow_parity(g: Multisign, k: int) -> Multisign:
    """Return ``g**k``; every element is an involution, so only parity matters."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return g if k % 2 else Multisign(g.width, 0)


def ms_from_text(s: str) -> Multisign:
    if not s:
        raise SignParseError("empty sign string", 0)
    bits = 0
    for i, ch in enumerate(s):
        if i >= MAX_WIDTH:
            raise SignParseError(f"sign string longer than {MAX_WIDTH}", i)
        if ch == "-":
            bits |= 1 << i
        elif ch != "+":
            raise SignParseError(f"illegal character {ch!r}", i)
    return Multisign(len(s), bits)


def ms_to_text(g: Multisign) -> str:
    return "".join("-" if (g.bits >> i) & 1 else "+" for i in range(g.width))


def pair_index(n: int, u: int, v: int) -> int:
    """Flat upper-triangular index of the unordered pair ``{u, v}``."""
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class MultisignedCompleteGraph:
    """K_n with a width-``m`` multisign on every edge.

    ``edges`` holds raw bit encodings in pairing-index order; use
    :func:`edge_sign` for :class:`Multisign` values.
    """

    n: int
    m: int
    edges: tuple[int, ...]
    _matrix: tuple[tuple[int, ...], ...] | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"a complete graph needs n >= 3, got {self.n!r}")
        _check_width(self.m)
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.n * (self.n - 1) // 2:
            raise ValueError(
                f"expected {self.n * (self.n - 1) // 2} edges for n={self.n}, got {len(edges)}"
            )
        limit = 1 << self.m
        for k, b in enumerate(edges):
            if not isinstance(b, int) or not 0 <= b < limit:
                raise ValueError(f"edge {k} value {b!r} does not fit width {self.m}")

    @classmethod
    def from_signs(cls, n: int, signs: Iterable[Multisign]) -> MultisignedCompleteGraph:
        signs = list(signs)
        if not signs:
            raise ValueError("no edge signs given")
        m = signs[0].width
        for g in signs:
            if g.width != m:
                raise WidthMismatchError("edge multisigns of differing widths")
        return cls(n, m, tuple(g.bits for g in signs))

    @classmethod
    def from_function(cls, n: int, m: int, fn) -> MultisignedCompleteGraph:
        """Build from ``fn(u, v) -> Multisign | int`` evaluated for ``u < v``."""
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                g = fn(u, v)
                edges.append(g.bits if isinstance(g, Multisign) else g)
        return cls(n, m, tuple(edges))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Dense symmetric table of raw edge bits (diagonal is 0)."""
        if self._matrix is None:
            n = self.n
            rows = [[0] * n for _ in range(n)]
            k = 0
            for u in range(n):
                for v in range(u + 1, n):
                    rows[u][v] = rows[v][u] = self.edges[k]
                    k += 1
            object.__setattr__(self, "_matrix", tuple(tuple(r) for r in rows))
        return self._matrix

    def bits(self, u: int, v: int) -> int:
        return self.edges[pair_index(self.n, u, v)]


def _check_vertex(graph: MultisignedCompleteGraph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < graph.n:
        raise VertexError(f"vertex {v!r} out of range [0, {graph.n})")


def edge_sign(graph: MultisignedCompleteGraph, u: int, v: int) -> Multisign:
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    if u == v:
        raise VertexError(f"no loop edge at vertex {u}")
    return Multisign(graph.m, graph.bits(u, v))


def validate_cycle(graph: MultisignedCompleteGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise CycleError(f"a cycle needs at least 3 vertices, got {len(cycle)}")
    for v in cycle:
        _check_vertex(graph, v)
    if len(set(cycle)) != len(cycle):
        raise CycleError(f"repeated vertex in cycle {cycle}")
    return cycle


def _cycle_bits(graph: MultisignedCompleteGraph, cycle: Sequence[int]) -> int:
    rows = graph.matrix()
    acc = rows[cycle[-1]][cycle[0]]
    for a, b in zip(cycle, cycle[1:]):
        acc ^= rows[a][b]
    return acc


def cycle_multisign(graph: MultisignedCompleteGraph, cycle: Sequence[int]) -> Multisign:
    cycle = validate_cycle(graph, cycle)
    return Multisign(graph.m, _cycle_bits(graph, cycle))


def triangle_multisign(graph: MultisignedCompleteGraph, a: int, b: int, c: int) -> Multisign:
    for v in (a, b, c):
        _check_vertex(graph, v)
    if len({a, b, c}) != 3:
        raise VertexError(f"triangle vertices must be distinct, got {(a, b, c)}")
    return Multisign(graph.m, graph.bits(a, b) ^ graph.bits(b, c) ^ graph.bits(a, c))


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate the smallest vertex to the front, then orient so second < last."""
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot
