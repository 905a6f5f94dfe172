"""Deterministic graph generators.

All randomness comes from :class:`SplitMix64`, a fixed 64-bit generator with
published constants, so a seed reproduces the same graph on every platform
and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, MutableSequence, Sequence

from .core import (
    MAX_WIDTH,
    Multisign,
    MultisignedCompleteGraph,
    WidthMismatchError,
)

MASK64 = (1 << 64) - 1
SPACE_CAP_BITS = 24

__all__ = [
    "GenSpec",
    "SPACE_CAP_BITS",
    "SpaceTooLargeError",
    "SplitMix64",
    "gen_constant",
    "gen_planted_mixed",
    "gen_random",
    "generate",
    "graph_from_index",
    "graph_space_iterator",
    "graph_to_index",
    "random_multisign",
    "rng_for",
    "switch",
]


class SpaceTooLargeError(ValueError):
    def __init__(self, bits: int):
        super().__init__(
            f"graph space has 2^{bits} = {1 << bits} members, above the cap 2^{SPACE_CAP_BITS}"
        )
        self.bits = bits
        self.size = 1 << bits


class SplitMix64:
    """SplitMix64 (Steele, Lea and Flood, 2014)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bits(self, k: int) -> int:
        """``k`` uniform random bits, ``0 <= k <= 64``."""
        return self.next_u64() >> (64 - k) if k else 0

    def randbelow(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        # rejection keeps the result unbiased
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.randbelow(hi - lo + 1)

    def shuffle(self, seq: MutableSequence) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def rng_for(seed: int, *salt: int) -> SplitMix64:
    """Generator whose stream depends on ``seed`` and every salt value."""
    rng = SplitMix64(seed)
    for s in salt:
        rng = SplitMix64(rng.next_u64() ^ (s & MASK64))
    return rng


def random_multisign(rng: SplitMix64, m: int) -> Multisign:
    return Multisign(m, rng.bits(m))


@dataclass(frozen=True)
class GenSpec:
    """Generator parameters; ``model`` is constant, random, planted-mixed or all."""

    n: int
    m: int = 1
    model: str = "random"
    sign: Multisign | None = None
    seed: int = 0
    neg_prob: float = 0.5
    start: int = 0
    stop: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        if not 1 <= self.m <= MAX_WIDTH:
            raise ValueError(f"need 1 <= m <= {MAX_WIDTH}, got {self.m}")
        if self.model not in ("constant", "random", "planted-mixed", "all"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "constant" and self.sign is None:
            raise ValueError("constant model needs a sign")
        if not 0.0 <= self.neg_prob <= 1.0:
            raise ValueError(f"neg_prob must lie in [0, 1], got {self.neg_prob}")
        if self.model == "planted-mixed" and self.n < 4:
            raise ValueError("planted-mixed needs n >= 4")


def gen_constant(n: int, m: int, g: Multisign) -> MultisignedCompleteGraph:
    if g.width != m:
        raise WidthMismatchError(f"sign width {g.width} does not match m={m}")
    return MultisignedCompleteGraph(n, m, (g.bits,) * (n * (n - 1) // 2))


def gen_random(spec: GenSpec) -> MultisignedCompleteGraph:
    """Each edge component is -1 independently with probability ``neg_prob``.

    The stream is ``rng_for(seed, n, m)``; one draw per (edge, component) in
    pairing-index order then component order.
    """
    p = spec.neg_prob
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"neg_prob must lie in [0, 1], got {p}")
    rng = rng_for(spec.seed, spec.n, spec.m)
    edges = []
    for _ in range(spec.n * (spec.n - 1) // 2):
        b = 0
        for c in range(spec.m):
            if rng.random() < p:
                b |= 1 << c
        edges.append(b)
    return MultisignedCompleteGraph(spec.n, spec.m, tuple(edges))


def switch(graph: MultisignedCompleteGraph, theta: Sequence[Multisign]) -> MultisignedCompleteGraph:
    """Re-sign every edge as theta(u) sigma(uv) theta(v)."""
    if len(theta) != graph.n:
        raise ValueError(f"need one selector per vertex ({graph.n}), got {len(theta)}")
    for t in theta:
        if t.width != graph.m:
            raise WidthMismatchError(f"selector width {t.width} does not match m={graph.m}")
    tb = [t.bits for t in theta]
    edges = []
    k = 0
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            edges.append(tb[u] ^ graph.edges[k] ^ tb[v])
            k += 1
    return MultisignedCompleteGraph(graph.n, graph.m, tuple(edges))


def gen_planted_mixed(n: int, m: int, seed: int) -> MultisignedCompleteGraph:
    """Randomly switched all-positive graph with component 0 of one edge flipped.

    Triangles through the flipped edge carry a non-identity multisign and the
    rest carry the identity, so the triangle class is always MIXED.
    """
    if n < 4:
        raise ValueError("planted-mixed needs n >= 4 (K_3 has a single triangle)")
    rng = rng_for(seed, n, m)
    theta = [random_multisign(rng, m) for _ in range(n)]
    base = switch(MultisignedCompleteGraph(n, m, (0,) * (n * (n - 1) // 2)), theta)
    k = rng.randbelow(len(base.edges))
    edges = list(base.edges)
    edges[k] ^= 1
    return MultisignedCompleteGraph(n, m, tuple(edges))


def generate(spec: GenSpec) -> MultisignedCompleteGraph:
    if spec.model == "constant":
        return gen_constant(spec.n, spec.m, spec.sign)
    if spec.model == "random":
        return gen_random(spec)
    if spec.model == "planted-mixed":
        return gen_planted_mixed(spec.n, spec.m, spec.seed)
    raise ValueError("the 'all' model is a stream; use graph_space_iterator")


def space_bits(n: int, m: int) -> int:
    return m * n * (n - 1) // 2


def graph_from_index(n: int, m: int, index: int) -> MultisignedCompleteGraph:
    """Bit ``k*m + c`` of ``index`` is component ``c`` of the edge at pairing index ``k``."""
    mask = (1 << m) - 1
    count = n * (n - 1) // 2
    return MultisignedCompleteGraph(n, m, tuple((index >> (k * m)) & mask for k in range(count)))


def graph_to_index(graph: MultisignedCompleteGraph) -> int:
    index = 0
    for k, b in enumerate(graph.edges):
        index |= b << (k * graph.m)
    return index


def graph_space_iterator(
    n: int, m: int, start: int = 0, stop: int | None = None
) -> Iterator[MultisignedCompleteGraph]:
    """Stream graphs with indices in ``[start, stop)`` in increasing order."""
    bits = space_bits(n, m)
    if bits > SPACE_CAP_BITS:
        raise SpaceTooLargeError(bits)
    size = 1 << bits
    stop = size if stop is None else stop
    if not 0 <= start <= stop <= size:
        raise ValueError(f"index range [{start}, {stop}) outside [0, {size})")
    for index in range(start, stop):
        yield graph_from_index(n, m, index)
