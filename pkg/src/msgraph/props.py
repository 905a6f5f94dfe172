"""Seeded randomized property suites run by ``msgraph props``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import classify_hamiltonian, hourglass_condition, hourglass_swap
from .core import MultisignedCompleteGraph, canonical_cycle, cycle_multisign
from .gen import SplitMix64, random_multisign, rng_for, switch
from .io import serialize_graph
from .oracle import enumerate_hamiltonian, fan_decomposition_check

# Switching compares full Hamiltonian surveys, so keep those graphs small.
SWITCH_NMAX = 7

__all__ = [
    "SUITES",
    "SuiteResult",
    "fan_suite",
    "hourglass_suite",
    "random_graph",
    "rotation_suite",
    "run_all",
    "switching_suite",
]


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, detail) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail() if callable(detail) else str(detail)


def random_graph(rng: SplitMix64, n: int, m: int) -> MultisignedCompleteGraph:
    """Edges get independent uniform bits, or sparse bits on half the draws."""
    sparse = rng.bits(1)
    edges = []
    for _ in range(n * (n - 1) // 2):
        b = rng.bits(m)
        if sparse:
            b &= rng.bits(m)
        edges.append(b)
    return MultisignedCompleteGraph(n, m, tuple(edges))


def _shape(rng: SplitMix64, nmax: int, mmax: int, nmin: int = 4) -> tuple[int, int]:
    return rng.randint(nmin, max(nmin, nmax)), rng.randint(1, max(1, mmax))


def _describe(graph, *extra) -> str:
    return " ".join(str(e) for e in extra) + "\n" + serialize_graph(graph)


def hourglass_suite(trials: int, seed: int, nmax: int = 9, mmax: int = 8) -> SuiteResult:
    """The condition holds iff a Hamiltonian cycle and its swap share a multisign."""
    rng = rng_for(seed, 1)
    result = SuiteResult("hourglass")
    for _ in range(trials):
        n, m = _shape(rng, nmax, mmax)
        graph = random_graph(rng, n, m)
        cycle = list(range(n))
        rng.shuffle(cycle)
        while True:
            i, j = sorted((rng.randbelow(n), rng.randbelow(n)))
            if i < j and len({cycle[i], cycle[i + 1], cycle[j], cycle[(j + 1) % n]}) == 4:
                break
        cond = hourglass_condition(graph, cycle, i, j)
        same = cycle_multisign(graph, cycle) == cycle_multisign(graph, hourglass_swap(cycle, i, j))
        result.record(cond == same, lambda: _describe(graph, "cycle", tuple(cycle), "i", i, "j", j))
    return result


def fan_suite(trials: int, seed: int, nmax: int = 9, mmax: int = 8) -> SuiteResult:
    """Fan triangles from the first vertex multiply to the cycle multisign."""
    rng = rng_for(seed, 2)
    result = SuiteResult("fan-decomposition")
    for _ in range(trials):
        n, m = _shape(rng, nmax, mmax, nmin=3)
        graph = random_graph(rng, n, m)
        verts = list(range(n))
        rng.shuffle(verts)
        cycle = verts[: rng.randint(3, n)]
        result.record(fan_decomposition_check(graph, cycle), lambda: _describe(graph, "cycle", tuple(cycle)))
    return result


def switching_suite(trials: int, seed: int, nmax: int = 9, mmax: int = 8) -> SuiteResult:
    """Switching leaves triangles, Hamiltonian surveys and verdicts unchanged."""
    rng = rng_for(seed, 3)
    result = SuiteResult("switching")
    for _ in range(trials):
        n, m = _shape(rng, min(nmax, SWITCH_NMAX), mmax)
        graph = random_graph(rng, n, m)
        theta = [random_multisign(rng, m) for _ in range(n)]
        other = switch(graph, theta)
        ok = all(
            graph.bits(a, b) ^ graph.bits(b, c) ^ graph.bits(a, c)
            == other.bits(a, b) ^ other.bits(b, c) ^ other.bits(a, c)
            for a, b, c in combinations(range(n), 3)
        )
        ok = ok and enumerate_hamiltonian(graph) == enumerate_hamiltonian(other)
        ok = ok and classify_hamiltonian(graph) == classify_hamiltonian(other)
        result.record(ok, lambda: _describe(graph, "theta", [str(t) for t in theta]))
    return result


def rotation_suite(trials: int, seed: int, nmax: int = 9, mmax: int = 8) -> SuiteResult:
    """All rotations and reflections of a cycle share its multisign and normal form."""
    rng = rng_for(seed, 4)
    result = SuiteResult("rotation-reflection")
    for _ in range(trials):
        n, m = _shape(rng, nmax, mmax, nmin=3)
        graph = random_graph(rng, n, m)
        verts = list(range(n))
        rng.shuffle(verts)
        cycle = tuple(verts[: rng.randint(3, n)])
        g = cycle_multisign(graph, cycle)
        canon = canonical_cycle(cycle)
        ok = True
        for seq in (cycle, cycle[::-1]):
            for r in range(len(seq)):
                variant = seq[r:] + seq[:r]
                if cycle_multisign(graph, variant) != g or canonical_cycle(variant) != canon:
                    ok = False
        result.record(ok, lambda: _describe(graph, "cycle", cycle))
    return result


SUITES = (hourglass_suite, fan_suite, switching_suite, rotation_suite)


def run_all(trials: int, seed: int, nmax: int = 9, mmax: int = 8) -> list[SuiteResult]:
    return [suite(trials, seed, nmax, mmax) for suite in SUITES]
