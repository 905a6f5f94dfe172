"""Brute-force ground truth for the classifier.

Everything here enumerates cycles directly, with no algebraic shortcuts, so
it can serve as an independent check on :mod:`msgraph.classify`.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from . import kernels
from .classify import HamiltonianClass, HamiltonianKind, classify_hamiltonian
from .core import (
    Multisign,
    MultisignedCompleteGraph,
    cycle_multisign,
    ms_identity,
    triangle_multisign,
    validate_cycle,
)
from .gen import (
    SPACE_CAP_BITS,
    GenSpec,
    SpaceTooLargeError,
    gen_constant,
    gen_random,
    graph_space_iterator,
    random_multisign,
    rng_for,
    space_bits,
    switch,
)
from .io import serialize_graph

HAMILTONIAN_CAP = 13
ALL_CYCLES_CAP = 8

__all__ = [
    "ALL_CYCLES_CAP",
    "AgreementReport",
    "CycleSurvey",
    "EnumerationCapError",
    "HAMILTONIAN_CAP",
    "HamiltonianSurvey",
    "enumerate_all_cycles",
    "enumerate_hamiltonian",
    "exhaustive_agreement",
    "fan_decomposition_check",
    "hamiltonian_witness_pair",
    "random_instances",
    "verdict_matches",
]


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class HamiltonianSurvey:
    n: int
    m: int
    counts: dict[Multisign, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct_multisigns(self) -> frozenset[Multisign]:
        return frozenset(self.counts)

    def __str__(self) -> str:
        parts = ", ".join(f"{g}: {c}" for g, c in sorted(self.counts.items()))
        return f"{{{parts}}}"


def enumerate_hamiltonian(graph: MultisignedCompleteGraph) -> HamiltonianSurvey:
    """Tally the multisigns of all (n-1)!/2 Hamiltonian cycles."""
    if graph.n > HAMILTONIAN_CAP:
        raise EnumerationCapError(
            f"n={graph.n} exceeds the enumeration cap {HAMILTONIAN_CAP}; "
            "use classify_hamiltonian instead"
        )
    tally = kernels.hamiltonian_tally(graph.n, graph.edges)
    return HamiltonianSurvey(graph.n, graph.m, {Multisign(graph.m, b): c for b, c in tally.items()})


def hamiltonian_witness_pair(
    graph: MultisignedCompleteGraph,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two Hamiltonian cycles with different multisigns, or None if all agree."""
    if graph.n > HAMILTONIAN_CAP:
        raise EnumerationCapError(f"n={graph.n} exceeds the enumeration cap {HAMILTONIAN_CAP}")
    first = None
    for rest in permutations(range(1, graph.n)):
        if rest[0] > rest[-1]:
            continue
        cycle = (0,) + rest
        g = cycle_multisign(graph, cycle)
        if first is None:
            first = (cycle, g)
        elif g != first[1]:
            return first[0], cycle
    return None


@dataclass(frozen=True)
class CycleSurvey:
    n: int
    m: int
    by_length: dict[int, dict[Multisign, int]]

    def achieved(self) -> frozenset[Multisign]:
        return frozenset(g for counts in self.by_length.values() for g in counts)

    def only_identity(self) -> bool:
        return self.achieved() == {ms_identity(self.m)}


def enumerate_all_cycles(graph: MultisignedCompleteGraph) -> CycleSurvey:
    """Visit every cycle of length 3..n once, in canonical form.

    A cycle is canonical when its smallest vertex comes first and its second
    vertex is smaller than its last.
    """
    n = graph.n
    if n > ALL_CYCLES_CAP:
        raise EnumerationCapError(f"n={n} exceeds the all-cycles cap {ALL_CYCLES_CAP}")
    rows = graph.matrix()
    by_length: dict[int, Counter] = {k: Counter() for k in range(3, n + 1)}
    path: list[int] = []

    def extend(start: int, last: int, acc: int, used: set[int]) -> None:
        if len(path) >= 3 and path[1] < last:
            by_length[len(path)][acc ^ rows[last][start]] += 1
        for v in range(start + 1, n):
            if v not in used:
                used.add(v)
                path.append(v)
                extend(start, v, acc ^ rows[last][v], used)
                path.pop()
                used.discard(v)

    for s in range(n):
        path.append(s)
        extend(s, s, 0, {s})
        path.pop()
    return CycleSurvey(
        n,
        graph.m,
        {k: {Multisign(graph.m, b): c for b, c in sorted(cnt.items())} for k, cnt in by_length.items()},
    )


def fan_decomposition_check(graph: MultisignedCompleteGraph, cycle: Sequence[int]) -> bool:
    """Compare a cycle's multisign with the product of its fan triangles.

    The fan from the first listed vertex v1 is (v1 v2 v3), (v1 v3 v4), ...,
    (v1 v_{k-1} v_k).  The two always agree; False means a bug.
    """
    cycle = validate_cycle(graph, cycle)
    product = ms_identity(graph.m)
    for a, b in zip(cycle[1:], cycle[2:]):
        product = product * triangle_multisign(graph, cycle[0], a, b)
    return product == cycle_multisign(graph, cycle)


def verdict_matches(verdict: HamiltonianClass, survey: HamiltonianSurvey) -> bool:
    distinct = survey.distinct_multisigns
    if verdict.kind is HamiltonianKind.MIXED:
        return len(distinct) >= 2
    return distinct == {verdict.value}


@dataclass
class AgreementReport:
    n: int
    m: int
    mode: str
    instances: int = 0
    mismatches: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def describe(self) -> str:
        space = f"n={self.n} m={self.m} {self.mode}"
        if self.seed is not None:
            space += f" seed={self.seed}"
        return space


def _check_graphs(graphs) -> tuple[int, list[str]]:
    count = 0
    bad = []
    for g in graphs:
        count += 1
        if not verdict_matches(classify_hamiltonian(g), enumerate_hamiltonian(g)):
            bad.append(serialize_graph(g))
    return count, bad


def _check_index_range(args: tuple[int, int, int, int]) -> tuple[int, list[str]]:
    n, m, start, stop = args
    return _check_graphs(graph_space_iterator(n, m, start, stop))


def random_instances(n: int, m: int, seed: int, trials: int):
    """Seeded mix of random-sign graphs and switched constant graphs.

    Two of every three trials draw independent edge signs with a random
    negative probability; the third is a constant graph disguised by a random
    switching, so ALL_SAME verdicts are exercised as well.
    """
    rng = rng_for(seed, n, m)
    for t in range(trials):
        if t % 3 == 2:
            g = gen_constant(n, m, random_multisign(rng, m))
            yield switch(g, [random_multisign(rng, m) for _ in range(n)])
        else:
            yield gen_random(GenSpec(n, m, seed=rng.next_u64(), neg_prob=rng.random()))


def exhaustive_agreement(
    n: int,
    m: int,
    mode: str = "exhaustive",
    seed: int = 0,
    trials: int = 0,
    workers: int = 1,
) -> AgreementReport:
    """Compare the classifier with enumeration over a space of graphs.

    ``mode="exhaustive"`` covers all 2^(m n(n-1)/2) graphs and
    ``mode="random"`` checks ``trials`` seeded instances.  Results do not
    depend on ``workers``.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n > HAMILTONIAN_CAP:
        raise EnumerationCapError(f"n={n} exceeds the enumeration cap {HAMILTONIAN_CAP}")
    started = time.perf_counter()
    if mode == "exhaustive":
        bits = space_bits(n, m)
        if bits > SPACE_CAP_BITS:
            raise SpaceTooLargeError(bits)
        size = 1 << bits
        report = AgreementReport(n, m, "exhaustive")
        if workers <= 1:
            report.instances, report.mismatches = _check_graphs(graph_space_iterator(n, m))
        else:
            step = max(1, math.ceil(size / (workers * 4)))
            chunks = [(n, m, lo, min(lo + step, size)) for lo in range(0, size, step)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for count, bad in pool.map(_check_index_range, chunks):
                    report.instances += count
                    report.mismatches.extend(bad)
    elif mode == "random":
        if trials < 1:
            raise ValueError("random mode needs trials >= 1")
        report = AgreementReport(n, m, "random", seed=seed)
        report.instances, report.mismatches = _check_graphs(random_instances(n, m, seed, trials))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report.elapsed = time.perf_counter() - started
    return report
