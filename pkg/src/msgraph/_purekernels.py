"""Pure-Python hot kernels; the reference backend for ``_ckernels``.

Every function takes ``n`` and the raw edge bits in pairing-index order.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _rows(n: int, edges: Sequence[int]) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            rows[u][v] = rows[v][u] = edges[k]
            k += 1
    return rows


def hamiltonian_tally(n: int, edges: Sequence[int]) -> dict[int, int]:
    """Map each Hamiltonian-cycle multisign to the number of cycles achieving it.

    Cycles are visited in canonical form only: vertex 0 first and the
    second vertex smaller than the last.
    """
    rows = _rows(n, edges)
    tally: dict[int, int] = {}
    used = [False] * n
    used[0] = True
    path = [0] * n

    def rec(depth: int, last: int, acc: int) -> None:
        if depth == n:
            if path[1] < last:
                val = acc ^ rows[last][0]
                tally[val] = tally.get(val, 0) + 1
            return
        row = rows[last]
        for v in range(1, n):
            if not used[v]:
                used[v] = True
                path[depth] = v
                rec(depth + 1, v, acc ^ row[v])
                used[v] = False

    rec(1, 0, 0)
    return tally


def triangle_sweep(n: int, edges: Sequence[int]) -> tuple[int, tuple[int, int, int] | None]:
    """Return the multisign of (0,1,2) and the first triangle that differs from it."""
    rows = _rows(n, edges)
    first = rows[0][1] ^ rows[1][2] ^ rows[0][2]
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            ab = ra[b]
            rb = rows[b]
            for c in range(b + 1, n):
                if ab ^ rb[c] ^ ra[c] != first:
                    return first, (a, b, c)
    return first, None


def potential_violation(n: int, edges: Sequence[int]) -> tuple[int, int] | None:
    """First edge ``(u, v)``, ``0 < u < v``, breaking sigma(uv) = theta(u) theta(v).

    The potential is theta(0) = identity and theta(v) = sigma(0v).
    """
    theta = edges[: n - 1]
    k = n - 1
    for u in range(1, n):
        tu = theta[u - 1]
        for v in range(u + 1, n):
            if edges[k] != tu ^ theta[v - 1]:
                return u, v
            k += 1
    return None
