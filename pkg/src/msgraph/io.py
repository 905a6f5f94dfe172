"""Reading and writing the ``msgraph 1`` text format.

    msgraph 1
    n=<n> m=<m>
    <u> <v> <signs>      one line per pair u < v, in pairing-index order

Each line ends with a single line feed.  Parsing also accepts CRLF.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import MAX_WIDTH, MultisignedCompleteGraph, Multisign, ms_to_text, pair_index

HEADER = "msgraph"
VERSION = "1"

__all__ = ["ParseError", "parse_graph", "read_graph", "serialize_graph", "write_graph"]

_SIZE_RE = re.compile(r"n=(\d+) m=(\d+)")
_EDGE_RE = re.compile(r"(\d+) (\d+) (\S+)")


class ParseError(ValueError):
    """Malformed document.

    ``kind`` names the failure (``header``, ``version``, ``size``, ``syntax``,
    ``order``, ``range``, ``width``, ``sign``, ``duplicate``,
    ``extra``, ``missing``); ``line`` is 1-based, or ``None`` for end of input.
    """

    def __init__(self, kind: str, line: int | None, message: str):
        where = "end of input" if line is None else f"line {line}"
        super().__init__(f"{where}: {message}")
        self.kind = kind
        self.line = line


def serialize_graph(graph: MultisignedCompleteGraph) -> str:
    out = [f"{HEADER} {VERSION}", f"n={graph.n} m={graph.m}"]
    k = 0
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            out.append(f"{u} {v} {ms_to_text(Multisign(graph.m, graph.edges[k]))}")
            k += 1
    return "\n".join(out) + "\n"


def _sign_bits(text: str, m: int, lineno: int) -> int:
    if len(text) != m:
        raise ParseError("width", lineno, f"sign string {text!r} has length {len(text)}, expected m={m}")
    bits = 0
    for i, ch in enumerate(text):
        if ch == "-":
            bits |= 1 << i
        elif ch != "+":
            raise ParseError("sign", lineno, f"illegal sign character {ch!r} at column {i}")
    return bits


def parse_graph(text: str) -> MultisignedCompleteGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]

    if not lines:
        raise ParseError("header", None, "empty document")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != HEADER:
        raise ParseError("header", 1, f"expected '{HEADER} {VERSION}', got {lines[0]!r}")
    if head[1] != VERSION:
        raise ParseError("version", 1, f"unsupported version {head[1]!r}")

    if len(lines) < 2:
        raise ParseError("size", None, "missing 'n=<n> m=<m>' line")
    match = _SIZE_RE.fullmatch(lines[1])
    if match is None:
        raise ParseError("size", 2, f"expected 'n=<n> m=<m>', got {lines[1]!r}")
    n, m = int(match[1]), int(match[2])
    if n < 3:
        raise ParseError("size", 2, f"n must be >= 3, got {n}")
    if not 1 <= m <= MAX_WIDTH:
        raise ParseError("size", 2, f"m must be in [1, {MAX_WIDTH}], got {m}")

    count = n * (n - 1) // 2
    edges: list[int | None] = [None] * count
    for lineno, line in enumerate(lines[2:], start=3):
        match = _EDGE_RE.fullmatch(line)
        if match is None:
            raise ParseError("syntax", lineno, f"expected '<u> <v> <signs>', got {line!r}")
        u, v = int(match[1]), int(match[2])
        if u >= n or v >= n:
            raise ParseError("range", lineno, f"vertex out of range [0, {n}) in {line!r}")
        if u >= v:
            raise ParseError("order", lineno, f"edge endpoints must satisfy u < v, got {u} {v}")
        bits = _sign_bits(match[3], m, lineno)
        k = pair_index(n, u, v)
        if edges[k] is not None:
            if lineno - 3 >= count:
                raise ParseError("extra", lineno, f"extra edge line {line!r} after all {count} edges")
            raise ParseError("duplicate", lineno, f"duplicate edge {u} {v}")
        if k != lineno - 3:
            # lines before this one filled slots 0..lineno-4, so k skipped ahead
            eu, ev = _pair_at(n, lineno - 3)
            raise ParseError("missing", lineno, f"missing edge {eu} {ev} (found {u} {v})")
        edges[k] = bits
    if len(lines) - 2 < count:
        u, v = _pair_at(n, len(lines) - 2)
        raise ParseError("missing", None, f"missing edge {u} {v}")
    return MultisignedCompleteGraph(n, m, tuple(edges))


def _pair_at(n: int, k: int) -> tuple[int, int]:
    for u in range(n):
        row = n - u - 1
        if k < row:
            return u, u + 1 + k
        k -= row
    raise IndexError(k)


def read_graph(path: str | Path) -> MultisignedCompleteGraph:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_graph(fh.read())


def write_graph(graph: MultisignedCompleteGraph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(graph))
