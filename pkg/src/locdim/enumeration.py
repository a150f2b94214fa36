"""Canonical forms and exhaustive streams of small connected graphs.

Canonical labeling minimizes the packed upper-triangle bit string over all
relabelings (brute-force DFS with prefix pruning), so it is deliberately
capped at 8 vertices; that covers every exhaustive sweep this package runs.
Larger inputs must arrive as pre-deduplicated corpora.
"""

from __future__ import annotations

import functools
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from . import kernels
from .graphs import (
    GRAPH6_HEADER,
    Graph,
    Graph6Error,
    bit_indices,
    from_graph6,
    graph_from_triangle_bits,
    to_graph6,
    triangle_bits,
)

CANONICAL_MAX_VERTICES = 8

# classes of connected graphs per order, used as generator self-checks
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Total order on isomorphism classes: (order, minimized triangle bits)."""

    n: int
    bits: int


def canonical_key(g: Graph) -> CanonicalKey:
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical_key supports n <= {CANONICAL_MAX_VERTICES}, got {g.n}"
        )
    return CanonicalKey(g.n, kernels.canonical_bits(g.n, g.adj))


def canonical_form(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    key = canonical_key(g)
    return graph_from_triangle_bits(key.n, key.bits)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


@functools.lru_cache(maxsize=None)
def _connected_class_bits(n: int) -> tuple[int, ...]:
    # Every connected graph on n >= 2 vertices keeps a connected remainder
    # after deleting some vertex (a leaf of a spanning tree), so attaching
    # one vertex with every non-empty neighborhood to every smaller class
    # reaches every class; canonical keys collapse the duplicates.
    if n == 1:
        return (0,)
    seen: set[int] = set()
    for pbits in _connected_class_bits(n - 1):
        prev = graph_from_triangle_bits(n - 1, pbits)
        for nbhd in range(1, 1 << (n - 1)):
            rows = [
                prev.adj[v] | (1 << (n - 1)) if (nbhd >> v) & 1 else prev.adj[v]
                for v in range(n - 1)
            ]
            rows.append(nbhd)
            seen.add(kernels.canonical_bits(n, rows))
    return tuple(sorted(seen))


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one canonical representative per
    isomorphism class, in ascending key order."""
    if not 1 <= n <= 7:
        raise ValueError(f"connected_graphs supports 1 <= n <= 7, got {n}")
    for bits in _connected_class_bits(n):
        yield graph_from_triangle_bits(n, bits)


def connected_class_count_by_filter(n: int) -> int:
    """Independent recount of the class stream: canonicalize every labeled
    connected graph on n vertices. Exponential in n**2, meant for n <= 6."""
    if not 1 <= n <= 6:
        raise ValueError(f"filter recount supports 1 <= n <= 6, got {n}")
    m = n * (n - 1) // 2
    full = (1 << n) - 1
    keys: set[int] = set()
    for bits in range(1 << m):
        rows = [0] * n
        pos = m
        for j in range(1, n):
            for i in range(j):
                pos -= 1
                if (bits >> pos) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        if seen == full:
            keys.add(kernels.canonical_bits(n, rows))
    return len(keys)


@dataclass(frozen=True)
class Corpus:
    """Decoded graphs in file order plus per-line decode errors."""

    graphs: tuple[Graph, ...]
    errors: tuple[str, ...]


def read_corpus(path: str | Path, strict: bool = False) -> Corpus:
    """Read a graph6 file, one graph per line. Blank lines and bare format
    headers are skipped; malformed lines are collected (or raised when
    strict) with their line numbers."""
    graphs: list[Graph] = []
    errors: list[str] = []
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped == GRAPH6_HEADER:
            continue
        try:
            graphs.append(from_graph6(stripped))
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            errors.append(f"line {lineno}: {exc}")
    return Corpus(tuple(graphs), tuple(errors))
