"""Immutable simple graphs on up to 62 vertices, with graph6 serialization.

Adjacency is stored as one int bitmask per vertex, so neighborhood algebra
throughout the package is plain integer arithmetic. The 62-vertex ceiling
keeps every mask inside one machine word and every order inside a single
graph6 size byte.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

MAX_VERTICES = 62

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6 text."""


class DisconnectedError(ValueError):
    """Raised when an operation needs distances but the graph is disconnected."""


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the open-neighborhood bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions a vertex >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bit_indices(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @functools.cached_property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bit_indices(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in bit_indices(self.adj[u]):
                if v > u:
                    out.append((u, v))
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Apply a permutation: vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation of the vertices")
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bit_indices(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """A copy with additional edges (duplicates collapse)."""
        return build(self.n, self.edges() + list(extra))

    def induced(self, keep: Sequence[int]) -> Graph:
        """Subgraph induced on `keep`, relabeled 0..len(keep)-1 in the given
        order (entries must be distinct)."""
        if len(set(keep)) != len(keep):
            raise ValueError("induced vertex list has repeats")
        pos = {v: i for i, v in enumerate(keep)}
        edges = []
        for u, v in self.edges():
            if u in pos and v in pos:
                edges.append((pos[u], pos[v]))
        return build(len(keep), edges)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        rows = tuple((~self.adj[v] & full) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, rows)


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Create a graph from an edge list; duplicate edges collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ------------------------------------------------------------------ graph6
#
# Layout: one size byte 63+n, then the upper triangle of the adjacency
# matrix in column-major pair order (0,1), (0,2), (1,2), (0,3), ... packed
# big-endian into 6-bit groups (zero padding at the end), each group emitted
# as the byte 63+value.


def triangle_bits(n: int, adj: Sequence[int]) -> int:
    """Pack the upper triangle into an int, first pair most significant."""
    bits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | ((adj[j] >> i) & 1)
    return bits


def graph_from_triangle_bits(n: int, bits: int) -> Graph:
    """Inverse of triangle_bits."""
    m = n * (n - 1) // 2
    if bits >> m:
        raise ValueError(f"triangle bits out of range for n={n}")
    rows = [0] * n
    pos = m
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    m = g.n * (g.n - 1) // 2
    groups = (m + 5) // 6
    bits = triangle_bits(g.n, g.adj) << (groups * 6 - m)
    out = [chr(63 + g.n)]
    for i in range(groups - 1, -1, -1):
        out.append(chr(63 + ((bits >> (6 * i)) & 63)))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].lstrip()
    if not s:
        raise Graph6Error("empty graph6 line")
    codes = [ord(ch) for ch in s]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} at position {pos} outside graph6 range 63..126")
    if codes[0] == 126:
        raise Graph6Error(f"extended size prefix: orders above {MAX_VERTICES} unsupported")
    n = codes[0] - 63
    if n < 1:
        raise Graph6Error("graph6 order 0 not supported")
    m = n * (n - 1) // 2
    groups = (m + 5) // 6
    payload = codes[1:]
    if len(payload) < groups:
        raise Graph6Error(f"truncated payload: expected {groups} bytes for n={n}, got {len(payload)}")
    if len(payload) > groups:
        raise Graph6Error(f"payload too long: expected {groups} bytes for n={n}, got {len(payload)}")
    bits = 0
    for c in payload:
        bits = (bits << 6) | (c - 63)
    pad = groups * 6 - m
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return graph_from_triangle_bits(n, bits >> pad)


# -------------------------------------------------------------- traversals


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.d[u][v]


def _reach(adj: Sequence[int], start_mask: int) -> int:
    """Mask of vertices reachable from the seed mask."""
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        for v in bit_indices(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def is_connected(g: Graph) -> bool:
    return _reach(g.adj, 1) == (1 << g.n) - 1


def bfs_distances(g: Graph) -> DistanceMatrix:
    """Bitset BFS from every vertex; rejects disconnected graphs, whose
    distances would be undefined."""
    full = (1 << g.n) - 1
    rows = []
    for s in range(g.n):
        dist = [-1] * g.n
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            for v in bit_indices(frontier):
                dist[v] = d
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
            d += 1
        if seen != full:
            raise DisconnectedError("distances undefined: graph is disconnected")
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def is_bipartite(g: Graph) -> bool:
    """Two-color every component; True iff no edge joins equal colors."""
    col0 = 0
    col1 = 0
    for s in range(g.n):
        if ((col0 | col1) >> s) & 1:
            continue
        col0 |= 1 << s
        frontier = 1 << s
        odd = True
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= g.adj[v]
            nxt &= ~(col0 | col1)
            if odd:
                col1 |= nxt
            else:
                col0 |= nxt
            odd = not odd
            frontier = nxt
    for v in range(g.n):
        same = col0 if (col0 >> v) & 1 else col1
        if g.adj[v] & same:
            return False
    return True


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in bit_indices(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                return False
    return True
