"""Shared naive oracles and generators.

Everything here is deliberately simple and independent of the package's
search kernels: subset enumeration instead of branch and bound, index-order
assignment instead of ordered backtracking. Slow on purpose; only run at
small orders.
"""

from __future__ import annotations

import itertools
import random

from locdim.dimension import is_local_resolving, is_resolving
from locdim.enumeration import connected_graphs
from locdim.graphs import Graph, bfs_distances, build, is_connected


def naive_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Largest clique by trying subsets top-down; first hit at the winning
    size is the lexicographically smallest witness."""
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size, combo
    return 0, ()


def naive_dimension(g: Graph, mode: str = "local") -> tuple[int, tuple[int, ...]]:
    """Minimum over explicit enumeration of all vertex subsets, sizes
    ascending; the first resolving subset is the lexicographically smallest
    optimal witness."""
    check = is_local_resolving if mode == "local" else is_resolving
    dm = bfs_distances(g)
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if check(g, combo, dm):
                return size, combo
    raise AssertionError("no resolving set found, which is impossible")


def naive_induced_exists(host: Graph, pattern: Graph) -> bool:
    """Injective assignments in pattern-index order; prefix-inconsistent
    branches abandoned, nothing else pruned."""
    if pattern.n > host.n:
        return False
    assign = [-1] * pattern.n

    def rec(pos: int, used: int) -> bool:
        if pos == pattern.n:
            return True
        for h in range(host.n):
            if (used >> h) & 1:
                continue
            if all(
                pattern.has_edge(pos, q) == host.has_edge(h, assign[q])
                for q in range(pos)
            ):
                assign[pos] = h
                if rec(pos + 1, used | (1 << h)):
                    return True
        return False

    return rec(0, 0)


def random_connected(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Uniform-ish random connected graph: resample until connected."""
    while True:
        density = p if p is not None else rng.uniform(0.25, 0.75)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < density
        ]
        g = build(n, edges)
        if is_connected(g):
            return g


def stream_upto(max_n: int):
    """All connected graph classes with 1 <= n <= max_n, in order."""
    for n in range(1, max_n + 1):
        yield from connected_graphs(n)
