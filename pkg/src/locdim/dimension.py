"""Exact local (and ordinary) metric dimension.

A vertex set W locally resolves a connected graph when every edge with both
endpoints outside W has its endpoints at distinct distances from some member
of W. Since each endpoint distinguishes its own edge, W locally resolves iff
it hits every edge's distinguisher set, so the dimension is an exact minimum
hitting set over those sets. The ordinary metric dimension is the same
construction over all vertex pairs instead of edges.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import kernels
from .graphs import DistanceMatrix, Graph, bfs_distances, bit_indices
from .invariants import clique_number, twin_partition

MODES = ("local", "full")


@dataclass(frozen=True)
class LowerBounds:
    """Search floors for the local dimension of a connected graph.

    twin: n minus the number of true-twin classes.
    log_clique: ceil(log2 of the clique number).
    gap_raw: n - 2**(n - clique number); may be negative, clamp before use.
    """

    twin: int
    log_clique: int
    gap_raw: int

    @property
    def gap(self) -> int:
        return max(self.gap_raw, 0)

    @property
    def best(self) -> int:
        return max(self.twin, self.log_clique, self.gap)


@dataclass(frozen=True)
class Constraint:
    """Distinguisher set of one vertex pair, as a bitmask."""

    pair: tuple[int, int]
    mask: int


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    mode: str
    constraints: tuple[Constraint, ...]

    def masks(self) -> tuple[int, ...]:
        return tuple(c.mask for c in self.constraints)


@dataclass(frozen=True)
class DimResult:
    """value: the exact dimension; witness: the lexicographically smallest
    optimal set, sorted ascending; bounds: the floors the search started
    from."""

    value: int
    witness: tuple[int, ...]
    bounds: LowerBounds


def lower_bounds(g: Graph) -> LowerBounds:
    dm_check = bfs_distances(g)  # rejects disconnected input
    del dm_check
    omega = clique_number(g)
    return LowerBounds(
        twin=g.n - twin_partition(g).class_count,
        log_clique=(omega - 1).bit_length(),
        gap_raw=g.n - (1 << (g.n - omega)),
    )


def distinguisher_sets(
    g: Graph, dm: DistanceMatrix | None = None, mode: str = "local"
) -> ConstraintSystem:
    """One constraint per edge (local) or per vertex pair (full): the set of
    vertices seeing the two endpoints at different distances. Endpoints
    always belong to their own set, so no constraint is empty."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if dm is None:
        dm = bfs_distances(g)
    cons = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if mode == "local" and not g.has_edge(u, v):
                continue
            mask = 0
            du = dm.d[u]
            dv = dm.d[v]
            for w in range(g.n):
                if du[w] != dv[w]:
                    mask |= 1 << w
            cons.append(Constraint((u, v), mask))
    return ConstraintSystem(g.n, mode, tuple(cons))


def _check_vertex_set(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_local_resolving(
    g: Graph, vertices: Iterable[int], dm: DistanceMatrix | None = None
) -> bool:
    """Definition-level check, no hitting-set machinery: every edge with
    both endpoints outside the set must be split by some member."""
    mask = _check_vertex_set(g, vertices)
    if dm is None:
        dm = bfs_distances(g)
    members = tuple(bit_indices(mask))
    for u, v in g.edges():
        if (mask >> u) & 1 or (mask >> v) & 1:
            continue
        if not any(dm.d[u][w] != dm.d[v][w] for w in members):
            return False
    return True


def is_resolving(
    g: Graph, vertices: Iterable[int], dm: DistanceMatrix | None = None
) -> bool:
    """Like is_local_resolving but over all vertex pairs, not just edges."""
    mask = _check_vertex_set(g, vertices)
    if dm is None:
        dm = bfs_distances(g)
    members = tuple(bit_indices(mask))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (mask >> u) & 1 or (mask >> v) & 1:
                continue
            if not any(dm.d[u][w] != dm.d[v][w] for w in members):
                return False
    return True


def _solve(g: Graph, mode: str) -> DimResult:
    dm = bfs_distances(g)
    system = distinguisher_sets(g, dm, mode)
    bounds = lower_bounds(g)
    # the floors hold for the local mode and the full mode dominates it
    size, mask = kernels.min_hitting_set(g.n, system.masks(), bounds.best)
    for c in system.constraints:
        if not c.mask & mask:
            raise AssertionError(f"solver returned a non-hitting set for pair {c.pair}")
    return DimResult(size, tuple(bit_indices(mask)), bounds)


def local_metric_dimension(g: Graph) -> DimResult:
    """Exact local metric dimension of a connected graph (0 for n = 1)."""
    return _solve(g, "local")


def metric_dimension(g: Graph) -> DimResult:
    """Exact metric dimension of a connected graph."""
    return _solve(g, "full")
