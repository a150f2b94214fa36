"""Induced-subgraph detection.

The two six-vertex configurations from locdim.families split the graphs
with clique number n - 2 by local dimension, so "contains an induced copy"
is a hot predicate in the verification harness.
"""

from __future__ import annotations

import functools

from . import kernels
from .families import gamma1, gamma2
from .graphs import Graph


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Injective map pattern vertex -> host vertex preserving adjacency and
    non-adjacency, or None. The search order is fixed (pattern vertices by
    degree descending, host candidates ascending), so the returned mapping
    is deterministic: the first one that order meets."""
    return kernels.induced_embedding(host.n, host.adj, pattern.n, pattern.adj)


@functools.lru_cache(maxsize=1)
def _gamma_patterns() -> tuple[Graph, Graph]:
    return gamma1(), gamma2()


def is_gamma_free(g: Graph) -> bool:
    """True iff the graph contains neither forbidden configuration as an
    induced subgraph."""
    g1, g2 = _gamma_patterns()
    return find_induced(g, g1) is None and find_induced(g, g2) is None
