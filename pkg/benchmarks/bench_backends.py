"""Compare the pure-Python kernels against the compiled extension.

Runs the same four workloads through both backends and prints a small
table. Inputs are built once, up front, so only kernel time is measured.

    python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from locdim import _pure
from locdim.dimension import distinguisher_sets
from locdim.enumeration import connected_graphs
from locdim.families import apex_triangles, complete_minus_bipartite, gamma1, gamma2, upsilon
from locdim.graphs import bfs_distances

try:
    from locdim import _speedups
except ImportError:
    _speedups = None


def _random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def build_workloads():
    rng = random.Random(1729)

    order6 = list(connected_graphs(6))
    relabelings = []
    for g in order6:
        for _ in range(25):
            perm = list(range(6))
            rng.shuffle(perm)
            relabelings.append(g.relabel(perm).adj)

    cliques = [_random_adj(rng, 55, 0.9) for _ in range(6)]

    systems = []
    for g in (
        complete_minus_bipartite(12, 5, 4),
        upsilon(0),
        upsilon(7),
        apex_triangles(4),
    ):
        dm = bfs_distances(g)
        systems.append((g.n, distinguisher_sets(g, dm).masks()))
        systems.append((g.n, distinguisher_sets(g, dm, "full").masks()))

    order7 = [g.adj for g in connected_graphs(7)]
    patterns = [gamma1().adj, gamma2().adj]

    def canonical(impl):
        for adj in relabelings:
            impl.canonical_bits(6, adj)

    def clique(impl):
        for adj in cliques:
            impl.max_clique(55, adj)

    def hitting(impl):
        for n, masks in systems:
            impl.min_hitting_set(n, masks, 0)

    def embedding(impl):
        for host in order7:
            for pat in patterns:
                impl.induced_embedding(7, host, 6, pat)

    return [
        ("canonical labeling, 2800 relabeled order-6 graphs", canonical),
        ("maximum clique, 6 dense 55-vertex graphs", clique),
        ("minimum hitting set, 8 dimension systems", hitting),
        ("induced embedding, both patterns over 853 hosts", embedding),
    ]


def measure(fn, impl, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn(impl)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats, best-of")
    args = parser.parse_args()

    workloads = build_workloads()
    width = max(len(name) for name, _ in workloads)
    print(f"{'workload':<{width}} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for name, fn in workloads:
        pure_t = measure(fn, _pure, args.repeat)
        if _speedups is None:
            print(f"{name:<{width}} {pure_t:>8.3f}s {'-':>9} {'-':>8}")
            continue
        fast_t = measure(fn, _speedups, args.repeat)
        print(
            f"{name:<{width}} {pure_t:>8.3f}s {fast_t:>8.3f}s {pure_t / fast_t:>7.1f}x"
        )
    if _speedups is None:
        print("compiled extension not built; showing pure timings only")


if __name__ == "__main__":
    main()
