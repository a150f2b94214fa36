"""Pure-Python search kernels.

Reference implementations of the four kernels the package runs hot: maximum
clique, minimum hitting set, canonical labeling, and induced-subgraph
embedding. The compiled twin (locdim._speedups) implements the same
functions with identical outputs; locdim.kernels picks a backend at import
time. Graphs arrive as adjacency rows packed into ints, bit v of adj[u] set
iff uv is an edge.
"""

from __future__ import annotations

from collections.abc import Sequence

__all__ = ["max_clique", "min_hitting_set", "canonical_bits", "induced_embedding"]


def _bits(mask: int):
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_expand(adj: Sequence[int], size: int, cand: int, best: int) -> int:
    """Branch-and-bound clique search below the candidate mask.

    Returns max(best, size + largest clique inside cand). The bound comes
    from a greedy coloring of the candidates: a clique can take at most one
    vertex per color class.
    """
    if cand == 0:
        return size if size > best else best
    order = []
    bound = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            bound.append(color)
            avail &= ~(adj[v] | (1 << v))
            rest &= ~(1 << v)
    for i in range(len(order) - 1, -1, -1):
        if size + bound[i] <= best:
            return best
        v = order[i]
        best = _clique_expand(adj, size + 1, cand & adj[v], best)
        cand &= ~(1 << v)
    return best


def max_clique(n: int, adj: Sequence[int]) -> tuple[int, int]:
    """Exact maximum clique.

    Returns (size, witness_mask). Among all maximum cliques the witness is
    the smallest when compared as a sorted vertex tuple; it is rebuilt
    greedily with one feasibility probe per vertex once the size is known.
    """
    if n <= 0:
        return 0, 0
    full = (1 << n) - 1
    size = _clique_expand(adj, 0, full, 0)
    witness = 0
    have = 0
    cand = full
    for v in range(n):
        if have == size:
            break
        if not (cand >> v) & 1:
            continue
        need = size - have - 1
        sub = cand & adj[v]
        if need == 0 or _clique_expand(adj, 0, sub, need - 1) >= need:
            witness |= 1 << v
            have += 1
            cand = sub
    return size, witness


def _pack_bound(cons: list[int]) -> int:
    """Count pairwise-disjoint constraints greedily; a valid lower bound,
    since disjoint constraints need distinct hitters."""
    used = 0
    lb = 0
    for c in cons:
        if c & used == 0:
            used |= c
            lb += 1
    return lb


def min_hitting_set(
    universe: int, constraints: Sequence[int], lower_bound: int = 0
) -> tuple[int, int]:
    """Exact minimum hitting set over bitmask constraints.

    Ground elements are bits 0..universe-1. `lower_bound` must be a valid
    bound for the instance; the search stops as soon as it is met. Returns
    (size, witness_mask) where the witness is the lexicographically smallest
    optimal set under sorted-tuple comparison, rebuilt in a second phase
    from greedy prefix feasibility probes.
    """
    if not 0 <= universe <= 62:
        raise ValueError(f"universe size must be in 0..62, got {universe}")
    uniq = sorted({int(c) for c in constraints})
    if not uniq:
        return 0, 0
    if uniq[0] == 0:
        raise ValueError("unsatisfiable constraint system: empty constraint")
    if uniq[-1] >> universe:
        raise ValueError("constraint mentions an element outside the universe")
    # hitting a constraint's subset hits the constraint: keep minimal ones only
    cons = [c for c in uniq if not any(o != c and o & ~c == 0 for o in uniq)]
    cons.sort(key=lambda c: (c.bit_count(), c))
    floor = max(lower_bound, 1, _pack_bound(cons))

    # greedy cover (most-hits-first) for the initial upper bound
    best_size = 0
    rem = cons
    while rem:
        counts: dict[int, int] = {}
        for c in rem:
            for v in _bits(c):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        best_size += 1
        rem = [c for c in rem if not (c >> v) & 1]

    state = [best_size]

    def search(chosen: int, rem: list[int]) -> None:
        if not rem:
            if chosen < state[0]:
                state[0] = chosen
            return
        if state[0] <= floor:
            return
        if chosen + _pack_bound(rem) >= state[0]:
            return
        # every hitting set hits rem[0]; branch on its elements
        for v in _bits(rem[0]):
            search(chosen + 1, [c for c in rem if not (c >> v) & 1])
            if state[0] <= floor:
                return

    if best_size > floor:
        search(0, cons)
    k = state[0]

    def feasible(rem: list[int], budget: int, allowed: int) -> bool:
        if not rem:
            return True
        if budget <= 0:
            return False
        restricted = [c & allowed for c in rem]
        if 0 in restricted:
            return False
        if _pack_bound(rem) > budget:
            return False
        branch = min(restricted, key=lambda c: (c.bit_count(), c))
        for v in _bits(branch):
            if feasible([c for c in rem if not (c >> v) & 1], budget - 1, allowed):
                return True
        return False

    full = (1 << universe) - 1
    witness = 0
    count = 0
    rem = cons
    start = 0
    while rem:
        for v in range(start, universe):
            nrem = [c for c in rem if not (c >> v) & 1]
            allowed = (full >> (v + 1)) << (v + 1)
            if feasible(nrem, k - count - 1, allowed):
                witness |= 1 << v
                count += 1
                rem = nrem
                start = v + 1
                break
        else:
            raise AssertionError("hitting-set witness reconstruction failed")
    return k, witness


def canonical_bits(n: int, adj: Sequence[int]) -> int:
    """Minimum upper-triangle bit string over all vertex relabelings.

    Bits are column-major (pairs (0,1), (0,2), (1,2), (0,3), ...) with the
    first pair most significant, matching the graph6 payload layout. The DFS
    fills positions one vertex at a time and only ever extends with a
    smallest attainable adjacency column, so ties between columns are the
    only branching points; prefixes that already exceed the best string are
    cut.
    """
    if n > 11:
        raise ValueError(f"canonical_bits supports n <= 11, got {n}")
    if n <= 1:
        return 0
    m = n * (n - 1) // 2
    best: int | None = None

    def rec(t: int, prefix: int, nbits: int, placed: list[int], used: int) -> None:
        nonlocal best
        if t == n:
            if best is None or prefix < best:
                best = prefix
            return
        min_col = -1
        tied: list[int] = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            col = 0
            for p in placed:
                col = (col << 1) | ((adj[p] >> v) & 1)
            if min_col < 0 or col < min_col:
                min_col = col
                tied = [v]
            elif col == min_col:
                tied.append(v)
        prefix = (prefix << t) | min_col
        nbits += t
        if best is not None and prefix > (best >> (m - nbits)):
            return
        for v in tied:
            placed.append(v)
            rec(t + 1, prefix, nbits, placed, used | (1 << v))
            placed.pop()

    rec(0, 0, 0, [], 0)
    assert best is not None
    return best


def induced_embedding(
    host_n: int,
    host_adj: Sequence[int],
    pat_n: int,
    pat_adj: Sequence[int],
) -> tuple[int, ...] | None:
    """Search for an induced copy of the pattern inside the host.

    Pattern vertices are assigned in degree-descending order (ties by
    index); host candidates are tried ascending, so the first embedding
    found is deterministic. Every assigned pair must agree on adjacency and
    non-adjacency. Returns the mapping pattern vertex -> host vertex, or
    None.
    """
    if pat_n == 0:
        return ()
    if pat_n > host_n:
        return None
    pat_deg = [pat_adj[v].bit_count() for v in range(pat_n)]
    host_deg = [host_adj[v].bit_count() for v in range(host_n)]
    order = sorted(range(pat_n), key=lambda p: (-pat_deg[p], p))
    assign = [-1] * pat_n

    def rec(pos: int, used: int) -> bool:
        if pos == pat_n:
            return True
        p = order[pos]
        prow = pat_adj[p]
        for h in range(host_n):
            if (used >> h) & 1 or host_deg[h] < pat_deg[p]:
                continue
            hrow = host_adj[h]
            ok = True
            for i in range(pos):
                q = order[i]
                if ((prow >> q) & 1) != ((hrow >> assign[q]) & 1):
                    ok = False
                    break
            if ok:
                assign[p] = h
                if rec(pos + 1, used | (1 << h)):
                    return True
                assign[p] = -1
        return False

    return tuple(assign) if rec(0, 0) else None
