# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; drop-in twins of locdim._pure.

Same functions, same outputs, C integers instead of Python ones. Vertex
counts never exceed 62, so every bitmask fits one unsigned 64-bit word.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


# ---------------------------------------------------------------- max clique

cdef int _clique_expand(u64* adj, int size, u64 cand, int best) noexcept nogil:
    cdef int order[64]
    cdef int bound[64]
    cdef int cnt = 0, color = 0, i, v
    cdef u64 rest, avail
    if cand == 0:
        return size if size > best else best
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = __builtin_ctzll(avail)
            order[cnt] = v
            bound[cnt] = color
            cnt += 1
            avail &= ~(adj[v] | ((<u64>1) << v))
            rest &= ~((<u64>1) << v)
    for i in range(cnt - 1, -1, -1):
        if size + bound[i] <= best:
            return best
        v = order[i]
        best = _clique_expand(adj, size + 1, cand & adj[v], best)
        cand &= ~((<u64>1) << v)
    return best


def max_clique(int n, adj):
    """Exact maximum clique; returns (size, witness_mask) with the
    lexicographically smallest witness."""
    cdef u64 cadj[64]
    cdef u64 full, witness = 0, sub, cand
    cdef int v, size, have = 0, need
    if n <= 0:
        return 0, 0
    if n > 62:
        raise ValueError(f"vertex count must be at most 62, got {n}")
    for v in range(n):
        cadj[v] = adj[v]
    full = ((<u64>1) << n) - 1
    size = _clique_expand(cadj, 0, full, 0)
    cand = full
    for v in range(n):
        if have == size:
            break
        if not (cand >> v) & 1:
            continue
        need = size - have - 1
        sub = cand & cadj[v]
        if need == 0 or _clique_expand(cadj, 0, sub, need - 1) >= need:
            witness |= (<u64>1) << v
            have += 1
            cand = sub
    return size, int(witness)


# ------------------------------------------------------------- hitting set

cdef int _hs_pack(u64* cons, int k) noexcept nogil:
    cdef u64 used = 0
    cdef int i, lb = 0
    for i in range(k):
        if (cons[i] & used) == 0:
            used |= cons[i]
            lb += 1
    return lb


cdef void _hs_search(u64* cons, int k, int chosen, u64* ws, int* best,
                     int floor_) noexcept nogil:
    cdef int i, v, nk
    cdef u64 rest
    if k == 0:
        if chosen < best[0]:
            best[0] = chosen
        return
    if best[0] <= floor_:
        return
    if chosen + _hs_pack(cons, k) >= best[0]:
        return
    rest = cons[0]
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        nk = 0
        for i in range(k):
            if not (cons[i] >> v) & 1:
                ws[nk] = cons[i]
                nk += 1
        _hs_search(ws, nk, chosen + 1, ws + nk, best, floor_)
        if best[0] <= floor_:
            return


cdef bint _hs_feasible(u64* cons, int k, int budget, u64 allowed,
                       u64* ws) noexcept nogil:
    cdef int i, v, nk, bi, bc, pc
    cdef u64 rest
    if k == 0:
        return True
    if budget <= 0:
        return False
    for i in range(k):
        if (cons[i] & allowed) == 0:
            return False
    if _hs_pack(cons, k) > budget:
        return False
    bi = 0
    bc = 1000000
    for i in range(k):
        pc = __builtin_popcountll(cons[i] & allowed)
        if pc < bc:
            bc = pc
            bi = i
    rest = cons[bi] & allowed
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        nk = 0
        for i in range(k):
            if not (cons[i] >> v) & 1:
                ws[nk] = cons[i]
                nk += 1
        if _hs_feasible(ws, nk, budget - 1, allowed, ws + nk):
            return True
    return False


def min_hitting_set(int universe, constraints, int lower_bound=0):
    """Exact minimum hitting set over bitmask constraints; returns
    (size, witness_mask) with the lexicographically smallest witness.
    `lower_bound` must be valid for the instance."""
    cdef int total, k, i, j, v, best, floor_, count, start, nk, greedy
    cdef int bestv, bestc, c_
    cdef u64 full, witness, allowed, rest
    cdef u64* buf
    cdef u64* cur
    cdef u64* tmp
    cdef u64* ws
    cdef int counts[64]
    cdef bint dominated, hit

    if not 0 <= universe <= 62:
        raise ValueError(f"universe size must be in 0..62, got {universe}")
    uniq = sorted({int(c) for c in constraints})
    if not uniq:
        return 0, 0
    if uniq[0] == 0:
        raise ValueError("unsatisfiable constraint system: empty constraint")
    if uniq[len(uniq) - 1] >> universe:
        raise ValueError("constraint mentions an element outside the universe")
    # keep minimal constraints only, then order by (popcount, value)
    minimal = [
        c for c in uniq
        if not any(o != c and o & ~c == 0 for o in uniq)
    ]
    minimal.sort(key=lambda c: (c.bit_count(), c))
    total = len(minimal)

    # one arena: current set, filter scratch, and per-level search workspace
    buf = <u64*>malloc((total * 2 + total * 64 + 64) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cur = buf
    tmp = buf + total
    ws = buf + total * 2
    try:
        for i in range(total):
            cur[i] = minimal[i]
        k = total

        # greedy cover for the initial upper bound
        for i in range(k):
            tmp[i] = cur[i]
        nk = k
        greedy = 0
        while nk:
            for v in range(universe):
                counts[v] = 0
            for i in range(nk):
                rest = tmp[i]
                while rest:
                    v = __builtin_ctzll(rest)
                    rest &= rest - 1
                    counts[v] += 1
            bestv = 0
            bestc = -1
            for v in range(universe):
                if counts[v] > bestc:
                    bestc = counts[v]
                    bestv = v
            greedy += 1
            j = 0
            for i in range(nk):
                if not (tmp[i] >> bestv) & 1:
                    tmp[j] = tmp[i]
                    j += 1
            nk = j

        floor_ = lower_bound
        if floor_ < 1:
            floor_ = 1
        c_ = _hs_pack(cur, k)
        if c_ > floor_:
            floor_ = c_
        best = greedy
        if best > floor_:
            _hs_search(cur, k, 0, ws, &best, floor_)

        # rebuild the lexicographically smallest witness of size `best`
        full = ((<u64>1) << universe) - 1
        witness = 0
        count = 0
        start = 0
        while k:
            hit = False
            for v in range(start, universe):
                nk = 0
                for i in range(k):
                    if not (cur[i] >> v) & 1:
                        tmp[nk] = cur[i]
                        nk += 1
                allowed = (full >> (v + 1)) << (v + 1)
                if _hs_feasible(tmp, nk, best - count - 1, allowed, ws):
                    witness |= (<u64>1) << v
                    count += 1
                    for i in range(nk):
                        cur[i] = tmp[i]
                    k = nk
                    start = v + 1
                    hit = True
                    break
            if not hit:
                raise AssertionError("hitting-set witness reconstruction failed")
        return best, int(witness)
    finally:
        free(buf)


# ------------------------------------------------------- canonical labeling

cdef void _canon_rec(u64* adj, int n, int m, int t, int* placed, u64 used,
                     u64 prefix, int nbits, u64* best,
                     bint* have_best) noexcept nogil:
    cdef int tied[12]
    cdef int ntied = 0, i, v
    cdef u64 col, min_col
    cdef bint have_min = False
    if t == n:
        if (not have_best[0]) or prefix < best[0]:
            best[0] = prefix
            have_best[0] = True
        return
    min_col = 0
    for v in range(n):
        if (used >> v) & 1:
            continue
        col = 0
        for i in range(t):
            col = (col << 1) | ((adj[placed[i]] >> v) & 1)
        if (not have_min) or col < min_col:
            min_col = col
            tied[0] = v
            ntied = 1
            have_min = True
        elif col == min_col:
            tied[ntied] = v
            ntied += 1
    prefix = (prefix << t) | min_col
    nbits += t
    if have_best[0] and prefix > (best[0] >> (m - nbits)):
        return
    for i in range(ntied):
        v = tied[i]
        placed[t] = v
        _canon_rec(adj, n, m, t + 1, placed, used | ((<u64>1) << v),
                   prefix, nbits, best, have_best)


def canonical_bits(int n, adj):
    """Minimum upper-triangle bit string over all vertex relabelings
    (column-major pair order, first pair most significant)."""
    cdef u64 cadj[12]
    cdef int placed[12]
    cdef u64 best = 0
    cdef bint have_best = False
    cdef int v, m
    if n > 11:
        raise ValueError(f"canonical_bits supports n <= 11, got {n}")
    if n <= 1:
        return 0
    for v in range(n):
        cadj[v] = adj[v]
    m = n * (n - 1) // 2
    _canon_rec(cadj, n, m, 0, placed, 0, 0, 0, &best, &have_best)
    return int(best)


# ------------------------------------------------------- induced embedding

def induced_embedding(int host_n, host_adj, int pat_n, pat_adj):
    """First induced copy of the pattern in the host under the fixed search
    order (pattern by degree descending, host candidates ascending), or
    None."""
    cdef u64 hadj[64]
    cdef u64 padj[64]
    cdef int hdeg[64]
    cdef int pdeg[64]
    cdef int order[64]
    cdef int assign[64]
    cdef int pos_of[64]
    cdef int v, i, j
    if pat_n == 0:
        return ()
    if pat_n > host_n:
        return None
    if host_n > 62:
        raise ValueError(f"vertex count must be at most 62, got {host_n}")
    for v in range(host_n):
        hadj[v] = host_adj[v]
        hdeg[v] = __builtin_popcountll(hadj[v])
    for v in range(pat_n):
        padj[v] = pat_adj[v]
        pdeg[v] = __builtin_popcountll(padj[v])
    # degree-descending order, ties by vertex index
    for v in range(pat_n):
        order[v] = v
    for i in range(1, pat_n):
        j = i
        while j > 0 and (pdeg[order[j]] > pdeg[order[j - 1]]
                         or (pdeg[order[j]] == pdeg[order[j - 1]]
                             and order[j] < order[j - 1])):
            order[j], order[j - 1] = order[j - 1], order[j]
            j -= 1
    if _embed_rec(hadj, hdeg, host_n, padj, pdeg, pat_n, order, assign, 0, 0):
        out = []
        for v in range(pat_n):
            out.append(assign[v])
        return tuple(out)
    return None


cdef bint _embed_rec(u64* hadj, int* hdeg, int host_n, u64* padj, int* pdeg,
                     int pat_n, int* order, int* assign, int pos,
                     u64 used) noexcept nogil:
    cdef int p, h, i, q
    cdef u64 prow, hrow
    cdef bint ok
    if pos == pat_n:
        return True
    p = order[pos]
    prow = padj[p]
    for h in range(host_n):
        if (used >> h) & 1 or hdeg[h] < pdeg[p]:
            continue
        hrow = hadj[h]
        ok = True
        for i in range(pos):
            q = order[i]
            if ((prow >> q) & 1) != ((hrow >> assign[q]) & 1):
                ok = False
                break
        if ok:
            assign[p] = h
            if _embed_rec(hadj, hdeg, host_n, padj, pdeg, pat_n, order,
                          assign, pos + 1, used | ((<u64>1) << h)):
                return True
    return False
