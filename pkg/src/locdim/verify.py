"""Structural checks tying local metric dimension to clique number.

Eleven checks (C1..C11), each a statement that must hold for every
connected graph meeting its premise; a check whose premise fails is
recorded as inapplicable and vacuously true. run_suite evaluates them over
a stream of graphs, optionally fanning out to worker processes; everything
is deterministic, so the machine-readable output is byte-identical for any
worker count. All verdicts compare exact integers, never floats.
"""

from __future__ import annotations

import functools
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dimension import local_metric_dimension
from .enumeration import canonical_graph6, connected_graphs
from .families import apex_triangles, complete_minus_bipartite
from .graphs import Graph, bit_indices, is_bipartite, is_triangle_free, to_graph6
from .invariants import max_clique, twin_partition
from .pattern import is_gamma_free


def complete_minus_bipartite_params(g: Graph) -> tuple[int, int] | None:
    """Recognize a complete graph minus the edges of a complete bipartite
    part: the complement must be exactly a complete bipartite graph on two
    disjoint blocks plus isolated vertices, with at least one vertex outside
    both blocks. Returns (lam, mu), lam >= mu >= 1, or None."""
    full = (1 << g.n) - 1
    comp = [(~g.adj[v] & full) & ~(1 << v) for v in range(g.n)]
    tailed = [v for v in range(g.n) if comp[v]]
    if not tailed:
        return None
    tailed_mask = 0
    for v in tailed:
        tailed_mask |= 1 << v
    a_mask = comp[tailed[0]]
    b_mask = tailed_mask & ~a_mask
    for v in bit_indices(a_mask):
        if comp[v] != b_mask:
            return None
    for v in bit_indices(b_mask):
        if comp[v] != a_mask:
            return None
    if (a_mask | b_mask) == full:
        # both blocks cover everything: the original graph is disconnected
        return None
    lam, mu = sorted((a_mask.bit_count(), b_mask.bit_count()), reverse=True)
    return lam, mu


class GraphFacts:
    """Everything the checks consult, computed once per graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.omega, self.clique = max_clique(g)
        self.twins = twin_partition(g)
        self.local = local_metric_dimension(g)
        self.dim_local = self.local.value
        self.bipartite = is_bipartite(g)
        self.triangle_free = is_triangle_free(g)

    @functools.cached_property
    def graph_id(self) -> str:
        if self.n <= 8:
            return canonical_graph6(self.g)
        return to_graph6(self.g)

    @functools.cached_property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @functools.cached_property
    def gamma_free(self) -> bool:
        return is_gamma_free(self.g)

    @functools.cached_property
    def is_cycle5(self) -> bool:
        # the 5-cycle is the only connected 2-regular graph on 5 vertices
        return self.n == 5 and all(self.g.degree(v) == 2 for v in range(5))

    @functools.cached_property
    def is_split_extremal(self) -> bool:
        """Member of the clique-minus-biclique family with both removed
        blocks of size at least 2."""
        params = complete_minus_bipartite_params(self.g)
        return params is not None and params[1] >= 2


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    applicable: bool
    holds: bool
    details: str


@dataclass(frozen=True)
class TheoremReport:
    graph_id: str
    n: int
    results: tuple[CheckResult, ...]

    @property
    def violations(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.applicable and not r.holds)


_NOT_APPLICABLE = "premise not met"


def _c1(f: GraphFacts) -> tuple[bool, bool, str]:
    ok = (f.dim_local == f.n - 1) == f.is_complete
    return True, ok, f"dim_local={f.dim_local} complete={f.is_complete}"


def _c2(f: GraphFacts) -> tuple[bool, bool, str]:
    ok = (f.dim_local == f.n - 2) == (f.omega == f.n - 1)
    return True, ok, f"dim_local={f.dim_local} omega={f.omega}"


def _c3(f: GraphFacts) -> tuple[bool, bool, str]:
    ok = (f.dim_local == 1) == f.bipartite
    return True, ok, f"dim_local={f.dim_local} bipartite={f.bipartite}"


def _c4(f: GraphFacts) -> tuple[bool, bool, str]:
    log_floor = (f.omega - 1).bit_length()
    gap_floor = f.n - (1 << (f.n - f.omega))
    ok = f.dim_local >= log_floor and f.dim_local >= gap_floor
    return True, ok, f"dim_local={f.dim_local} log_floor={log_floor} gap_floor={gap_floor}"


def _c5(f: GraphFacts) -> tuple[bool, bool, str]:
    floor = f.n - f.twins.class_count
    ok = f.dim_local >= floor
    return True, ok, f"dim_local={f.dim_local} twin_floor={floor}"


def _c6(f: GraphFacts) -> tuple[bool, bool, str]:
    if not f.triangle_free:
        return False, True, _NOT_APPLICABLE
    ok = 5 * f.dim_local <= 2 * f.n
    return True, ok, f"5*dim_local={5 * f.dim_local} 2n={2 * f.n}"


def _c7(f: GraphFacts) -> tuple[bool, bool, str]:
    if f.n < 5 or f.omega > f.n - 3:
        return False, True, _NOT_APPLICABLE
    member = f.is_cycle5 or f.is_split_extremal
    ok = f.dim_local <= f.n - 3 and (f.dim_local == f.n - 3) == member
    return True, ok, f"dim_local={f.dim_local} ceiling={f.n - 3} extremal_member={member}"


def _c8(f: GraphFacts) -> tuple[bool, bool, str]:
    gap = f.n - f.omega
    if gap > 3:
        return False, True, _NOT_APPLICABLE
    if gap == 0:
        ok = f.dim_local == f.n - 1
    elif gap == 1:
        ok = f.dim_local == f.n - 2
    elif gap == 2:
        ok = f.n - 4 <= f.dim_local <= f.n - 3
    else:
        ok = f.n - 8 <= f.dim_local <= f.n - 3
    return True, ok, f"dim_local={f.dim_local} omega={f.omega} regime=n-{gap}"


def _c9(f: GraphFacts) -> tuple[bool, bool, str]:
    if f.n < 5:
        return False, True, _NOT_APPLICABLE
    case_i = f.omega == f.n - 2 and f.gamma_free
    member = case_i or f.is_cycle5 or f.is_split_extremal
    ok = (f.dim_local == f.n - 3) == member
    return True, ok, f"dim_local={f.dim_local} n-3={f.n - 3} classified={member}"


def _c10(f: GraphFacts) -> tuple[bool, bool, str]:
    if f.n < 5 or f.omega != f.n - 2:
        return False, True, _NOT_APPLICABLE
    in_range = f.n - 4 <= f.dim_local <= f.n - 3
    upper = (f.dim_local == f.n - 3) == f.gamma_free
    lower = (f.dim_local == f.n - 4) == (not f.gamma_free)
    ok = in_range and upper and lower
    return True, ok, f"dim_local={f.dim_local} gamma_free={f.gamma_free}"


def _c11(f: GraphFacts) -> tuple[bool, bool, str]:
    if f.omega < max(f.n - 3, 3) or f.omega > f.n - 1:
        return False, True, _NOT_APPLICABLE
    lhs = f.dim_local * (f.omega - 1)
    rhs = (f.omega - 2) * f.n
    return True, lhs <= rhs, f"dim_local*(omega-1)={lhs} (omega-2)*n={rhs}"


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    label: str
    fn: Callable[[GraphFacts], tuple[bool, bool, str]]


CHECKS: tuple[CheckDef, ...] = (
    CheckDef("C1", "dim_local = n-1 exactly for complete graphs", _c1),
    CheckDef("C2", "dim_local = n-2 exactly when the clique number is n-1", _c2),
    CheckDef("C3", "dim_local = 1 exactly for bipartite graphs", _c3),
    CheckDef("C4", "dim_local >= ceil(log2 omega) and >= n - 2**(n-omega)", _c4),
    CheckDef("C5", "dim_local >= n minus the number of true-twin classes", _c5),
    CheckDef("C6", "triangle-free: 5*dim_local <= 2*n", _c6),
    CheckDef("C7", "omega <= n-3: dim_local <= n-3, equality only on the extremal family", _c7),
    CheckDef("C8", "clique-regime bounds for omega in {n, n-1, n-2, n-3}", _c8),
    CheckDef("C9", "dim_local = n-3 classification (three cases)", _c9),
    CheckDef("C10", "omega = n-2: dim_local in {n-4, n-3}, split by gamma-freeness", _c10),
    CheckDef("C11", "omega in {n-1, n-2, n-3}: dim_local*(omega-1) <= (omega-2)*n", _c11),
)

CHECK_IDS: tuple[str, ...] = tuple(c.check_id for c in CHECKS)
_CHECK_BY_ID = {c.check_id: c for c in CHECKS}


def normalize_checks(checks: Iterable[str] | None) -> tuple[str, ...]:
    """Validate a check id selection, keeping registry order."""
    if checks is None:
        return CHECK_IDS
    requested = set()
    for cid in checks:
        if cid not in _CHECK_BY_ID:
            raise ValueError(f"unknown check id {cid!r}; known: {', '.join(CHECK_IDS)}")
        requested.add(cid)
    return tuple(cid for cid in CHECK_IDS if cid in requested)


def check_graph(g: Graph, checks: Sequence[str] | None = None) -> TheoremReport:
    """Evaluate the selected checks on one connected graph with n >= 3."""
    if g.n < 3:
        raise ValueError(f"checks need n >= 3, got n={g.n}")
    ids = normalize_checks(checks)
    facts = GraphFacts(g)
    results = []
    for cid in ids:
        applicable, holds, details = _CHECK_BY_ID[cid].fn(facts)
        results.append(CheckResult(cid, applicable, holds, details))
    return TheoremReport(facts.graph_id, g.n, tuple(results))


@dataclass(frozen=True)
class SuiteReport:
    source: str
    checks: tuple[str, ...]
    reports: tuple[TheoremReport, ...]
    elapsed: float

    @property
    def graph_count(self) -> int:
        return len(self.reports)

    @property
    def violations(self) -> tuple[tuple[str, str, str], ...]:
        out = []
        for rep in self.reports:
            for r in rep.violations:
                out.append((rep.graph_id, r.check_id, r.details))
        return tuple(sorted(out))

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_records(self) -> list[str]:
        """One tab-separated record per graph per check, in stream order:
        graph_id, check_id, applicable, holds."""
        lines = []
        for rep in self.reports:
            for r in rep.results:
                lines.append(f"{rep.graph_id}\t{r.check_id}\t{int(r.applicable)}\t{int(r.holds)}")
        return lines

    def to_text(self) -> str:
        lines = [
            f"source: {self.source}",
            f"graphs: {self.graph_count}  checks: {len(self.checks)}  elapsed: {self.elapsed:.2f}s",
            f"{'check':<6} {'applicable':>10} {'holds':>10} {'violations':>10}",
        ]
        for cid in self.checks:
            applicable = holds = bad = 0
            for rep in self.reports:
                for r in rep.results:
                    if r.check_id != cid or not r.applicable:
                        continue
                    applicable += 1
                    holds += int(r.holds)
                    bad += int(not r.holds)
            lines.append(f"{cid:<6} {applicable:>10} {holds:>10} {bad:>10}")
        if self.ok:
            lines.append("violations: none")
        else:
            lines.append(f"violations: {len(self.violations)}")
            for graph_id, cid, details in self.violations:
                lines.append(f"  {graph_id}  {cid}  {details}")
        return "\n".join(lines)


def run_suite(
    graphs: Iterable[Graph],
    checks: Sequence[str] | None = None,
    jobs: int = 1,
    source: str = "",
) -> SuiteReport:
    """Evaluate checks over a graph stream, with optional process fan-out.

    Report order follows the input order whatever the worker count, so
    to_records output is byte-identical for any `jobs`.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    graph_list = list(graphs)
    ids = normalize_checks(checks)
    started = time.perf_counter()
    fn = functools.partial(check_graph, checks=ids)
    if jobs > 1 and len(graph_list) > 1:
        chunk = max(1, len(graph_list) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(fn, graph_list, chunksize=chunk))
    else:
        reports = [fn(g) for g in graph_list]
    elapsed = time.perf_counter() - started
    return SuiteReport(source, ids, tuple(reports), elapsed)


def suite_over_order(
    n: int, checks: Sequence[str] | None = None, jobs: int = 1
) -> SuiteReport:
    """run_suite over the full stream of connected graphs of order n."""
    return run_suite(connected_graphs(n), checks=checks, jobs=jobs, source=f"gen-{n}")


# ------------------------------------------------------- family dimension


@dataclass(frozen=True)
class FamilyTableRow:
    n: int
    lam: int
    mu: int
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class FamilyTableReport:
    rows: tuple[FamilyTableRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_text(self) -> str:
        lines = [f"{'n':>3} {'lam':>4} {'mu':>4} {'expected':>9} {'actual':>7} ok"]
        for r in self.rows:
            lines.append(
                f"{r.n:>3} {r.lam:>4} {r.mu:>4} {r.expected:>9} {r.actual:>7} "
                f"{'yes' if r.ok else 'NO'}"
            )
        lines.append(f"rows: {len(self.rows)}  mismatches: {sum(not r.ok for r in self.rows)}")
        return "\n".join(lines)


def family_split_table(max_n: int = 10) -> FamilyTableReport:
    """Exact local dimension of every clique-minus-biclique member up to
    max_n vertices against the closed form: n-2 when the small block is a
    single vertex, n-3 otherwise."""
    if max_n < 3:
        raise ValueError(f"need max_n >= 3, got {max_n}")
    rows = []
    for n in range(3, max_n + 1):
        for mu in range(1, n):
            for lam in range(mu, n - mu):
                g = complete_minus_bipartite(n, lam, mu)
                expected = n - 2 if mu == 1 else n - 3
                actual = local_metric_dimension(g).value
                rows.append(FamilyTableRow(n, lam, mu, expected, actual))
    return FamilyTableReport(tuple(rows))


# ------------------------------------------------------------- refutation


@dataclass(frozen=True)
class RefutationRow:
    triangles: int
    n: int
    dim_local: int
    ceiling: int

    @property
    def violated(self) -> bool:
        return self.dim_local > self.ceiling


@dataclass(frozen=True)
class RefutationReport:
    rows: tuple[RefutationRow, ...]

    @property
    def first_violation(self) -> int | None:
        for r in self.rows:
            if r.violated:
                return r.triangles
        return None

    def to_text(self) -> str:
        lines = [f"{'triangles':>9} {'n':>4} {'dim_local':>9} {'ceil((n+1)/2)':>13} violated"]
        for r in self.rows:
            lines.append(
                f"{r.triangles:>9} {r.n:>4} {r.dim_local:>9} {r.ceiling:>13} "
                f"{'YES' if r.violated else 'no'}"
            )
        if self.first_violation is None:
            lines.append("no violation found")
        else:
            lines.append(f"first violation at {self.first_violation} triangles")
        return "\n".join(lines)


def problem1_refutation(max_triangles: int = 4) -> RefutationReport:
    """Probe the apex-over-triangles family against the candidate ceiling
    dim_local <= ceil((n+1)/2). The family is planar and its local dimension
    grows like 2n/3, so the ceiling must fail once the family is large
    enough."""
    if max_triangles < 2:
        raise ValueError(f"need max_triangles >= 2, got {max_triangles}")
    rows = []
    for count in range(2, max_triangles + 1):
        g = apex_triangles(count)
        value = local_metric_dimension(g).value
        rows.append(RefutationRow(count, g.n, value, (g.n + 2) // 2))
    return RefutationReport(tuple(rows))


# ------------------------------------------------------------------- scan


@dataclass(frozen=True)
class ScanReport:
    total: int
    applicable: int
    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [f"scanned: {self.total}  applicable: {self.applicable}  violations: {len(self.violations)}"]
        for graph_id, details in self.violations:
            lines.append(f"  {graph_id}  {details}")
        return "\n".join(lines)


def scan_clique_ratio(
    graphs: Iterable[Graph], omega_values: Iterable[int] | None = None
) -> ScanReport:
    """Exact-integer scan of dim_local*(omega-1) <= (omega-2)*n over graphs
    meeting the n >= omega+1 >= 4 gate; omega_values optionally narrows the
    clique numbers scanned."""
    wanted = None if omega_values is None else set(omega_values)
    total = 0
    applicable = 0
    violations = []
    for g in graphs:
        total += 1
        facts = GraphFacts(g)
        if facts.omega < 3 or g.n < facts.omega + 1:
            continue
        if wanted is not None and facts.omega not in wanted:
            continue
        applicable += 1
        lhs = facts.dim_local * (facts.omega - 1)
        rhs = (facts.omega - 2) * g.n
        if lhs > rhs:
            violations.append(
                (facts.graph_id, f"dim_local*(omega-1)={lhs} (omega-2)*n={rhs}")
            )
    return ScanReport(total, applicable, tuple(sorted(violations)))


# ------------------------------------------------------------------ audit


@dataclass(frozen=True)
class AuditReport:
    """Observed vs predicted membership of the dim_local = n-3 class over
    the full stream of one order (canonical graph6 ids, sorted)."""

    n: int
    observed: tuple[str, ...]
    predicted: tuple[str, ...]

    @property
    def missing(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.predicted) - set(self.observed)))

    @property
    def extra(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.observed) - set(self.predicted)))

    @property
    def ok(self) -> bool:
        return self.observed == self.predicted


def dimension_class_audit(n: int) -> AuditReport:
    """Enumerate order n and compare the graphs attaining dim_local = n-3
    against the predicted union: the 5-cycle, the clique-minus-biclique
    members with both blocks >= 2, and the gamma-free graphs with clique
    number n-2."""
    if not 5 <= n <= 7:
        raise ValueError(f"audit supports 5 <= n <= 7, got {n}")
    observed = []
    predicted = []
    for g in connected_graphs(n):
        facts = GraphFacts(g)
        if facts.dim_local == n - 3:
            observed.append(facts.graph_id)
        if facts.is_cycle5 or facts.is_split_extremal or (
            facts.omega == n - 2 and facts.gamma_free
        ):
            predicted.append(facts.graph_id)
    return AuditReport(n, tuple(sorted(observed)), tuple(sorted(predicted)))
