"""Pruned exhaustive search for triangle-rich p4hat-free graphs on small n.

Method
------
To certify that no n-vertex p4hat-free graph holds t or more triangles
(for t > floor(n^2/8)):

* If no two triangles of such a graph shared an edge, every block would be
  a single triangle and the Mantel reduction would cap t(G) at
  floor(n^2/8) < t.  So two triangles share an edge and can be relabeled
  to the fixed pair 012, 013.
* Triangles that would force the forbidden pattern alongside the fixed
  pair are pruned from the candidate pool: any triangle with an edge in
  {02, 03, 12, 13} and a vertex outside {0,1,2,3}.  (For n = 8 this
  removes 16 of the 56 triples and leaves 38 candidates.)
* Every (t-2)-subset of candidates is unioned with the fixed pair; the
  union carries at least t triangles by construction, so a single
  p4hat-free union is already a counterexample.  Exhausting all subsets
  certifies nonexistence.

Subsets are enumerated in colexicographic rank order so the work splits
into deterministic, worker-count-independent ranges.  The union graph is
maintained incrementally along the enumeration tree: per-edge multiplicity
counters decide which adjacency bits each pushed triangle contributes, and
adjacency lives in a single packed integer (one row of ``stride`` bits per
vertex) that each recursion level extends functionally.

The same scan in "collect" mode, filtered to unions with exactly
t = ex(n) triangles, enumerates every extremal configuration that has two
triangles sharing an edge; configurations whose triangles are pairwise
edge-disjoint are enumerated separately as triangle packings.  An
exhaustive oracle over all labeled graphs covers n <= 7.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from multiprocessing import get_context
from typing import Callable, Iterable, Sequence

from .canon import canonical_form
from .constructions import bipartite_matching
from .graphs import (
    Graph,
    GuardError,
    Triangle,
    _bits,
    count_triangles,
    decode_graph6,
    edge_minimal_reduction,
    from_edges,
    normalize_triangle,
    triangle_edges,
    union_of_triangles,
)
from .patterns import _rows_contain_suspension

FIXED_TRIANGLES: tuple[Triangle, Triangle] = ((0, 1, 2), (0, 1, 3))
SEARCH_MAX_VERTICES = 10
EXHAUSTIVE_MAX_VERTICES = 7
EXTREMAL_MAX_VERTICES = 8

_POLL_INTERVAL = 8192
_STOP_SENTINEL = 1 << 62


# -- candidate pool -----------------------------------------------------------

def _check_fixed(fixed: Iterable[Iterable[int]]) -> tuple[Triangle, Triangle]:
    norm = tuple(sorted(normalize_triangle(t) for t in fixed))
    if norm != FIXED_TRIANGLES:
        raise GuardError(f"unsupported fixed triangle set {norm}; only {FIXED_TRIANGLES}")
    return FIXED_TRIANGLES


_PRUNED_EDGES = frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})


def excluded_triangles(n: int, fixed: Iterable[Iterable[int]] = FIXED_TRIANGLES) -> list[Triangle]:
    """Triangles pruned next to the fixed pair: an edge in {02,03,12,13} plus
    a vertex outside the fixed-pair support always forces the forbidden
    pattern (4(n-4) triples; 16 for n = 8)."""
    _check_fixed(fixed)
    if n < 5:
        raise GuardError(f"candidate pruning needs n >= 5, got {n}")
    out = []
    for tri in combinations(range(n), 3):
        if tri in FIXED_TRIANGLES:
            continue
        if any(e in _PRUNED_EDGES for e in triangle_edges(tri)) and tri[2] >= 4:
            out.append(tri)
    return out


def candidate_triangles(n: int, fixed: Iterable[Iterable[int]] = FIXED_TRIANGLES) -> list[Triangle]:
    """Admissible triangles next to the fixed pair, in lexicographic order."""
    _check_fixed(fixed)
    if n < 5:
        raise GuardError(f"candidate pruning needs n >= 5, got {n}")
    dropped = set(excluded_triangles(n)) | set(FIXED_TRIANGLES)
    return [tri for tri in combinations(range(n), 3) if tri not in dropped]


# -- colexicographic subset ranking -------------------------------------------

def colex_rank(subset: Sequence[int]) -> int:
    return sum(comb(c, j + 1) for j, c in enumerate(sorted(subset)))


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    if rank < 0 or k < 0:
        raise GuardError(f"colex_unrank needs rank >= 0 and k >= 0, got {rank}, {k}")
    out = []
    r = rank
    for j in range(k, 0, -1):
        m = j - 1
        while comb(m + 1, j) <= r:
            m += 1
        out.append(m)
        r -= comb(m, j)
    return tuple(reversed(out))


def combination_rank_range(total: int, k: int, chunk: int, chunks: int) -> tuple[int, int]:
    """Half-open colex rank range [lo, hi) of the given chunk.

    Ranges are contiguous, disjoint, cover all comb(total, k) ranks, and
    depend only on (total, k, chunks), never on scheduling.
    """
    if total < 0 or k < 0 or k > total:
        raise GuardError(f"invalid subset space C({total}, {k})")
    if chunks < 1 or not 0 <= chunk < chunks:
        raise GuardError(f"chunk {chunk} outside 0..{chunks - 1}")
    ranks = comb(total, k)
    return ranks * chunk // chunks, ranks * (chunk + 1) // chunks


# -- packed-adjacency machinery ------------------------------------------------

def _stride_for(n: int) -> int:
    return 8 if n <= 8 else 16


def _packed_has_suspension(adj: int, n: int, stride: int, rowmask: int) -> bool:
    for v in range(n):
        b = adj >> v * stride & rowmask
        if b.bit_count() < 4:
            continue
        m = b
        while m:
            abit = m & -m
            m ^= abit
            na = (adj >> (abit.bit_length() - 1) * stride & rowmask) & b
            w = na & ~((abit << 1) - 1)
            while w:
                bbit = w & -w
                w ^= bbit
                ca = na ^ bbit
                cb = ((adj >> (bbit.bit_length() - 1) * stride & rowmask) & b) ^ abit
                if ca and cb:
                    u = ca | cb
                    if u & (u - 1):
                        return True
    return False


def _packed_triangle_count(adj: int, n: int, stride: int, rowmask: int) -> int:
    t = 0
    for v in range(n):
        rv = adj >> v * stride & rowmask
        hi = rv >> (v + 1) << (v + 1)
        for u in _bits(hi):
            ru = adj >> u * stride & rowmask
            t += (rv & ru >> (u + 1) << (u + 1)).bit_count()
    return t


def _packed_rows(adj: int, n: int, stride: int, rowmask: int) -> tuple[int, ...]:
    return tuple(adj >> v * stride & rowmask for v in range(n))


def _candidate_edge_data(n: int, stride: int, cands: Sequence[Triangle]):
    """Flat (edge-index, bit-pair) data per candidate for the scan hot loop."""
    out = []
    for tri in cands:
        flat: list[int] = []
        for u, v in triangle_edges(tri):
            flat.append(u * n + v)
            flat.append(1 << u * stride + v | 1 << v * stride + u)
        out.append(tuple(flat))
    return tuple(out)


def _base_state(n: int, stride: int, fixed: Sequence[Triangle]) -> tuple[list[int], int]:
    counts = [0] * (n * n)
    adj = 0
    for tri in fixed:
        for u, v in triangle_edges(tri):
            if not counts[u * n + v]:
                adj |= 1 << u * stride + v | 1 << v * stride + u
            counts[u * n + v] += 1
    return counts, adj


class _Done(Exception):
    pass


def _scan_first(n, stride, cand_edges, k, lo, hi, counts, adj0, stop):
    """Scan colex ranks [lo, hi); stop at the first p4hat-free union.

    Returns (examined, found_rank, found_subset).  ``stop`` is an optional
    shared Value carrying the least rank found anywhere; a worker aborts
    once every rank it could still visit exceeds that value, which keeps
    the merged result identical for any worker count.
    """
    if lo >= hi:
        return 0, None, None
    ncand = len(cand_edges)
    combt = [[comb(m, j) for j in range(k + 1)] for m in range(ncand + 1)]
    cnt = list(counts)
    chosen: list[int] = []
    examined = 0
    next_poll = _POLL_INTERVAL
    found_rank: int | None = None
    found_subset: tuple[int, ...] | None = None
    rowmask = (1 << stride) - 1
    has = _packed_has_suspension

    def leaf_loop(mlo, mhi, base, adj):
        nonlocal examined, next_poll, found_rank, found_subset
        for m in range(mlo, mhi):
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            if not cnt[e0]:
                na |= m0
            if not cnt[e1]:
                na |= m1
            if not cnt[e2]:
                na |= m2
            if has(na, n, stride, rowmask):
                continue
            examined += m - mlo + 1
            found_rank = base + m
            found_subset = tuple(sorted(chosen + [m]))
            raise _Done
        examined += mhi - mlo
        if examined >= next_poll:
            next_poll = examined + _POLL_INTERVAL
            if stop is not None and stop.value < base + mhi:
                raise _Done

    def walk_full(j, cap, base, adj):
        if j == 1:
            leaf_loop(0, cap, base, adj)
            return
        for m in range(j - 1, cap):
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            c = cnt[e0]
            cnt[e0] = c + 1
            if not c:
                na |= m0
            c = cnt[e1]
            cnt[e1] = c + 1
            if not c:
                na |= m1
            c = cnt[e2]
            cnt[e2] = c + 1
            if not c:
                na |= m2
            chosen.append(m)
            try:
                walk_full(j - 1, m, base + combt[m][j], na)
            finally:
                chosen.pop()
                cnt[e0] -= 1
                cnt[e1] -= 1
                cnt[e2] -= 1

    def walk(j, cap, base, wlo, whi, adj):
        for m in range(j - 1, cap):
            a = base + combt[m][j]
            b = base + combt[m + 1][j]
            if b <= wlo:
                continue
            if a >= whi:
                break
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            c = cnt[e0]
            cnt[e0] = c + 1
            if not c:
                na |= m0
            c = cnt[e1]
            cnt[e1] = c + 1
            if not c:
                na |= m1
            c = cnt[e2]
            cnt[e2] = c + 1
            if not c:
                na |= m2
            chosen.append(m)
            try:
                if j == 2:
                    leaf_loop(max(0, wlo - a), min(m, whi - a), a, na)
                elif wlo <= a and b <= whi:
                    walk_full(j - 1, m, a, na)
                else:
                    walk(j - 1, m, a, max(wlo, a), min(whi, b), na)
            finally:
                chosen.pop()
                cnt[e0] -= 1
                cnt[e1] -= 1
                cnt[e2] -= 1

    try:
        if k == 1:
            leaf_loop(lo, hi, 0, adj0)
        elif lo == 0 and hi == combt[ncand][k]:
            walk_full(k, ncand, 0, adj0)
        else:
            walk(k, ncand, 0, lo, hi, adj0)
    except _Done:
        pass
    return examined, found_rank, found_subset


def _scan_collect(n, stride, cand_edges, k, lo, hi, counts, adj0):
    """Scan colex ranks [lo, hi); collect every p4hat-free union's subset."""
    if lo >= hi:
        return 0, []
    ncand = len(cand_edges)
    combt = [[comb(m, j) for j in range(k + 1)] for m in range(ncand + 1)]
    cnt = list(counts)
    chosen: list[int] = []
    examined = 0
    hits: list[tuple[int, ...]] = []
    rowmask = (1 << stride) - 1
    has = _packed_has_suspension

    def leaf_loop(mlo, mhi, adj):
        nonlocal examined
        for m in range(mlo, mhi):
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            if not cnt[e0]:
                na |= m0
            if not cnt[e1]:
                na |= m1
            if not cnt[e2]:
                na |= m2
            if not has(na, n, stride, rowmask):
                hits.append(tuple(sorted(chosen + [m])))
        examined += mhi - mlo

    def walk_full(j, cap, adj):
        if j == 1:
            leaf_loop(0, cap, adj)
            return
        for m in range(j - 1, cap):
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            c = cnt[e0]
            cnt[e0] = c + 1
            if not c:
                na |= m0
            c = cnt[e1]
            cnt[e1] = c + 1
            if not c:
                na |= m1
            c = cnt[e2]
            cnt[e2] = c + 1
            if not c:
                na |= m2
            chosen.append(m)
            walk_full(j - 1, m, na)
            chosen.pop()
            cnt[e0] -= 1
            cnt[e1] -= 1
            cnt[e2] -= 1

    def walk(j, cap, base, wlo, whi, adj):
        for m in range(j - 1, cap):
            a = base + combt[m][j]
            b = base + combt[m + 1][j]
            if b <= wlo:
                continue
            if a >= whi:
                break
            e0, m0, e1, m1, e2, m2 = cand_edges[m]
            na = adj
            c = cnt[e0]
            cnt[e0] = c + 1
            if not c:
                na |= m0
            c = cnt[e1]
            cnt[e1] = c + 1
            if not c:
                na |= m1
            c = cnt[e2]
            cnt[e2] = c + 1
            if not c:
                na |= m2
            chosen.append(m)
            if j == 2:
                leaf_loop(max(0, wlo - a), min(m, whi - a), na)
            elif wlo <= a and b <= whi:
                walk_full(j - 1, m, na)
            else:
                walk(j - 1, m, a, max(wlo, a), min(whi, b), na)
            chosen.pop()
            cnt[e0] -= 1
            cnt[e1] -= 1
            cnt[e2] -= 1

    if k == 1:
        leaf_loop(lo, hi, adj0)
    elif lo == 0 and hi == combt[ncand][k]:
        walk_full(k, ncand, adj0)
    else:
        walk(k, ncand, 0, lo, hi, adj0)
    return examined, hits


# -- worker plumbing -----------------------------------------------------------

_WORKER_STOP = None


def _init_worker(stop):
    global _WORKER_STOP
    _WORKER_STOP = stop


def _worker_scan(args):
    mode, n, stride, cand_edges, k, lo, hi, counts, adj0 = args
    if mode == "first":
        stop = _WORKER_STOP
        examined, rank, subset = _scan_first(
            n, stride, cand_edges, k, lo, hi, counts, adj0, stop
        )
        if rank is not None and stop is not None:
            with stop.get_lock():
                if rank < stop.value:
                    stop.value = rank
        return examined, rank, subset
    return _scan_collect(n, stride, cand_edges, k, lo, hi, counts, adj0)


def _run_partitioned(mode, n, t_or_none, cands, k, workers, progress=None):
    """Run a scan over all C(len(cands), k) ranks split across workers."""
    stride = _stride_for(n)
    cand_edges = _candidate_edge_data(n, stride, cands)
    counts, adj0 = _base_state(n, stride, FIXED_TRIANGLES)
    total = comb(len(cands), k)
    ranges = [combination_rank_range(len(cands), k, i, workers) for i in range(workers)]
    args = [(mode, n, stride, cand_edges, k, lo, hi, counts, adj0) for lo, hi in ranges]

    if workers == 1:
        results = [_worker_scan_local(args[0])]
    else:
        ctx = get_context("fork")
        stop = ctx.Value("q", _STOP_SENTINEL) if mode == "first" else None
        with ctx.Pool(processes=workers, initializer=_init_worker, initargs=(stop,)) as pool:
            results = pool.map(_worker_scan, args)
    if progress is not None:
        for i, res in enumerate(results):
            progress(i, res[0])
    return total, results


def _worker_scan_local(args):
    # single-worker path: no shared stop value needed
    mode, n, stride, cand_edges, k, lo, hi, counts, adj0 = args
    if mode == "first":
        return _scan_first(n, stride, cand_edges, k, lo, hi, counts, adj0, None)
    return _scan_collect(n, stride, cand_edges, k, lo, hi, counts, adj0)


# -- public search operations ---------------------------------------------------

@dataclass(frozen=True)
class SearchSpec:
    n: int
    t: int
    fixed: tuple[Triangle, Triangle]
    candidates: tuple[Triangle, ...]


@dataclass(frozen=True)
class SearchReport:
    spec: SearchSpec
    outcome: str  # "exhausted" | "counterexample"
    graphs_examined: int
    unions_p4hat_free_with_excess: int
    counterexample: Graph | None
    counterexample_rank: int | None
    nonexistence_certified: bool
    elapsed: float


def counterexample_search(
    n: int,
    t: int,
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> SearchReport:
    """Search all (t-2)-subsets of candidates for a p4hat-free union.

    "exhausted" means every union contained the forbidden pattern; together
    with the single-triangle-block fallback this certifies that no n-vertex
    p4hat-free graph holds >= t triangles whenever t > floor(n^2/8)
    (reported as ``nonexistence_certified``).  A found union is returned as
    the counterexample with the least colex rank; ``graphs_examined`` is
    then the number of ranks up to and including it.  Reports are identical
    for every worker count.
    """
    if not 5 <= n <= SEARCH_MAX_VERTICES:
        raise GuardError(f"counterexample_search supports 5 <= n <= {SEARCH_MAX_VERTICES}")
    if t < 3:
        raise GuardError(f"target triangle count must be >= 3, got {t}")
    if workers < 1:
        raise GuardError(f"worker count must be >= 1, got {workers}")

    started = time.perf_counter()
    cands = candidate_triangles(n)
    k = t - 2
    spec = SearchSpec(n=n, t=t, fixed=FIXED_TRIANGLES, candidates=tuple(cands))

    if k > len(cands):
        # no subsets exist; vacuously exhausted
        return SearchReport(
            spec, "exhausted", 0, 0, None, None, t > n * n // 8,
            time.perf_counter() - started,
        )

    total, results = _run_partitioned("first", n, t, cands, k, workers, progress)

    founds = [(rank, res) for rank, res in ((r[1], r) for r in results) if rank is not None]
    if founds:
        winner_rank, winner = min(founds, key=lambda x: x[0])
        subset = winner[2]
        tris = list(FIXED_TRIANGLES) + [cands[i] for i in subset]
        graph = union_of_triangles(n, tris)
        excess = 1 if count_triangles(graph) > t else 0
        return SearchReport(
            spec, "counterexample", winner_rank + 1, excess, graph, winner_rank,
            False, time.perf_counter() - started,
        )

    examined = sum(r[0] for r in results)
    if examined != total:
        raise AssertionError(f"exhausted scan examined {examined} of {total} subsets")
    return SearchReport(
        spec, "exhausted", examined, 0, None, None, t > n * n // 8,
        time.perf_counter() - started,
    )


def exhaustive_oracle(n: int) -> tuple[int, list[Graph]]:
    """Exact extremum over all labeled graphs on n vertices (n <= 7).

    Walks the 2^C(n,2) edge subsets in Gray-code order, maintaining the
    triangle count incrementally, and keeps every p4hat-free maximizer.
    Maximizers are reduced to edge-minimal form and deduplicated by
    canonical form.
    """
    if not 1 <= n <= EXHAUSTIVE_MAX_VERTICES:
        raise GuardError(f"exhaustive_oracle supports n <= {EXHAUSTIVE_MAX_VERTICES}, got {n}")
    edges = list(combinations(range(n), 2))
    m = len(edges)
    rows = [0] * n
    t = 0
    mask = 0
    best = -1
    winners: list[int] = []
    if not _rows_contain_suspension(rows, n):
        best, winners = 0, [0]
    for s in range(1, 1 << m):
        j = (s & -s).bit_length() - 1
        u, v = edges[j]
        delta = (rows[u] & rows[v]).bit_count()
        t += -delta if mask >> j & 1 else delta
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        mask ^= 1 << j
        if t >= best and not _rows_contain_suspension(rows, n):
            if t > best:
                best = t
                winners = [mask]
            else:
                winners.append(mask)
    forms = {
        canonical_form(
            edge_minimal_reduction(
                from_edges(n, [edges[i] for i in _bits(wmask)])
            )
        )
        for wmask in winners
    }
    return best, [decode_graph6(f) for f in sorted(forms)]


def _book1_packings(n: int, size: int) -> list[list[Triangle]]:
    """All sets of ``size`` pairwise edge-disjoint triangles on n vertices.

    Edges are decided in lexicographic order: each is either covered by a
    chosen triangle or left unused, with the unused budget capped by the
    edge count, so every packing is produced exactly once.
    """
    edges = list(combinations(range(n), 2))
    m = len(edges)
    max_holes = m - 3 * size
    if max_holes < 0:
        return []
    eidx = {e: i for i, e in enumerate(edges)}
    tris_by_first: list[list[tuple[Triangle, tuple[int, int, int]]]] = [[] for _ in range(m)]
    for tri in combinations(range(n), 3):
        a, b, c = tri
        ids = (eidx[(a, b)], eidx[(a, c)], eidx[(b, c)])
        tris_by_first[ids[0]].append((tri, ids))

    state = [0] * m  # 0 undecided, 1 in a triangle, 2 unused
    chosen: list[Triangle] = []
    out: list[list[Triangle]] = []

    def go(i: int, placed: int, holes: int) -> None:
        while i < m and state[i]:
            i += 1
        if i == m:
            if placed == size:
                out.append(list(chosen))
            return
        if holes < max_holes:
            state[i] = 2
            go(i + 1, placed, holes + 1)
            state[i] = 0
        if placed < size:
            for tri, ids in tris_by_first[i]:
                if not state[ids[1]] and not state[ids[2]]:
                    state[ids[0]] = state[ids[1]] = state[ids[2]] = 1
                    chosen.append(tri)
                    go(i + 1, placed + 1, holes)
                    chosen.pop()
                    state[ids[0]] = state[ids[1]] = state[ids[2]] = 0

    go(0, 0, 0)
    return out


def enumerate_extremal_configs(n: int, ex_value: int, workers: int = 1) -> list[Graph]:
    """All extremal configurations with exactly ``ex_value`` triangles.

    Configurations with two triangles sharing an edge come from the seeded
    subset scan (exact-count filtered); configurations whose triangles are
    pairwise edge-disjoint come from triangle packings.  The result is
    edge-minimal, deduplicated by canonical form, and sorted by it.
    """
    if not 5 <= n <= EXTREMAL_MAX_VERTICES:
        raise GuardError(f"config enumeration supports 5 <= n <= {EXTREMAL_MAX_VERTICES}")
    if ex_value < 3:
        raise GuardError(f"ex_value must be >= 3, got {ex_value}")
    if workers < 1:
        raise GuardError(f"worker count must be >= 1, got {workers}")

    cands = candidate_triangles(n)
    k = ex_value - 2
    forms: set[bytes] = set()

    if k <= len(cands):
        _, results = _run_partitioned("collect", n, None, cands, k, workers)
        for _, hits in results:
            for subset in hits:
                tris = list(FIXED_TRIANGLES) + [cands[i] for i in subset]
                graph = union_of_triangles(n, tris)
                if count_triangles(graph) == ex_value:
                    forms.add(canonical_form(graph))

    for packing in _book1_packings(n, ex_value):
        graph = union_of_triangles(n, packing)
        if count_triangles(graph) == ex_value and not _rows_contain_suspension(graph.adj, n):
            forms.add(canonical_form(graph))

    return [decode_graph6(f) for f in sorted(forms)]


def extremal_value(n: int, workers: int = 1) -> tuple[int, list[Graph]]:
    """ex(n) and all edge-minimal extremal configurations up to isomorphism.

    n <= 7 delegates to the exhaustive oracle.  n = 8 certifies the upper
    bound by exhausting the t = 9 search, realizes the lower bound with the
    bipartite-plus-matching construction, then enumerates configurations.
    """
    if not 1 <= n <= EXTREMAL_MAX_VERTICES:
        raise GuardError(f"extremal_value supports n <= {EXTREMAL_MAX_VERTICES}, got {n}")
    if workers < 1:
        raise GuardError(f"worker count must be >= 1, got {workers}")
    if n <= EXHAUSTIVE_MAX_VERTICES:
        return exhaustive_oracle(n)

    bound = n * n // 8
    report = counterexample_search(n, bound + 1, workers=workers)
    if report.outcome != "exhausted" or not report.nonexistence_certified:
        raise AssertionError(f"upper-bound search for n={n} did not certify; got {report.outcome}")
    witness = bipartite_matching(n)
    if count_triangles(witness) != bound or _rows_contain_suspension(witness.adj, n):
        raise AssertionError("lower-bound construction failed verification")
    return bound, enumerate_extremal_configs(n, bound, workers=workers)
