"""Canonical labeling and isomorphism testing for small graphs.

The canonical form of a graph is the minimum graph6 encoding over all
vertex orderings compatible with an iteratively refined degree partition.
Restricting to partition-respecting orderings is sound because the
partition is an isomorphism invariant, and it prunes the permutation
search enough for the sizes this package needs (deduplicating extremal
configurations on at most 12 vertices).  Beyond that a guard trips rather
than letting the search degrade.
"""

from __future__ import annotations

from .graphs import Graph, GuardError, _bits, encode_graph6, from_edges

CANON_MAX_VERTICES = 12


def _refined_classes(g: Graph) -> list[list[int]]:
    """Vertex classes under iterated neighbor-color refinement, in canonical order."""
    n, adj = g.n, g.adj
    color = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sig = [
            (color[v], tuple(sorted(color[u] for u in _bits(adj[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if new == color:
            break
        color = new
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(color[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes; equal bytes certify isomorphism.

    Searches placements position by position, comparing the adjacency
    column each new vertex contributes against the best stream found so
    far and pruning anything provably worse.
    """
    if g.n > CANON_MAX_VERTICES:
        raise GuardError(f"canonical_form supports n <= {CANON_MAX_VERTICES}, got {g.n}")
    n, adj = g.n, g.adj
    class_at: list[list[int]] = []
    for cls in _refined_classes(g):
        class_at.extend([cls] * len(cls))

    inf = 1 << n
    best = [inf] * n
    placed = [0] * n
    used = [False] * n
    best_perm: list[int] = []

    def dfs(k: int) -> None:
        if k == n:
            best_perm[:] = placed
            return
        cands = []
        for v in class_at[k]:
            if used[v]:
                continue
            col = 0
            av = adj[v]
            for i in range(k):
                col = col << 1 | (av >> placed[i] & 1)
            cands.append((col, v))
        cands.sort()
        for col, v in cands:
            if col > best[k]:
                break
            if col < best[k]:
                best[k] = col
                for j in range(k + 1, n):
                    best[j] = inf
            placed[k] = v
            used[v] = True
            dfs(k + 1)
            used[v] = False

    dfs(0)
    perm = best_perm
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if adj[perm[i]] >> perm[j] & 1
    ]
    return encode_graph6(from_edges(n, edges))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)
