"""Triangle-block decomposition, block classification, and the Mantel reduction.

Two edges are triangle-connected when a chain of triangles, consecutive ones
sharing an edge, links them.  A block is an edge-maximal triangle-connected
subgraph; blocks of any graph are pairwise edge-disjoint.  In a p4hat-free
graph every block is a complete graph on 4 vertices or a book (s triangles
on a common base edge); anything else is classified ``Other`` so that
arbitrary inputs can still be described.

Deleting each book's base edge (for single-triangle books: its
lexicographically least edge, fixed for reproducibility) leaves a
triangle-free graph with exactly two surviving edges per original triangle.
Mantel's bound on the survivor then caps the triangle count of any K4-free
p4hat-free graph at floor(n^2/8).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Edge,
    Graph,
    Triangle,
    count_triangles,
    enumerate_triangles,
    from_edges,
    triangle_edges,
)
from .patterns import SuspensionWitness, contains_suspension_p4


class _UnionFind:
    """Array union-find with path compression; indices are triangle ids."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class Block:
    """One triangle block: its edge set, classification, and counts."""

    kind: str  # "K4" | "Book" | "Other"
    pages: int | None  # s for Book blocks
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    triangle_count: int
    base: Edge | None  # Book base; for s=1 the deterministic deletion choice


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    stray_edges: tuple[Edge, ...]  # edges lying in no triangle

    def kinds(self) -> list[str]:
        return [b.kind for b in self.blocks]


class BlockPreconditionError(ValueError):
    """Input violated a K4-free / p4hat-free precondition; carries the witness."""

    def __init__(self, message: str, *, k4: tuple[int, ...] | None = None,
                 witness: SuspensionWitness | None = None):
        super().__init__(message)
        self.k4 = k4
        self.witness = witness


def classify_block(edges) -> Block:
    """Classify a triangle-connected edge set as K4, Book(s), or Other."""
    edge_list = sorted(tuple(sorted(e)) for e in edges)
    verts = sorted({v for e in edge_list for v in e})
    n = verts[-1] + 1
    sub = from_edges(n, edge_list)
    tris = enumerate_triangles(sub)
    t = len(tris)
    nv, ne = len(verts), len(edge_list)

    if nv == 4 and ne == 6 and t == 4:
        return Block("K4", None, tuple(verts), tuple(edge_list), t, None)

    if t >= 1 and ne == 2 * t + 1 and nv == t + 2:
        if t == 1:
            base = min(triangle_edges(tris[0]))
            return Block("Book", 1, tuple(verts), tuple(edge_list), 1, base)
        common = set(triangle_edges(tris[0]))
        for tri in tris[1:]:
            common &= set(triangle_edges(tri))
        if len(common) == 1:
            return Block("Book", t, tuple(verts), tuple(edge_list), t, common.pop())

    return Block("Other", None, tuple(verts), tuple(edge_list), t, None)


def decompose(g: Graph) -> BlockDecomposition:
    """Partition the triangle-carrying edges into classified triangle blocks."""
    tris = enumerate_triangles(g)
    uf = _UnionFind(len(tris))
    by_edge: dict[Edge, int] = {}
    for i, tri in enumerate(tris):
        for e in triangle_edges(tri):
            first = by_edge.setdefault(e, i)
            if first != i:
                uf.union(first, i)

    groups: dict[int, list[Triangle]] = {}
    for i, tri in enumerate(tris):
        groups.setdefault(uf.find(i), []).append(tri)

    blocks = []
    covered: set[Edge] = set()
    for members in groups.values():
        edge_set = {e for tri in members for e in triangle_edges(tri)}
        covered |= edge_set
        blocks.append(classify_block(edge_set))
    blocks.sort(key=lambda b: b.edges)

    strays = tuple(e for e in g.edges() if e not in covered)
    return BlockDecomposition(tuple(blocks), strays)


def _require_k4_free_p4hat_free(g: Graph) -> None:
    from .bounds import find_k4  # deferred: bounds imports nothing from here

    quad = find_k4(g)
    if quad is not None:
        raise BlockPreconditionError(f"graph contains a K4 on {quad}", k4=quad)
    witness = contains_suspension_p4(g)
    if witness is not None:
        raise BlockPreconditionError(
            f"graph contains the forbidden pattern at apex {witness.apex}",
            witness=witness,
        )


def base_edge_reduction(g: Graph) -> Graph:
    """Delete each book's base edge; requires a K4-free, p4hat-free input.

    The result keeps exactly the triangle-carrying edges minus one base per
    book, so it is triangle-free with two edges per original triangle.
    Edges outside every triangle are dropped as well, keeping the edge
    count exactly 2 * t(G) even for inputs that are not edge-minimal.
    """
    _require_k4_free_p4hat_free(g)
    dec = decompose(g)
    keep: list[Edge] = []
    for block in dec.blocks:
        if block.kind != "Book":
            raise AssertionError(f"unexpected {block.kind} block in a K4-free p4hat-free graph")
        keep.extend(e for e in block.edges if e != block.base)
    return from_edges(g.n, keep)


@dataclass(frozen=True)
class K4FreeBoundReport:
    n: int
    triangles: int
    reduced_edges: int
    reduced_triangle_free: bool
    halves_match: bool  # t(G) == e(G') / 2
    mantel_ok: bool  # e(G') <= floor(n^2 / 4)
    bound_ok: bool  # t(G) <= floor(n^2 / 8)

    @property
    def passed(self) -> bool:
        return (
            self.reduced_triangle_free
            and self.halves_match
            and self.mantel_ok
            and self.bound_ok
        )


def verify_k4free_bound(g: Graph) -> K4FreeBoundReport:
    """Audit the triangle-count bound through the base-edge reduction."""
    t = count_triangles(g)
    reduced = base_edge_reduction(g)
    e_red = reduced.edge_count()
    return K4FreeBoundReport(
        n=g.n,
        triangles=t,
        reduced_edges=e_red,
        reduced_triangle_free=count_triangles(reduced) == 0,
        halves_match=2 * t == e_red,
        mantel_ok=e_red <= g.n * g.n // 4,
        bound_ok=t <= g.n * g.n // 8,
    )
