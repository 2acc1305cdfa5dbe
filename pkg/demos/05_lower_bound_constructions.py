"""The graphs that realize the extremal triangle counts.

Small cases (n = 4..7) have ad-hoc extremal graphs built from K4s.  From
n = 8 on, a complete bipartite graph with near-equal parts plus a perfect
matching inside an even part achieves floor(n^2/8) triangles.  A
16-vertex graph assembled entirely from K4 blocks shows the bound is also
attained with a completely different block structure.
"""

from p4hat import (
    bipartite_matching,
    contains_suspension_p4,
    count_triangles,
    decompose,
    sixteen_vertex,
    small_extremal,
)

print("== small cases ==")
for n in range(4, 8):
    g = small_extremal(n)
    kinds = decompose(g).kinds()
    print(f"n={n}: t = {count_triangles(g)}, blocks = {kinds}, "
          f"pattern-free = {contains_suspension_p4(g) is None}")

print()
print("== bipartite + matching ==")
print(" n   t(G)  floor(n^2/8)  pattern-free")
for n in (8, 9, 10, 11, 12, 16, 20, 50, 100, 200):
    g = bipartite_matching(n)
    t = count_triangles(g)
    ok = contains_suspension_p4(g) is None
    print(f"{n:>3}  {t:>5}  {n * n // 8:>12}  {ok}")

print()
print("== the 16-vertex all-K4 configuration ==")
g = sixteen_vertex()
dec = decompose(g)
print(f"vertices: {g.n}, edges: {g.edge_count()}, triangles: {count_triangles(g)}")
print(f"degrees: all {g.degree(0)} "
      f"({'regular' if len({g.degree(v) for v in range(g.n)}) == 1 else 'irregular'})")
print(f"blocks: {dec.kinds()}")
print(f"pattern-free: {contains_suspension_p4(g) is None}")
print("with 16 * 6 / 3 = 32 triangles this matches floor(16^2/8) exactly,")
print("so extremal configurations need not look bipartite at all")
