"""Graph values, triangle primitives, and graph6 round trips.

Walks through the core vocabulary: building graphs from edge lists,
counting and listing triangles, stripping edges that support no triangle,
and moving graphs in and out of the compact graph6 text format.
"""

from p4hat import (
    book,
    complete,
    count_triangles,
    decode_graph6,
    edge_minimal_reduction,
    encode_graph6,
    enumerate_triangles,
    from_edges,
    neighborhood_subgraph,
    union_of_triangles,
)

print("== building graphs ==")
k4 = complete(4)
print(f"K4: {k4}, triangles: {count_triangles(k4)}, list: {enumerate_triangles(k4)}")

b3 = book(3)
print(f"three-page book: {b3}, triangles: {enumerate_triangles(b3)}")

c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
print(f"5-cycle: {c5}, triangles: {count_triangles(c5)}")

print()
print("== edge-minimal reduction ==")
print("every edge of an edge-minimal graph lies in a triangle;")
print("deleting the others never changes the triangle set")
messy = from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (5, 6)])
clean = edge_minimal_reduction(messy)
print(f"before: {sorted(messy.edges())}")
print(f"after:  {sorted(clean.edges())}")
print(f"reduction is idempotent: {edge_minimal_reduction(clean) == clean}")

print()
print("== unions of triangles ==")
two_pages = union_of_triangles(8, [(0, 1, 2), (0, 1, 3)])
print(f"union of 012 and 013: {two_pages.edge_count()} edges, "
      f"{count_triangles(two_pages)} triangles (a two-page book)")

print()
print("== neighborhoods ==")
sub, labels = neighborhood_subgraph(book(3), 0)
print(f"neighborhood of a base endpoint of the 3-page book: {sub}")
print(f"label map back to the original graph: {labels}")
print("(the other base endpoint shows up as the center of a star)")

print()
print("== graph6 ==")
for g, name in ((k4, "K4"), (from_edges(1, []), "single vertex"), (b3, "book")):
    code = encode_graph6(g)
    assert decode_graph6(code) == g
    print(f"{name}: {code.decode()}  (round-trips cleanly)")
