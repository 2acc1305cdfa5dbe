"""Detecting the forbidden pattern: a 4-path with a dominating apex.

The pattern ("p4hat") is a 4-vertex path plus a fifth vertex adjacent to
all four.  A graph contains it exactly when some vertex's neighborhood
contains a 4-vertex path, so the detector just runs a path test inside
each neighborhood.  The exhaustive checker tries every 5-subset, apex,
and ordering; on small graphs the two always agree.
"""

import random

from p4hat import (
    book,
    brute_force_suspension,
    complete,
    contains_path4,
    contains_suspension_p4,
    from_edges,
)
from p4hat.constructions import bipartite_matching

print("== the 4-path building block ==")
p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
print(f"path on 4 vertices: contains_path4 -> {contains_path4(p4)}")
star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
print(f"3-star: contains_path4 -> {contains_path4(star)} (no path on 4 vertices)")

print()
print("== witnesses ==")
wheel = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)] + [(4, v) for v in range(4)])
w = contains_suspension_p4(wheel)
print(f"wheel (apex over a 4-cycle): witness apex={w.apex}, path={w.path}")

k5 = complete(5)
w = contains_suspension_p4(k5)
print(f"K5: witness apex={w.apex}, path={w.path}")

print()
print("== pattern-free families ==")
for s in (1, 3, 7):
    print(f"book with {s} pages: witness -> {contains_suspension_p4(book(s))}")
print(f"K4: witness -> {contains_suspension_p4(complete(4))}")
g = bipartite_matching(10)
print(f"bipartite+matching on 10 vertices: witness -> {contains_suspension_p4(g)}")

print()
print("== detector vs exhaustive checker ==")
rng = random.Random(0)
trials = 2000
agree = sum(
    (contains_suspension_p4(g) is not None) == brute_force_suspension(g)
    for g in (
        from_edges(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ],
        )
        for n, p in ((rng.randint(1, 9), rng.choice((0.2, 0.5, 0.8))) for _ in range(trials))
    )
)
print(f"agreement on {agree}/{trials} random graphs")
