"""Invert a quasi-isometry between finite trees, coarsely.

A map that distorts distances by at most a factor-and-offset n has no
literal inverse, but folding each target point's preimage cloud down to
its median meet produces a map back that verifies at 9n^2 and round
trips every point within 3n^2.  Medians make this canonical: the result
does not depend on any evaluation order.

Run: python3 demos/demo_quasi_inverse.py
"""

import random
from fractions import Fraction

from coarsegeom import (
    LabeledMetricGraph,
    QuasiMap,
    Vertex,
    distance,
    minimal_qi_constant,
    quasi_inverse,
    round_trip_max,
    scale_metric,
    tree_median,
    tree_meet,
    verify_quasi_isometry,
)

rng = random.Random(5)
edges = []
for v in range(1, 14):
    edges.append((v - 1, rng.randrange(v), v, Fraction(rng.randrange(1, 5), 2)))
tree = LabeledMetricGraph(range(14), edges, basepoint=0)
print(f"random rational tree: {tree.n_vertices} vertices")

print("\nmedians (the junction of three points):")
a, b, c = Vertex(9), Vertex(13), Vertex(4)
m = tree_median(tree, a, b, c)
print(f"  median({a}, {b}, {c}) = {m}")
print(f"  meet of {b} and {c} seen from the basepoint:",
      tree_meet(tree, b, c))

n = 2
big = scale_metric(tree, n)
f = QuasiMap(tree, big, [(Vertex(v), Vertex(v)) for v in tree.vertex_ids()],
             asserted_constant=n)
print(f"\nf: tree -> tree with all lengths scaled by {n}")
print(f"  verifies at n={n}:", verify_quasi_isometry(f, n).accepted)

res = quasi_inverse(f, n)
print(f"\nquasi-inverse h over {len(res.map.assignments)} target net points:")
print(f"  guaranteed constant 9n^2 = {res.bound}, "
      f"verified: {res.certificate.accepted}")
print(f"  actual minimal constant: {res.minimal_constant}")
rt = round_trip_max(f, res.map)
print(f"  max round-trip displacement d(w, h(f(w))) = {rt} <= 3n^2 = {3 * n * n}")

print("\nh on a few points (target point -> source point):")
for p, q in res.map.assignments[:4]:
    print(f"  {p} -> {q}")

other = quasi_inverse(f, n, z=Vertex(13))
moved = sum(1 for (p, q), (_, q2) in zip(res.map.assignments,
                                         other.map.assignments) if q != q2)
print(f"\nre-rooting the meets at vertex 13 moves {moved} of "
      f"{len(res.map.assignments)} values, but the bound still holds:",
      other.certificate.accepted)
