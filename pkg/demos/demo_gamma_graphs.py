"""Build the two graphs attached to a set family and walk their geometry.

A family of disjoint finite sets gets two metric graphs: a "doubled-edge"
graph whose arms carry one strand per element (every adjacency realized
by a parallel pair of unit edges), and a quotient tree with one arm per
set.  Collapsing each arm of the first onto the matching arm of the
second changes distances by at most 2, which is the whole reason the
pair is useful.

Run: python3 demos/demo_gamma_graphs.py
"""

from coarsegeom import (
    SetFamily,
    Vertex,
    build_collapse_map,
    build_gamma0,
    build_gamma1,
    classify_point,
    distance,
    enumerate_geodesics,
    level_profile,
    minimal_qi_constant,
    verify_quasi_isometry,
)

family = SetFamily.of_lists([["a", "b"], ["c"]])
print("family:", ", ".join(f"{s.name}={set(s.elements)}" for s in family.sets))

depth = 6
g0 = build_gamma0(family, depth)
g1 = build_gamma1(family, depth)
print(f"doubled-edge graph at depth {depth}: "
      f"{g0.graph.n_vertices} vertices, {g0.graph.n_edges} edges")
print(f"quotient tree: {g1.n_vertices} vertices, {g1.n_edges} edges")

# Vertices are addressed by (element, level); the base sits at level 0.
a3 = Vertex(g0.vertex_of("a", 3))
b3 = Vertex(g0.vertex_of("b", 3))
c3 = Vertex(g0.vertex_of("c", 3))
print("\ndistances in the doubled-edge graph:")
print("  d(a@3, b@3) =", distance(g0.graph, a3, b3), " (same set: short hop)")
print("  d(a@3, c@3) =", distance(g0.graph, a3, c3), " (different sets: via base)")

print("\ngeodesics a@3 -> c@3 and their level profiles:")
geos = enumerate_geodesics(g0.graph, a3, c3, cap=2000)
print(f"  {len(geos)} geodesics (parallel edges multiply the count)")
routes = {}
for geo in geos:
    labels = tuple(g0.graph.vertex_labels[v] or "base" for v in geo.vertices)
    routes.setdefault(labels, level_profile(g0, geo).value)
for labels in sorted(routes):
    print(f"  {' -> '.join(labels)}   profile={routes[labels]}")

print("\npoint classification:")
for p in (Vertex(0), a3, c3):
    c = classify_point(g0, p)
    where = "base region" if c.kind == "base" else f"arm {c.arm}, level {c.level}"
    print(f"  {g0.graph.vertex_labels[p.id] or 'base'}: {where}")

# The collapse map sends every half-net point of g0 onto the tree.
f = build_collapse_map(g0, g1)
print(f"\ncollapse map: {len(f.assignments)} net points")
cert = verify_quasi_isometry(f, 2)
print(f"verified as a 2-quasi-isometry over {cert.pairs_checked} pairs:",
      cert.accepted)
print("smallest constant that passes:", minimal_qi_constant(f))

print("\nthe sandwich d0 - 2 <= d1 <= d0 on a few pairs:")
for p, q in ((a3, c3), (a3, b3), (Vertex(0), c3)):
    d0 = distance(g0.graph, p, q)
    d1 = distance(g1, f.image_of(p), f.image_of(q))
    print(f"  d0={d0}  d1={d1}")
