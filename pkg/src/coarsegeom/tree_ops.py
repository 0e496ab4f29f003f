"""Finite metric trees: leaf pruning with an audit trail, medians and
meets, and coarse inverses of quasi-isometries whose target is a tree."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coarse_maps import (
    QiCertificate,
    QuasiMap,
    minimal_qi_constant,
    snap_to_domain,
    verify_quasi_isometry,
)
from .errors import EmptyPreimage, NotATree
from .metric_graph import (
    GraphPoint,
    LabeledMetricGraph,
    Vertex,
    canonical_geodesic,
    distance,
    half_net,
    point_along,
)


def assert_tree(g: LabeledMetricGraph):
    """A nonempty connected graph with exactly |V| - 1 edges."""
    if g.n_vertices == 0:
        raise NotATree("graph has no vertices")
    if g.n_edges != g.n_vertices - 1:
        raise NotATree(
            f"{g.n_edges} edges on {g.n_vertices} vertices cannot be a tree"
        )
    if not g.is_connected():
        raise NotATree("graph is not connected")


@dataclass(frozen=True)
class PruneTrace:
    rounds_requested: int
    stages: tuple  # per round, the sorted ids removed together
    empty: bool

    @property
    def rounds_run(self):
        return len(self.stages)

    @property
    def removed(self):
        return tuple(v for stage in self.stages for v in stage)


def prune_k(g: LabeledMetricGraph, k: int):
    """Remove every valence-1 vertex, simultaneously, k times over.

    Each round deletes all current leaves at once (two leaves joined by an
    edge delete each other).  Stops early once nothing has valence 1.
    Returns (new graph, trace); ids, labels, lengths, and a surviving
    basepoint carry over.
    """
    if k < 0:
        raise ValueError("round count must be >= 0")
    alive = set(g.vertex_ids())
    deg = {v: g.degree(v) for v in alive}
    nbr = {v: Counter() for v in alive}
    for e in g.edges:
        nbr[e.u][e.v] += 1
        nbr[e.v][e.u] += 1
    stages = []
    for _ in range(k):
        leaves = sorted(v for v in alive if deg[v] == 1)
        if not leaves:
            break
        doomed = set(leaves)
        for v in leaves:
            for w, c in nbr[v].items():
                if w in alive and w not in doomed:
                    deg[w] -= c
                    del nbr[w][v]
        alive -= doomed
        stages.append(tuple(leaves))
    vertices = [(vid, g.vertex_labels[vid]) for vid in sorted(alive)]
    edges = [e for e in g.edges if e.u in alive and e.v in alive]
    base = g.basepoint if g.basepoint in alive else None
    out = LabeledMetricGraph(vertices, edges, basepoint=base)
    return out, PruneTrace(k, tuple(stages), not alive)


def prune_once(g: LabeledMetricGraph):
    """One simultaneous leaf-removal round; returns (new graph, removed ids)."""
    out, trace = prune_k(g, 1)
    return out, set(trace.removed)


def tree_median(g: LabeledMetricGraph, z: GraphPoint, a: GraphPoint, b: GraphPoint) -> GraphPoint:
    """The unique point lying on all three pairwise geodesics of a tree.

    Measured from z it sits (d(z,a) + d(z,b) - d(a,b)) / 2 of the way
    along the geodesic toward a.
    """
    assert_tree(g)
    return _median(g, z, a, b)


def _median(g, z, a, b):
    s = (distance(g, z, a) + distance(g, z, b) - distance(g, a, b)) / 2
    return point_along(g, canonical_geodesic(g, z, a), s)


def meet_fold(g: LabeledMetricGraph, z: GraphPoint, points) -> GraphPoint:
    """Fold the median with root z over the points.

    The median is associative and commutative in its last two slots, so
    the order of the points does not matter: the result is the deepest
    point shared by every path from z to one of them.
    """
    assert_tree(g)
    seq = list(points)
    if not seq:
        raise ValueError("meet fold needs at least one point")
    m = seq[0]
    for p in seq[1:]:
        m = _median(g, z, m, p)
    return m


def tree_meet(g: LabeledMetricGraph, x: GraphPoint, y: GraphPoint, base=None) -> GraphPoint:
    """Where the paths from the base to x and to y part ways."""
    if base is None:
        if g.basepoint is None:
            raise ValueError("graph has no basepoint and none was given")
        base = Vertex(g.basepoint)
    return tree_median(g, base, x, y)


@dataclass(frozen=True)
class QuasiInverseResult:
    map: QuasiMap
    minimal_constant: int
    bound: int
    certificate: QiCertificate


def quasi_inverse(f: QuasiMap, n: int, z: Optional[GraphPoint] = None) -> QuasiInverseResult:
    """A coarse inverse of an n-quasi-isometry out of a finite tree.

    Each half-net point x of the target collects the domain points whose
    image lies within n of x, and is sent to the meet of that preimage
    cloud relative to the root z (the smallest vertex by default).  The
    result is checked exhaustively against the 9n^2 constant and its true
    minimal constant is computed.
    """
    if n < 1:
        raise ValueError("constant must be >= 1")
    tree = f.source
    assert_tree(tree)
    if z is None:
        z = Vertex(min(tree.vertex_ids()))
    images = [(y, f.image_of(y)) for y in f.domain()]
    assignments = []
    for x in half_net(f.target):
        m = None
        for y, fy in images:
            if distance(f.target, fy, x) <= n:
                m = y if m is None else _median(tree, z, m, y)
        if m is None:
            raise EmptyPreimage(f"no image within {n} of {x}")
        assignments.append((x, m))
    h = QuasiMap(f.target, tree, assignments)
    bound = 9 * n * n
    cert = verify_quasi_isometry(h, bound)
    return QuasiInverseResult(h, minimal_qi_constant(h), bound, cert)


def round_trip_max(f: QuasiMap, g: QuasiMap) -> Fraction:
    """Largest displacement of going forward through f and back through g,
    snapping images onto g's domain."""
    gdom = g.domain()
    best = Fraction(0)
    for y in f.domain():
        x = snap_to_domain(f.target, f.image_of(y), gdom)
        d = distance(f.source, y, g.image_of(x))
        if d > best:
            best = d
    return best
