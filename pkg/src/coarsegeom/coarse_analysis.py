"""Negative-curvature checks: slim triangles, geodesic midpoints, and
bottleneck separation certificates.

All quantities are exact rationals.  Triangle corners are vertices; for a
pair of corners the full union of geodesics between them is represented by
its carrier (the vertices and whole edges that some geodesic runs through).
Distances from one side to the other two are probed at half-edge
resolution: carrier vertices plus midpoints of carrier edges.  The probe
grid can miss the true supremum by at most half the longest edge, and that
residue is reported as sampling_slack next to the observed value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DisconnectedGraph
from .metric_graph import (
    HALF,
    ZERO,
    GraphPoint,
    Interior,
    LabeledMetricGraph,
    Vertex,
    ball_complement_components,
    canonical_geodesic,
    distance,
    geodesic_segments,
    half_net,
    is_separated,
    multi_source_vertex_distances,
    point_along,
    surviving_vertex_path,
)


@dataclass(frozen=True)
class DeltaWitness:
    side: tuple  # the two corner ids whose geodesics realize the maximum
    apex: int
    point: GraphPoint
    dist: Fraction


@dataclass(frozen=True)
class DeltaReport:
    delta_upper_observed: Fraction
    mode: str
    seed: Optional[int]
    count: Optional[int]
    triples_checked: int
    triples_skipped: int
    sampling_slack: Fraction
    witness: Optional[DeltaWitness]


def _carrier(g, a, b):
    """Vertices and whole edges lying on some geodesic from a to b."""
    row_a = g.vertex_row(a)
    row_b = g.vertex_row(b)
    dab = row_a[b]
    verts = tuple(w for w in g.vertex_ids() if row_a[w] + row_b[w] == dab)
    edges = tuple(
        e
        for e in g.edges
        if row_a[e.u] + e.length + row_b[e.v] == dab
        or row_a[e.v] + e.length + row_b[e.u] == dab
    )
    return verts, edges


def _side_sup(g, probe, union):
    """Largest probed distance from the probe carrier to the union carrier,
    with the point realizing it.

    Probes are the carrier vertices and the midpoints of carrier edges not
    in the union.  A midpoint must exit its edge through an endpoint, and
    the nearest union point is always a union vertex, so its distance is
    exactly len/2 + min over the two endpoints.
    """
    pverts, pedges = probe
    uverts, uedges = union
    ueids = {e.id for e in uedges}
    du = multi_source_vertex_distances(g, ((v, ZERO) for v in uverts))
    best, bp = ZERO, None
    for w in pverts:
        d = du[w]
        if d > best:
            best, bp = d, Vertex(w)
    for e in pedges:
        if e.id in ueids:
            continue
        val = e.length / 2 + min(du[e.u], du[e.v])
        if val > best:
            best, bp = val, Interior(e.id, HALF)
    return best, bp


def _triple_roles(a, b, c):
    return (((a, b), c), ((a, c), b), ((b, c), a))


def slim_triangle_delta(
    g: LabeledMetricGraph, mode="exhaustive", seed=None, count=None
) -> DeltaReport:
    """Largest probed distance from one side of a checked triangle to the
    union of the other two, over triangles with vertex corners.

    Exhaustive mode ranges over all vertex triples, sampled mode over
    seeded draws; both check the three side/apex roles of each triple.
    Probing at half-edge resolution can undershoot the true thinness by at
    most half the longest edge, so the true value is bounded above by
    delta_upper_observed + sampling_slack.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled" and (seed is None or count is None):
        raise ValueError("sampled mode needs a seed and a count")
    if not g.is_connected():
        raise DisconnectedGraph("slim-triangle slack needs a connected graph")
    ids = list(g.vertex_ids())
    slack = HALF * g.max_edge_length()
    best, witness = ZERO, None
    checked = 0
    carriers = {}

    def carrier(a, b):
        key = (a, b) if a <= b else (b, a)
        got = carriers.get(key)
        if got is None:
            got = carriers[key] = _carrier(g, key[0], key[1])
        return got

    def handle(a, b, c):
        nonlocal best, witness
        for (p, q), apex in _triple_roles(a, b, c):
            pv, pe = carrier(p, q)
            c1 = carrier(p, apex)
            c2 = carrier(apex, q)
            union = (c1[0] + c2[0], c1[1] + c2[1])
            val, point = _side_sup(g, (pv, pe), union)
            if val > best:
                best, witness = val, DeltaWitness((p, q), apex, point, val)

    if mode == "exhaustive":
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                for k in range(j + 1, len(ids)):
                    handle(ids[i], ids[j], ids[k])
                    checked += 1
    else:
        if len(ids) >= 3:
            rng = random.Random(seed)
            for _ in range(count):
                a, b, c = rng.sample(ids, 3)
                handle(a, b, c)
                checked += 1
    return DeltaReport(best, mode, seed, count, checked, 0, slack, witness)


def midpoint(g: LabeledMetricGraph, x: GraphPoint, y: GraphPoint) -> GraphPoint:
    """Midpoint of the canonical geodesic from x to y."""
    geo = canonical_geodesic(g, x, y)
    return point_along(g, geo, geo.length / 2)


@dataclass(frozen=True)
class BottleneckWitness:
    x: GraphPoint
    y: GraphPoint
    probe: GraphPoint
    distance: Fraction
    avoiding_path: Optional[tuple]


@dataclass(frozen=True)
class BottleneckReport:
    accepted: bool
    delta_param: Fraction
    radius: Fraction
    mode: str
    seed: Optional[int]
    count: Optional[int]
    pairs_checked: int
    witness: Optional[BottleneckWitness]


def _not_separated_witness(g, x, y, probe, radius):
    idx = ball_complement_components(g, probe, radius)
    path = surviving_vertex_path(g, idx, x, y)
    return BottleneckWitness(
        x, y, probe, distance(g, x, y), tuple(path) if path is not None else None
    )


def _pair_stream(g, mode, seed, count):
    pool = half_net(g)
    if mode == "exhaustive":
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                yield pool[i], pool[j]
    else:
        rng = random.Random(seed)
        for _ in range(count):
            i, j = rng.sample(range(len(pool)), 2)
            yield pool[i], pool[j]


def verify_bottleneck(
    g: LabeledMetricGraph,
    delta,
    radius=None,
    mode="exhaustive",
    seed=None,
    count=None,
) -> BottleneckReport:
    """Check that for every examined pair the midpoint of the canonical
    geodesic is unavoidable: removing the closed ball of the given radius
    around it disconnects the endpoints (or already contains one of them).

    The default radius is delta - 1.  A failed pair is returned with a
    vertex path that dodges the ball.
    """
    delta = Fraction(delta)
    r = delta - 1 if radius is None else Fraction(radius)
    if not 0 <= r < delta:
        raise ValueError("radius must satisfy 0 <= radius < delta")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled" and (seed is None or count is None):
        raise ValueError("sampled mode needs a seed and a count")
    if not g.is_connected():
        raise DisconnectedGraph("bottleneck check needs a connected graph")
    checked = 0
    for x, y in _pair_stream(g, mode, seed, count):
        checked += 1
        if distance(g, x, y) == 0:
            continue
        m = midpoint(g, x, y)
        if not is_separated(g, x, y, m, r):
            return BottleneckReport(
                False, delta, r, mode, seed, count, checked,
                _not_separated_witness(g, x, y, m, r),
            )
    return BottleneckReport(True, delta, r, mode, seed, count, checked, None)


@dataclass(frozen=True)
class SeparationReport:
    accepted: bool
    radius: Fraction
    seed: int
    count: int
    pairs_checked: int
    probes_checked: int
    witness: Optional[BottleneckWitness]


def certify_two_hyperbolic_gamma0(g0, seed, count) -> SeparationReport:
    """Sampled evidence that the doubled-edge graph of a family is
    2-hyperbolic in the strong separation sense: along the canonical
    geodesic of each sampled pair, every probe point farther than 2 from
    both ends has an unavoidable 2-ball.

    Probes are the geodesic's vertex hits and the midpoints of the whole
    edges it crosses.
    """
    if seed is None or count is None:
        raise ValueError("a seed and a count are required")
    g = g0.graph
    pool = half_net(g)
    rng = random.Random(seed)
    two = Fraction(2)
    pairs = probes = 0
    for _ in range(count):
        i, j = rng.sample(range(len(pool)), 2)
        x, y = pool[i], pool[j]
        pairs += 1
        if distance(g, x, y) == 0:
            continue
        geo = canonical_geodesic(g, x, y)
        cand = [Vertex(v) for v in geo.vertices]
        one = Fraction(1)
        for e, lo, hi in geodesic_segments(g, geo):
            if (lo, hi) in ((ZERO, one), (one, ZERO)):
                cand.append(Interior(e.id, HALF))
        for w in cand:
            if distance(g, x, w) <= two or distance(g, y, w) <= two:
                continue
            probes += 1
            if not is_separated(g, x, y, w, two):
                return SeparationReport(
                    False, two, seed, count, pairs, probes,
                    _not_separated_witness(g, x, y, w, two),
                )
    return SeparationReport(True, two, seed, count, pairs, probes, None)
