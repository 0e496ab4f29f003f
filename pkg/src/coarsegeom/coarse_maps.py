"""Maps between metric graphs and their coarse-isometry certificates.

A QuasiMap assigns a target point to every point of a declared net of the
source (the net must at minimum contain all source vertices).  Verification
checks the two-sided distance bound with constant N together with coarse
surjectivity: every point of the target half-net must lie within N of the
image.  All comparisons are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DisconnectedGraph,
    DomainNotNet,
    GraphMismatch,
    InvalidPoint,
    NotCoarselySurjective,
)
from .metric_graph import (
    HALF,
    ZERO,
    GraphPoint,
    Interior,
    LabeledMetricGraph,
    Vertex,
    distance,
    half_net,
    multi_source_vertex_distances,
    point_key,
    validate_point,
)


def _ceil(fr: Fraction) -> int:
    return -((-fr.numerator) // fr.denominator)


class QuasiMap:
    """A point assignment between two graphs.

    assignments: iterable of (source point, target point).  They are stored
    sorted by the source point order, which fixes the domain order used by
    every downstream computation.
    """

    def __init__(self, source, target, assignments, asserted_constant=None):
        self.source = source
        self.target = target
        pairs = sorted(assignments, key=lambda pq: point_key(pq[0]))
        seen = set()
        for p, q in pairs:
            validate_point(source, p)
            validate_point(target, q)
            if p in seen:
                raise DomainNotNet(f"duplicate domain point {p}")
            seen.add(p)
        self.assignments = tuple(pairs)
        self.asserted_constant = asserted_constant
        self._image = dict(pairs)

    def domain(self):
        return tuple(p for p, _ in self.assignments)

    def image_of(self, p: GraphPoint) -> GraphPoint:
        try:
            return self._image[p]
        except KeyError:
            raise InvalidPoint(f"{p} is not in the map's domain") from None

    def __len__(self):
        return len(self.assignments)


@dataclass(frozen=True)
class PairViolation:
    x: GraphPoint
    y: GraphPoint
    d_source: Fraction
    d_target: Fraction
    lower_bound: Fraction
    upper_bound: Fraction


@dataclass(frozen=True)
class SurjectivityViolation:
    point: GraphPoint
    dist: Fraction
    bound: Fraction


@dataclass(frozen=True)
class QiCertificate:
    constant: int
    mode: str
    seed: Optional[int]
    count: Optional[int]
    pairs_checked: int
    surjectivity_radius: Fraction
    violations: tuple

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def certifying(self) -> bool:
        return self.mode in ("exhaustive", "vertex-exhaustive")


def _require_connected(m: QuasiMap):
    if not m.source.is_connected() or not m.target.is_connected():
        raise DisconnectedGraph("quasi-isometry checks need connected graphs")


def _require_vertex_cover(m: QuasiMap):
    have = {p.id for p in m._image if isinstance(p, Vertex)}
    for vid in m.source.vertex_ids():
        if vid not in have:
            raise DomainNotNet(f"domain does not cover source vertex {vid}")


def surjectivity_radius(m: QuasiMap):
    """Exact max over the target half-net of the distance to the image,
    together with the witness point attaining it."""
    tgt = m.target
    seeds = []
    interior_on = {}
    for _, q in m.assignments:
        if isinstance(q, Vertex):
            seeds.append((q.id, ZERO))
        else:
            e = tgt.edge(q.edge)
            seeds.append((e.u, q.offset * e.length))
            seeds.append((e.v, (1 - q.offset) * e.length))
            interior_on.setdefault(q.edge, []).append(q.offset)
    dist = multi_source_vertex_distances(tgt, seeds)
    radius = ZERO
    witness = None
    for vid in tgt.vertex_ids():
        d = dist[vid]
        if d is None:
            raise DisconnectedGraph("target must be connected")
        if d > radius:
            radius, witness = d, Vertex(vid)
    for e in sorted(tgt.edges, key=lambda e: e.id):
        d = min(dist[e.u], dist[e.v]) + e.length * HALF
        for t in interior_on.get(e.id, ()):
            direct = abs(t - HALF) * e.length
            if direct < d:
                d = direct
        if d > radius:
            radius, witness = d, Interior(e.id, HALF)
    return radius, witness


def _select_domain(m: QuasiMap, mode):
    if mode == "vertex-exhaustive":
        return [(p, q) for p, q in m.assignments if isinstance(p, Vertex)]
    return list(m.assignments)


def _fast_pair_scan(m, pairs, n):
    """Integer BFS scan for unit-length graphs with vertex-only pairs.
    Returns the first violating (i, j) or None."""
    src, tgt = m.source, m.target
    dom = [p.id for p, _ in pairs]
    img = [q.id for _, q in pairs]
    didx = [src._index[v] for v in dom]
    iidx = [tgt._index[v] for v in img]
    nn = n * n
    count = len(pairs)
    for i in range(count):
        rs = src._bfs_row(dom[i])
        rt = tgt._bfs_row(img[i])
        for j in range(i + 1, count):
            ds = rs[didx[j]]
            dt = rt[iidx[j]]
            if dt > n * ds + n or ds > n * dt + nn:
                return i, j
    return None


def _pair_violation(m, p, q, fp, fq, n):
    ds = distance(m.source, p, q)
    dt = distance(m.target, fp, fq)
    lower = ds / n - n
    upper = n * ds + n
    if dt > upper or dt < lower:
        return PairViolation(p, q, ds, dt, lower, upper)
    return None


def verify_quasi_isometry(
    m: QuasiMap,
    n: int,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    count: Optional[int] = None,
    _force_generic: bool = False,
) -> QiCertificate:
    """Check the two-sided bound with constant n on the selected pairs and
    the coarse surjectivity radius.  The first violation (in domain order,
    or draw order when sampling) becomes the certificate witness."""
    if n < 1:
        raise ValueError("constant must be a positive integer")
    if mode not in ("exhaustive", "vertex-exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled" and (seed is None or count is None):
        raise ValueError("sampled mode requires seed and count")
    _require_connected(m)
    _require_vertex_cover(m)

    radius, rad_witness = surjectivity_radius(m)
    violations = []
    if radius > n:
        violations.append(SurjectivityViolation(rad_witness, radius, Fraction(n)))
        return QiCertificate(n, mode, seed, count, 0, radius, tuple(violations))

    pairs_checked = 0
    if mode == "sampled":
        pool = list(m.assignments)
        rng = random.Random(seed)
        for _ in range(count):
            i, j = rng.sample(range(len(pool)), 2)
            (p, fp), (q, fq) = pool[i], pool[j]
            pairs_checked += 1
            bad = _pair_violation(m, p, q, fp, fq, n)
            if bad:
                violations.append(bad)
                break
    else:
        pairs = _select_domain(m, mode)
        total = len(pairs) * (len(pairs) - 1) // 2
        fast_ok = (
            not _force_generic
            and m.source.unit_lengths
            and m.target.unit_lengths
            and all(isinstance(p, Vertex) and isinstance(q, Vertex) for p, q in pairs)
        )
        if fast_ok:
            hit = _fast_pair_scan(m, pairs, n)
            pairs_checked = total
            if hit:
                i, j = hit
                (p, fp), (q, fq) = pairs[i], pairs[j]
                violations.append(_pair_violation(m, p, q, fp, fq, n))
        else:
            done = False
            for i in range(len(pairs)):
                if done:
                    break
                p, fp = pairs[i]
                for j in range(i + 1, len(pairs)):
                    q, fq = pairs[j]
                    pairs_checked += 1
                    bad = _pair_violation(m, p, q, fp, fq, n)
                    if bad:
                        violations.append(bad)
                        done = True
                        break
    return QiCertificate(n, mode, seed, count, pairs_checked, radius, tuple(violations))


def minimal_qi_constant(m: QuasiMap, cap: Optional[int] = None) -> int:
    """Smallest integer constant at which exhaustive verification accepts.

    All three acceptance conditions are monotone in the constant, so the
    minimum is the max of the per-pair and surjectivity minima.
    """
    _require_connected(m)
    _require_vertex_cover(m)
    radius, _ = surjectivity_radius(m)
    best = max(1, _ceil(radius))
    pairs = list(m.assignments)
    for i in range(len(pairs)):
        p, fp = pairs[i]
        for j in range(i + 1, len(pairs)):
            q, fq = pairs[j]
            ds = distance(m.source, p, q)
            dt = distance(m.target, fp, fq)
            need_up = _ceil(dt / (ds + 1))
            if need_up > best:
                best = need_up
            nlo = best
            while nlo * nlo + nlo * dt < ds:
                nlo += 1
            if nlo > best:
                best = nlo
        if cap is not None and best > cap:
            raise NotCoarselySurjective(
                f"no constant up to {cap} makes the map a quasi-isometry"
            )
    if cap is not None and best > cap:
        raise NotCoarselySurjective(
            f"no constant up to {cap} makes the map a quasi-isometry"
        )
    return best


def snap_to_domain(g: LabeledMetricGraph, q: GraphPoint, points) -> GraphPoint:
    """Nearest of ``points`` to q in g; distance ties break toward the
    smaller point in the canonical point order."""
    best = None
    for x in points:
        d = distance(g, q, x)
        key = (d,) + point_key(x)
        if best is None or key < best[0]:
            best = (key, x)
    if best is None:
        raise InvalidPoint("cannot snap onto an empty net")
    return best[1]


def compose(m2: QuasiMap, m1: QuasiMap) -> QuasiMap:
    """m2 after m1; images of m1 are snapped onto m2's domain first."""
    if not m1.target.same_structure(m2.source):
        raise GraphMismatch("middle graphs of the composition differ")
    dom2 = m2.domain()
    out = []
    for p, q in m1.assignments:
        snapped = snap_to_domain(m1.target, q, dom2)
        out.append((p, m2.image_of(snapped)))
    return QuasiMap(m1.source, m2.target, out)


def restrict_map(m: QuasiMap, new_source: LabeledMetricGraph) -> QuasiMap:
    """The same assignments over a smaller source graph, dropping domain
    points that no longer exist in it."""
    eids = {e.id for e in new_source.edges}
    kept = []
    for p, q in m.assignments:
        if isinstance(p, Vertex):
            if not new_source.has_vertex(p.id):
                continue
        elif p.edge not in eids:
            continue
        kept.append((p, q))
    return QuasiMap(new_source, m.target, kept, asserted_constant=m.asserted_constant)
