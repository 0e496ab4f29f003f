"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive: cubic loops, explicit path
enumeration, candidate scans. Nothing imports the library's distance
engine; disagreement with the package is always a finding.
"""

from fractions import Fraction

from coarsegeom.metric_graph import Interior, Vertex

ZERO = Fraction(0)


def floyd_warshall(g):
    """All-pairs vertex distances as {u: {v: Fraction | None}}."""
    ids = list(g.vertex_ids())
    dist = {u: {v: None for v in ids} for u in ids}
    for u in ids:
        dist[u][u] = ZERO
    for e in g.edges:
        cur = dist[e.u][e.v]
        if cur is None or e.length < cur:
            dist[e.u][e.v] = e.length
            dist[e.v][e.u] = e.length
    for k in ids:
        rk = dist[k]
        for i in ids:
            dik = dist[i][k]
            if dik is None:
                continue
            ri = dist[i]
            for j in ids:
                dkj = rk[j]
                if dkj is None:
                    continue
                alt = dik + dkj
                if ri[j] is None or alt < ri[j]:
                    ri[j] = alt
    return dist


def point_distance(g, fw, p, q):
    """Exact point-to-point distance using only fw and edge data."""

    def routes(pt):
        # (vertex, cost-to-reach-it) entry list for a point
        if isinstance(pt, Vertex):
            return [(pt.id, ZERO)]
        e = g.edge(pt.edge)
        s = pt.offset * e.length
        return [(e.u, s), (e.v, e.length - s)]

    best = None
    if isinstance(p, Interior) and isinstance(q, Interior) and p.edge == q.edge:
        e = g.edge(p.edge)
        best = abs((p.offset - q.offset) * e.length)
    if (
        isinstance(p, Vertex)
        and isinstance(q, Vertex)
        and p.id == q.id
    ):
        return ZERO
    for a, ca in routes(p):
        for b, cb in routes(q):
            base = fw[a][b]
            if base is None:
                continue
            tot = ca + base + cb
            if best is None or tot < best:
                best = tot
    if best is None:
        raise ValueError("points lie in different components")
    return best


def enumerate_geodesics_dfs(g, u, v, fw=None):
    """All shortest vertex-to-vertex paths as (vertex_seq, edge_id_seq)."""
    if fw is None:
        fw = floyd_warshall(g)
    total = fw[u][v]
    if total is None:
        return []
    out = []
    stack = [(u, ZERO, (u,), ())]
    while stack:
        cur, cost, vseq, eseq = stack.pop()
        if cur == v and cost == total:
            out.append((vseq, eseq))
            continue
        for nbr, e in g.edges_at(cur):
            rem = fw[nbr][v]
            if rem is not None and cost + e.length + rem == total:
                stack.append((nbr, cost + e.length, vseq + (nbr,), eseq + (e.id,)))
    out.sort()
    return out


def count_geodesics_dfs(g, u, v, fw=None):
    return len(enumerate_geodesics_dfs(g, u, v, fw))


def brute_delta(g):
    """Slim-triangle bound over all vertex triples, half-edge probes.

    For each side of each triple, every geodesic is probed at its vertices
    and at midpoints of edges outside the union of the other two sides'
    geodesic carriers; the value is the max probe-to-union distance.
    """
    fw = floyd_warshall(g)
    ids = list(g.vertex_ids())
    geos = {}

    def side(a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in geos:
            geos[key] = enumerate_geodesics_dfs(g, key[0], key[1], fw)
        return geos[key]

    best = ZERO
    n = len(ids)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                tri = (ids[i], ids[j], ids[k])
                for a, b, c in (
                    (tri[0], tri[1], tri[2]),
                    (tri[1], tri[2], tri[0]),
                    (tri[2], tri[0], tri[1]),
                ):
                    uverts = set()
                    uedges = set()
                    for pair in ((b, c), (a, c)):
                        for vseq, eseq in side(*pair):
                            uverts.update(vseq)
                            uedges.update(eseq)

                    def to_union(w):
                        return min(fw[w][x] for x in uverts)

                    for vseq, eseq in side(a, b):
                        for w in vseq:
                            d = to_union(w)
                            if d > best:
                                best = d
                        for eid in eseq:
                            if eid in uedges:
                                continue
                            e = g.edge(eid)
                            d = e.length / 2 + min(to_union(e.u), to_union(e.v))
                            if d > best:
                                best = d
    return best


def _on_segment(g, fw, p, a, b):
    """Metric test: p lies on the (unique, in a tree) geodesic [a, b]."""
    return point_distance(g, fw, a, p) + point_distance(g, fw, p, b) == point_distance(
        g, fw, a, b
    )


def _norm(g, p):
    if isinstance(p, Interior):
        if p.offset == 0:
            return Vertex(g.edge(p.edge).u)
        if p.offset == 1:
            return Vertex(g.edge(p.edge).v)
    return p


def brute_tree_median(g, x, y, z):
    """The unique point on all three pairwise geodesics of a tree.

    Candidates are vertices plus the three inputs; in a tree the triple
    median is always one of these.
    """
    fw = floyd_warshall(g)
    cands = {(0, v, ZERO): Vertex(v) for v in g.vertex_ids()}
    for p in (x, y, z):
        q = _norm(g, p)
        key = (0, q.id, ZERO) if isinstance(q, Vertex) else (1, q.edge, q.offset)
        cands[key] = q
    hits = [
        p
        for p in cands.values()
        if _on_segment(g, fw, p, x, y)
        and _on_segment(g, fw, p, y, z)
        and _on_segment(g, fw, p, x, z)
    ]
    if len(hits) != 1:
        raise AssertionError(f"median candidates: {hits!r}")
    return hits[0]


def surviving_vertex_partition(g, center, radius):
    """Components of vertices outside the closed ball, by DFS reachability.

    An edge joins two survivors iff both endpoints survive (the distance
    function along an edge is minimized at an endpoint, so no interior
    point dips deeper into the ball than the nearer endpoint).
    """
    fw = floyd_warshall(g)
    radius = Fraction(radius)
    alive = {v for v in g.vertex_ids() if point_distance(g, fw, Vertex(v), center) > radius}
    seen = set()
    parts = []
    for start in sorted(alive):
        if start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            for nbr, _ in g.edges_at(cur):
                if nbr in alive and nbr not in comp:
                    stack.append(nbr)
        seen |= comp
        parts.append(frozenset(comp))
    return frozenset(parts)


def label_shape(g):
    """Label-level structural fingerprint, for comparing rebuilt graphs
    whose vertex ids differ."""
    lab = g.vertex_labels

    def vl(v):
        return lab[v] if lab[v] is not None else f"#{v}"

    verts = sorted(vl(v) for v in g.vertex_ids())
    edges = sorted(
        (min(vl(e.u), vl(e.v)), max(vl(e.u), vl(e.v)), e.length) for e in g.edges
    )
    return tuple(verts), tuple(edges)


def geodesic_label_form(g, vseq, eseq):
    """Canonical label form of a geodesic, id-layout independent."""
    lab = g.vertex_labels

    def vl(v):
        return lab[v] if lab[v] is not None else f"#{v}"

    ef = []
    for eid in eseq:
        e = g.edge(eid)
        ef.append((vl(e.u), vl(e.v), e.length, None if e.label is None else vl(e.label)))
    return tuple(vl(v) for v in vseq), tuple(ef)
