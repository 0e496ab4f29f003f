"""JSON documents and canonical serialization for every artifact.

Schemas:
  graph   {"vertices":[{"id":int,"label":str?},...],
           "edges":[{"id":int,"u":int,"v":int,"len":"p/q","label":int?},...],
           "basepoint":int?, "tree":true?}
  point   {"vertex":int} or {"edge":int,"offset":"p/q"}
  family  {"sets":[{"name":str,"elements":[str,...]},...]}
  gamma   graph keys plus {"kind":"gamma0"|"gamma1","depth":int,"family":...}
  map     {"source":path,"target":path,"N":int?,
           "assign":[{"from":point,"to":point},...]}

Rationals always travel as reduced "p/q" strings, and every emitted file is
canonical JSON (sorted keys, two-space indent, trailing newline), so a rerun
with identical inputs is byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction

from .coarse_maps import PairViolation, QuasiMap, SurjectivityViolation
from .errors import CoarseGeomError, NotATree, SchemaError
from .gamma_spaces import (
    GammaZeroGraph,
    NamedSet,
    SetFamily,
    build_gamma0,
    build_gamma1,
)
from .metric_graph import (
    GraphPoint,
    Interior,
    LabeledMetricGraph,
    Vertex,
)
from .tree_ops import assert_tree


def _fail(msg):
    raise SchemaError(msg)


def _expect_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(f"{what} must be an integer, got {value!r}")
    return value


def _expect_str(value, what):
    if not isinstance(value, str):
        _fail(f"{what} must be a string, got {value!r}")
    return value


def _expect_list(value, what):
    if not isinstance(value, list):
        _fail(f"{what} must be an array")
    return value


def _expect_obj(value, what):
    if not isinstance(value, dict):
        _fail(f"{what} must be an object")
    return value


# -- rationals -------------------------------------------------------------


def rational_str(x) -> str:
    """Reduced "p/q" form; integers keep an explicit /1 denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {value!r}: {exc}") from exc
    _fail(f'rationals must be "p/q" strings or integers, got {value!r}')


# -- points ----------------------------------------------------------------


def point_doc(p: GraphPoint) -> dict:
    if isinstance(p, Vertex):
        return {"vertex": p.id}
    return {"edge": p.edge, "offset": rational_str(p.offset)}


def parse_point(doc) -> GraphPoint:
    _expect_obj(doc, "point")
    keys = set(doc)
    if keys == {"vertex"}:
        return Vertex(_expect_int(doc["vertex"], "vertex id"))
    if keys == {"edge", "offset"}:
        return Interior(
            _expect_int(doc["edge"], "edge id"), parse_rational(doc["offset"])
        )
    _fail('a point is {"vertex":id} or {"edge":id,"offset":"p/q"}, '
          f"got keys {sorted(keys)}")


# -- graphs ----------------------------------------------------------------


def graph_doc(g: LabeledMetricGraph, tree: bool = False) -> dict:
    verts = []
    for vid in g.vertex_ids():
        item = {"id": vid}
        if g.vertex_labels[vid] is not None:
            item["label"] = g.vertex_labels[vid]
        verts.append(item)
    edges = []
    for e in sorted(g.edges, key=lambda e: e.id):
        item = {"id": e.id, "u": e.u, "v": e.v, "len": rational_str(e.length)}
        if e.label is not None:
            item["label"] = e.label
        edges.append(item)
    doc = {"vertices": verts, "edges": edges}
    if g.basepoint is not None:
        doc["basepoint"] = g.basepoint
    if tree:
        doc["tree"] = True
    return doc


def parse_graph(doc) -> LabeledMetricGraph:
    _expect_obj(doc, "graph document")
    if "vertices" not in doc or "edges" not in doc:
        _fail('a graph document needs "vertices" and "edges"')
    vertices = []
    for item in _expect_list(doc["vertices"], '"vertices"'):
        _expect_obj(item, "vertex entry")
        vid = _expect_int(item.get("id"), "vertex id")
        lab = item.get("label")
        if lab is not None:
            _expect_str(lab, "vertex label")
        vertices.append((vid, lab))
    edges = []
    for item in _expect_list(doc["edges"], '"edges"'):
        _expect_obj(item, "edge entry")
        eid = _expect_int(item.get("id"), "edge id")
        u = _expect_int(item.get("u"), f'edge {eid} "u"')
        v = _expect_int(item.get("v"), f'edge {eid} "v"')
        if "len" not in item:
            _fail(f'edge {eid} has no "len"')
        ln = parse_rational(item["len"])
        lab = item.get("label")
        if lab is not None:
            _expect_int(lab, f"edge {eid} label")
        edges.append((eid, u, v, ln, lab))
    base = doc.get("basepoint")
    if base is not None:
        _expect_int(base, "basepoint")
    try:
        g = LabeledMetricGraph(vertices, edges, basepoint=base)
    except CoarseGeomError as exc:
        raise SchemaError(f"bad graph document: {exc}") from exc
    if doc.get("tree"):
        try:
            assert_tree(g)
        except NotATree as exc:
            raise SchemaError(f'graph marked "tree" is not one: {exc}') from exc
    return g


# -- families and gamma graphs ----------------------------------------------


def family_doc(family: SetFamily) -> dict:
    return {
        "sets": [
            {"name": s.name, "elements": list(s.elements)} for s in family.sets
        ]
    }


def parse_family(doc) -> SetFamily:
    _expect_obj(doc, "family document")
    if "sets" not in doc:
        _fail('a family document needs "sets"')
    sets = []
    for item in _expect_list(doc["sets"], '"sets"'):
        _expect_obj(item, "set entry")
        name = _expect_str(item.get("name"), "set name")
        elems = [
            _expect_str(e, f"element of {name!r}")
            for e in _expect_list(item.get("elements"), f'{name!r} "elements"')
        ]
        sets.append((name, elems))
    try:
        return SetFamily(tuple(NamedSet(n, tuple(es)) for n, es in sets))
    except CoarseGeomError as exc:
        raise SchemaError(f"bad family document: {exc}") from exc


def gamma0_doc(g0: GammaZeroGraph) -> dict:
    doc = graph_doc(g0.graph)
    doc["kind"] = "gamma0"
    doc["depth"] = g0.depth
    doc["family"] = family_doc(g0.family)
    return doc


def parse_gamma0(doc) -> GammaZeroGraph:
    _expect_obj(doc, "gamma0 document")
    if doc.get("kind") != "gamma0":
        _fail('expected "kind":"gamma0"')
    family = parse_family(doc.get("family"))
    depth = _expect_int(doc.get("depth"), "depth")
    if depth < 1:
        _fail("depth must be at least 1")
    g0 = build_gamma0(family, depth)
    if not parse_graph(doc).same_structure(g0.graph):
        _fail("embedded graph does not match the declared family and depth")
    return g0


def gamma1_doc(g1: LabeledMetricGraph, family: SetFamily, depth: int) -> dict:
    doc = graph_doc(g1, tree=True)
    doc["kind"] = "gamma1"
    doc["depth"] = depth
    doc["family"] = family_doc(family)
    return doc


def parse_gamma1(doc):
    """Returns (graph, family, depth)."""
    _expect_obj(doc, "gamma1 document")
    if doc.get("kind") != "gamma1":
        _fail('expected "kind":"gamma1"')
    family = parse_family(doc.get("family"))
    depth = _expect_int(doc.get("depth"), "depth")
    if depth < 1:
        _fail("depth must be at least 1")
    g1 = build_gamma1(family, depth)
    if not parse_graph(doc).same_structure(g1):
        _fail("embedded graph does not match the declared family and depth")
    return g1, family, depth


# -- maps --------------------------------------------------------------------


def map_doc(m: QuasiMap, source_path: str, target_path: str, n=None) -> dict:
    if n is None:
        n = m.asserted_constant
    doc = {
        "source": source_path,
        "target": target_path,
        "assign": [
            {"from": point_doc(p), "to": point_doc(q)}
            for p, q in m.assignments
        ],
    }
    if n is not None:
        doc["N"] = int(n)
    return doc


def parse_map(doc, base_dir: str) -> QuasiMap:
    """Relative source/target paths resolve against base_dir (the map
    file's own directory)."""
    _expect_obj(doc, "map document")
    for key in ("source", "target", "assign"):
        if key not in doc:
            _fail(f'a map document needs "{key}"')

    def resolve(path):
        _expect_str(path, "graph path")
        return path if os.path.isabs(path) else os.path.join(base_dir, path)

    source = load_graph_file(resolve(doc["source"]))
    target = load_graph_file(resolve(doc["target"]))
    n = doc.get("N")
    if n is not None:
        n = _expect_int(n, '"N"')
    pairs = []
    for item in _expect_list(doc["assign"], '"assign"'):
        _expect_obj(item, "assignment entry")
        if "from" not in item or "to" not in item:
            _fail('each assignment needs "from" and "to"')
        pairs.append((parse_point(item["from"]), parse_point(item["to"])))
    try:
        return QuasiMap(source, target, pairs, asserted_constant=n)
    except CoarseGeomError as exc:
        raise SchemaError(f"bad map document: {exc}") from exc


# -- files -------------------------------------------------------------------


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON: {exc}") from exc


def load_graph_file(path) -> LabeledMetricGraph:
    """Any graph-shaped file: plain graphs and both gamma kinds."""
    doc = load_json(path)
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind == "gamma0":
        return parse_gamma0(doc).graph
    if kind == "gamma1":
        return parse_gamma1(doc)[0]
    return parse_graph(doc)


def load_map_file(path) -> QuasiMap:
    return parse_map(load_json(path), os.path.dirname(os.path.abspath(path)))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


# -- reports and certificates -------------------------------------------------


def _opt(x):
    return None if x is None else rational_str(x)


def violation_doc(v) -> dict:
    if isinstance(v, PairViolation):
        return {
            "kind": "pair",
            "x": point_doc(v.x),
            "y": point_doc(v.y),
            "d_source": rational_str(v.d_source),
            "d_target": rational_str(v.d_target),
            "lower_bound": rational_str(v.lower_bound),
            "upper_bound": rational_str(v.upper_bound),
        }
    if isinstance(v, SurjectivityViolation):
        return {
            "kind": "surjectivity",
            "point": point_doc(v.point),
            "dist": rational_str(v.dist),
            "bound": rational_str(v.bound),
        }
    raise TypeError(f"not a violation: {v!r}")


def qi_certificate_doc(cert) -> dict:
    return {
        "accepted": cert.accepted,
        "constant": cert.constant,
        "mode": cert.mode,
        "seed": cert.seed,
        "count": cert.count,
        "pairs_checked": cert.pairs_checked,
        "surjectivity_radius": rational_str(cert.surjectivity_radius),
        "violations": [violation_doc(v) for v in cert.violations],
    }


def delta_report_doc(rep) -> dict:
    witness = None
    if rep.witness is not None:
        witness = {
            "side": list(rep.witness.side),
            "apex": rep.witness.apex,
            "point": point_doc(rep.witness.point),
            "dist": rational_str(rep.witness.dist),
        }
    return {
        "delta_upper_observed": rational_str(rep.delta_upper_observed),
        "mode": rep.mode,
        "seed": rep.seed,
        "count": rep.count,
        "triples_checked": rep.triples_checked,
        "triples_skipped": rep.triples_skipped,
        "sampling_slack": rational_str(rep.sampling_slack),
        "witness": witness,
    }


def _bottleneck_witness_doc(w) -> dict:
    return {
        "x": point_doc(w.x),
        "y": point_doc(w.y),
        "probe": point_doc(w.probe),
        "distance": rational_str(w.distance),
        "avoiding_path": None if w.avoiding_path is None else list(w.avoiding_path),
    }


def bottleneck_report_doc(rep) -> dict:
    return {
        "accepted": rep.accepted,
        "delta_param": rational_str(rep.delta_param),
        "radius": rational_str(rep.radius),
        "mode": rep.mode,
        "seed": rep.seed,
        "count": rep.count,
        "pairs_checked": rep.pairs_checked,
        "witness": None if rep.witness is None else _bottleneck_witness_doc(rep.witness),
    }


def separation_report_doc(rep) -> dict:
    return {
        "accepted": rep.accepted,
        "radius": rational_str(rep.radius),
        "seed": rep.seed,
        "count": rep.count,
        "pairs_checked": rep.pairs_checked,
        "probes_checked": rep.probes_checked,
        "witness": None if rep.witness is None else _bottleneck_witness_doc(rep.witness),
    }


def prune_trace_doc(trace) -> dict:
    return {
        "rounds_requested": trace.rounds_requested,
        "rounds_run": trace.rounds_run,
        "stages": [list(stage) for stage in trace.stages],
        "empty": trace.empty,
    }


def choice_certificate_doc(cert, inputs=None) -> dict:
    doc = {
        "constant": cert.constant,
        "rounds": cert.rounds,
        "root": cert.root,
        "frontier": list(cert.frontier),
        "arm_assignment": [
            {"set": name, "vertex": vid} for name, vid in cert.arm_assignment
        ],
        "h_values": [
            {"vertex": vid, "element": elem} for vid, elem in cert.h_values
        ],
        "transversal": list(cert.transversal),
        "verified": cert.verified,
    }
    if inputs is not None:
        doc["inputs"] = inputs
    return doc
