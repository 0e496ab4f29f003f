"""JSON document round trips and schema rejection."""

import json
import random
from fractions import Fraction

import pytest

from coarsegeom import (
    Interior,
    LabeledMetricGraph,
    SchemaError,
    SetFamily,
    Vertex,
    build_gamma0,
    build_gamma1,
    distance,
    section_map,
    slim_triangle_delta,
    verify_quasi_isometry,
)
from coarsegeom.documents import (
    canonical_dumps,
    delta_report_doc,
    family_doc,
    gamma0_doc,
    gamma1_doc,
    graph_doc,
    load_graph_file,
    load_map_file,
    map_doc,
    parse_family,
    parse_gamma0,
    parse_gamma1,
    parse_graph,
    parse_point,
    parse_rational,
    point_doc,
    qi_certificate_doc,
    rational_str,
)
from conftest import random_graph, random_tree


def test_rational_strings():
    assert rational_str(Fraction(3)) == "3/1"
    assert rational_str(Fraction(1, 2)) == "1/2"
    assert rational_str(Fraction(-7, 14)) == "-1/2"
    assert parse_rational("3/1") == 3
    assert parse_rational("10/4") == Fraction(5, 2)
    assert parse_rational(5) == 5
    for bad in ("", "a/b", "1/0", 1.5, True, None, [1, 2]):
        with pytest.raises(SchemaError):
            parse_rational(bad)


def test_rational_round_trip_loop():
    rng = random.Random(20)
    for _ in range(200):
        x = Fraction(rng.randrange(-500, 500), rng.randrange(1, 60))
        assert parse_rational(rational_str(x)) == x


def test_point_docs():
    assert point_doc(Vertex(4)) == {"vertex": 4}
    assert point_doc(Interior(2, Fraction(1, 3))) == {"edge": 2, "offset": "1/3"}
    assert parse_point({"vertex": 4}) == Vertex(4)
    assert parse_point({"edge": 2, "offset": "1/3"}) == Interior(2, Fraction(1, 3))
    for bad in (
        {"vertex": 4, "edge": 1},
        {"edge": 2},
        {"offset": "1/3"},
        {"vertex": True},
        "vertex 4",
        {},
    ):
        with pytest.raises(SchemaError):
            parse_point(bad)


def test_graph_round_trip_loop():
    for seed in range(8):
        g = random_graph(seed, 12, extra=3, rational=True)
        back = parse_graph(json.loads(canonical_dumps(graph_doc(g))))
        assert back.same_structure(g)
        assert back.vertex_labels == g.vertex_labels
        assert back.basepoint == g.basepoint


def test_graph_round_trip_keeps_labels_and_base():
    g = LabeledMetricGraph(
        [(0, "root"), 1, (2, "leaf")],
        [(0, 0, 1, Fraction(3, 2), 1), (1, 1, 2, 1)],
        basepoint=0,
    )
    doc = graph_doc(g, tree=True)
    assert doc["tree"] is True
    assert doc["basepoint"] == 0
    assert doc["edges"][0]["label"] == 1
    back = parse_graph(doc)
    assert back.same_structure(g)
    assert back.vertex_labels == {0: "root", 1: None, 2: "leaf"}


def test_canonical_dumps_is_stable():
    g = random_graph(3, 10, extra=2)
    a = canonical_dumps(graph_doc(g))
    b = canonical_dumps(graph_doc(g))
    assert a == b
    assert a.endswith("\n")
    # key order in the input dict must not leak into the output
    assert canonical_dumps({"b": 1, "a": 2}) == canonical_dumps({"a": 2, "b": 1})


def test_graph_schema_rejections():
    ok = graph_doc(random_graph(0, 5))
    cases = []
    d = json.loads(canonical_dumps(ok)); del d["edges"]; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["vertices"][0]["id"] = "zero"; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["vertices"][0]["id"] = True; cases.append(d)
    d = json.loads(canonical_dumps(ok)); del d["edges"][0]["len"]; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["edges"][0]["len"] = "0/1"; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["edges"][0]["u"] = 99; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["edges"][0]["label"] = "x"; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["basepoint"] = "0"; cases.append(d)
    d = json.loads(canonical_dumps(ok)); d["vertices"] = "none"; cases.append(d)
    cases.append([1, 2, 3])
    for bad in cases:
        with pytest.raises(SchemaError):
            parse_graph(bad)


def test_tree_flag_is_checked():
    cyc = graph_doc(
        LabeledMetricGraph([0, 1, 2], [(0, 0, 1, 1), (1, 1, 2, 1), (2, 2, 0, 1)])
    )
    cyc["tree"] = True
    with pytest.raises(SchemaError):
        parse_graph(cyc)


def test_family_round_trip(fam3):
    back = parse_family(family_doc(fam3))
    assert back == fam3
    with pytest.raises(SchemaError):
        parse_family({"sets": [{"name": "A", "elements": ["x", "x"]}]})
    with pytest.raises(SchemaError):
        parse_family({"sets": [{"name": "A", "elements": []}]})
    with pytest.raises(SchemaError):
        parse_family({})


def test_gamma_docs_round_trip(fam2):
    g0 = build_gamma0(fam2, 3)
    back = parse_gamma0(json.loads(canonical_dumps(gamma0_doc(g0))))
    assert back.depth == 3
    assert back.family == fam2
    assert back.graph.same_structure(g0.graph)

    g1 = build_gamma1(fam2, 3)
    t, fam, depth = parse_gamma1(json.loads(canonical_dumps(gamma1_doc(g1, fam2, 3))))
    assert (fam, depth) == (fam2, 3)
    assert t.same_structure(g1)


def test_tampered_gamma0_is_rejected(fam2):
    doc = json.loads(canonical_dumps(gamma0_doc(build_gamma0(fam2, 3))))
    doc["edges"] = doc["edges"][:-1]
    with pytest.raises(SchemaError):
        parse_gamma0(doc)
    doc2 = json.loads(canonical_dumps(gamma0_doc(build_gamma0(fam2, 3))))
    doc2["depth"] = 4
    with pytest.raises(SchemaError):
        parse_gamma0(doc2)
    with pytest.raises(SchemaError):
        parse_gamma0({"kind": "gamma1"})


def test_map_file_round_trip(tmp_path, fam2):
    g0 = build_gamma0(fam2, 3)
    m = section_map(g0, mode="alternating")
    (tmp_path / "g0.json").write_text(canonical_dumps(gamma0_doc(g0)))
    (tmp_path / "g1.json").write_text(
        canonical_dumps(gamma1_doc(m.source, fam2, 3))
    )
    doc = map_doc(m, "g1.json", "g0.json")
    assert doc["N"] == 2
    (tmp_path / "map.json").write_text(canonical_dumps(doc))
    back = load_map_file(str(tmp_path / "map.json"))
    assert back.source.same_structure(m.source)
    assert back.target.same_structure(m.target)
    assert back.assignments == m.assignments
    assert back.asserted_constant == 2
    assert verify_quasi_isometry(back, 2).accepted


def test_map_schema_rejections(tmp_path):
    g = random_tree(1, 6)
    (tmp_path / "g.json").write_text(canonical_dumps(graph_doc(g)))
    base = {
        "source": "g.json",
        "target": "g.json",
        "assign": [{"from": {"vertex": v}, "to": {"vertex": v}} for v in range(6)],
    }
    good = tmp_path / "ok.json"
    good.write_text(canonical_dumps(base))
    assert load_map_file(str(good)).asserted_constant is None

    bad = dict(base); del bad["target"]
    p = tmp_path / "b1.json"; p.write_text(canonical_dumps(bad))
    with pytest.raises(SchemaError):
        load_map_file(str(p))

    bad = dict(base); bad["assign"] = base["assign"] + [base["assign"][0]]
    p = tmp_path / "b2.json"; p.write_text(canonical_dumps(bad))
    with pytest.raises(SchemaError):
        load_map_file(str(p))  # duplicate domain point

    bad = dict(base); bad["N"] = "2/1"
    p = tmp_path / "b3.json"; p.write_text(canonical_dumps(bad))
    with pytest.raises(SchemaError):
        load_map_file(str(p))

    p = tmp_path / "b4.json"; p.write_text("{not json")
    with pytest.raises(SchemaError):
        load_map_file(str(p))


def test_load_graph_file_dispatch(tmp_path, fam2):
    plain = random_tree(4, 5)
    g0 = build_gamma0(fam2, 2)
    g1 = build_gamma1(fam2, 2)
    (tmp_path / "plain.json").write_text(canonical_dumps(graph_doc(plain)))
    (tmp_path / "g0.json").write_text(canonical_dumps(gamma0_doc(g0)))
    (tmp_path / "g1.json").write_text(canonical_dumps(gamma1_doc(g1, fam2, 2)))
    assert load_graph_file(str(tmp_path / "plain.json")).same_structure(plain)
    assert load_graph_file(str(tmp_path / "g0.json")).same_structure(g0.graph)
    assert load_graph_file(str(tmp_path / "g1.json")).same_structure(g1)


def test_report_docs_use_rational_strings(fam2):
    g0 = build_gamma0(fam2, 2)
    rep = slim_triangle_delta(g0.graph)
    doc = delta_report_doc(rep)
    assert doc["delta_upper_observed"] == rational_str(rep.delta_upper_observed)
    assert doc["sampling_slack"].count("/") == 1
    json.dumps(doc)  # every value must already be JSON friendly

    m = section_map(g0, mode="first")
    cdoc = qi_certificate_doc(verify_quasi_isometry(m, 2))
    assert cdoc["accepted"] is True
    assert cdoc["surjectivity_radius"].count("/") == 1
    json.dumps(cdoc)
