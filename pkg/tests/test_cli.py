"""Command line behavior: exit codes, documents, byte stability.

Commands are exercised in process through main(argv); one subprocess case
checks the installed entry point end to end.
"""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from coarsegeom import (
    LabeledMetricGraph,
    QuasiMap,
    SetFamily,
    Vertex,
    build_collapse_map,
    build_gamma0,
    build_gamma1,
    gamma1_vertex_id,
    quasi_inverse,
    slim_triangle_delta,
    tree_median,
    verify_bottleneck,
)
from coarsegeom.cli import main
from coarsegeom.documents import (
    bottleneck_report_doc,
    canonical_dumps,
    delta_report_doc,
    family_doc,
    gamma0_doc,
    graph_doc,
    map_doc,
    point_doc,
)
from conftest import cycle_graph, path_graph

FAM2 = {"sets": [{"name": "X0", "elements": ["a", "b"]},
                 {"name": "X1", "elements": ["c"]}]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out else None
    return code, doc, out.err


@pytest.fixture
def fam_file(tmp_path):
    p = tmp_path / "family.json"
    p.write_text(canonical_dumps(FAM2))
    return str(p)


def graph_file(tmp_path, g, name, tree=False):
    p = tmp_path / name
    p.write_text(canonical_dumps(graph_doc(g, tree=tree)))
    return str(p)


def test_gamma0_build(capsys, tmp_path, fam_file):
    code, doc, _ = run(capsys, "gamma0", "--family", fam_file, "--depth", "3")
    assert code == 0
    fam = SetFamily.of_lists([["a", "b"], ["c"]])
    assert doc == json.loads(canonical_dumps(gamma0_doc(build_gamma0(fam, 3))))


def test_gamma0_rejects_depth_zero(capsys, fam_file):
    code, doc, err = run(capsys, "gamma0", "--family", fam_file, "--depth", "0")
    assert code == 2
    assert doc is None
    assert "depth" in err


def test_out_flag_and_byte_identical_reruns(capsys, tmp_path, fam_file):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert main(["gamma1", "--family", fam_file, "--depth", "4", "--out", a]) == 0
    assert main(["gamma1", "--family", fam_file, "--depth", "4", "--out", b]) == 0
    capsys.readouterr()
    assert open(a, "rb").read() == open(b, "rb").read()
    assert open(a).read().endswith("\n")


def test_collapse_and_min_qi(capsys, tmp_path, fam_file):
    g0p, g1p = str(tmp_path / "g0.json"), str(tmp_path / "g1.json")
    main(["gamma0", "--family", fam_file, "--depth", "3", "--out", g0p])
    main(["gamma1", "--family", fam_file, "--depth", "3", "--out", g1p])
    mp = str(tmp_path / "map.json")
    code, _, _ = run(capsys, "collapse", "--gamma0", g0p, "--gamma1", g1p,
                     "--out", mp)
    assert code == 0
    fam = SetFamily.of_lists([["a", "b"], ["c"]])
    expect = map_doc(
        build_collapse_map(build_gamma0(fam, 3), build_gamma1(fam, 3)),
        g0p, g1p,
    )
    assert json.load(open(mp)) == json.loads(canonical_dumps(expect))

    code, doc, _ = run(capsys, "min-qi", "--map", mp)
    assert code == 0
    assert doc == {"minimal_constant": 2}

    code, doc, _ = run(capsys, "check-qi", "--map", mp, "--constant", "2")
    assert code == 0 and doc["accepted"] is True

    code, doc, _ = run(capsys, "check-qi", "--map", mp, "--constant", "1")
    assert code == 1
    assert doc["accepted"] is False and doc["violations"]


def test_check_qi_exhaustive_guard(capsys, tmp_path):
    g = path_graph(4001)
    gp = graph_file(tmp_path, g, "big.json")
    m = QuasiMap(g, g, [(Vertex(v), Vertex(v)) for v in range(4001)])
    mp = tmp_path / "big_map.json"
    mp.write_text(canonical_dumps(map_doc(m, "big.json", "big.json", n=1)))

    code, doc, err = run(capsys, "check-qi", "--map", str(mp), "--constant", "1")
    assert code == 2
    assert doc is None and "guard" in err

    code, doc, err = run(capsys, "check-qi", "--map", str(mp), "--constant", "1",
                         "--seed", "3", "--count", "50")
    assert code == 0
    assert "switching to sampled" in err
    assert doc["mode"] == "sampled" and doc["accepted"] is True


def test_delta_matches_library(capsys, tmp_path):
    gp = graph_file(tmp_path, cycle_graph(8), "c8.json")
    code, doc, _ = run(capsys, "delta", "--graph", gp)
    assert code == 0
    assert doc == json.loads(canonical_dumps(delta_report_doc(
        slim_triangle_delta(cycle_graph(8)))))
    assert doc["delta_upper_observed"] == "2/1"

    code, _, err = run(capsys, "delta", "--graph", gp, "--mode", "sampled")
    assert code == 2 and "seed" in err


def test_bottleneck_exit_codes(capsys, tmp_path):
    tree = path_graph(6)
    tp = graph_file(tmp_path, tree, "p6.json")
    code, doc, _ = run(capsys, "bottleneck", "--graph", tp, "--delta", "3/1")
    assert code == 0 and doc["accepted"] is True
    assert doc == json.loads(canonical_dumps(bottleneck_report_doc(
        verify_bottleneck(tree, Fraction(3)))))

    cp = graph_file(tmp_path, cycle_graph(24), "c24.json")
    code, doc, _ = run(capsys, "bottleneck", "--graph", cp, "--delta", "5",
                       "--radius", "4")
    assert code == 1
    assert doc["witness"] is not None
    assert doc["witness"]["avoiding_path"]

    code, _, err = run(capsys, "bottleneck", "--graph", cp, "--delta", "3",
                       "--radius", "-1")
    assert code == 2


def test_separation(capsys, tmp_path, fam_file):
    g0p = str(tmp_path / "g0.json")
    main(["gamma0", "--family", fam_file, "--depth", "6", "--out", g0p])
    code, doc, _ = run(capsys, "separation", "--gamma0", g0p,
                       "--seed", "5", "--count", "60")
    assert code == 0
    assert doc["accepted"] is True
    assert doc["radius"] == "2/1"
    assert doc["pairs_checked"] == 60


def test_profile(capsys, tmp_path, fam_file):
    g0p = str(tmp_path / "g0.json")
    main(["gamma0", "--family", fam_file, "--depth", "3", "--out", g0p])
    g0 = build_gamma0(SetFamily.of_lists([["a", "b"], ["c"]]), 3)
    x = json.dumps({"vertex": g0.vertex_of("a", 2)})
    y = json.dumps({"vertex": g0.vertex_of("c", 2)})
    code, doc, _ = run(capsys, "profile", "--gamma0", g0p, "--x", x, "--y", y)
    assert code == 0
    assert doc["profiles"]
    for item in doc["profiles"]:
        assert item["profile"] == "VShaped"
        assert item["length"] == "4/1"

    code, _, err = run(capsys, "profile", "--gamma0", g0p, "--x", "{oops", "--y", y)
    assert code == 2


def test_witness_frozen(capsys, tmp_path):
    fam = {"sets": [{"name": "X0", "elements": ["a"]},
                    {"name": "X1", "elements": ["c"]}]}
    fp = tmp_path / "fam.json"
    fp.write_text(canonical_dumps(fam))
    g0p = str(tmp_path / "g0.json")
    main(["gamma0", "--family", str(fp), "--depth", "30", "--out", g0p])
    code, doc, _ = run(
        capsys, "witness", "--gamma0", g0p,
        "--x", '{"vertex": 5}', "--y", '{"vertex": 2}', "--bound", "3/1",
    )
    assert code == 0
    assert doc == {"bound": "3/1", "witness": {"vertex": 43}, "level": 13}

    # bound too large for the truncation
    code, _, err = run(
        capsys, "witness", "--gamma0", g0p,
        "--x", '{"vertex": 5}', "--y", '{"vertex": 2}', "--bound", "40",
    )
    assert code == 3 and "DepthTooSmall" in err


def test_prune(capsys, tmp_path):
    cat = LabeledMetricGraph(
        range(7),
        [(0, 0, 1, 1), (1, 1, 2, 1), (2, 2, 3, 1),
         (3, 1, 4, 1), (4, 1, 5, 1), (5, 2, 6, 1)],
    )
    tp = graph_file(tmp_path, cat, "cat.json", tree=True)
    code, doc, _ = run(capsys, "prune", "--graph", tp, "--rounds", "1")
    assert code == 0
    assert [v["id"] for v in doc["vertices"]] == [1, 2]
    assert doc["tree"] is True
    assert doc["prune_trace"] == {
        "rounds_requested": 1, "rounds_run": 1,
        "stages": [[0, 3, 4, 5, 6]], "empty": False,
    }


def test_median(capsys, tmp_path):
    cat = LabeledMetricGraph(
        range(7),
        [(0, 0, 1, 1), (1, 1, 2, 1), (2, 2, 3, 1),
         (3, 1, 4, 1), (4, 1, 5, 1), (5, 2, 6, 1)],
    )
    tp = graph_file(tmp_path, cat, "cat.json", tree=True)
    code, doc, _ = run(capsys, "median", "--tree", tp,
                       "--z", '{"vertex": 0}', "--a", '{"vertex": 5}',
                       "--b", '{"vertex": 6}')
    assert code == 0
    med = tree_median(cat, Vertex(0), Vertex(5), Vertex(6))
    assert doc == {"median": point_doc(med)} == {"median": {"vertex": 1}}

    code, _, _ = run(capsys, "median", "--tree", tp,
                     "--z", '{"vertex": 99}', "--a", '{"vertex": 5}',
                     "--b", '{"vertex": 6}')
    assert code == 2  # unknown point

    cyc = graph_file(tmp_path, cycle_graph(4), "c4.json")
    code, _, err = run(capsys, "median", "--tree", cyc,
                       "--z", '{"vertex": 0}', "--a", '{"vertex": 1}',
                       "--b", '{"vertex": 2}')
    assert code == 3 and "NotATree" in err


def test_quasi_inverse(capsys, tmp_path):
    src = path_graph(10)
    gp = graph_file(tmp_path, src, "p10.json", tree=True)
    m = QuasiMap(src, src, [(Vertex(v), Vertex(v)) for v in range(10)],
                 asserted_constant=1)
    mp = tmp_path / "map.json"
    mp.write_text(canonical_dumps(map_doc(m, "p10.json", "p10.json")))
    code, doc, _ = run(capsys, "quasi-inverse", "--map", str(mp),
                       "--constant", "1")
    assert code == 0
    res = quasi_inverse(m, 1)
    assert doc["bound"] == res.bound == 9
    assert doc["minimal_constant"] == res.minimal_constant == 1
    assert doc["certificate"]["accepted"] is True
    assert doc["map"]["N"] == 1


def test_extract_choice_paths(capsys, tmp_path, fam_file):
    sec = tmp_path / "sec.json"
    sec.write_text(canonical_dumps({"mode": "first"}))

    # depth below what the constant needs: noted, then refused
    code, _, err = run(capsys, "extract-choice", "--family", fam_file,
                       "--depth", "20", "--constant", "4", "--section", str(sec))
    assert code == 3
    assert "depth >= 944" in err and "DepthError" in err

    bad = tmp_path / "bad.json"
    bad.write_text(canonical_dumps({"seed": 3}))
    code, _, err = run(capsys, "extract-choice", "--family", fam_file,
                       "--depth", "944", "--constant", "4", "--section", str(bad))
    assert code == 2

    code, doc, _ = run(capsys, "extract-choice", "--family", fam_file,
                       "--depth", "944", "--constant", "4", "--section", str(sec))
    assert code == 0
    assert doc["verified"] is True
    assert doc["rounds"] == 112 and doc["root"] == 0
    assert doc["frontier"] == [gamma1_vertex_id(944, 0, 224),
                               gamma1_vertex_id(944, 1, 224)]
    assert doc["transversal"] == ["a", "c"]
    assert set(doc["inputs"]) == {"family", "section", "depth", "constant"}


def test_extract_choice_adversarial_seed(capsys, tmp_path, fam_file):
    sec = tmp_path / "sec.json"
    sec.write_text(canonical_dumps({"mode": "first"}))
    code, doc, _ = run(capsys, "extract-choice", "--family", fam_file,
                       "--depth", "944", "--constant", "4",
                       "--section", str(sec), "--adversarial-seed", "99")
    assert code == 0
    assert doc["verified"] is True
    assert doc["inputs"]["adversarial_seed"] == 99


def test_verify_transversal_cli(capsys, tmp_path, fam_file):
    def elems_file(payload, name):
        p = tmp_path / name
        p.write_text(canonical_dumps(payload))
        return str(p)

    code, doc, _ = run(capsys, "verify-transversal", "--family", fam_file,
                       "--elements", elems_file(["a", "c"], "t1.json"))
    assert code == 0 and doc == {"elements": ["a", "c"], "valid": True}

    code, doc, _ = run(capsys, "verify-transversal", "--family", fam_file,
                       "--elements", elems_file({"elements": ["b", "c"]}, "t2.json"))
    assert code == 0 and doc["valid"] is True

    code, doc, _ = run(capsys, "verify-transversal", "--family", fam_file,
                       "--elements", elems_file({"transversal": ["a", "b"]}, "t3.json"))
    assert code == 1 and doc["valid"] is False

    code, _, err = run(capsys, "verify-transversal", "--family", fam_file,
                       "--elements", elems_file(["a", 3], "t4.json"))
    assert code == 2

    code, _, err = run(capsys, "verify-transversal", "--family", fam_file,
                       "--elements", elems_file(["a", "z"], "t5.json"))
    assert code == 3 and "UnknownElement" in err


def test_missing_file_and_bad_subcommand(capsys, tmp_path):
    code, _, err = run(capsys, "delta", "--graph", str(tmp_path / "nope.json"))
    assert code == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])
    capsys.readouterr()


def test_entry_point_subprocess(tmp_path, fam_file):
    out = subprocess.run(
        [sys.executable, "-m", "coarsegeom.cli",
         "gamma0", "--family", fam_file, "--depth", "2"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["kind"] == "gamma0" and doc["depth"] == 2
    assert doc["family"] == FAM2
