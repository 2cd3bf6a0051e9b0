from __future__ import annotations

import importlib.resources
import json

import pytest

from kronthick.bounds import theta_kn_times_k2, theta_knnn_times_k2
from kronthick.cli import main
from kronthick.graphs import components, make_complete
from kronthick.products import kronecker_product
from kronthick.serialize import graph_document, graph_from_document, to_json

SEED_PATH = str(
    importlib.resources.files("kronthick").joinpath("data").joinpath("seed_k7_7.json")
)

FIXTURE_N5_PATH = str(
    importlib.resources.files("kronthick").joinpath("data").joinpath("knnn_x_k2_n5.json")
)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# ============================================================
# product
# ============================================================


def test_product_k5_k2(capsys):
    code, out = run(capsys, "product", "kn:5", "kn:2")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == 10
    assert len(doc["edges"]) == 20


def test_product_k2_k2_two_components(capsys):
    code, out = run(capsys, "product", "kn:2", "kn:2")
    assert code == 0
    assert len(components(graph_from_document(json.loads(out)))) == 2


def test_product_right_flag_matches_library(capsys, tmp_path):
    h = make_complete(2)
    path = tmp_path / "h.json"
    path.write_text(to_json(graph_document(h)))
    code, out = run(capsys, "product", "kn:3", "--right", f"file:{path}")
    assert code == 0
    assert graph_from_document(json.loads(out)) == kronecker_product(
        make_complete(3), h
    )


def test_product_dot_output(capsys):
    code, out = run(capsys, "product", "path:2", "kn:2", "--dot")
    assert code == 0
    assert out.startswith("graph G {")


def test_product_spec_forms(capsys):
    for spec, vertices in [
        ("kmn:2,3", 10),
        ("knnn:2", 12),
        ("cycle:5", 10),
        ("path:4", 8),
    ]:
        code, out = run(capsys, "product", spec, "kn:2")
        assert code == 0
        assert len(json.loads(out)["vertices"]) == vertices


def test_product_rejects_bad_spec(capsys):
    assert run(capsys, "product", "zz:3", "kn:2")[0] == 2
    assert run(capsys, "product", "kn:x", "kn:2")[0] == 2
    assert run(capsys, "product", "kn:3")[0] == 2  # missing second factor


def test_product_missing_file(capsys):
    assert run(capsys, "product", "kn:3", "file:/nonexistent.json")[0] == 3


# ============================================================
# decompose
# ============================================================


def test_decompose_kn8(capsys):
    code, out = run(capsys, "decompose", "kn_x_k2", "8")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["parts"]) == 2
    assert doc["guarantee"] == "OPTIMAL"


def test_decompose_knnn9(capsys):
    code, out = run(capsys, "decompose", "knnn_x_k2", "9")
    assert code == 0
    assert len(json.loads(out)["parts"]) == 5


def test_decompose_knn_takes_p(capsys):
    code, out = run(capsys, "decompose", "knn", "2")
    assert code == 0
    assert len(json.loads(out)["parts"]) == 3


def test_decompose_seedless_exit_code(capsys):
    assert run(capsys, "decompose", "knnn_x_k2", "7")[0] == 4


def test_decompose_with_seed_file(capsys):
    code, out = run(capsys, "decompose", "knnn_x_k2", "7", "--seed", SEED_PATH)
    assert code == 0
    assert len(json.loads(out)["parts"]) == 4


def test_decompose_seed_dir_discovery(capsys, tmp_path, monkeypatch):
    import shutil

    shutil.copy(SEED_PATH, tmp_path / "seed_k7_7.json")
    monkeypatch.setenv("THICKNESS_SEED_DIR", str(tmp_path))
    code, out = run(capsys, "decompose", "knnn_x_k2", "6")
    assert code == 0
    assert len(json.loads(out)["parts"]) == 4


def test_decompose_seed_dir_without_file(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("THICKNESS_SEED_DIR", str(tmp_path))
    assert run(capsys, "decompose", "knnn_x_k2", "11")[0] == 4


def test_decompose_output_byte_stable(capsys):
    a = run(capsys, "decompose", "kn_x_k2", "12")[1]
    b = run(capsys, "decompose", "kn_x_k2", "12")[1]
    assert a == b


def test_decompose_usage_errors(capsys):
    assert run(capsys, "decompose", "nonsense", "3")[0] == 2
    assert run(capsys, "decompose", "kn_x_k2", "1")[0] == 2


# ============================================================
# verify
# ============================================================


def test_verify_roundtrip(capsys, tmp_path):
    out = run(capsys, "decompose", "kn_x_k2", "8")[1]
    path = tmp_path / "d.json"
    path.write_text(out)
    code, text = run(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(text)["passed"] is True


def test_verify_quiet(capsys, tmp_path):
    out = run(capsys, "decompose", "knn", "1")[1]
    path = tmp_path / "d.json"
    path.write_text(out)
    code, text = run(capsys, "verify", str(path), "--quiet")
    assert code == 0
    assert text.strip() == "PASS"


def test_verify_detects_duplicated_edge(capsys, tmp_path):
    doc = json.loads(run(capsys, "decompose", "kn_x_k2", "8")[1])
    doc["parts"][1]["edges"].append(doc["parts"][0]["edges"][0])
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(doc))
    code, text = run(capsys, "verify", str(path))
    assert code == 1
    report = json.loads(text)
    assert report["passed"] is False
    assert len(report["overlap"]) == 1


def test_verify_bundled_fixture_n5(capsys):
    code, text = run(capsys, "verify", FIXTURE_N5_PATH, "--quiet")
    assert code == 0
    assert text.strip() == "PASS"


def test_verify_parse_failures(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "absent.json"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "verify", str(bad))[0] == 3


# ============================================================
# bounds
# ============================================================


def test_bounds_knnn8(capsys):
    code, out = run(capsys, "bounds", "knnn_x_k2", "8")
    assert code == 0
    assert json.loads(out)["exact"] == 5


def test_bounds_kmn(capsys):
    code, out = run(capsys, "bounds", "kmn_x_k2", "3,7")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"] <= doc["upper"]


def test_bounds_product_k5_k5(capsys):
    code, out = run(capsys, "bounds", "product", "kn:5", "kn:5")
    assert code == 0
    assert json.loads(out)["lower"] == 3


def test_bounds_other_families(capsys):
    assert json.loads(run(capsys, "bounds", "kn_x_k2", "8")[1])["exact"] == 2
    assert json.loads(run(capsys, "bounds", "knn", "4")[1])["exact"] == 2
    assert json.loads(run(capsys, "bounds", "kmn_x_kpq", "2,3,1,2")[1])["exact"] == 2
    assert json.loads(run(capsys, "bounds", "klmn_x_k2", "2,2,2")[1])["exact"] == 2


def test_bounds_usage_errors(capsys):
    assert run(capsys, "bounds", "kmn_x_kpq", "3")[0] == 2
    assert run(capsys, "bounds", "mystery", "3")[0] == 2


# ============================================================
# table
# ============================================================


def parse_csv(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


def test_table_kn_parts_column(capsys):
    code, out = run(capsys, "table", "kn_x_k2", "2..20", "--csv")
    assert code == 0
    for row in parse_csv(out):
        n = int(row["n"])
        assert int(row["parts"]) == theta_kn_times_k2(n)
        assert row["optimal"] == "yes"


def test_table_knnn_supported_sizes(capsys):
    code, out = run(capsys, "table", "knnn_x_k2", "1,4,5,8,9,12,13", "--csv")
    assert code == 0
    for row in parse_csv(out):
        assert int(row["parts"]) == theta_knnn_times_k2(int(row["n"]))


def test_table_knn_parts_is_p_plus_1(capsys):
    code, out = run(capsys, "table", "knn", "1..5", "--csv")
    assert code == 0
    for row in parse_csv(out):
        assert int(row["parts"]) == int(row["n"]) + 1


def test_table_marks_seedless_rows_unsupported(capsys):
    code, out = run(capsys, "table", "knnn_x_k2", "6,7", "--csv")
    assert code == 0
    rows = parse_csv(out)
    assert all(r["optimal"] == "UNSUPPORTED" for r in rows)


def test_table_with_seed_covers_all_rows(capsys):
    code, out = run(capsys, "table", "knnn_x_k2", "6..8", "--seed", SEED_PATH, "--csv")
    assert code == 0
    rows = parse_csv(out)
    assert [r["optimal"] for r in rows] == ["yes", "yes", "yes"]


def test_table_csv_byte_stable(capsys):
    a = run(capsys, "table", "kn_x_k2", "2..10", "--csv")[1]
    b = run(capsys, "table", "kn_x_k2", "2..10", "--csv")[1]
    assert a == b


def test_table_text_mode_has_header(capsys):
    code, out = run(capsys, "table", "knn", "1..3")
    assert code == 0
    assert out.splitlines()[0].split() == ["n", "lower", "parts", "upper", "optimal"]


def test_table_bad_range(capsys):
    assert run(capsys, "table", "kn_x_k2", "abc")[0] == 2


# ============================================================
# argparse plumbing
# ============================================================


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["nosuchcommand"])
    assert info.value.code == 2
