import csv
import io
import json
import os

from divgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "36", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["clique_number"] == 3
    assert report["chromatic_number"] == 3
    assert report["independence_number"] == 4
    assert report["matching_number"] == 3
    assert report["vertex_cover_number"] == 3
    assert report["edge_cover_number"] == 4
    assert report["domination_number"] == 2
    assert report["delta"] == 4
    assert report["chromatic_index"] == 4
    assert report["diameter"] == 3


def test_analyze_text_default(capsys):
    code, out, _ = run(capsys, "analyze", "30")
    assert code == 0
    assert "domination_number: 3" in out
    assert "pendant_vertices: 2 3 5" in out


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "36", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "n"
    assert rows[1][0] == "36"


def test_analyze_rejects_bad_n(capsys):
    code, _, err = run(capsys, "analyze", "9")
    assert code == 2
    assert "prime-power exponent below 3" in err

    code, _, err = run(capsys, "analyze", "7")
    assert code == 2
    assert "empty graph" in err


def test_analyze_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, "analyze", "360", "--json")
    _, second, _ = run(capsys, "analyze", "360", "--json")
    assert first == second


def test_sweep_verified_range(tmp_path, capsys):
    out_file = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "4", "100", "--verify", "--out", str(out_file))
    assert code == 0
    assert "0 mismatch(es)" in out
    rows = list(csv.DictReader(out_file.open()))
    assert len(rows) == 70  # 74 composites in [4,100] minus the four prime squares
    assert {r["status_degrees"] for r in rows} == {"verified"}
    assert {r["status_clique"] for r in rows} == {"verified"}
    by_n = {r["n"]: r for r in rows}
    assert by_n["36"]["clique_number"] == "3"
    assert by_n["36"]["pendant_vertices"] == "2|3"


def test_sweep_empty_range_notes_skips(capsys):
    code, out, err = run(capsys, "sweep", "4", "4")
    assert code == 0
    # CSV (header only) on stdout, summary on stderr
    assert out.splitlines()[0].startswith("n,")
    assert len(out.splitlines()) == 1
    assert "swept 0 composite(s)" in err
    assert "1 prime square(s)" in err


def test_sweep_single_verified_row(capsys):
    code, out, err = run(capsys, "sweep", "8", "8", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert "swept 1 composite(s)" in err
    assert "verified" in lines[1]


def test_sweep_without_verify_is_formula_only(capsys):
    code, out, _ = run(capsys, "sweep", "8", "12")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["status_chromatic"] for r in rows} == {"formula-only"}


def test_sweep_parallel_matches_serial(tmp_path, capsys):
    serial = tmp_path / "serial.csv"
    parallel = tmp_path / "parallel.csv"
    assert run(capsys, "sweep", "4", "60", "--verify", "--out", str(serial))[0] == 0
    assert run(capsys, "sweep", "4", "60", "--verify", "--out", str(parallel), "--jobs", "2")[0] == 0
    assert serial.read_text() == parallel.read_text()


def test_color_edges_30(capsys):
    code, out, _ = run(capsys, "color", "30", "--edges")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "constructive"
    assert payload["colors"] == 3
    assert payload["index_set"] == [2, 3, 5]
    assignment = {tuple(edge): c for edge, c in payload["assignment"]}
    assert assignment == {
        (2, 15): 0, (3, 10): 1, (5, 6): 2,
        (6, 10): 0, (6, 15): 1, (10, 15): 2,
    }
    types = {tuple(edge): t for edge, t in payload["types"]}
    assert types[(2, 15)] == "Type-III"
    assert types[(6, 10)] == "Type-I"


def test_color_vertices_36(capsys):
    code, out, _ = run(capsys, "color", "36", "--vertices")
    assert code == 0
    payload = json.loads(out)
    assert payload["colors"] == 3
    assert [w for w, _ in payload["anchors"]] == [18, 12]


def test_color_general_n_uses_oracle_within_budget(capsys):
    code, out, _ = run(capsys, "color", "72", "--edges")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "backtracking-oracle"
    assert payload["colors"] == 7


def test_color_general_n_over_budget_is_open_problem(capsys):
    code, _, err = run(capsys, "color", "1800", "--edges")  # 34 vertices
    assert code == 3
    assert "no constructive algorithm (open problem)" in err


def test_aut_60(capsys):
    code, out, _ = run(capsys, "aut", "60")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 2
    assert payload["structure"] == [1, 2]
    assert payload["structure_text"] == "S1 x S2"
    assert len(payload["elements"]) == 2
    assert len(payload["generators"]) == 1


def test_aut_element_cap(capsys):
    code, out, _ = run(capsys, "aut", "210", "--element-cap", "10")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 24
    assert payload["elements"] is None
    assert len(payload["generators"]) == 3


def test_iso(capsys):
    assert run(capsys, "iso", "8", "15") == (0, "isomorphic (exceptional pair)\n", "")
    assert run(capsys, "iso", "12", "18") == (0, "isomorphic (similar)\n", "")
    assert run(capsys, "iso", "8", "16") == (0, "not isomorphic\n", "")
    code, _, err = run(capsys, "iso", "9", "12")
    assert code == 2 and "prime-power exponent" in err


def test_export_dot_and_json(capsys):
    code, out, _ = run(capsys, "export", "12", "--dot")
    assert code == 0
    assert out.startswith("graph divisors_12 {")
    assert "2 -- 6;" in out

    code, out, _ = run(capsys, "export", "30", "--json")
    assert code == 0
    assert json.loads(out)["edges"] == [[2, 15], [3, 10], [5, 6], [6, 10], [6, 15], [10, 15]]


def test_export_over_vertex_cap_exits_4(capsys):
    # 963761198400 has 6718 proper divisors, past the 4096-vertex guard
    code, _, err = run(capsys, "export", "963761198400", "--json")
    assert code == 4
    assert "cap" in err


def test_export_png(tmp_path, capsys):
    target = tmp_path / "g12.png"
    code, out, _ = run(capsys, "export", "12", "--png", str(target))
    assert code == 0
    assert target.exists() and target.stat().st_size > 0


def test_sweep_figures(tmp_path, capsys):
    figdir = tmp_path / "figs"
    out_file = tmp_path / "sweep.csv"
    code, out, _ = run(
        capsys, "sweep", "4", "60", "--out", str(out_file), "--figures", str(figdir)
    )
    assert code == 0
    written = sorted(os.listdir(figdir))
    assert written == ["parameters.png", "partition.png"]
    assert "figure:" in out
