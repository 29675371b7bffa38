"""The command line surface: report, export, verify, batch."""

import json

import wnc
from wnc.cli import main

from corpus import realize
from oracles import naive_edge_set, naive_wnc_members


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_report_json_z10(capsys):
    code, out, _ = run(capsys, "report", "Z10", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["wnc_set"] == ["0", "1", "4", "5", "6", "9"]
    assert doc["clique_number"] == 4
    assert doc["girth"] == 3
    assert doc["diameter"] == 2
    assert doc["chromatic_index"] == 6
    assert doc["vizing_class"] == 1
    assert doc["ring"] == "Z10"
    assert out.endswith("\n")
    # canonical key order
    assert list(doc) == sorted(doc)


def test_report_json_gf25(capsys):
    code, out, _ = run(capsys, "report", "GF(25)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["component_sizes"] == [5, 10, 10]
    assert doc["diameter"] == "inf"
    assert doc["is_weakly_nil_clean_ring"] is False
    assert doc["wnc_set"] == ["0", "1", "4"]


def test_report_json_deterministic_modulo_timing(capsys):
    docs = []
    for _ in range(2):
        _, out, _ = run(capsys, "report", "Z30", "--json")
        doc = json.loads(out)
        del doc["wall_time_seconds"]
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


def test_report_four_cliques_flag(capsys):
    code, out, _ = run(capsys, "report", "Z10", "--json", "--four-cliques")
    doc = json.loads(out)
    assert doc["four_cliques"] == [
        ["0", "1", "4", "5"], ["0", "1", "5", "9"], ["0", "4", "5", "6"],
        ["0", "5", "6", "9"], ["2", "3", "7", "8"]]


def test_report_z1_fails_with_message(capsys):
    code, out, err = run(capsys, "report", "Z1")
    assert code == 1
    assert "must be >= 2" in err


def test_report_text_mentions_key_fields(capsys):
    code, out, _ = run(capsys, "report", "Z10")
    assert code == 0
    assert "weakly nil clean set (6): 0, 1, 4, 5, 6, 9" in out
    assert "clique_number: 4" in out


def test_export_dot_z10_matches_derived_edges(capsys, tmp_path):
    path = tmp_path / "z10.dot"
    code, _, _ = run(capsys, "export", "Z10", "--format", "dot", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.startswith("graph G {")
    node_lines = [l for l in text.splitlines()
                  if l.endswith('";') and " -- " not in l]
    edge_lines = [l for l in text.splitlines() if " -- " in l]
    assert len(node_lines) == 10
    ring, _, _ = realize("Z10")
    expected = naive_edge_set(ring, naive_wnc_members(ring))
    got = set()
    for line in edge_lines:
        u, v = line.strip().rstrip(";").split(" -- ")
        got.add((int(u.strip('"')), int(v.strip('"'))))
    assert got == expected


def test_export_json_z2_exact_bytes(capsys):
    code, out, _ = run(capsys, "export", "Z2", "--format", "json", "--out", "-")
    assert code == 0
    assert out == '{"vertices":["0","1"],"edges":[[0,1]]}\n'


def test_export_json_reimport_reproduces_adjacency(capsys):
    code, out, _ = run(capsys, "export", "GF(25)", "--format", "json", "--out", "-")
    doc = json.loads(out)
    rebuilt = wnc.make_graph([tuple(e) for e in doc["edges"]], len(doc["vertices"]))
    _, _, graph = realize("GF(25)")
    assert rebuilt.adjacency == graph.adjacency


def test_export_csv_gf25_row_count(capsys):
    code, out, _ = run(capsys, "export", "GF(25)", "--format", "csv", "--out", "-")
    _, _, graph = realize("GF(25)")
    lines = out.strip().splitlines()
    assert lines[0] == "source,target"
    assert len(lines) == 1 + wnc.edge_count(graph)
    assert all(line.count(",") == 1 for line in lines)


def test_export_matrix_names_stay_csv_safe(capsys):
    code, out, _ = run(capsys, "export", "M2(Z2)", "--format", "csv", "--out", "-")
    lines = out.strip().splitlines()
    assert all(line.count(",") == 1 for line in lines)


def test_export_determinism(capsys, tmp_path):
    for fmt in ("dot", "json", "csv"):
        a = tmp_path / f"a.{fmt}"
        b = tmp_path / f"b.{fmt}"
        run(capsys, "export", "Z12/nil", "--format", fmt, "--out", str(a))
        run(capsys, "export", "Z12/nil", "--format", fmt, "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


def test_export_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "export", "Z2", "--format", "dot",
                       "--out", str(tmp_path / "no" / "such" / "dir.dot"))
    assert code == 1
    assert "cannot write" in err


def test_verify_z10_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "Z10")
    assert code == 0
    assert "DISAGREE" not in out


def test_verify_gf4_disagrees_with_exit_two(capsys):
    code, out, _ = run(capsys, "verify", "GF(4)")
    assert code == 2
    girth_row = next(l for l in out.splitlines() if l.startswith("girth"))
    assert "DISAGREE" in girth_row and "inf" in girth_row


def test_verify_allow_known_downgrades(capsys):
    code, out, _ = run(capsys, "verify", "GF(4)", "--allow-known-discrepancies")
    assert code == 0
    assert "WARN" in out


def test_verify_theorem_filter(capsys):
    code, out, _ = run(capsys, "verify", "Z10", "--theorems", "four-cliques")
    assert code == 0
    assert "{2,3,7,8}" in out
    assert "girth" not in out


def test_verify_unknown_theorem_id(capsys):
    code, _, err = run(capsys, "verify", "Z10", "--theorems", "no-such-theorem")
    assert code == 1
    assert "unknown theorem id" in err


def test_batch_census(capsys, tmp_path):
    path = tmp_path / "census.csv"
    code, _, _ = run(capsys, "batch", "--zn", "2..30", "--out", str(path))
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "n,wnc_size,is_wnc_ring,girth,diameter,clique_number,vizing_class"
    assert len(lines) == 1 + 29
    rows = {int(l.split(",")[0]): l.split(",") for l in lines[1:]}
    diameter_one = {n for n, row in rows.items() if row[4] == "1"}
    assert diameter_one == {2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27}
    for n in (10, 14, 22, 26):
        assert rows[n][5] == "4"


def test_batch_rejects_bad_ranges(capsys):
    code, _, err = run(capsys, "batch", "--zn", "5..3")
    assert code == 1 and "invalid range" in err
    code, _, err = run(capsys, "batch", "--zn", "1..4")
    assert code == 1
    code, _, err = run(capsys, "batch", "--zn", "nope")
    assert code == 1


def test_batch_stdout_default(capsys):
    code, out, _ = run(capsys, "batch", "--zn", "2..4")
    assert code == 0
    assert out.splitlines()[1].startswith("2,")


def test_cap_flag_is_enforced(capsys):
    code, _, err = run(capsys, "report", "Z100", "--cap", "50")
    assert code == 1
    assert "cap" in err
