"""Tests for the command-line entrypoint."""
import json

import pandas as pd

from hiercomplex.run_complex import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main


class TestBuild:
    def test_build_writes_document(self, tmp_path):
        out = tmp_path / "level2.json"
        assert main(["build", "--level", "2", "--out", str(out)]) == EXIT_OK
        document = json.loads(out.read_text())
        assert len(document["vertices"]) == 11
        assert len(document["graph_edges"]) == 16

    def test_build_into_directory(self, tmp_path):
        out = tmp_path / "results"
        out.mkdir()
        assert main(["build", "--level", "1", "--out", str(out)]) == EXIT_OK
        assert (out / "complex_level1.json").exists()

    def test_invalid_level(self, tmp_path, capsys):
        assert main(["build", "--level", "0", "--out", str(tmp_path / "x.json")]) == EXIT_ERROR
        assert "Error:" in capsys.readouterr().err

    def test_missing_rules_file(self, tmp_path):
        code = main(["build", "--level", "2", "--rules", str(tmp_path / "absent.json")])
        assert code == EXIT_ERROR


class TestCheck:
    def test_check_document(self, document_path, tmp_path):
        out = tmp_path / "report.json"
        code = main(["check", str(document_path), "--lemmas", "L0,L2", "--out", str(out)])
        assert code == EXIT_OK
        report = json.loads(out.read_text())
        assert [r["lemma"] for r in report["reports"]] == ["L0", "L2"]
        assert all(r["verdict"] == "pass" for r in report["reports"])

    def test_check_text_report(self, tmp_path):
        out = tmp_path / "report.txt"
        code = main(["check", "--level", "2", "--lemmas", "l0", "--text", "--out", str(out)])
        assert code == EXIT_OK
        assert "[L0] Structure" in out.read_text()

    def test_damaged_document_fails(self, document_path, tmp_path):
        """A document missing one graph edge fails the structure check."""
        document = json.loads(document_path.read_text())
        document["graph_edges"] = document["graph_edges"][1:]
        damaged = tmp_path / "damaged.json"
        damaged.write_text(json.dumps(document))
        out = tmp_path / "report.json"
        assert main(["check", str(damaged), "--lemmas", "L0", "--out", str(out)]) == EXIT_FAIL

    def test_unknown_lemma(self, document_path, capsys):
        assert main(["check", str(document_path), "--lemmas", "L42"]) == EXIT_ERROR
        assert "L42" in capsys.readouterr().err

    def test_no_source(self):
        assert main(["check", "--lemmas", "L0"]) == EXIT_ERROR

    def test_malformed_document(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"version": 1}')
        assert main(["check", str(bad), "--lemmas", "L0"]) == EXIT_ERROR


class TestExports:
    def test_export_dot(self, document_path, tmp_path):
        out = tmp_path / "plane.dot"
        assert main(["export-dot", str(document_path), "--out", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "graph plane_0 {"
        assert sum("[label=" in line for line in lines) == 11
        assert sum(" -- " in line for line in lines) == 16

    def test_unknown_plane(self, document_path):
        assert main(["export-dot", str(document_path), "--plane", "5"]) == EXIT_ERROR

    def test_geodesics_table(self, document_path, tmp_path):
        out = tmp_path / "scan.tsv"
        code = main(
            ["geodesics", str(document_path), "--samples", "5", "--seed", "1", "--out", str(out)]
        )
        assert code == EXIT_OK
        table = pd.read_csv(out, sep="\t")
        assert list(table.columns) == ["source", "target", "distance", "spread", "ratio"]
        assert list(table["distance"][:2]) == [2, 4]


class TestReduce:
    def test_reduce_boundary_walk(self, document_path, complex_level2, tmp_path):
        root = complex_level2.tiles[0]
        walk = [root.named_point(n) for n in ("UL", "U", "UR", "R", "LR", "D")]
        path_file = tmp_path / "walk.txt"
        path_file.write_text(" ".join(str(v) for v in walk) + "\n")
        out = tmp_path / "moves.txt"
        code = main(["reduce", str(document_path), "--path", str(path_file), "--out", str(out)])
        assert code == EXIT_OK
        assert out.read_text().strip()

    def test_geodesic_not_reducible(self, document_path, complex_level2, tmp_path):
        path_file = tmp_path / "geodesic.txt"
        path_file.write_text(" ".join(map(str, complex_level2.half_perimeter(0, 0))) + "\n")
        code = main(["reduce", str(document_path), "--path", str(path_file)])
        assert code == EXIT_FAIL
