"""
Tests de la CLI: sorties JSON, codes de sortie, corpus reproductibles et cache.
"""

import json
import shutil

import pytest

from src.lab import checks
from src.lab.models import CheckReport, Verdict
from src.main import dispatch
from src.output.corpus_writer import MANIFEST_NAME
from tests.conftest import DATA_DIR

TRIANGLE = str(DATA_DIR / "triangle.ideal")
MAXIMAL = str(DATA_DIR / "maximal_ideal.ideal")


def json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture
def small_dir(tmp_path):
    """Répertoire contenant le triangle et l'idéal maximal."""
    folder = tmp_path / "small"
    folder.mkdir()
    shutil.copy(DATA_DIR / "triangle.ideal", folder / "a.ideal")
    shutil.copy(DATA_DIR / "maximal_ideal.ideal", folder / "b.ideal")
    return folder


class TestComputations:

    def test_betti(self, capsys):
        assert dispatch(["betti", TRIANGLE]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["field"] == "q"
        assert {"i": 2, "deg": [1, 1, 1], "beta": 2} in payload["entries"]

    def test_summary(self, capsys):
        assert dispatch(["summary", str(DATA_DIR / "i1.ideal")]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pdim_quotient"] == 4
        assert payload["depth_quotient"] == 1

    def test_lcm(self, capsys):
        assert dispatch(["lcm", TRIANGLE, "--field", "fp:2"]) == 0
        assert json.loads(capsys.readouterr().out)["size"] == 5

    def test_sdepth(self, capsys):
        assert dispatch(["sdepth", TRIANGLE, "--side", "quotient"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["sdepth"] == 1
        assert payload["certificate"]["value"] == 1

    @pytest.mark.slow
    def test_sdepth_of_i1(self, capsys):
        assert dispatch(["sdepth", str(DATA_DIR / "i1.ideal")]) == 0
        assert json.loads(capsys.readouterr().out)["sdepth"] == 1

    def test_hilbert(self, capsys):
        assert dispatch(["hilbert", TRIANGLE, "--source", "taylor"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["numerator"] == "1 - t_y*t_z - t_x*t_z - t_x*t_y + 2*t_x*t_y*t_z"

    def test_hilbert_shape(self, capsys):
        code = dispatch(["hilbert-shape", str(DATA_DIR / "i1.ideal"), str(DATA_DIR / "i2.ideal")])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["difference"] == [
            {"deg": [2, 2, 2, 2, 0], "alternating_sum": 0},
            {"deg": [2, 2, 2, 2, 1], "alternating_sum": 0},
        ]

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "out" / "scarf.json"
        assert dispatch(["scarf", TRIANGLE, "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["field"] is None


class TestChecks:

    def test_onestep_single_variable(self, capsys):
        assert dispatch(["check-onestep", TRIANGLE, "--var", "z"]) == 0
        reports = json_lines(capsys.readouterr().out)
        assert len(reports) == 1
        assert reports[0]["check"] == "onestep"
        assert reports[0]["verdict"] == "not-applicable"

    def test_onestep_all_variables(self, capsys):
        assert dispatch(["check-onestep", TRIANGLE]) == 0
        reports = json_lines(capsys.readouterr().out)
        assert sorted(r["inputs"]["variable"] for r in reports) == ["x", "y", "z"]

    def test_directory_input(self, small_dir, capsys):
        assert dispatch(["check-bounds", str(small_dir)]) == 0
        reports = json_lines(capsys.readouterr().out)
        assert len(reports) == 2
        assert all(r["verdict"] == "holds" for r in reports)

    def test_table_format(self, capsys):
        assert dispatch(["mb-chain", str(DATA_DIR / "x2xyy2z.ideal"), "--format", "table"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("CHECK")
        assert "chain_length=1" in lines[1]

    def test_reduction_on_top(self, capsys):
        assert dispatch(["check-reduction", TRIANGLE, "--element", "x*y*z"]) == 0
        report = json_lines(capsys.readouterr().out)[0]
        assert report["quantities"]["reason"] == "not-a-lattice"

    def test_reduction_element_outside_lattice(self):
        assert dispatch(["check-reduction", TRIANGLE, "--element", "x^2"]) == 1

    def test_conjecture_on_directory(self, small_dir, capsys):
        assert dispatch(["check-conjecture", str(small_dir), "--field", "q", "--field", "fp:2"]) == 0
        reports = json_lines(capsys.readouterr().out)
        assert sorted(r["check"] for r in reports) == ["conjecture-scan", "conjecture-scan", "field-sensitivity"]

    def test_violation_exit_code(self, monkeypatch, capsys):
        def violated(ideal, context=None):
            return CheckReport(
                "stanley-bounds", {"fingerprints": [ideal.fingerprint]},
                verdict=Verdict.VIOLATED, witness={"failed": ["quotient"]},
            )

        monkeypatch.setattr(checks, "stanley_bounds_check", violated)
        assert dispatch(["check-bounds", TRIANGLE]) == 3
        assert "violation" in capsys.readouterr().err

    def test_pair_without_surjection_is_not_a_budget_failure(self, tmp_path, capsys):
        two = tmp_path / "two.ideal"
        two.write_text("vars x y z\ngen x\ngen y\n", encoding="utf-8")
        assert dispatch(["check-surjection", str(two), TRIANGLE]) == 0
        captured = capsys.readouterr()
        report = json_lines(captured.out)[0]
        assert report["verdict"] == "unknown"
        assert report["quantities"]["budget_exhausted"] is False
        assert "Budget" not in captured.err
        assert "sans conclusion" in captured.err


class TestReplay:

    def test_replay_archived_reports(self, small_dir, tmp_path, capsys):
        archive = tmp_path / "reports.jsonl"
        assert dispatch(["check-length", str(small_dir), "--out", str(archive)]) == 0
        capsys.readouterr()
        assert dispatch(["replay", str(archive)]) == 0
        assert capsys.readouterr().out == archive.read_text(encoding="utf-8")

    def test_unreadable_archive(self, tmp_path):
        archive = tmp_path / "reports.jsonl"
        archive.write_text("{pas du json\n", encoding="utf-8")
        assert dispatch(["replay", str(archive)]) == 1

    def test_scan_cannot_be_replayed(self, small_dir, tmp_path):
        archive = tmp_path / "scan.jsonl"
        assert dispatch(["check-conjecture", str(small_dir), "--out", str(archive)]) == 0
        assert dispatch(["replay", str(archive)]) == 1


class TestExitCodes:

    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate", TRIANGLE],
        ["betti", TRIANGLE, "--field", "fp:4"],
        ["betti", TRIANGLE, "--field", "q", "--field", "fp:2"],
        ["sdepth", TRIANGLE, "--side", "module"],
        ["betti", "does/not/exist.ideal"],
        ["check-onestep", TRIANGLE, "--var", "w"],
        ["gen-corpus", "--count", "2"],
    ])
    def test_usage_errors(self, argv):
        assert dispatch(argv) == 1

    def test_bad_ideal_file(self, tmp_path):
        broken = tmp_path / "broken.ideal"
        broken.write_text("gen x\nvars x\n", encoding="utf-8")
        assert dispatch(["betti", str(broken)]) == 1

    def test_help(self):
        assert dispatch(["--help"]) == 0

    def test_budget_exhausted(self, capsys):
        assert dispatch(["sdepth", MAXIMAL, "--side", "ideal", "--budget", "1"]) == 2
        assert "Budget" in capsys.readouterr().err

    def test_scan_with_exhausted_budget(self, small_dir, capsys):
        assert dispatch(["check-conjecture", str(small_dir), "--budget", "1"]) == 2
        report = json_lines(capsys.readouterr().out)[0]
        assert report["verdict"] == "unknown"


class TestCorpus:

    ARGS = ["--count", "4", "--vars", "3", "--gens", "3", "--squarefree", "--seed", "7"]

    def test_same_seed_same_files(self, tmp_path):
        first, second = tmp_path / "a", tmp_path / "b"
        assert dispatch(["gen-corpus", *self.ARGS, "--out", str(first)]) == 0
        assert dispatch(["gen-corpus", *self.ARGS, "--out", str(second)]) == 0
        names = sorted(p.name for p in first.iterdir())
        assert names == sorted(p.name for p in second.iterdir())
        for name in names:
            assert (first / name).read_text() == (second / name).read_text()

    def test_manifest(self, tmp_path):
        assert dispatch(["gen-corpus", *self.ARGS, "--out", str(tmp_path)]) == 0
        manifest = json.loads((tmp_path / MANIFEST_NAME).read_text())
        assert manifest["seed"] == 7
        assert [m["file"] for m in manifest["members"]] == [f"member-{i:04d}.ideal" for i in range(4)]

    def test_scan_generated_corpus(self, tmp_path, capsys):
        assert dispatch(["gen-corpus", *self.ARGS, "--out", str(tmp_path)]) == 0
        assert dispatch(["check-conjecture", str(tmp_path)]) == 0
        report = json_lines(capsys.readouterr().out)[0]
        assert report["quantities"]["processed"] == report["quantities"]["members"]

    def test_random_scan_without_corpus(self, capsys):
        assert dispatch(["check-conjecture", *self.ARGS]) == 0
        report = json_lines(capsys.readouterr().out)[0]
        assert report["check"] == "conjecture-scan"


class TestCache:

    def test_reports_are_archived(self, tmp_path, capsys):
        db = tmp_path / "results.db"
        assert dispatch(["check-bounds", TRIANGLE, "--cache", str(db)]) == 0
        assert dispatch(["check-bounds", TRIANGLE, "--cache", str(db)]) == 0
        capsys.readouterr()
        assert dispatch(["--db-stats", str(db)]) == 0
        err = capsys.readouterr().err
        assert "Rapports archivés: 2" in err
        assert "Résultats sdepth en cache: 2" in err
