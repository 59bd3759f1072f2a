"""
Tests des sources de corpus et de l'émission des rapports.
"""

import io
import json

import pytest

from src.algebra import IdealSyntaxError
from src.inputs import CorpusParameters, IdealFileInput, InputError, InputRegistry, RandomCorpusInput
from src.lab import check_onestep, length_bounds_check
from src.output import ReportFormat, emit_report, gen_corpus, report_lines
from tests.conftest import DATA_DIR


class TestIdealFileInput:

    def test_single_file(self):
        with IdealFileInput(DATA_DIR / "triangle.ideal") as source:
            ideals = source.fetch_ideals()
        assert len(ideals) == 1
        assert ideals[0].format() == "(y*z, x*z, x*y)"

    def test_directory_is_read_in_name_order(self, tmp_path):
        (tmp_path / "b.ideal").write_text("vars x\ngen x\n")
        (tmp_path / "a.ideal").write_text("vars x y\ngen x*y\n")
        (tmp_path / "notes.txt").write_text("ignoré")
        with IdealFileInput(tmp_path) as source:
            assert [i.n for i in source.fetch_ideals()] == [2, 1]
            assert len(source.fetch_ideals(limit=1)) == 1

    def test_missing_path(self, tmp_path):
        with pytest.raises(InputError):
            with IdealFileInput(tmp_path / "absent.ideal"):
                pass

    def test_empty_directory(self, tmp_path):
        source = IdealFileInput(tmp_path)
        assert not source.connect()
        assert "Aucun fichier" in source.last_error

    def test_syntax_error_in_member(self, tmp_path):
        (tmp_path / "bad.ideal").write_text("gen x\n")
        with IdealFileInput(tmp_path) as source:
            with pytest.raises(IdealSyntaxError):
                source.fetch_ideals()

    def test_fetch_before_connect(self):
        with pytest.raises(InputError):
            IdealFileInput(DATA_DIR).fetch_ideals()


class TestRandomCorpusInput:

    def test_registry(self):
        assert {"ideal_file", "random"} <= set(InputRegistry.list_sources())
        source = InputRegistry.create("random", params=CorpusParameters(3, 3, 2), seed=5)
        assert isinstance(source, RandomCorpusInput)
        assert InputRegistry.create("inconnue") is None

    def test_reproducible(self):
        params = CorpusParameters(5, 4, 3, max_exp=2)
        with RandomCorpusInput(params, seed=3) as first, RandomCorpusInput(params, seed=3) as second:
            assert first.fetch_ideals() == second.fetch_ideals()

    def test_invalid_parameters(self):
        with pytest.raises(InputError):
            with RandomCorpusInput(CorpusParameters(3, 0, 2)):
                pass

    def test_manifest_matches_members(self, tmp_path):
        params = CorpusParameters(3, 3, 2, squarefree=True)
        manifest = gen_corpus(params, 11, tmp_path)
        assert manifest["parameters"]["squarefree"] is True
        with IdealFileInput(tmp_path) as source:
            prints = [i.fingerprint for i in source.fetch_ideals()]
        assert prints == [m["fingerprint"] for m in manifest["members"]]


class TestReportWriter:

    def test_lines_are_sorted_and_parseable(self, triangle, maximal_ideal):
        reports = [length_bounds_check(maximal_ideal), length_bounds_check(triangle)]
        lines = report_lines(reports)
        prints = [json.loads(line)["inputs"]["fingerprints"][0] for line in lines]
        assert prints == sorted(prints)

    def test_table(self, triangle):
        stream = io.StringIO()
        count = emit_report([check_onestep(triangle, "z")], ReportFormat.TABLE, stream)
        lines = stream.getvalue().splitlines()
        assert count == 1
        assert lines[0].split()[:3] == ["CHECK", "FINGERPRINT", "VERDICT"]
        assert "not-applicable" in lines[1]
        assert "betti_isomorphic=False" in lines[1]

    def test_empty_report_list(self):
        stream = io.StringIO()
        assert emit_report([], "json", stream) == 0
        assert stream.getvalue() == ""

    def test_empty_table(self):
        stream = io.StringIO()
        assert emit_report([], ReportFormat.TABLE, stream) == 0
        assert stream.getvalue() == ""

    def test_other_seed_other_corpus(self, tmp_path):
        params = CorpusParameters(3, 3, 3)
        first = gen_corpus(params, 7, tmp_path / "a")["members"]
        second = gen_corpus(params, 8, tmp_path / "b")["members"]
        assert [m["fingerprint"] for m in first] != [m["fingerprint"] for m in second]
