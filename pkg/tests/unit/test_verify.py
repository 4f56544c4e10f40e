"""Unit tests for the lemma suite and its reports."""
import pytest

from hiercomplex.config.settings import SuiteSettings
from hiercomplex.core.errors import UnknownLemmaError
from hiercomplex.core.structure import degree_drift, settled_count
from hiercomplex.verify import LemmaSuite, SuiteReport, Verdict, run_suite
from hiercomplex.verify.suite import bound_drift

SMALL_LEMMAS = ["L0", "L1", "L2", "L3", "L4", "L5", "L11", "L12", "L13"]
DEEP_LEMMAS = ["L5", "L6", "L7", "L8", "L9", "L10", "L13"]


@pytest.fixture
def settings() -> SuiteSettings:
    return SuiteSettings(seed=3)


class TestSuiteRun:
    """Running selections of experiments."""

    def test_level2_lemmas_pass(self, complex_level2, settings):
        report = run_suite(complex_level2, SMALL_LEMMAS, settings)
        assert [r.lemma for r in report.reports] == SMALL_LEMMAS
        for lemma in report.reports:
            assert lemma.verdict is Verdict.PASS, lemma.errors
        assert not report.failed
        assert report.counts() == {"pass": len(SMALL_LEMMAS), "fail": 0, "inconclusive": 0}

    def test_selection_in_suite_order(self, complex_level2, settings):
        suite = LemmaSuite(complex_level2, settings)
        assert suite.resolve(["L2", "L0", "L2"]) == ["L0", "L2"]
        assert suite.resolve(None) == list(LemmaSuite.TITLES)

    def test_unknown_lemma(self, complex_level2, settings):
        with pytest.raises(UnknownLemmaError):
            run_suite(complex_level2, ["L0", "L99"], settings)

    def test_deterministic_json(self, complex_level2, settings):
        """Same complex and seed give byte-identical reports."""
        first = run_suite(complex_level2, SMALL_LEMMAS, settings).to_json()
        second = run_suite(complex_level2, SMALL_LEMMAS, settings).to_json()
        assert first == second
        assert SuiteReport.from_json(first).to_json() == first

    def test_workers_do_not_change_report(self, complex_level2, settings):
        serial = run_suite(complex_level2, SMALL_LEMMAS, settings, workers=1).to_json()
        threaded = run_suite(complex_level2, SMALL_LEMMAS, settings, workers=2).to_json()
        assert serial == threaded


class TestLemmaVerdicts:
    def test_level4_structure_and_metric(self, complex_level4, settings):
        """The first pasting round keeps the planes discs and every old distance."""
        report = run_suite(complex_level4, ["L0", "L12"], settings)
        for lemma in report.reports:
            assert lemma.verdict is Verdict.PASS, lemma.errors
        structure = report.reports[0]
        assert structure.details["counts"]["pastings"] == len(complex_level4.pasting_log)

    def test_damaged_complex_fails_structure(self, complex_level2, settings):
        damaged = complex_level2.copy()
        a, b = damaged.graph_edges()[0]
        damaged.remove_graph_edge(a, b)
        report = run_suite(damaged, ["L0"], settings)
        assert report.failed
        lemma = report.reports[0]
        assert lemma.verdict is Verdict.FAIL
        assert all(error["category"] == "structure" for error in lemma.errors)

    def test_macro_flip_witnesses(self, complex_level2, settings):
        """Low-level flips are recorded as replayable witnesses."""
        lemma = LemmaSuite(complex_level2, settings).run_lemma("L3")
        assert lemma.details["flips"] == 4 + 8
        assert lemma.witnesses
        assert all(w["moves"] for w in lemma.witnesses)


class TestDegreeBound:
    """Degree stabilisation and the global bounds of L1."""

    def test_drift_of_settled_vertices(self):
        """Only vertices at least three rounds old are compared, in every consecutive pair."""
        history = [
            {0: 2, 1: 2},
            {0: 2, 1: 3},
            {0: 2, 1: 3},
            {0: 2, 1: 3},
            {0: 3, 1: 4},
            {0: 3, 1: 4},
        ]
        assert degree_drift(history, {0: 0, 1: 0}) == [(3, 0, 2, 3), (3, 1, 3, 4)]
        assert degree_drift(history, {0: 1, 1: 1}) == []
        assert settled_count(history, {0: 0, 1: 0}) == 4

    def test_bound_drift(self):
        degrees = {6: 9, 7: 11}
        multiplicity = {6: 3, 7: 3}
        messages = bound_drift(degrees, multiplicity, 7)
        assert messages == ["max degree changed 9 -> 11 between levels 6 and 7"]
        assert bound_drift(degrees, multiplicity, 6) == []
        assert bound_drift({6: 9, 7: 9}, {6: 3, 7: 4}, 7) == [
            "incoming multiplicity changed 3 -> 4 between levels 6 and 7"
        ]

    def test_reports_every_level(self, complex_level4, settings):
        lemma = LemmaSuite(complex_level4, settings).run_lemma("L1")
        assert lemma.verdict is Verdict.PASS, lemma.errors
        assert lemma.parameters["levels"] == 4
        degrees = lemma.details["max_degree"]
        assert sorted(degrees) == ["1", "2", "3", "4"]
        assert sorted(lemma.details["max_incoming_multiplicity"]) == ["1", "2", "3", "4"]
        values = [degrees[str(level)] for level in range(1, 5)]
        assert values == sorted(values)

    def test_drift_fails_the_lemma(self, complex_level2, settings, monkeypatch):
        monkeypatch.setattr(
            "hiercomplex.verify.suite.degree_drift", lambda history, created: [(3, 0, 2, 3)]
        )
        lemma = LemmaSuite(complex_level2, settings).run_lemma("L1")
        assert lemma.verdict is Verdict.FAIL
        assert lemma.errors[0]["message"] == "vertex 0 changed degree 2 -> 3 in round 4"

    def test_moving_bound_fails_the_lemma(self, complex_level2, monkeypatch):
        """With seven levels requested a moving global bound is a counterexample."""
        monkeypatch.setattr(
            "hiercomplex.verify.suite.bound_drift",
            lambda degrees, multiplicity, top: [f"max degree moved at level {top}"],
        )
        lemma = LemmaSuite(complex_level2, SuiteSettings(seed=3)).run_lemma("L1")
        assert lemma.verdict is Verdict.FAIL
        assert lemma.errors[0]["message"] == "max degree moved at level 2"


class TestDeeperLevels:
    """Reduction and pasting lemmas on complexes with pasting rounds."""

    @pytest.mark.parametrize("fixture", ["complex_level4", "complex_level5"])
    def test_no_counterexamples(self, request, fixture, settings):
        complex_ = request.getfixturevalue(fixture)
        report = run_suite(complex_, DEEP_LEMMAS, settings)
        assert [r.lemma for r in report.reports] == DEEP_LEMMAS
        for lemma in report.reports:
            assert lemma.verdict is not Verdict.FAIL, (lemma.lemma, lemma.errors)
        assert any(lemma.witnesses for lemma in report.reports)

    def test_wiggle_leaves_the_base_plane(self, complex_level5, settings):
        """Mid-side pastings of level-4 sides are reached by a wiggle at level 5."""
        lemma = LemmaSuite(complex_level5, settings).run_lemma("L5")
        assert lemma.verdict is Verdict.PASS, lemma.errors
        assert lemma.details["wiggled"] > 0
        assert len(lemma.witnesses) == lemma.details["wiggled"]
