"""Unit tests for complex documents and DOT export."""
import pytest

from hiercomplex.core.builder import build_complex
from hiercomplex.core.errors import DocumentError, UnknownPlaneError
from hiercomplex.core.rules import RuleTable
from hiercomplex.core.structure import validate_complex
from hiercomplex.results.document import (
    FORMAT_VERSION,
    export_document,
    import_document,
    parse_document,
)
from hiercomplex.results.dot import export_dot, plane_graph
from hiercomplex.results.serializer import ResultSerializer


class TestDocumentRoundTrip:
    """Export, parse and import of complexes."""

    def test_round_trip_is_stable(self, complex_level4):
        text = export_document(complex_level4).to_json()
        restored = import_document(parse_document(text))
        assert export_document(restored).to_json() == text
        assert restored.counts() == complex_level4.counts()

    def test_restored_complex_is_valid(self, complex_level4):
        restored = import_document(export_document(complex_level4))
        report = validate_complex(restored)
        assert report.ok, report.violations
        assert len(restored.pasting_log) == len(complex_level4.pasting_log)

    def test_independent_builds_serialize_identically(self):
        """Two builds from fresh rule tables give byte-identical documents."""
        first = export_document(build_complex(4, RuleTable.default())).to_json()
        second = export_document(build_complex(4, RuleTable.default())).to_json()
        assert first == second

    def test_loaded_document(self, document_path, complex_level2):
        restored = ResultSerializer.load_document(document_path)
        assert restored.graph_edges() == complex_level2.graph_edges()


class TestDocumentErrors:
    def test_unsupported_version(self, complex_level2):
        document = export_document(complex_level2).model_copy(
            update={"version": FORMAT_VERSION + 1}
        )
        with pytest.raises(DocumentError):
            import_document(document)

    def test_malformed_json(self):
        with pytest.raises(DocumentError):
            parse_document("{]")

    def test_dangling_edge(self, complex_level2):
        document = export_document(complex_level2)
        document.graph_edges.append((0, 10_000, 0))
        with pytest.raises(DocumentError):
            import_document(document)


class TestDot:
    def test_plane_graph(self, complex_level2):
        lines = plane_graph(complex_level2, 0)
        assert lines[0] == "graph plane_0 {"
        assert lines[-1] == "}"
        assert len(lines) == 2 + 11 + 16

    def test_all_planes(self, complex_level4):
        text = export_dot(complex_level4)
        assert text.count("graph plane_") == len(complex_level4.planes)

    def test_unknown_plane(self, complex_level2):
        with pytest.raises(UnknownPlaneError):
            plane_graph(complex_level2, 7)
