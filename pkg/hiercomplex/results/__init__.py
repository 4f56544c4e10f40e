"""Documents, DOT export and report files."""
from hiercomplex.results.document import (
    FORMAT_VERSION,
    ComplexDocument,
    export_document,
    import_document,
    parse_document,
)
from hiercomplex.results.dot import export_dot
from hiercomplex.results.serializer import ResultSerializer, lemma_verdicts

__all__ = [
    "FORMAT_VERSION",
    "ComplexDocument",
    "export_document",
    "import_document",
    "parse_document",
    "export_dot",
    "ResultSerializer",
    "lemma_verdicts",
]
