"""Reading and writing documents, reports, move files and scan tables."""
import logging
from pathlib import Path
from typing import Iterable, List, Optional

import pandas as pd

from hiercomplex.core.model import Complex
from hiercomplex.paths.path import Move, format_moves
from hiercomplex.results.document import (
    ComplexDocument,
    export_document,
    import_document,
    parse_document,
)
from hiercomplex.utils.paths import write_text
from hiercomplex.utils.validation import summarize, validate_path_exists
from hiercomplex.verify.reports import SuiteReport

logger = logging.getLogger(__name__)


class ResultSerializer:
    """File formats of the command-line tool. ``out=None`` always means standard output."""

    @staticmethod
    def save_document(complex_: Complex, out: Optional[Path]) -> ComplexDocument:
        """
        Write a complex as a JSON document.

        Args:
            complex_: Complex to export
            out: Destination file, or None for stdout

        Returns:
            The written document
        """
        document = export_document(complex_)
        write_text(document.to_json(), out)
        if out is not None:
            logger.info("Saved level-%d document to %s", complex_.round + 1, out)
        return document

    @staticmethod
    def load_document(path: Path) -> Complex:
        """
        Read a JSON document and rebuild its complex.

        Raises:
            FileNotFoundError: If the file doesn't exist
            DocumentError: If the document is malformed
        """
        validate_path_exists(path)
        return import_document(parse_document(path.read_text(encoding="utf-8")))

    @staticmethod
    def report_text(report: SuiteReport) -> str:
        """Plain-text rendering: one block per lemma with parameters, verdict and witness count."""
        counts = report.counts()
        lines = [f"level {report.level}, seed {report.seed}: {summarize(counts)}", ""]
        for lemma in report.reports:
            lines.append(f"[{lemma.lemma}] {lemma.title}")
            lines.append(f"  verdict: {lemma.verdict.value}")
            if lemma.parameters:
                lines.append(f"  params: {summarize(lemma.parameters)}")
            lines.append(f"  witnesses: {len(lemma.witnesses)}")
            for error in lemma.errors:
                lines.append(f"  {error['severity']}: {error['message']}")
            lines.append("")
        return "\n".join(lines)

    @staticmethod
    def save_report(report: SuiteReport, out: Optional[Path], as_text: bool = False) -> None:
        """Write a suite report as canonical JSON (or plain text)."""
        text = ResultSerializer.report_text(report) if as_text else report.to_json()
        write_text(text, out)

    @staticmethod
    def save_moves(moves: Iterable[Move], out: Optional[Path]) -> None:
        write_text(format_moves(moves), out)

    @staticmethod
    def save_table(table: pd.DataFrame, out: Optional[Path]) -> None:
        """Write a scan table as tab-separated text."""
        write_text(table.to_csv(sep="\t", index=False), out)


def lemma_verdicts(report: SuiteReport) -> List[str]:
    return [f"{r.lemma}={r.verdict.value}" for r in report.reports]
