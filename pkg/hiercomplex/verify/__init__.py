"""Lemma experiments and their reports."""
from typing import Optional, Sequence

from hiercomplex.config.settings import SuiteSettings
from hiercomplex.core.model import Complex
from hiercomplex.verify.reports import LemmaReport, SuiteReport, Verdict
from hiercomplex.verify.suite import LemmaSuite, level_of


def run_suite(
    complex_: Complex,
    selection: Optional[Sequence[str]] = None,
    settings: Optional[SuiteSettings] = None,
    workers: Optional[int] = None,
) -> SuiteReport:
    """Run the selected lemma experiments (all of them when ``selection`` is empty)."""
    return LemmaSuite(complex_, settings).run(selection, workers)


__all__ = [
    "LemmaReport",
    "SuiteReport",
    "Verdict",
    "LemmaSuite",
    "level_of",
    "run_suite",
]
