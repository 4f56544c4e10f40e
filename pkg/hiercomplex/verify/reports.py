"""Lemma reports and their JSON serialization."""
import json
from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from hiercomplex.core.errors import ErrorCategory, ErrorContext, ErrorSeverity


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class LemmaReport(BaseModel):
    """Outcome of one lemma experiment on one complex."""

    lemma: str
    title: str
    level: int
    verdict: Verdict = Verdict.PASS
    parameters: Dict[str, Any] = Field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    errors: List[Dict[str, Any]] = Field(default_factory=list)

    def fail(
        self,
        message: str,
        category: ErrorCategory = ErrorCategory.PATH,
        **input_data: Any,
    ) -> None:
        """Record a counterexample and mark the report failed."""
        context = ErrorContext(
            operation=self.lemma,
            component="verify",
            severity=ErrorSeverity.HIGH,
            category=category,
            message=message,
            input_data=input_data,
        )
        self.errors.append(context.to_dict())
        self.verdict = Verdict.FAIL

    def inconclusive(self, message: str, **input_data: Any) -> None:
        """Note an exhausted budget; never overrides a failure."""
        context = ErrorContext(
            operation=self.lemma,
            component="verify",
            severity=ErrorSeverity.LOW,
            category=ErrorCategory.SEARCH,
            message=message,
            input_data=input_data,
        )
        self.errors.append(context.to_dict())
        if self.verdict is Verdict.PASS:
            self.verdict = Verdict.INCONCLUSIVE


class SuiteReport(BaseModel):
    level: int
    seed: int
    reports: List[LemmaReport] = Field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.verdict is Verdict.FAIL for r in self.reports)

    def counts(self) -> Dict[str, int]:
        tally = {v.value: 0 for v in Verdict}
        for report in self.reports:
            tally[report.verdict.value] += 1
        return tally

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, two-space indent, trailing newline."""
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        return cls.model_validate_json(text)
