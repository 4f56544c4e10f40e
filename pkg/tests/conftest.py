"""
Pytest configuration and fixtures for hiercomplex tests.

Provides:
- Built complexes of levels 2 to 5 (built once per session, never mutated by tests)
- The default rule table
- A level-2 document written to a temporary directory
"""
import os
from pathlib import Path

import pytest

from hiercomplex.config import settings as settings_module
from hiercomplex.core.builder import ComplexBuilder, build_complex
from hiercomplex.core.model import Complex
from hiercomplex.core.rules import RuleTable
from hiercomplex.results.serializer import ResultSerializer


@pytest.fixture(scope="session")
def rule_table() -> RuleTable:
    """Default subdivision rule table."""
    return RuleTable.default()


@pytest.fixture(scope="session")
def complex_level2(rule_table) -> Complex:
    return build_complex(2, rule_table)


@pytest.fixture(scope="session")
def complex_level3(rule_table) -> Complex:
    return build_complex(3, rule_table)


@pytest.fixture(scope="session")
def complex_level4(rule_table) -> Complex:
    return build_complex(4, rule_table)


@pytest.fixture(scope="session")
def complex_level5(rule_table) -> Complex:
    return build_complex(5, rule_table)


@pytest.fixture(scope="session")
def pure_level4(rule_table) -> Complex:
    """Level-4 macrotile without its pasting round."""
    return ComplexBuilder(rule_table, with_pastings=False).build(4)


@pytest.fixture
def document_path(tmp_path, complex_level2) -> Path:
    """Level-2 document on disk."""
    path = tmp_path / "complex_level2.json"
    ResultSerializer.save_document(complex_level2, path)
    return path


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Drop the cached settings so environment changes in a test take effect."""
    monkeypatch.setattr(settings_module, "_settings", None)
    for name in list(os.environ):
        if name.startswith("HIERCOMPLEX_"):
            monkeypatch.delenv(name)
