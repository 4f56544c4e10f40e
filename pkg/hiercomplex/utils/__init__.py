"""Shared helpers: argument validation, output paths and logging setup."""
from hiercomplex.utils.logging_setup import setup_logging
from hiercomplex.utils.paths import ensure_dir, resolve_output, write_text
from hiercomplex.utils.validation import (
    parse_lemma_selection,
    validate_config_structure,
    validate_level,
    validate_path_exists,
)

__all__ = [
    "setup_logging",
    "ensure_dir",
    "resolve_output",
    "write_text",
    "parse_lemma_selection",
    "validate_config_structure",
    "validate_level",
    "validate_path_exists",
]
