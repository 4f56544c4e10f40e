"""Validation utilities for configs and command arguments."""
from pathlib import Path
from typing import Any, Dict, Iterable, List


def validate_path_exists(path: Path) -> None:
    """
    Validate that a path exists.

    Args:
        path: Path to validate

    Raises:
        FileNotFoundError: If path doesn't exist
    """
    if not path.exists():
        raise FileNotFoundError(f"Path does not exist: {path}")


def validate_config_structure(config: Any, required_keys: Iterable[str]) -> List[str]:
    """
    Required top-level keys missing from a config mapping.

    Args:
        config: Parsed JSON value
        required_keys: Keys the mapping must contain

    Returns:
        Missing keys, in the order given (all of them if ``config`` is not a mapping)
    """
    if not isinstance(config, dict):
        return list(required_keys)
    return [key for key in required_keys if key not in config]


def validate_level(level: int) -> int:
    """
    Validate a complex level.

    Raises:
        ValueError: If level < 1
    """
    if level < 1:
        raise ValueError(f"Level must be >= 1, got {level}")
    return level


def parse_lemma_selection(text: str) -> List[str]:
    """Split a comma-separated lemma list such as ``L1,L3, L11`` into upper-case ids."""
    return [part.strip().upper() for part in text.split(",") if part.strip()]


def summarize(values: Dict[str, Any]) -> str:
    return ", ".join(f"{k}={v}" for k, v in values.items())
