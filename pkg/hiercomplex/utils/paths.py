"""Output path helpers."""
from pathlib import Path
from typing import Optional


def ensure_dir(path: Path) -> None:
    """Ensure directory exists, create if needed."""
    path.mkdir(parents=True, exist_ok=True)


def resolve_output(out: Optional[str], default_name: str) -> Optional[Path]:
    """
    Resolve an ``--out`` argument.

    A directory (existing, or given with a trailing slash) gets ``default_name`` appended;
    None means standard output. Parent directories are created.
    """
    if out is None or out == "-":
        return None
    path = Path(out)
    if out.endswith(("/", "\\")) or path.is_dir():
        path = path / default_name
    ensure_dir(path.parent)
    return path


def write_text(text: str, out: Optional[Path]) -> None:
    """Write to a file, or to standard output when ``out`` is None."""
    if out is None:
        print(text, end="")
        return
    out.write_text(text, encoding="utf-8")
