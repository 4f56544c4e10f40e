"""Exception hierarchy and structured error context for the complex toolkit."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class ComplexError(Exception):
    """Base class for every error raised by hiercomplex."""


class TileNotCreatedError(ComplexError, ValueError):
    """A level was requested for a round earlier than the tile's creation."""

    def __init__(self, tile_id: int, round_index: int, created_round: int):
        super().__init__(
            f"tile not yet created: tile {tile_id} created in round {created_round}, "
            f"queried at round {round_index}"
        )
        self.tile_id = tile_id
        self.round_index = round_index


class UnknownVertexError(ComplexError, KeyError):
    def __init__(self, vertex_id: int):
        super().__init__(f"unknown vertex: {vertex_id}")
        self.vertex_id = vertex_id


class UnknownTileError(ComplexError, KeyError):
    def __init__(self, tile_id: int):
        super().__init__(f"unknown tile: {tile_id}")
        self.tile_id = tile_id


class UnknownPlaneError(ComplexError, KeyError):
    def __init__(self, plane_id: int):
        super().__init__(f"unknown plane: {plane_id}")
        self.plane_id = plane_id


class TileNotMinimalError(ComplexError, ValueError):
    """Subdivision was requested for a tile that is not a level-1 tile of the current round."""


class InvalidPathError(ComplexError, ValueError):
    """A vertex sequence is not a path of the complex."""


class PathShapeError(ComplexError, ValueError):
    """A path does not have the shape an operation requires."""


class UndefinedKindError(ComplexError, ValueError):
    """An operation is undefined for the kind of the given vertex."""

    def __init__(self, vertex_id: int, kind_code: str):
        super().__init__(f"undefined-kind: vertex {vertex_id} has kind {kind_code}")
        self.vertex_id = vertex_id


class NotIncidentError(ComplexError, ValueError):
    """An edge is not incident to the given vertex."""


class NoPastingError(ComplexError, LookupError):
    """No pasted tile exists for the requested side."""


class StaleSiteError(ComplexError, RuntimeError):
    """A pasting site was enumerated on an earlier state of the complex."""


class NonPlanarPathError(ComplexError, ValueError):
    """A path does not lie in a single plane."""


class DisconnectedError(ComplexError, RuntimeError):
    """Two vertices are not connected; a built complex never produces this."""


class DocumentError(ComplexError, ValueError):
    """A serialized complex document is malformed."""


class UnknownLemmaError(ComplexError, KeyError):
    def __init__(self, lemma_id: str):
        super().__init__(f"unknown lemma id: {lemma_id}")
        self.lemma_id = lemma_id


class RuleTableError(ComplexError, ValueError):
    """A rule table failed validation."""

    def __init__(self, violations: List[str]):
        super().__init__("invalid rule table: " + "; ".join(violations))
        self.violations = list(violations)


class ErrorSeverity(str, Enum):
    """Severity attached to a reported violation."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(str, Enum):
    """Classification of reported violations."""

    STRUCTURE = "structure"
    CONFIGURATION = "configuration"
    PATH = "path"
    METRIC = "metric"
    SEARCH = "search"


@dataclass
class ErrorContext:
    """Context for a violation found while checking a lemma."""

    operation: str = ""
    component: str = ""
    severity: ErrorSeverity = ErrorSeverity.HIGH
    category: ErrorCategory = ErrorCategory.STRUCTURE
    message: Optional[str] = None
    input_data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "operation": self.operation,
            "component": self.component,
            "severity": self.severity.value,
            "category": self.category.value,
            "message": self.message,
            "input_data": self.input_data,
        }
