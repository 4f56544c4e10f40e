"""Core model: vertices, macro-edges, tiles, planes and the builder."""
from hiercomplex.core.errors import ComplexError
from hiercomplex.core.kinds import ChildPosition, VertexCategory, VertexKind
from hiercomplex.core.model import Complex, MacroEdge, MacroTile, PastingRecord, PastingSite, Vertex
from hiercomplex.core.rules import DEFAULT_RULE_TABLE, RuleTable
from hiercomplex.core.structure import StructuralReport, rotation_order, validate_complex
from hiercomplex.core.builder import ComplexBuilder, build_complex

__all__ = [
    "ComplexError",
    "ChildPosition",
    "VertexCategory",
    "VertexKind",
    "Complex",
    "MacroEdge",
    "MacroTile",
    "PastingRecord",
    "PastingSite",
    "Vertex",
    "DEFAULT_RULE_TABLE",
    "RuleTable",
    "StructuralReport",
    "rotation_order",
    "validate_complex",
    "ComplexBuilder",
    "build_complex",
]
