"""Hierarchical 2-complexes built by subdivision and pasting, with lemma verification."""
from hiercomplex.core import Complex, ComplexBuilder, RuleTable, build_complex, validate_complex

__version__ = "0.1.0"

__all__ = ["Complex", "ComplexBuilder", "RuleTable", "build_complex", "validate_complex"]
