"""Paths on the complex and the flip calculus."""
from hiercomplex.paths.path import (
    Move,
    Path,
    apply_move,
    apply_moves,
    format_moves,
    format_path,
    parse_moves,
    parse_path,
    validate_path,
)
from hiercomplex.paths.moves import check_move, is_null_form, local_moves
from hiercomplex.paths.macro import macro_flip, wiggle_into_pasting
from hiercomplex.paths.patterns import (
    Pattern,
    find_dead_patterns,
    incorrect_segments,
    is_main_edge,
    pattern_of,
)
from hiercomplex.paths.search import (
    ClosureSummary,
    PushKind,
    PushOutcome,
    ReductionOutcome,
    flip_closure,
    push_to_boundary,
    reduce_to_null,
    search_reduction,
)
from hiercomplex.paths.sampling import (
    boundary_walk,
    chain_through,
    concatenate,
    extend_both_ways,
    is_planar,
    macro_chain,
    non_backtracking_walk,
)

__all__ = [
    "Move",
    "Path",
    "apply_move",
    "apply_moves",
    "format_moves",
    "format_path",
    "parse_moves",
    "parse_path",
    "validate_path",
    "check_move",
    "is_null_form",
    "local_moves",
    "macro_flip",
    "wiggle_into_pasting",
    "Pattern",
    "find_dead_patterns",
    "incorrect_segments",
    "is_main_edge",
    "pattern_of",
    "ClosureSummary",
    "PushKind",
    "PushOutcome",
    "flip_closure",
    "push_to_boundary",
    "ReductionOutcome",
    "reduce_to_null",
    "search_reduction",
    "boundary_walk",
    "chain_through",
    "concatenate",
    "extend_both_ways",
    "is_planar",
    "macro_chain",
    "non_backtracking_walk",
]
