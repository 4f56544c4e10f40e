"""Bounded breadth-first searches over the flip relation."""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Callable, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from hiercomplex.core.errors import InvalidPathError
from hiercomplex.core.model import Complex
from hiercomplex.paths.macro import macro_flip
from hiercomplex.paths.moves import backtrack_positions, flips, is_null_form
from hiercomplex.paths.path import Move, Path, PathLike, apply_move, apply_moves, validate_path
from hiercomplex.paths.patterns import has_incorrect_segment

logger = logging.getLogger(__name__)

Vertices = Tuple[int, ...]
Step = Tuple[Vertices, Tuple[Move, ...]]


class ClosureSummary(BaseModel):
    """Outcome of exploring the flip closure of one path."""

    visited: int
    null_found: bool = False
    incorrect_found: bool = False
    exhausted: bool = False
    target_found: bool = False
    depth: int = 0
    witness: List[int] = Field(default_factory=list)
    witness_moves: List[Tuple[int, int]] = Field(default_factory=list)


class PushKind(str, Enum):
    NULL = "null"
    BOUNDARY = "boundary"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class PushOutcome:
    kind: PushKind
    moves: Tuple[Move, ...] = ()
    final: Optional[Path] = None
    visited: int = 0


@dataclass
class _SearchState:
    parents: Dict[Vertices, Optional[Tuple[Vertices, Tuple[Move, ...]]]] = field(
        default_factory=dict
    )
    truncated: bool = False
    processed: int = 0
    depth: int = 0


def _bfs(
    start: Vertices,
    budget: int,
    expand: Callable[[Vertices], Iterator[Step]],
    stop: Callable[[Vertices], bool],
) -> Tuple[Optional[Vertices], _SearchState]:
    """Breadth-first search until ``stop`` holds or the space or the ``budget`` runs out."""
    state = _SearchState(parents={start: None})
    queue = deque([(start, 0)])
    while queue:
        current, depth = queue.popleft()
        state.processed += 1
        state.depth = max(state.depth, depth)
        if stop(current):
            return current, state
        for nxt, moves in expand(current):
            if nxt in state.parents:
                continue
            if len(state.parents) >= budget:
                state.truncated = True
                continue
            state.parents[nxt] = (current, moves)
            queue.append((nxt, depth + 1))
    return None, state


def _trace(state: _SearchState, end: Vertices) -> List[Move]:
    moves: List[Move] = []
    node: Optional[Vertices] = end
    while state.parents.get(node) is not None:
        previous, step = state.parents[node]
        moves[:0] = step
        node = previous
    return moves


def _local_expander(
    complex_: Complex, allowed: Optional[AbstractSet[int]] = None
) -> Callable[[Vertices], Iterator[Step]]:
    def expand(current: Vertices) -> Iterator[Step]:
        for move in flips(complex_, current, allowed):
            nxt = list(current)
            nxt[move.position] = move.replacement
            yield tuple(nxt), (move,)

    return expand


def macro_neighbours(complex_: Complex, current: Vertices) -> Iterator[Step]:
    """Half-perimeter flips of subdivided tiles applicable to a path, expanded to local moves."""
    index = complex_.marked_index()
    for i, v in enumerate(current):
        for tile_id, s in index.get(v, ()):
            end = i + 2 * complex_.side_length(tile_id)
            if end >= len(current):
                continue
            window = list(current[i : end + 1])
            forward = complex_.half_perimeter(tile_id, s)
            backward = complex_.half_perimeter(tile_id, (s + 4) % 8)[::-1]
            if window != forward and window != backward:
                continue
            moves = tuple(m.shifted(i) for m in macro_flip(complex_, window, tile_id))
            nxt = list(current)
            for move in moves:
                nxt = list(apply_move(complex_, nxt, move).vertices)
            yield tuple(nxt), moves


def flip_closure(
    complex_: Complex,
    path: PathLike,
    budget: int = 10000,
    target: Optional[PathLike] = None,
    allowed: Optional[AbstractSet[int]] = None,
) -> ClosureSummary:
    """
    Explore the flip closure of a path breadth first.

    The search stops early when a null form or an incorrect segment turns up.

    Args:
        complex_: Complex the path lives in
        path: Start path
        budget: Maximum number of distinct paths visited
        target: Optional path whose presence in the closure is reported
        allowed: Restrict flips to these minimal tiles

    Returns:
        ClosureSummary; ``exhausted`` means the whole closure was explored
    """
    start = validate_path(complex_, path).vertices
    goal = validate_path(complex_, target).vertices if target is not None else None
    flags = {"null": False, "incorrect": False, "target": False}

    def stop(current: Vertices) -> bool:
        if current == goal:
            flags["target"] = True
        if backtrack_positions(current):
            flags["null"] = True
            return True
        if has_incorrect_segment(complex_, current):
            flags["incorrect"] = True
            return True
        return False

    found, state = _bfs(start, budget, _local_expander(complex_, allowed), stop)
    summary = ClosureSummary(
        visited=len(state.parents),
        null_found=flags["null"],
        incorrect_found=flags["incorrect"],
        exhausted=found is None and not state.truncated,
        target_found=flags["target"],
        depth=state.depth,
    )
    if found is not None:
        summary.witness = list(found)
        summary.witness_moves = [(m.position, m.tile) for m in _trace(state, found)]
    if state.truncated and found is None:
        logger.warning("Flip closure hit its budget of %d paths", budget)
    return summary


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of a bounded null-form search; ``exhausted`` means no reduction exists."""

    moves: Optional[Tuple[Move, ...]]
    visited: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.moves is not None


def search_reduction(
    complex_: Complex,
    path: PathLike,
    budget: int = 20000,
    allowed: Optional[AbstractSet[int]] = None,
    macro: bool = True,
) -> ReductionOutcome:
    """
    Search for a move sequence turning the path into a null form.

    Args:
        complex_: Complex the path lives in
        path: Start path
        budget: Maximum number of distinct paths visited
        allowed: Restrict local flips to these minimal tiles
        macro: Also use half-perimeter flips of subdivided tiles as single steps

    Returns:
        ReductionOutcome with the verified move sequence when one was found
    """
    start = validate_path(complex_, path).vertices
    local = _local_expander(complex_, allowed)

    def expand(current: Vertices) -> Iterator[Step]:
        yield from local(current)
        if macro:
            yield from macro_neighbours(complex_, current)

    found, state = _bfs(start, budget, expand, lambda p: bool(backtrack_positions(p)))
    if found is None:
        if state.truncated:
            logger.warning(
                "Reduction of a length-%d path hit its budget of %d", len(start) - 1, budget
            )
        return ReductionOutcome(None, len(state.parents), not state.truncated)
    moves = _trace(state, found)
    if not is_null_form(complex_, apply_moves(complex_, start, moves)):
        raise InvalidPathError("Reduction replay does not end in a null form")
    return ReductionOutcome(tuple(moves), len(state.parents), False)


def reduce_to_null(
    complex_: Complex,
    path: PathLike,
    budget: int = 20000,
    allowed: Optional[AbstractSet[int]] = None,
    macro: bool = True,
) -> Optional[List[Move]]:
    """Verified move sequence into a null form, or None if none was found within the budget."""
    outcome = search_reduction(complex_, path, budget, allowed, macro)
    return list(outcome.moves) if outcome.moves is not None else None


def push_to_boundary(
    complex_: Complex, path: PathLike, tile_id: int, budget: int = 20000
) -> PushOutcome:
    """
    Flip a path inside a macrotile onto the tile boundary, or into a null form.

    Only minimal tiles below ``tile_id`` are used.

    Raises:
        InvalidPathError: If an endpoint is off the tile boundary or the path leaves the tile
    """
    start = validate_path(complex_, path).vertices
    boundary = complex_.boundary_vertices(tile_id)
    if start[0] not in boundary or start[-1] not in boundary:
        raise InvalidPathError(f"Path endpoints are not on the boundary of tile {tile_id}")
    inside = complex_.tile_vertices(tile_id)
    if any(v not in inside for v in start):
        raise InvalidPathError(f"Path leaves tile {tile_id}")

    kinds: Dict[str, PushKind] = {}

    def stop(current: Vertices) -> bool:
        if backtrack_positions(current):
            kinds["kind"] = PushKind.NULL
            return True
        if all(v in boundary for v in current):
            kinds["kind"] = PushKind.BOUNDARY
            return True
        return False

    expand = _local_expander(complex_, complex_.descendants_minimal(tile_id))
    found, state = _bfs(start, budget, expand, stop)
    if found is None:
        logger.warning(
            "Push to boundary of tile %d ran out after %d paths", tile_id, state.processed
        )
        return PushOutcome(PushKind.EXHAUSTED, visited=len(state.parents))
    return PushOutcome(
        kinds["kind"],
        moves=tuple(_trace(state, found)),
        final=Path(found),
        visited=len(state.parents),
    )
