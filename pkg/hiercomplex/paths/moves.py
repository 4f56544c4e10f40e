"""Local flips over minimal tiles."""
from typing import AbstractSet, List, Optional, Sequence

from hiercomplex.core.errors import InvalidPathError
from hiercomplex.core.model import Complex
from hiercomplex.paths.path import Move, PathLike, flip_target, validate_path


def is_null_form(complex_: Complex, path: PathLike) -> bool:
    """Whether the path walks some edge there and straight back."""
    vertices = validate_path(complex_, path).vertices
    return any(vertices[i - 1] == vertices[i + 1] for i in range(1, len(vertices) - 1))


def backtrack_positions(vertices: Sequence[int]) -> List[int]:
    return [i for i in range(1, len(vertices) - 1) if vertices[i - 1] == vertices[i + 1]]


def local_moves(complex_: Complex, path: PathLike) -> List[Move]:
    """
    All flips applicable to the path, one per (position, minimal tile).

    Args:
        complex_: Complex the path lives in
        path: Valid path

    Returns:
        Moves sorted by position, then tile id

    Raises:
        InvalidPathError: If the path is invalid
    """
    vertices = validate_path(complex_, path).vertices
    return flips(complex_, vertices)


def flips(
    complex_: Complex, vertices: Sequence[int], allowed: Optional[AbstractSet[int]] = None
) -> List[Move]:
    """Flips on a raw vertex sequence, optionally restricted to the ``allowed`` tiles."""
    moves = []
    for i in range(1, len(vertices) - 1):
        before, middle, after = vertices[i - 1], vertices[i], vertices[i + 1]
        if before == after:
            continue
        for t in complex_.minimal_tiles_at(middle):
            if allowed is not None and t not in allowed:
                continue
            corners = complex_.tiles[t].corners
            j = corners.index(middle)
            if {before, after} != {corners[(j + 1) % 4], corners[(j - 1) % 4]}:
                continue
            opposite = corners[(j + 2) % 4]
            if complex_.has_edge(before, opposite) and complex_.has_edge(opposite, after):
                moves.append(Move(i, t, middle, opposite))
    return moves


def check_move(complex_: Complex, path: PathLike, move: Move) -> bool:
    """Whether ``move`` is a legal flip on ``path``."""
    try:
        flip_target(complex_, validate_path(complex_, path).vertices, move.position, move.tile)
    except InvalidPathError:
        return False
    return True
