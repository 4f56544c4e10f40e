"""
Macro transformations.

A path along half the perimeter of a macrotile (two adjacent sides corner to corner, or
midpoint to opposite midpoint through two corners) is rewritten into the other half by
flipping the six children one after another, recursively down to minimal tiles.
"""
import logging
from typing import Dict, List, Sequence, Tuple

from hiercomplex.core.errors import NoPastingError, PathShapeError
from hiercomplex.core.kinds import ChildPosition
from hiercomplex.core.model import Complex
from hiercomplex.core.rules import CHILD_ORDER
from hiercomplex.paths.path import Move, PathLike, apply_move, validate_path

logger = logging.getLogger(__name__)

_LU = ChildPosition.LEFT_UPPER
_M = ChildPosition.MIDDLE
_RU = ChildPosition.RIGHT_UPPER
_RL = ChildPosition.RIGHT_LOWER
_LO = ChildPosition.LOWER
_LLO = ChildPosition.LEFT_LOWER

# Child flips for the half perimeter starting at marked point s (0 = UL, 1 = U, ...).
# Each step flips a child across the named parent point, which is one of its corners.
CHILD_PLANS: Dict[int, Tuple[Tuple[ChildPosition, str], ...]] = {
    0: ((_RU, "UR"), (_RL, "R"), (_M, "B"), (_LU, "U"), (_LLO, "A"), (_LO, "C")),
    1: ((_RU, "UR"), (_RL, "R"), (_LO, "LR"), (_M, "B"), (_LLO, "C"), (_LU, "A")),
    6: ((_LU, "UL"), (_LLO, "L"), (_M, "A"), (_RU, "U"), (_RL, "B"), (_LO, "C")),
    7: ((_LU, "UL"), (_RU, "UR"), (_M, "U"), (_RL, "B"), (_LLO, "A"), (_LO, "C")),
}


def match_half_perimeter(
    complex_: Complex, tile_id: int, vertices: Sequence[int]
) -> Tuple[int, bool]:
    """
    Find the marked point s with ``vertices`` equal to the half perimeter from s.

    Returns:
        (s, reversed) where ``reversed`` means the path runs the half perimeter backwards

    Raises:
        PathShapeError: If the path is not a half perimeter of the tile
    """
    tile = complex_.tile(tile_id)
    length = complex_.side_length(tile_id)
    vertices = tuple(vertices)
    if len(vertices) == 2 * length + 1:
        starts = range(0, 8, 2) if tile.children is None else range(8)
        for s in starts:
            half = tuple(complex_.half_perimeter(tile_id, s))
            if half == vertices:
                return s, False
            if half[::-1] == vertices:
                return s, True
    raise PathShapeError(
        f"Path of length {len(vertices) - 1} is not two adjacent sides or a mid-side "
        f"half perimeter of tile {tile_id}"
    )


def macro_flip(complex_: Complex, path: PathLike, tile_id: int) -> List[Move]:
    """
    Moves turning one half perimeter of a macrotile into the other.

    Args:
        complex_: Complex containing the tile
        path: Two adjacent sides of the tile (corner to corner through their shared
            corner) or the half perimeter between midpoints of opposite sides, in
            either direction
        tile_id: Macrotile of any level

    Returns:
        Move sequence; every intermediate path is valid and the endpoints are fixed

    Raises:
        PathShapeError: If the path does not have one of these shapes
    """
    vertices = validate_path(complex_, path).vertices
    s, backwards = match_half_perimeter(complex_, tile_id, vertices)
    moves = _forward(complex_, tile_id, s)
    if backwards:
        last = len(vertices) - 1
        moves = [m.mirrored(last) for m in moves]
    return moves


def _forward(complex_: Complex, tile_id: int, s: int) -> List[Move]:
    key = ("macro_flip", tile_id, s)
    cached = complex_._cache.get(key)
    if cached is not None:
        return list(cached)

    tile = complex_.tiles[tile_id]
    if tile.children is None:
        c = tile.corners
        moves = [Move(1, tile_id, c[(s // 2 + 1) % 4], c[(s // 2 + 3) % 4])]
        complex_._cache[key] = tuple(moves)
        return moves

    if s in CHILD_PLANS:
        steps = CHILD_PLANS[s]
        backwards = False
    else:
        steps = tuple(reversed(CHILD_PLANS[(s - 4) % 8]))
        backwards = True

    half_child = complex_.side_length(tile_id) // 2
    current = complex_.half_perimeter(tile_id, s)
    moves: List[Move] = []
    for position, name in steps:
        child = tile.children[CHILD_ORDER.index(position)]
        corners = complex_.tiles[child].corners
        point = tile.named_point(name)
        if backwards:
            point = corners[(corners.index(point) + 2) % 4]
        i = current.index(point)
        offset = i - half_child
        window = current[offset : i + half_child + 1]
        for move in macro_flip(complex_, window, child):
            move = move.shifted(offset)
            current = list(apply_move(complex_, current, move).vertices)
            moves.append(move)

    expected = complex_.half_perimeter(tile_id, (s + 4) % 8)[::-1]
    if current != expected:
        raise PathShapeError(f"Child flips of tile {tile_id} did not reach the opposite half")
    complex_._cache[key] = tuple(moves)
    return moves


def wiggle_into_pasting(complex_: Complex, path: PathLike) -> List[Move]:
    """
    Push the middle half of a macrotile side onto the pasted tile glued over it.

    The side X..Y has quarter points G1, G2 and midpoint H. When a pasting has core H and
    attaching corners G1, G2, the segment G1 H G2 is flipped across the pasted tile so the
    path runs X..G1, two sides of the pasted tile through its far corner, then G2..Y.

    Args:
        complex_: Built complex
        path: Vertex sequence of a full macrotile side

    Returns:
        Move sequence (positions relative to ``path``)

    Raises:
        NoPastingError: If the side is shorter than 8 or no such pasting exists
    """
    vertices = validate_path(complex_, path).vertices
    length = len(vertices) - 1
    if length < 8 or length % 4:
        raise NoPastingError(f"no pasting: a side of length {length} carries no pasted tile")
    quarter = length // 4
    g1, h, g2 = vertices[quarter], vertices[2 * quarter], vertices[3 * quarter]
    record = next(
        (r for r in complex_.pastings_with_core(h) if {r.site.x1, r.site.z1} == {g1, g2}),
        None,
    )
    if record is None:
        raise NoPastingError(f"no pasting with core {h} over {g1} and {g2}")
    window = vertices[quarter : 3 * quarter + 1]
    moves = [m.shifted(quarter) for m in macro_flip(complex_, window, record.tile)]
    logger.debug("Wiggled side %d..%d into pasted tile %d", vertices[0], vertices[-1], record.tile)
    return moves
