"""Paths, flip moves and their line-based text format."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from hiercomplex.core.errors import InvalidPathError
from hiercomplex.core.model import Complex


@dataclass(frozen=True, slots=True)
class Path:
    """Nonempty vertex sequence; consecutive vertices must be joined by a graph edge."""

    vertices: Tuple[int, ...]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Path":
        return cls(tuple(vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def edges(self) -> List[Tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, index):
        return self.vertices[index]


PathLike = Union[Path, Sequence[int]]


@dataclass(frozen=True, slots=True)
class Move:
    """Flip of the middle vertex at ``position`` across a minimal tile.

    The two path edges meeting at ``position`` are adjacent sides of ``tile``; the move
    replaces them by the two other sides, i.e. the middle vertex by the opposite corner.
    ``replaced`` and ``replacement`` are filled in by move generators and are optional
    when a move is parsed from text.
    """

    position: int
    tile: int
    replaced: Optional[int] = None
    replacement: Optional[int] = None

    def shifted(self, offset: int) -> "Move":
        return Move(self.position + offset, self.tile, self.replaced, self.replacement)

    def mirrored(self, length: int) -> "Move":
        """Same flip on the reversed path of the given length."""
        return Move(length - self.position, self.tile, self.replaced, self.replacement)


def as_vertices(path: PathLike) -> Tuple[int, ...]:
    if isinstance(path, Path):
        return path.vertices
    return tuple(path)


def validate_path(complex_: Complex, path: PathLike) -> Path:
    """
    Check a vertex sequence against the complex.

    Returns:
        The sequence as a Path

    Raises:
        InvalidPathError: If the sequence is empty, names an unknown vertex, or two
            consecutive vertices are not joined by a graph edge
    """
    vertices = as_vertices(path)
    if not vertices:
        raise InvalidPathError("Path must contain at least one vertex")
    for v in vertices:
        if v not in complex_.vertices:
            raise InvalidPathError(f"Unknown vertex {v} in path")
    for i, (a, b) in enumerate(zip(vertices, vertices[1:])):
        if not complex_.has_edge(a, b):
            raise InvalidPathError(f"No graph edge {a}-{b} at path position {i}")
    return Path(vertices)


def flip_target(complex_: Complex, vertices: Sequence[int], position: int, tile_id: int) -> int:
    """Vertex replacing ``vertices[position]`` when flipping across ``tile_id``.

    Raises:
        InvalidPathError: If the flip is not a legal move on this path
    """
    if not 0 < position < len(vertices) - 1:
        raise InvalidPathError(f"Move position {position} is not an inner path position")
    tile = complex_.tiles.get(tile_id)
    if tile is None or tile.children is not None:
        raise InvalidPathError(f"Tile {tile_id} is not a minimal tile")
    before, middle, after = vertices[position - 1], vertices[position], vertices[position + 1]
    corners = tile.corners
    if middle not in corners:
        raise InvalidPathError(f"Vertex {middle} is not a corner of tile {tile_id}")
    i = corners.index(middle)
    if {before, after} != {corners[(i + 1) % 4], corners[(i - 1) % 4]} or before == after:
        raise InvalidPathError(
            f"Path edges at position {position} are not two adjacent sides of tile {tile_id}"
        )
    opposite = corners[(i + 2) % 4]
    if not (complex_.has_edge(before, opposite) and complex_.has_edge(opposite, after)):
        raise InvalidPathError(f"Tile {tile_id} has a missing side")
    return opposite


def apply_move(complex_: Complex, path: PathLike, move: Move) -> Path:
    """Apply one move, checking that it is legal."""
    vertices = list(as_vertices(path))
    target = flip_target(complex_, vertices, move.position, move.tile)
    if move.replacement is not None and move.replacement != target:
        raise InvalidPathError(
            f"Move at {move.position} does not lead to vertex {move.replacement}"
        )
    vertices[move.position] = target
    return Path(tuple(vertices))


def apply_moves(complex_: Complex, path: PathLike, moves: Iterable[Move]) -> Path:
    """
    Replay a move sequence, validating the path and every step.

    Raises:
        InvalidPathError: If the path or any move is invalid
    """
    current = validate_path(complex_, path)
    for move in moves:
        current = apply_move(complex_, current, move)
    return current


def replay(complex_: Complex, path: PathLike, moves: Iterable[Move]) -> List[Path]:
    """Every intermediate path of a move sequence, starting with the input path."""
    current = validate_path(complex_, path)
    trail = [current]
    for move in moves:
        current = apply_move(complex_, current, move)
        trail.append(current)
    return trail


def format_path(path: PathLike) -> str:
    return " ".join(str(v) for v in as_vertices(path)) + "\n"


def parse_path(text: str) -> Path:
    """Parse whitespace-separated vertex ids; blank lines and ``#`` comments are skipped."""
    ids: List[int] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            ids.extend(int(token) for token in line.split())
        except ValueError as e:
            raise InvalidPathError(f"Invalid vertex id in path text: {line}") from e
    if not ids:
        raise InvalidPathError("Path text contains no vertex ids")
    return Path(tuple(ids))


def format_moves(moves: Iterable[Move]) -> str:
    return "".join(f"{m.position} {m.tile}\n" for m in moves)


def parse_moves(text: str) -> List[Move]:
    """Parse one ``position tile`` pair per line."""
    moves = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidPathError(f"Line {number}: expected 'position tile', got '{line}'")
        try:
            moves.append(Move(int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise InvalidPathError(f"Line {number}: invalid integers in '{line}'") from e
    return moves
