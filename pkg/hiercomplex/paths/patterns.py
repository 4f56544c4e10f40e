"""Main edges, path patterns, dead patterns and incorrect segments."""
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Set, Tuple

from hiercomplex.core.errors import NonPlanarPathError, NotIncidentError, UndefinedKindError
from hiercomplex.core.kinds import VertexCategory
from hiercomplex.core.model import Complex, GraphEdge
from hiercomplex.paths.path import PathLike, validate_path

# Role triples (within one macrotile) that make a pattern dead, mapped to their name.
DEAD_PATTERNS: Dict[Tuple[str, str, str], str] = {
    ("A", "U", "B"): "AUB",
    ("B", "U", "A"): "BUA",
    ("A", "C", "B"): "ACB",
    ("B", "C", "A"): "BCA",
    ("C", "LL", "D"): "CXD",
    ("C", "LR", "D"): "CXD",
    ("D", "LL", "C"): "DXC",
    ("D", "LR", "C"): "DXC",
}


@dataclass(frozen=True, slots=True)
class PatternEntry:
    index: int
    vertex: int
    kind: str
    roles: Tuple[Tuple[int, str], ...]


@dataclass(frozen=True, slots=True)
class Pattern:
    """Vertices of a path that survive the main-edge deletion rule, in path order."""

    entries: Tuple[PatternEntry, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(e.vertex for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True, slots=True)
class DeadPatternMatch:
    index: int
    tile: int
    name: str
    vertices: Tuple[int, int, int]


def _incident(vertex_id: int, edge: GraphEdge) -> int:
    a, b = edge
    if a == vertex_id:
        return b
    if b == vertex_id:
        return a
    raise NotIncidentError(f"Edge {a}-{b} is not incident to vertex {vertex_id}")


def _main_for_midpoint(complex_: Complex, vertex_id: int, other: int) -> bool:
    carrier = complex_.vertices[vertex_id].carrier
    if carrier is None:
        return False
    segment = complex_.segment_of(vertex_id, other)
    return complex_.root_segment(segment.id) == complex_.root_segment(carrier)


def is_main_edge(complex_: Complex, vertex_id: int, edge: GraphEdge) -> bool:
    """
    Whether an edge at a side or interior vertex is one of its main edges.

    A side vertex's main edges run along the macro-edge separating the two tiles it
    borders. An interior vertex of tile T has as main edges those lying on interior
    macro-edges of T.

    Raises:
        NotIncidentError: If the edge does not touch the vertex
        UndefinedKindError: If the vertex is a corner or edge-mid vertex
        InvalidPathError: If the edge is not a graph edge
    """
    vertex = complex_.vertex(vertex_id)
    other = _incident(vertex_id, edge)
    category = vertex.kind.category
    if category in (VertexCategory.CORNER, VertexCategory.EDGE_MID):
        raise UndefinedKindError(vertex_id, vertex.kind.code)
    if category is VertexCategory.SIDE:
        return _main_for_midpoint(complex_, vertex_id, other)
    segment = complex_.macro_edges[complex_.root_segment(complex_.segment_of(vertex_id, other).id)]
    return segment.owner == vertex.owner and segment.is_interior


def path_planes(complex_: Complex, vertices: Sequence[int]) -> Optional[Set[int]]:
    """Planes containing every edge of the path (None for a single vertex)."""
    plane_sets = [complex_.planes_of_edge(a, b) for a, b in zip(vertices, vertices[1:])]
    if not plane_sets:
        return None
    return reduce(lambda x, y: x & y, plane_sets)


def pattern_of(complex_: Complex, path: PathLike) -> Pattern:
    """
    Pattern of a planar path.

    Interior vertices are always kept; corner vertices never. A side or edge-mid vertex
    is dropped when it is an inner path vertex entered and left along main edges.

    Raises:
        InvalidPathError: If the path is invalid
        NonPlanarPathError: If the path edges do not share a plane
    """
    vertices = validate_path(complex_, path).vertices
    planes = path_planes(complex_, vertices)
    if planes is not None and not planes:
        raise NonPlanarPathError("Pattern is defined only for paths inside one plane")
    entries = []
    for i, v in enumerate(vertices):
        kind = complex_.vertices[v].kind
        if kind.category is VertexCategory.CORNER:
            continue
        if kind.is_midpoint and 0 < i < len(vertices) - 1:
            if _main_for_midpoint(complex_, v, vertices[i - 1]) and _main_for_midpoint(
                complex_, v, vertices[i + 1]
            ):
                continue
        entries.append(PatternEntry(i, v, kind.code, complex_.point_roles(v)))
    return Pattern(tuple(entries))


def find_dead_patterns(pattern: Pattern) -> List[DeadPatternMatch]:
    """All consecutive pattern triples playing a dead role triple inside one macrotile."""
    matches = []
    entries = pattern.entries
    for i in range(len(entries) - 2):
        first, second, third = entries[i], entries[i + 1], entries[i + 2]
        roles = [_roles_by_tile(e) for e in (first, second, third)]
        for tile in sorted(set(roles[0]) & set(roles[1]) & set(roles[2])):
            for a in roles[0][tile]:
                for b in roles[1][tile]:
                    for c in roles[2][tile]:
                        name = DEAD_PATTERNS.get((a, b, c))
                        if name is not None:
                            matches.append(
                                DeadPatternMatch(
                                    first.index,
                                    tile,
                                    name,
                                    (first.vertex, second.vertex, third.vertex),
                                )
                            )
    return matches


def _roles_by_tile(entry: PatternEntry) -> Dict[int, List[str]]:
    grouped: Dict[int, List[str]] = {}
    for tile, name in entry.roles:
        grouped.setdefault(tile, []).append(name)
    return grouped


def incorrect_segments(complex_: Complex, path: PathLike) -> List[Tuple[int, int]]:
    """
    Triples X Y Z with Y on the boundary of a macrotile T and X, Z strictly inside T.

    Returns:
        (index of Y, T) pairs, T being the lowest-level such tile (ties by id)
    """
    vertices = validate_path(complex_, path).vertices
    found = []
    for i in range(1, len(vertices) - 1):
        tile = _incorrect_tile(complex_, vertices[i - 1], vertices[i], vertices[i + 1])
        if tile is not None:
            found.append((i, tile))
    return found


def _incorrect_tile(complex_: Complex, x: int, y: int, z: int) -> Optional[int]:
    inside_x = complex_.membership(x)
    inside_z = complex_.membership(z)
    candidates = [
        t
        for t, on_boundary in complex_.membership(y).items()
        if on_boundary and inside_x.get(t) is False and inside_z.get(t) is False
    ]
    if not candidates:
        return None
    return min(candidates, key=lambda t: (complex_.tile_level(t), t))


def has_incorrect_segment(complex_: Complex, vertices: Sequence[int]) -> bool:
    return any(
        _incorrect_tile(complex_, vertices[i - 1], vertices[i], vertices[i + 1]) is not None
        for i in range(1, len(vertices) - 1)
    )
