"""Random walks and path constructors used by the experiments."""
import random
from typing import AbstractSet, List, Optional, Sequence, Tuple

import networkx as nx

from hiercomplex.core.errors import PathShapeError
from hiercomplex.core.model import Complex
from hiercomplex.paths.path import Path, PathLike, validate_path
from hiercomplex.paths.patterns import path_planes


def non_backtracking_walk(
    complex_: Complex,
    start: int,
    length: int,
    rng: random.Random,
    plane: Optional[int] = None,
    forbidden: Optional[AbstractSet[int]] = None,
    prefix: Optional[PathLike] = None,
    forbidden_steps: Optional[AbstractSet[Tuple[int, int]]] = None,
) -> Optional[Path]:
    """
    Random walk that never steps straight back.

    Args:
        complex_: Complex to walk on
        start: First vertex (ignored when ``prefix`` is given)
        length: Number of edges of the result
        rng: Random source
        plane: Only use edges of this plane
        forbidden: Vertices the walk may not enter
        prefix: Fixed beginning of the walk
        forbidden_steps: Directed edges (from, to) the walk may not take

    Returns:
        The walk, or None if it got stuck before reaching ``length``
    """
    vertices: List[int] = list(validate_path(complex_, prefix).vertices) if prefix else [start]
    adjacency = complex_.plane_adjacency(plane) if plane is not None else None
    while len(vertices) - 1 < length:
        current = vertices[-1]
        if adjacency is not None:
            options = adjacency.get(current, [])
        else:
            options = complex_.neighbours(current)
        previous = vertices[-2] if len(vertices) > 1 else None
        options = [
            n
            for n in options
            if n != previous
            and (forbidden is None or n not in forbidden)
            and (forbidden_steps is None or (current, n) not in forbidden_steps)
        ]
        if not options:
            return None
        vertices.append(rng.choice(options))
    return Path(tuple(vertices))


def is_planar(complex_: Complex, path: PathLike) -> bool:
    """Whether all edges of the path lie in one common plane."""
    vertices = validate_path(complex_, path).vertices
    planes = path_planes(complex_, vertices)
    return planes is None or bool(planes)


def boundary_walk(complex_: Complex, tile_id: int, start: int, length: int) -> Path:
    """Clockwise walk of ``length`` edges along a tile boundary from perimeter offset ``start``."""
    cycle = complex_.perimeter(tile_id)
    return Path(tuple(cycle[(start + i) % len(cycle)] for i in range(length + 1)))


def concatenate(*parts: PathLike) -> Path:
    """Join paths that share their junction vertices."""
    vertices: List[int] = []
    for part in parts:
        seq = list(part.vertices if isinstance(part, Path) else part)
        if vertices and seq and vertices[-1] == seq[0]:
            seq = seq[1:]
        vertices.extend(seq)
    return Path(tuple(vertices))


def _segments_by_ends(complex_: Complex):
    def build():
        index = {}
        for segment in complex_.macro_edges.values():
            index.setdefault(frozenset(segment.endpoints), []).append(segment.id)
        return index

    return complex_._cached("segments_by_ends", build)


def macro_chain(complex_: Complex, tile_id: int, first: str, second: str) -> Path:
    """
    Graph path along the macro-edge joining two named points of a subdivided tile.

    Names are corners (UL, UR, LR, LL) or points (U, R, D, L, A, B, C); the pair must be
    an interior macro-edge of the tile or half of one of its sides.

    Raises:
        PathShapeError: If no macro-edge joins the two points
    """
    tile = complex_.tile(tile_id)
    a, b = tile.named_point(first), tile.named_point(second)
    candidates = _segments_by_ends(complex_).get(frozenset((a, b)))
    if not candidates:
        raise PathShapeError(f"No macro-edge {first}-{second} in tile {tile_id}")
    return Path(tuple(complex_.segment_chain(min(candidates), a)))


def chain_through(complex_: Complex, tile_id: int, names: Sequence[str]) -> Path:
    """Concatenation of the macro-edge chains between consecutive named points."""
    return concatenate(
        *(macro_chain(complex_, tile_id, p, q) for p, q in zip(names, names[1:]))
    )


def extend_both_ways(
    complex_: Complex,
    core: PathLike,
    before: int,
    after: int,
    rng: random.Random,
    plane: Optional[int] = None,
) -> Optional[Path]:
    """
    Random non-backtracking extension of a path by ``before`` edges in front and ``after``
    edges behind.

    Returns:
        The extended path, or None if a walk got stuck
    """
    core_path = validate_path(complex_, core)
    tail = non_backtracking_walk(
        complex_, core_path.start, core_path.length + after, rng, plane, prefix=core_path
    )
    if tail is None:
        return None
    full = non_backtracking_walk(
        complex_, tail.end, tail.length + before, rng, plane, prefix=tail.reversed()
    )
    return full.reversed() if full is not None else None


def shortest_inside(complex_: Complex, tile_id: int, a: int, b: int) -> Path:
    """Shortest path from ``a`` to ``b`` using only vertices of a tile."""
    graph = complex_.to_networkx().subgraph(complex_.tile_vertices(tile_id))
    return Path(tuple(nx.shortest_path(graph, a, b)))
