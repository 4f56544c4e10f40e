"""Numbering of the incoming edges at a vertex."""
import logging
from collections import Counter
from typing import Dict, List, Set, Tuple

from hiercomplex.core.model import Complex, GraphEdge
from hiercomplex.core.structure import rotation_order

logger = logging.getLogger(__name__)

# Core key for edges of a plane that has no pasting record (sorts before every core).
_NO_CORE = (-2, 0, 0)


def _normalize(vertex_id: int, edge: GraphEdge) -> GraphEdge:
    a, b = edge
    if a == vertex_id:
        return (a, b)
    if b == vertex_id:
        return (b, a)
    raise ValueError(f"Edge {a}-{b} is not incident to vertex {vertex_id}")


def incoming_edge_order(complex_: Complex, vertex_id: int) -> List[GraphEdge]:
    """
    Total order of the graph edges at a vertex.

    Edges of the vertex's own plane come first: larger level first, ties clockwise from
    the start ray (the edge of largest level, then smallest edge type). Edges leading into
    pasted planes follow, grouped by the pasting core (depth ascending, then kind class
    side/edge-mid, corner, C, A, B), each group taking the rank the core gives to the
    attaching side the vertex is not on. Remaining ties go to level descending, then
    edge type ascending.

    Args:
        complex_: Built complex
        vertex_id: Vertex whose edges are numbered

    Each pair is the graph edge at the vertex; it stands for the incoming macro-edge whose
    first leaf segment it is, which :func:`incoming_macro_edges` returns in the same order.

    Returns:
        List of (vertex_id, neighbour) pairs, first-numbered edge first

    Raises:
        UnknownVertexError: If the vertex does not exist
    """
    return list(_order(complex_, vertex_id, set()))


def incoming_macro_edges(complex_: Complex, vertex_id: int) -> List[int]:
    """
    Ids of the incoming macro-edges at a vertex, in :func:`incoming_edge_order`.

    The macro-edge of a graph edge is its longest ancestor segment still ending at the vertex.
    """
    carriers = []
    for a, b in incoming_edge_order(complex_, vertex_id):
        segment = complex_.segment_of(a, b)
        while segment.parent is not None:
            parent = complex_.macro_edges[segment.parent]
            if vertex_id not in parent.endpoints:
                break
            segment = parent
        carriers.append(segment.id)
    return carriers


def incoming_rank(complex_: Complex, vertex_id: int, edge: GraphEdge) -> int:
    """Position (0-based) of ``edge`` in :func:`incoming_edge_order` at ``vertex_id``."""
    edge = _normalize(vertex_id, edge)
    order = _order(complex_, vertex_id, set())
    try:
        return order.index(edge)
    except ValueError:
        raise ValueError(f"Edge {edge[0]}-{edge[1]} is not a graph edge") from None


def _order(complex_: Complex, vertex_id: int, active: Set[int]) -> Tuple[GraphEdge, ...]:
    key = ("incoming", vertex_id)
    cached = complex_._cache.get(key)
    if cached is not None:
        return cached

    vertex = complex_.vertex(vertex_id)
    active = active | {vertex_id}
    planar: List[int] = []
    pasted: List[int] = []
    for n in complex_.neighbours(vertex_id):
        if complex_.home_plane(vertex_id, n) == vertex.plane:
            planar.append(n)
        else:
            pasted.append(n)

    keys: Dict[int, tuple] = {}
    if planar:
        ring = [n for _, n in rotation_order(complex_, vertex_id, vertex.plane)]

        def ray_key(n: int) -> tuple:
            segment = complex_.segment_of(vertex_id, n)
            return (
                -complex_.edge_level(vertex_id, n),
                segment.edge_type,
                complex_.vertices[n].depth,
                n,
            )

        start = min(planar, key=ray_key)
        offset = ring.index(start) if start in ring else 0
        for n in planar:
            if n in ring:
                clockwise = (ring.index(n) - offset) % len(ring)
            else:
                clockwise = len(ring) + n
            keys[n] = (0, -complex_.edge_level(vertex_id, n), clockwise)

    for n in pasted:
        plane_id = complex_.home_plane(vertex_id, n)
        segment = complex_.segment_of(vertex_id, n)
        core_key = _core_key(complex_, vertex_id, plane_id, active)
        keys[n] = (1, *core_key, -complex_.edge_level(vertex_id, n), segment.edge_type, n)

    order = tuple((vertex_id, n) for n in sorted(keys, key=lambda n: keys[n]))
    complex_._cache[key] = order
    return order


def _core_key(complex_: Complex, vertex_id: int, plane_id: int, active: Set[int]) -> tuple:
    record = complex_.pasting_by_plane(plane_id)
    if record is None:
        return _NO_CORE
    site = record.site
    core = complex_.vertices[site.y]
    top_chain = complex_.segment_chain(site.x_segment, site.y)
    other_segment = site.z_segment if vertex_id in top_chain else site.x_segment
    first_edge = (site.y, complex_.segment_chain(other_segment, site.y)[1])
    if site.y in active:
        inherited = 0
    else:
        order = _order(complex_, site.y, active)
        inherited = order.index(first_edge) if first_edge in order else len(order)
    return (core.depth, core.kind.kind_class, inherited)


def incoming_level_histogram(complex_: Complex, vertex_id: int) -> Dict[int, int]:
    """Number of edges at a vertex per edge level."""
    levels = Counter(complex_.edge_level(vertex_id, n) for n in complex_.neighbours(vertex_id))
    return dict(sorted(levels.items()))


def max_level_multiplicity(complex_: Complex) -> int:
    """Largest count of same-level edges at any vertex."""
    best = 0
    for v in complex_.vertices:
        histogram = incoming_level_histogram(complex_, v)
        if histogram:
            best = max(best, max(histogram.values()))
    return best
