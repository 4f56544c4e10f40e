"""Pasting: gluing level-2 tiles onto four-edge paths X1 X2 Y Z2 Z1 in new planes."""
import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from hiercomplex.construction.numbering import incoming_rank
from hiercomplex.construction.subdivision import INTERIOR_PARAMS, Subdivider, bilinear
from hiercomplex.core.errors import StaleSiteError
from hiercomplex.core.kinds import (
    EXTERIOR,
    ChildPosition,
    CornerPosition,
    InteriorLabel,
    SideLetter,
    VertexCategory,
    VertexKind,
)
from hiercomplex.core.model import (
    BOUNDARY_TYPES,
    Complex,
    GraphEdge,
    PastingRecord,
    PastingSite,
)

logger = logging.getLogger(__name__)


def in_base_plane(complex_: Complex, segment_id: int, core: int) -> bool:
    """Whether a macro-edge is owned by a tile of the plane the core was created in."""
    owner = complex_.macro_edges[segment_id].owner
    return complex_.tiles[owner].plane == complex_.vertices[core].plane


def _arms(complex_: Complex, y: int, k: int) -> List[Tuple[int, int, int]]:
    """(x2, x1, carrier) for every fresh midpoint next to ``y`` halving a segment from ``y``.

    Only segments of the core's base plane count; planes glued onto ``y`` are not reached.
    """
    arms = []
    for x2 in complex_.neighbours(y):
        mid = complex_.vertices[x2]
        if mid.depth != k or mid.created_round != complex_.round or not mid.kind.is_midpoint:
            continue
        if mid.carrier is None:
            continue
        carrier = complex_.macro_edges[mid.carrier]
        if y not in carrier.endpoints or not in_base_plane(complex_, carrier.id, y):
            continue
        x1 = carrier.other(y)
        far = complex_.vertices[x1]
        if far.kind.is_midpoint and far.depth == k - 1:
            arms.append((x2, x1, carrier.id))
    return arms


def _carrier_level(complex_: Complex, vertex_id: int) -> int:
    carrier = complex_.vertices[vertex_id].carrier
    if carrier is None:
        return -1
    return complex_.tile_level(complex_.macro_edges[carrier].owner)


def _three_corners(complex_: Complex, x1: int, y: int, z1: int) -> bool:
    return any(
        x1 in complex_.tiles[t].corners and z1 in complex_.tiles[t].corners
        for t in complex_.corner_tiles(y)
    )


def _precedes(complex_: Complex, y: int, x: Tuple[int, int, int], z: Tuple[int, int, int]) -> bool:
    """Whether arm ``x`` comes first under the orientation rule."""
    level_x = _carrier_level(complex_, x[1])
    level_z = _carrier_level(complex_, z[1])
    if level_x != level_z:
        return level_x > level_z
    return incoming_rank(complex_, y, (y, x[0])) < incoming_rank(complex_, y, (y, z[0]))


def enumerate_pasting_sites(complex_: Complex) -> List[PastingSite]:
    """
    All oriented paths X1 X2 Y Z2 Z1 satisfying the five pasting conditions.

    Both carrying macro-edges belong to the core's base plane. A path may still lie entirely
    in a pasted plane when the core was created there.

    Args:
        complex_: Complex right after a subdivision round

    Returns:
        Sites sorted by core, then by the rank of the X2 edge at the core
    """
    k = complex_.max_depth
    sites: List[Tuple[int, int, PastingSite]] = []
    for y in sorted(complex_.vertices):
        if complex_.vertices[y].depth != k - 2:
            continue
        arms = _arms(complex_, y, k)
        for first, second in combinations(arms, 2):
            if first[1] == second[1] or _three_corners(complex_, first[1], y, second[1]):
                continue
            x, z = (first, second) if _precedes(complex_, y, first, second) else (second, first)
            site = PastingSite(
                x1=x[1],
                x2=x[0],
                y=y,
                z2=z[0],
                z1=z[1],
                x_segment=x[2],
                z_segment=z[2],
                host_tiles=tuple(
                    sorted({complex_.macro_edges[x[2]].owner, complex_.macro_edges[z[2]].owner})
                ),
                base_plane=complex_.vertices[y].plane,
                revision=complex_.revision,
            )
            sites.append((y, incoming_rank(complex_, y, (y, site.x2)), site))
    sites.sort(key=lambda item: (item[0], item[1], item[2].z2))
    logger.debug("Found %d pasting sites at depth %d", len(sites), k)
    return [site for _, _, site in sites]


def check_pasting_site(complex_: Complex, site: PastingSite) -> List[int]:
    """Condition numbers (1-5) the site fails, found by a direct scan of the complex.

    Condition 3 includes base-plane ownership of both carrying macro-edges.
    """
    k = complex_.max_depth
    failed: List[int] = []
    vs = complex_.vertices

    for tile in complex_.tiles.values():
        if {site.x1, site.y, site.z1} <= set(tile.corners):
            failed.append(1)
            break

    for end in (site.x1, site.z1):
        if vs[end].kind.category not in (VertexCategory.SIDE, VertexCategory.EDGE_MID):
            failed.append(2)
            break
        if vs[end].depth != k - 1:
            failed.append(2)
            break

    for mid, end in ((site.x2, site.x1), (site.z2, site.z1)):
        vertex = vs[mid]
        carrier = complex_.macro_edges.get(vertex.carrier) if vertex.carrier is not None else None
        if (
            vertex.depth != k
            or vertex.created_round != complex_.round
            or not vertex.kind.is_midpoint
            or carrier is None
            or set(carrier.endpoints) != {end, site.y}
            or not in_base_plane(complex_, carrier.id, site.y)
            or not complex_.has_edge(end, mid)
            or not complex_.has_edge(mid, site.y)
        ):
            failed.append(3)
            break

    if vs[site.y].depth != k - 2:
        failed.append(4)

    if 3 not in failed:
        level_x = _carrier_level(complex_, site.x1)
        level_z = _carrier_level(complex_, site.z1)
        if level_x < level_z or (
            level_x == level_z
            and incoming_rank(complex_, site.y, (site.y, site.x2))
            > incoming_rank(complex_, site.y, (site.y, site.z2))
        ):
            failed.append(5)
    return failed


def apply_pasting(complex_: Complex, site: PastingSite) -> PastingRecord:
    """
    Glue a level-2 tile onto the site in a new plane.

    The tile has corners Y (upper left, the core), X1, T1, Z1; its top side is the
    macro-edge X1 Y and its left side the macro-edge Z1 Y. T2 and T3 split the new right
    and bottom sides; the interior is laid out exactly like a subdivided tile.

    Args:
        complex_: Complex the site was enumerated on
        site: Site from :func:`enumerate_pasting_sites`

    Returns:
        PastingRecord of the new plane

    Raises:
        StaleSiteError: If the complex changed since the site was enumerated
    """
    if site.revision != complex_.revision:
        raise StaleSiteError(
            f"site at core {site.y} was enumerated at revision {site.revision}, "
            f"complex is at revision {complex_.revision}"
        )
    record = _paste(complex_, site)
    complex_.touch()
    return record


def _paste(complex_: Complex, site: PastingSite) -> PastingRecord:
    round_index = complex_.round
    k = complex_.max_depth
    table = complex_.rule_table
    first_segment = len(complex_.macro_edges)
    vs = complex_.vertices

    tile_id = len(complex_.tiles)
    plane_id = complex_.add_plane(root_tile=tile_id, created_round=round_index, pasted_tile=tile_id)
    y, x1, z1 = (vs[v].pos for v in (site.y, site.x1, site.z1))
    t1_pos = (x1[0] + z1[0] - y[0], x1[1] + z1[1] - y[1])

    def new_vertex(kind: VertexKind, depth: int, pos: Tuple[float, float]) -> int:
        return complex_.add_vertex(
            kind, depth=depth, created_round=round_index, owner=tile_id, plane=plane_id, pos=pos
        )

    t1 = new_vertex(VertexKind.corner_at(CornerPosition.CDR), k - 1, t1_pos)
    right = complex_.add_segment(
        edge_type=BOUNDARY_TYPES[SideLetter.R],
        owner=tile_id,
        endpoints=(site.x1, t1),
        a_side=ChildPosition.PASTED.value,
        b_side=EXTERIOR,
        created_round=round_index,
    )
    bottom = complex_.add_segment(
        edge_type=BOUNDARY_TYPES[SideLetter.D],
        owner=tile_id,
        endpoints=(t1, site.z1),
        a_side=ChildPosition.PASTED.value,
        b_side=EXTERIOR,
        created_round=round_index,
    )
    t2 = new_vertex(VertexKind.edge_mid(SideLetter.R), k, _midpoint(x1, t1_pos))
    t3 = new_vertex(VertexKind.edge_mid(SideLetter.D), k, _midpoint(t1_pos, z1))
    vs[t2].midpoint_of = [(tile_id, SideLetter.R.value)]
    vs[t3].midpoint_of = [(tile_id, SideLetter.D.value)]

    complex_.add_tile(
        corners=(site.y, site.x1, t1, site.z1),
        position=ChildPosition.PASTED,
        parent=None,
        rotation=0,
        created_round=round_index,
        birth_level=2,
        plane=plane_id,
        sides=(site.x_segment, right, bottom, site.z_segment),
        core=site.y,
        minimal=False,
    )
    complex_.split_segment(right, t2)
    complex_.split_segment(bottom, t3)

    corner_pos = [y, x1, t1_pos, z1]
    points: Dict[str, int] = {
        "UL": site.y,
        "UR": site.x1,
        "LR": t1,
        "LL": site.z1,
        "U": site.x2,
        "R": t2,
        "D": t3,
        "L": site.z2,
    }
    for label in InteriorLabel:
        points[label.value] = new_vertex(
            VertexKind.interior(label), k, bilinear(corner_pos, *INTERIOR_PARAMS[label.value])
        )
    tile = complex_.tiles[tile_id]
    Subdivider.fill_interior(complex_, tile, points, round_index, table)

    record = PastingRecord(
        site=site,
        tile=tile_id,
        plane=plane_id,
        round=round_index,
        t1=t1,
        t2=t2,
        t3=t3,
        ta=points["A"],
        tb=points["B"],
        tc=points["C"],
        macro_edges=tuple(range(first_segment, len(complex_.macro_edges))),
    )
    complex_.pasting_log.append(record)
    complex_._cache.clear()
    record.entry_edges = entry_edges(complex_, record)
    return record


def _midpoint(a: Tuple[float, float], b: Tuple[float, float]) -> Tuple[float, float]:
    return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def attaching_vertices(complex_: Complex, record: PastingRecord) -> Set[int]:
    """Vertices on the top and left sides of a pasted tile at the current round."""
    site = record.site
    return set(complex_.segment_chain(site.x_segment, site.y)) | set(
        complex_.segment_chain(site.z_segment, site.y)
    )


def entry_edges(complex_: Complex, record: PastingRecord) -> List[GraphEdge]:
    """Edges of the pasted plane leading from an attaching side into the plane.

    Returned as (vertex on the attaching side, vertex inside the plane) pairs.
    """
    attached = attaching_vertices(complex_, record)
    found = []
    for edge in complex_.plane_edges(record.plane):
        a, b = tuple(edge)
        if (a in attached) != (b in attached):
            found.append((a, b) if a in attached else (b, a))
    return sorted(found)


def pasting_round(complex_: Complex) -> List[PastingRecord]:
    """
    Apply every enumerated site of the current complex.

    Args:
        complex_: Complex right after a subdivision round

    Returns:
        Pasting records in application order
    """
    sites = enumerate_pasting_sites(complex_)
    records = [_paste(complex_, site) for site in sites]
    complex_.touch()
    if complex_.rounds_log and complex_.rounds_log[-1].round == complex_.round:
        complex_.rounds_log[-1].pastings = len(records)
    logger.info("Pasting round %d: %d pastings applied", complex_.round, len(records))
    return records


def _core_family(complex_: Complex, vertex_id: int) -> Optional[str]:
    kind = complex_.vertices[vertex_id].kind
    if kind.is_midpoint:
        return "midpoint"
    if kind.category is VertexCategory.INTERIOR:
        return kind.label.value
    return None


def simultaneous_core_conflicts(complex_: Complex, round_index: int) -> List[Tuple[int, int]]:
    """Pairs of same-round cores of the same family sharing a participant within distance 4.

    Families are: side/edge-mid midpoints, and each interior label on its own.
    """
    records = [r for r in complex_.pasting_log if r.round == round_index]
    graph = complex_.to_networkx()
    conflicts = []
    for first, second in combinations(records, 2):
        a, b = first.site.y, second.site.y
        if a == b:
            continue
        family = _core_family(complex_, a)
        if family is None or family != _core_family(complex_, b):
            continue
        if not set(first.site.path) & set(second.site.path):
            continue
        try:
            distance = nx.shortest_path_length(graph, a, b)
        except nx.NetworkXNoPath:
            continue
        if distance <= 4:
            conflicts.append(tuple(sorted((a, b))))
    return sorted(set(conflicts))


def repeated_cores(complex_: Complex) -> List[int]:
    """Vertices that served as core in more than one round."""
    rounds: Dict[int, Set[int]] = {}
    for record in complex_.pasting_log:
        rounds.setdefault(record.site.y, set()).add(record.round)
    return sorted(v for v, seen in rounds.items() if len(seen) > 1)
