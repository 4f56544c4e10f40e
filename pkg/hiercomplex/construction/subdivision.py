"""Subdivision: every minimal tile splits into six oriented children."""
import logging
from collections import Counter
from typing import Dict, FrozenSet, List, Optional, Tuple

from hiercomplex.core.errors import TileNotMinimalError
from hiercomplex.core.kinds import (
    SIDE_ORDER,
    ChildPosition,
    InteriorLabel,
    VertexKind,
)
from hiercomplex.core.model import SIDE_OF_BOUNDARY_TYPE, Complex, MacroTile, RoundReport
from hiercomplex.core.rules import (
    CHILD_ORDER,
    CORNER_NAMES,
    INTERIOR_EDGE_SLOTS,
    MIDPOINT_NAMES,
    REFERENCE_CYCLES,
    RuleTable,
    adjacent_children,
    cyclic_shift,
    slot_key,
)

logger = logging.getLogger(__name__)

# Unit-square parameters (s along UL->UR, t along UL->LL) of the interior points.
INTERIOR_PARAMS = {"A": (0.3, 0.3), "B": (0.7, 0.3), "C": (0.5, 0.65)}


def is_subdivision_rotation(table: RuleTable, position: ChildPosition) -> bool:
    """Whether a child's orientation is a cyclic shift of its reference corner cycle."""
    return cyclic_shift(REFERENCE_CYCLES[position], table.orientation[position]) is not None


def validate_rule_table(table: RuleTable) -> List[str]:
    """
    Check a rule table against the corner constraints of the subdivision.

    Args:
        table: Rule table to check

    Returns:
        List of violations (empty if the table is usable)
    """
    violations: List[str] = []
    orientation = table.orientation

    missing = [p.value for p in CHILD_ORDER if p not in orientation]
    if missing:
        violations.append(f"missing child orientations: {missing}")
        return violations

    for position in CHILD_ORDER:
        corners = orientation[position]
        reference = REFERENCE_CYCLES[position]
        if sorted(corners) != sorted(reference):
            violations.append(
                f"{position.value}: incidence must be {sorted(reference)}, got {list(corners)}"
            )
            continue
        if not is_subdivision_rotation(table, position):
            if cyclic_shift(tuple(reversed(reference)), corners) is not None:
                violations.append(f"{position.value}: reflection (orientations must be rotations)")
            else:
                violations.append(f"{position.value}: corners do not follow a 4-cycle")

    expected_ul = {
        ChildPosition.LEFT_UPPER: "UL",
        ChildPosition.RIGHT_UPPER: "UR",
        ChildPosition.RIGHT_LOWER: "LR",
        ChildPosition.LOWER: "LR",
    }
    for position, name in expected_ul.items():
        actual = orientation[position][0]
        if actual != name:
            violations.append(
                f"{position.value}: logical UL must be parent {name}, got parent {actual}"
            )

    at_lower_left = sorted(
        CORNER_NAMES[orientation[p].index("LL")] for p in CHILD_ORDER if "LL" in orientation[p]
    )
    if at_lower_left != ["LR", "UR"]:
        violations.append(
            f"children at parent LL must attach by UR and LR, got {at_lower_left}"
        )

    types = sorted(table.edge_types.values())
    if types != list(range(1, 9)):
        violations.append(f"interior edge types must be exactly 1..8, got {types}")
    if table.edge_types.get(slot_key("U", "A")) != 1:
        violations.append("edge type 1 must be the edge from U to A")
    for key, edge_type in table.edge_types.items():
        first, _, second = key.partition("-")
        known = (first, second) in INTERIOR_EDGE_SLOTS or (second, first) in INTERIOR_EDGE_SLOTS
        if not known:
            violations.append(f"edge slot {key} is not an interior edge of the subdivision")
            continue
        sides = table.a_sides.get(edge_type)
        if sides is None or set(sides) != set(adjacent_children(first, second)):
            violations.append(
                f"edge type {edge_type}: A/B sides must be the children bordering {key}"
            )
    return violations


def bilinear(corners_pos: List[Tuple[float, float]], s: float, t: float) -> Tuple[float, float]:
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = corners_pos
    x = (1 - s) * (1 - t) * x0 + s * (1 - t) * x1 + s * t * x2 + (1 - s) * t * x3
    y = (1 - s) * (1 - t) * y0 + s * (1 - t) * y1 + s * t * y2 + (1 - s) * t * y3
    return (x, y)


class Subdivider:
    """Applies the six-tile subdivision rule to minimal tiles."""

    @staticmethod
    def subdivide_tile(
        complex_: Complex, tile_id: int, table: Optional[RuleTable] = None
    ) -> Tuple[int, ...]:
        """
        Subdivide one minimal tile.

        Inside an open round (as in :meth:`subdivide_round`) the tile joins that round and the
        round owner commits it. Otherwise the call opens a round of its own and commits it
        before returning, so ``complex_.round`` and ``max_depth`` advance by one.

        Args:
            complex_: Complex to mutate
            tile_id: Minimal tile of the current round
            table: Rule table (defaults to the complex's table)

        Returns:
            Ids of the six children in LeftUpper, Middle, RightUpper, RightLower, Lower,
            LeftLower order

        Raises:
            TileNotMinimalError: If the tile already has children or was created in the
                round being built
        """
        table = table or complex_.rule_table
        tile = complex_.tile(tile_id)
        if tile.children is not None:
            raise TileNotMinimalError(f"tile {tile_id} is not minimal (already subdivided)")
        owns_round = not complex_.has_open_round
        if not owns_round and tile.created_round >= complex_.building_round:
            raise TileNotMinimalError(f"tile {tile_id} already subdivided this round")
        round_index, depth = complex_.begin_round()

        points: Dict[str, int] = dict(zip(CORNER_NAMES, tile.corners))
        for side_index, segment_id in enumerate(tile.sides):
            segment = complex_.macro_edges[segment_id]
            if segment.midpoint is None:
                Subdivider._split_side(complex_, segment_id, round_index, depth)
            points[MIDPOINT_NAMES[side_index]] = segment.midpoint

        corner_pos = [complex_.vertices[v].pos for v in tile.corners]
        for label in InteriorLabel:
            points[label.value] = complex_.add_vertex(
                VertexKind.interior(label),
                depth=depth,
                created_round=round_index,
                owner=tile_id,
                plane=tile.plane,
                pos=bilinear(corner_pos, *INTERIOR_PARAMS[label.value]),
            )
        children = Subdivider.fill_interior(complex_, tile, points, round_index, table)
        if owns_round:
            complex_.commit_round()
        return children

    @staticmethod
    def _split_side(complex_: Complex, segment_id: int, round_index: int, depth: int) -> int:
        segment = complex_.macro_edges[segment_id]
        owner_plane = complex_.tiles[segment.owner].plane
        faces = complex_.minimal_tiles_on(segment_id)
        letters = {t: SIDE_ORDER[complex_.tiles[t].sides.index(segment_id)] for t in faces}
        coplanar = [t for t in faces if complex_.tiles[t].plane == owner_plane]

        if segment.is_interior:
            first = second = None
            for t in coplanar:
                side_child = Subdivider._child_below(complex_, t, segment.owner)
                if side_child == segment.a_side:
                    first = letters[t]
                else:
                    second = letters[t]
            kind = VertexKind.side_pair(first or second, second or first)
        else:
            letter = letters[coplanar[0]] if coplanar else SIDE_OF_BOUNDARY_TYPE[segment.edge_type]
            kind = VertexKind.edge_mid(letter)

        a, b = (complex_.vertices[v] for v in segment.endpoints)
        midpoint = complex_.add_vertex(
            kind,
            depth=depth,
            created_round=round_index,
            owner=segment.owner,
            plane=owner_plane,
            pos=((a.pos[0] + b.pos[0]) / 2, (a.pos[1] + b.pos[1]) / 2),
        )
        complex_.vertices[midpoint].midpoint_of = [(t, letters[t].value) for t in faces]
        complex_.split_segment(segment_id, midpoint)
        return midpoint

    @staticmethod
    def _child_below(complex_: Complex, tile_id: int, ancestor_id: int) -> Optional[str]:
        """Position label of the child of ``ancestor_id`` that contains ``tile_id``."""
        current = complex_.tiles[tile_id]
        while current.parent is not None:
            if current.parent == ancestor_id:
                return current.position.value
            current = complex_.tiles[current.parent]
        return None

    @staticmethod
    def fill_interior(
        complex_: Complex,
        tile: MacroTile,
        points: Dict[str, int],
        round_index: int,
        table: RuleTable,
    ) -> Tuple[int, ...]:
        """Create the eight interior macro-edges and the six children of a tile.

        ``points`` maps every corner and point name to a vertex; the four sides must
        already be split at U, R, D, L.
        """
        segment_for: Dict[FrozenSet[int], int] = {}
        for segment_id in tile.sides:
            for half in complex_.macro_edges[segment_id].halves:
                segment_for[frozenset(complex_.macro_edges[half].endpoints)] = half

        for edge_type, first, second in table.slots():
            a_child, b_child = table.a_sides[edge_type]
            segment_id = complex_.add_segment(
                edge_type=edge_type,
                owner=tile.id,
                endpoints=(points[first], points[second]),
                a_side=a_child.value,
                b_side=b_child.value,
                created_round=round_index,
            )
            segment_for[frozenset((points[first], points[second]))] = segment_id

        children = []
        for position in CHILD_ORDER:
            corners = tuple(points[name] for name in table.orientation[position])
            sides = tuple(
                segment_for[frozenset((corners[i], corners[(i + 1) % 4]))] for i in range(4)
            )
            children.append(
                complex_.add_tile(
                    corners=corners,
                    position=position,
                    parent=tile.id,
                    rotation=table.rotation(position),
                    created_round=round_index,
                    birth_level=1,
                    plane=tile.plane,
                    sides=sides,
                )
            )
        complex_.retire_minimal(tile.id)
        tile.points = {name: points[name] for name in MIDPOINT_NAMES + ("A", "B", "C")}
        tile.children = tuple(children)
        return tile.children

    @staticmethod
    def subdivide_round(complex_: Complex, table: Optional[RuleTable] = None) -> RoundReport:
        """
        Subdivide every minimal tile, including those of pasted planes, and commit the round.

        Args:
            complex_: Complex to mutate
            table: Rule table (defaults to the complex's table)

        Returns:
            RoundReport for the committed round
        """
        first_vertex = len(complex_.vertices)
        first_segment = len(complex_.macro_edges)
        round_index, _ = complex_.begin_round()
        targets = [
            t
            for t in complex_.minimal_tiles()
            if complex_.tiles[t].created_round < round_index
        ]
        for tile_id in targets:
            Subdivider.subdivide_tile(complex_, tile_id, table)
        complex_.commit_round()

        new_vertices = [complex_.vertices[v] for v in range(first_vertex, len(complex_.vertices))]
        new_segments = [
            complex_.macro_edges[s] for s in range(first_segment, len(complex_.macro_edges))
        ]
        report = RoundReport(
            round=complex_.round,
            tiles_subdivided=len(targets),
            created_vertices=dict(
                sorted(Counter(v.kind.category.value for v in new_vertices).items())
            ),
            created_edges=dict(
                sorted(Counter(s.edge_type for s in new_segments if s.parent is None).items())
            ),
            split_segments=sum(1 for s in new_segments if s.parent is not None) // 2,
            max_depth=complex_.max_depth,
        )
        complex_.rounds_log.append(report)
        logger.info(
            "Subdivision round %d: %d tiles, %d new vertices, max depth %d",
            report.round,
            report.tiles_subdivided,
            len(new_vertices),
            report.max_depth,
        )
        return report


def subdivide_tile(
    complex_: Complex, tile_id: int, table: Optional[RuleTable] = None
) -> Tuple[int, ...]:
    return Subdivider.subdivide_tile(complex_, tile_id, table)


def subdivide_round(complex_: Complex, table: Optional[RuleTable] = None) -> RoundReport:
    return Subdivider.subdivide_round(complex_, table)
