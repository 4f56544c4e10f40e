"""Rotation systems and structural validation of a built complex."""
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from hiercomplex.core.kinds import CornerPosition, VertexCategory
from hiercomplex.core.model import Complex, GraphEdge

logger = logging.getLogger(__name__)


class PlaneEuler(BaseModel):
    plane: int
    vertices: int
    edges: int
    faces: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces


class StructuralReport(BaseModel):
    """Outcome of :func:`validate_complex`; never raised, only reported."""

    round: int
    planes: List[PlaneEuler] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def plane(self, plane_id: int) -> PlaneEuler:
        return next(p for p in self.planes if p.plane == plane_id)


def rotation_order(
    complex_: Complex, vertex_id: int, plane: Optional[int] = None
) -> List[GraphEdge]:
    """Clockwise cyclic order of the edges at a vertex inside one plane.

    The sequence starts at the edge following the outer face for boundary vertices and at
    the smallest neighbour id otherwise. Defaults to the vertex's own plane.

    Raises:
        UnknownVertexError: If the vertex does not exist
    """
    vertex = complex_.vertex(vertex_id)
    plane_id = vertex.plane if plane is None else plane
    key = ("rotation", vertex_id, plane_id)
    cached = complex_._cache.get(key)
    if cached is not None:
        return list(cached)

    # Each clockwise face (p, v, n) around v puts p right after n in the clockwise order.
    successor: Dict[int, int] = {}
    for t in complex_.minimal_tiles_at(vertex_id):
        tile = complex_.tiles[t]
        if tile.plane != plane_id:
            continue
        c = tile.corners
        i = c.index(vertex_id)
        successor[c[(i + 1) % 4]] = c[(i - 1) % 4]

    order: List[int] = []
    if successor:
        targets = set(successor.values())
        open_starts = sorted(n for n in successor if n not in targets)
        start = open_starts[0] if open_starts else min(successor)
        current: Optional[int] = start
        seen = set()
        while current is not None and current not in seen:
            seen.add(current)
            order.append(current)
            current = successor.get(current)
        # Faces that do not chain up around v are appended in id order.
        leftovers = sorted((set(successor) | targets) - seen)
        order.extend(leftovers)

    edges = [(vertex_id, n) for n in order if complex_.has_edge(vertex_id, n)]
    complex_._cache[key] = tuple(edges)
    return edges


def rotation_orders(complex_: Complex, vertex_id: int) -> Dict[int, List[GraphEdge]]:
    """One clockwise order per plane the vertex appears in."""
    planes = sorted({complex_.tiles[t].plane for t in complex_.minimal_tiles_at(vertex_id)})
    return {p: rotation_order(complex_, vertex_id, p) for p in planes}


def degree_snapshot(complex_: Complex) -> Dict[int, int]:
    return {v: complex_.degree(v) for v in sorted(complex_.vertices)}


# Rounds after its creation from which a vertex's degree no longer changes.
SETTLE_ROUNDS = 3


def degree_drift(
    history: List[Dict[int, int]], created_rounds: Dict[int, int]
) -> List[Tuple[int, int, int, int]]:
    """
    Degree changes of settled vertices between consecutive rounds.

    Args:
        history: ``history[n]`` is the degree snapshot after round ``n``
        created_rounds: Creation round of every vertex in the snapshots

    Returns:
        (round n, vertex, degree at n, degree at n + 1) for every vertex with
        n >= created_round + SETTLE_ROUNDS whose degree differs
    """
    drift = []
    for n in range(len(history) - 1):
        before, after = history[n], history[n + 1]
        for v, degree in before.items():
            if n >= created_rounds[v] + SETTLE_ROUNDS and after.get(v) != degree:
                drift.append((n, v, degree, after.get(v, 0)))
    return drift


def settled_count(history: List[Dict[int, int]], created_rounds: Dict[int, int]) -> int:
    """Vertex-round pairs compared by :func:`degree_drift`."""
    return sum(
        1
        for n in range(len(history) - 1)
        for v in history[n]
        if n >= created_rounds[v] + SETTLE_ROUNDS
    )


class StructureValidator:
    """Checks a complex against the invariants every builder output satisfies."""

    @staticmethod
    def validate_complex(complex_: Complex) -> StructuralReport:
        """
        Validate faces, macro-edges, vertex kinds and per-plane Euler characteristics.

        Args:
            complex_: Complex to check

        Returns:
            StructuralReport with one PlaneEuler per plane and the violations found
        """
        report = StructuralReport(round=complex_.round)
        StructureValidator._check_faces(complex_, report)
        StructureValidator._check_edges(complex_, report)
        StructureValidator._check_vertices(complex_, report)
        for plane_id in sorted(complex_.planes):
            faces = complex_.plane_faces(plane_id)
            edges = complex_.plane_edges(plane_id)
            verts = {v for t in faces for v in complex_.tiles[t].corners}
            entry = PlaneEuler(
                plane=plane_id, vertices=len(verts), edges=len(edges), faces=len(faces)
            )
            report.planes.append(entry)
            if entry.euler != 1:
                report.violations.append(
                    f"plane {plane_id}: Euler characteristic {entry.euler}, expected 1"
                )
        if report.violations:
            logger.warning(
                "Structural validation found %d violations (first: %s)",
                len(report.violations),
                report.violations[0],
            )
        return report

    @staticmethod
    def _check_faces(complex_: Complex, report: StructuralReport) -> None:
        for t in complex_.minimal_tiles():
            corners = complex_.tiles[t].corners
            if len(set(corners)) != 4:
                report.violations.append(f"tile {t}: minimal tile cycle broken (repeated corner)")
                continue
            for i in range(4):
                a, b = corners[i], corners[(i + 1) % 4]
                if not complex_.has_edge(a, b):
                    report.violations.append(
                        f"tile {t}: minimal tile cycle broken (missing edge {a}-{b})"
                    )

    @staticmethod
    def _check_edges(complex_: Complex, report: StructuralReport) -> None:
        covered = set()
        for t in complex_.minimal_tiles():
            c = complex_.tiles[t].corners
            for i in range(4):
                covered.add(frozenset((c[i], c[(i + 1) % 4])))
        for a, b in complex_.graph_edges():
            if frozenset((a, b)) not in covered:
                report.violations.append(f"edge {a}-{b}: orphan graph edge (no minimal tile)")
        for segment in complex_.macro_edges.values():
            if segment.midpoint is not None:
                if segment.halves is None:
                    report.violations.append(f"macro-edge {segment.id}: midpoint without halves")
                    continue
                h0, h1 = (complex_.macro_edges[h] for h in segment.halves)
                shared = [
                    len(set(h.endpoints) & set(segment.endpoints)) for h in (h0, h1)
                ]
                if shared != [1, 1]:
                    report.violations.append(
                        f"macro-edge {segment.id}: halves do not share one endpoint each"
                    )
                mid_depth = complex_.vertices[segment.midpoint].depth
                end_depth = max(complex_.vertices[v].depth for v in segment.endpoints)
                if mid_depth <= end_depth:
                    report.violations.append(
                        f"vertex {segment.midpoint}: midpoint depth {mid_depth} not above "
                        f"endpoint depth {end_depth}"
                    )
            if not segment.is_leaf:
                continue
            owner_plane = complex_.tiles[segment.owner].plane
            faces = [
                t
                for t in complex_.minimal_tiles_on(segment.id)
                if complex_.tiles[t].plane == owner_plane
            ]
            expected = 2 if segment.is_interior else 1
            if len(faces) != expected:
                report.violations.append(
                    f"macro-edge {segment.id}: {len(faces)} faces in its plane, expected {expected}"
                )

    @staticmethod
    def _check_vertices(complex_: Complex, report: StructuralReport) -> None:
        depths = [v.depth for v in complex_.vertices.values()]
        if depths and max(depths) != complex_.max_depth:
            report.violations.append(
                f"max_depth {complex_.max_depth} differs from deepest vertex {max(depths)}"
            )
        for v in complex_.vertices.values():
            if v.depth < -1:
                report.violations.append(f"vertex {v.id}: depth {v.depth} below -1")
            if v.depth == -1 and v.kind.category is not VertexCategory.CORNER:
                report.violations.append(f"vertex {v.id}: depth -1 on a non-corner")
            if v.kind.category is VertexCategory.SIDE and v.carrier is not None:
                if not complex_.macro_edges[v.carrier].is_interior:
                    report.violations.append(
                        f"vertex {v.id}: side vertex carried by a boundary macro-edge"
                    )
        for t in complex_.tiles.values():
            if t.pasted and (t.birth_level != 2 or t.core != t.corners[0]):
                report.violations.append(f"tile {t.id}: pasted tile without core at UL")
        root = complex_.tiles.get(0)
        if root is not None:
            for v, position in zip(root.corners, CornerPosition):
                if complex_.vertices[v].depth != -1:
                    report.violations.append(f"root corner {position.value} has depth != -1")


def validate_complex(complex_: Complex) -> StructuralReport:
    return StructureValidator.validate_complex(complex_)
