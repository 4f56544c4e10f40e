"""
Self-describing document form of a built complex.

Every table is flat and sorted by id, so two builds with the same parameters serialize to
identical text and an export/import round trip keeps every id.
"""
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from hiercomplex.core.errors import DocumentError
from hiercomplex.core.kinds import ChildPosition, VertexKind
from hiercomplex.core.model import (
    Complex,
    MacroEdge,
    MacroTile,
    PastingRecord,
    PastingSite,
    Plane,
    RoundReport,
    Vertex,
)
from hiercomplex.core.rules import RuleTable

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class VertexRow(BaseModel):
    id: int
    kind: str = Field(description="Kind code, e.g. side:UD")
    depth: int
    created_round: int
    owner: int
    plane: int
    carrier: Optional[int] = None
    midpoint_of: List[Tuple[int, str]] = Field(default_factory=list)
    pos: Tuple[float, float] = (0.0, 0.0)

    @classmethod
    def of(cls, vertex: Vertex) -> "VertexRow":
        return cls(
            id=vertex.id,
            kind=vertex.kind.code,
            depth=vertex.depth,
            created_round=vertex.created_round,
            owner=vertex.owner,
            plane=vertex.plane,
            carrier=vertex.carrier,
            midpoint_of=sorted(vertex.midpoint_of),
            pos=vertex.pos,
        )

    def restore(self) -> Vertex:
        return Vertex(
            id=self.id,
            kind=VertexKind.from_code(self.kind),
            depth=self.depth,
            created_round=self.created_round,
            owner=self.owner,
            plane=self.plane,
            carrier=self.carrier,
            midpoint_of=[tuple(m) for m in self.midpoint_of],
            pos=tuple(self.pos),
        )


class MacroEdgeRow(BaseModel):
    id: int
    edge_type: int
    owner: int
    endpoints: Tuple[int, int]
    a_side: str
    b_side: str
    created_round: int
    parent: Optional[int] = None
    midpoint: Optional[int] = None
    halves: Optional[Tuple[int, int]] = None

    @classmethod
    def of(cls, segment: MacroEdge) -> "MacroEdgeRow":
        return cls(
            id=segment.id,
            edge_type=segment.edge_type,
            owner=segment.owner,
            endpoints=segment.endpoints,
            a_side=segment.a_side,
            b_side=segment.b_side,
            created_round=segment.created_round,
            parent=segment.parent,
            midpoint=segment.midpoint,
            halves=segment.halves,
        )

    def restore(self) -> MacroEdge:
        return MacroEdge(
            id=self.id,
            edge_type=self.edge_type,
            owner=self.owner,
            endpoints=tuple(self.endpoints),
            a_side=self.a_side,
            b_side=self.b_side,
            created_round=self.created_round,
            parent=self.parent,
            midpoint=self.midpoint,
            halves=tuple(self.halves) if self.halves is not None else None,
        )


class TileRow(BaseModel):
    id: int
    corners: Tuple[int, int, int, int]
    position: ChildPosition
    parent: Optional[int]
    rotation: int
    created_round: int
    birth_level: int
    plane: int
    sides: Tuple[int, int, int, int]
    core: Optional[int] = None
    children: Optional[List[int]] = None
    points: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def of(cls, tile: MacroTile) -> "TileRow":
        return cls(
            id=tile.id,
            corners=tile.corners,
            position=tile.position,
            parent=tile.parent,
            rotation=tile.rotation,
            created_round=tile.created_round,
            birth_level=tile.birth_level,
            plane=tile.plane,
            sides=tile.sides,
            core=tile.core,
            children=list(tile.children) if tile.children is not None else None,
            points=dict(sorted(tile.points.items())),
        )

    def restore(self) -> MacroTile:
        return MacroTile(
            id=self.id,
            corners=tuple(self.corners),
            position=self.position,
            parent=self.parent,
            rotation=self.rotation,
            created_round=self.created_round,
            birth_level=self.birth_level,
            plane=self.plane,
            sides=tuple(self.sides),
            core=self.core,
            children=tuple(self.children) if self.children is not None else None,
            points=dict(self.points),
        )


class PlaneRow(BaseModel):
    id: int
    root_tile: int
    created_round: int
    pasted_tile: Optional[int] = None


class PastingRow(BaseModel):
    x1: int
    x2: int
    y: int
    z2: int
    z1: int
    x_segment: int
    z_segment: int
    host_tiles: List[int]
    base_plane: int
    revision: int
    tile: int
    plane: int
    round: int
    t1: int
    t2: int
    t3: int
    ta: int
    tb: int
    tc: int
    macro_edges: List[int]
    entry_edges: List[Tuple[int, int]] = Field(default_factory=list)

    @classmethod
    def of(cls, record: PastingRecord) -> "PastingRow":
        site = record.site
        return cls(
            x1=site.x1,
            x2=site.x2,
            y=site.y,
            z2=site.z2,
            z1=site.z1,
            x_segment=site.x_segment,
            z_segment=site.z_segment,
            host_tiles=list(site.host_tiles),
            base_plane=site.base_plane,
            revision=site.revision,
            tile=record.tile,
            plane=record.plane,
            round=record.round,
            t1=record.t1,
            t2=record.t2,
            t3=record.t3,
            ta=record.ta,
            tb=record.tb,
            tc=record.tc,
            macro_edges=list(record.macro_edges),
            entry_edges=[tuple(e) for e in record.entry_edges],
        )

    def restore(self) -> PastingRecord:
        site = PastingSite(
            x1=self.x1,
            x2=self.x2,
            y=self.y,
            z2=self.z2,
            z1=self.z1,
            x_segment=self.x_segment,
            z_segment=self.z_segment,
            host_tiles=tuple(self.host_tiles),
            base_plane=self.base_plane,
            revision=self.revision,
        )
        return PastingRecord(
            site=site,
            tile=self.tile,
            plane=self.plane,
            round=self.round,
            t1=self.t1,
            t2=self.t2,
            t3=self.t3,
            ta=self.ta,
            tb=self.tb,
            tc=self.tc,
            macro_edges=tuple(self.macro_edges),
            entry_edges=[tuple(e) for e in self.entry_edges],
        )


class ComplexDocument(BaseModel):
    """Versioned, flat tables of a complex, each sorted by id."""

    version: int = FORMAT_VERSION
    round: int
    max_depth: int
    revision: int = 0
    rule_table: RuleTable
    rounds_log: List[RoundReport] = Field(default_factory=list)
    vertices: List[VertexRow] = Field(default_factory=list)
    macro_edges: List[MacroEdgeRow] = Field(default_factory=list)
    tiles: List[TileRow] = Field(default_factory=list)
    planes: List[PlaneRow] = Field(default_factory=list)
    pasting_log: List[PastingRow] = Field(default_factory=list)
    graph_edges: List[Tuple[int, int, int]] = Field(
        default_factory=list, description="(a, b, macro-edge) with a < b"
    )

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def export_document(complex_: Complex) -> ComplexDocument:
    """Snapshot a complex as a document."""
    return ComplexDocument(
        round=complex_.round,
        max_depth=complex_.max_depth,
        revision=complex_.revision,
        rule_table=complex_.rule_table,
        rounds_log=[r.model_copy() for r in complex_.rounds_log],
        vertices=[VertexRow.of(complex_.vertices[v]) for v in sorted(complex_.vertices)],
        macro_edges=[
            MacroEdgeRow.of(complex_.macro_edges[s]) for s in sorted(complex_.macro_edges)
        ],
        tiles=[TileRow.of(complex_.tiles[t]) for t in sorted(complex_.tiles)],
        planes=[
            PlaneRow(
                id=p.id,
                root_tile=p.root_tile,
                created_round=p.created_round,
                pasted_tile=p.pasted_tile,
            )
            for p in sorted(complex_.planes.values(), key=lambda p: p.id)
        ],
        pasting_log=[PastingRow.of(r) for r in complex_.pasting_log],
        graph_edges=[(a, b, complex_.segment_of(a, b).id) for a, b in complex_.graph_edges()],
    )


def _dangling(document: ComplexDocument) -> List[str]:
    vertices = {row.id for row in document.vertices}
    segments = {row.id for row in document.macro_edges}
    tiles = {row.id for row in document.tiles}
    problems = []
    for a, b, segment_id in document.graph_edges:
        if a not in vertices or b not in vertices:
            problems.append(f"graph edge {a}-{b} has an unknown endpoint")
        if segment_id not in segments:
            problems.append(f"graph edge {a}-{b} refers to unknown macro-edge {segment_id}")
    for row in document.macro_edges:
        if any(v not in vertices for v in row.endpoints):
            problems.append(f"macro-edge {row.id} has an unknown endpoint")
    for row in document.tiles:
        if any(v not in vertices for v in row.corners):
            problems.append(f"tile {row.id} has an unknown corner")
        if any(s not in segments for s in row.sides):
            problems.append(f"tile {row.id} has an unknown side")
        if any(c not in tiles for c in row.children or ()):
            problems.append(f"tile {row.id} has an unknown child")
    for row in document.planes:
        if row.root_tile not in tiles:
            problems.append(f"plane {row.id} has unknown root tile {row.root_tile}")
    return problems


def import_document(document: ComplexDocument) -> Complex:
    """
    Rebuild a complex from a document.

    Graph edges are taken from the document rather than recomputed, so a damaged document
    stays damaged and the structure check can report it.

    Raises:
        DocumentError: If the version is unsupported or a table refers to unknown ids
    """
    if document.version != FORMAT_VERSION:
        raise DocumentError(
            f"Unsupported document version {document.version} (expected {FORMAT_VERSION})"
        )
    problems = _dangling(document)
    if problems:
        raise DocumentError("; ".join(problems[:10]))

    complex_ = Complex(document.rule_table)
    complex_.round = document.round
    complex_.max_depth = document.max_depth
    complex_.revision = document.revision
    complex_.rounds_log = [r.model_copy() for r in document.rounds_log]
    complex_.vertices = {row.id: row.restore() for row in document.vertices}
    complex_.macro_edges = {row.id: row.restore() for row in document.macro_edges}
    complex_.tiles = {row.id: row.restore() for row in document.tiles}
    complex_.planes = {
        row.id: Plane(
            id=row.id,
            root_tile=row.root_tile,
            created_round=row.created_round,
            pasted_tile=row.pasted_tile,
        )
        for row in document.planes
    }
    complex_.pasting_log = [row.restore() for row in document.pasting_log]
    complex_.rebuild_indexes(document.graph_edges)
    logger.info("Imported %r", complex_)
    return complex_


def parse_document(text: str) -> ComplexDocument:
    """
    Parse document JSON.

    Raises:
        DocumentError: If the text is not a valid document
    """
    try:
        return ComplexDocument.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise DocumentError(f"Malformed document at {where or 'top level'}: {first['msg']}") from e
