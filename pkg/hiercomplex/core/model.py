"""In-memory hierarchical complex: vertices, macro-edges, macrotiles and planes."""
import copy
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from hiercomplex.core.errors import (
    ComplexError,
    InvalidPathError,
    TileNotCreatedError,
    UnknownPlaneError,
    UnknownTileError,
    UnknownVertexError,
)
from hiercomplex.core.kinds import (
    EXTERIOR,
    ChildPosition,
    CornerPosition,
    SideLetter,
    VertexKind,
)
from hiercomplex.core.rules import DEFAULT_RULE_TABLE, RuleTable

logger = logging.getLogger(__name__)

# Boundary edge types: 9 left, 10 right, 11 top, 12 bottom.
BOUNDARY_TYPES: Dict[SideLetter, int] = {
    SideLetter.L: 9,
    SideLetter.R: 10,
    SideLetter.U: 11,
    SideLetter.D: 12,
}
SIDE_OF_BOUNDARY_TYPE: Dict[int, SideLetter] = {v: k for k, v in BOUNDARY_TYPES.items()}

ROOT_CORNER_KINDS = (CornerPosition.CUL, CornerPosition.CUR, CornerPosition.CDR, CornerPosition.CDL)
ROOT_COORDS = ((0.0, 2.0), (2.0, 2.0), (2.0, 0.0), (0.0, 0.0))

GraphEdge = Tuple[int, int]


@dataclass(slots=True)
class Vertex:
    id: int
    kind: VertexKind
    depth: int
    created_round: int
    owner: int
    plane: int
    carrier: Optional[int] = None
    midpoint_of: List[Tuple[int, str]] = field(default_factory=list)
    pos: Tuple[float, float] = (0.0, 0.0)


@dataclass(slots=True)
class MacroEdge:
    """A segment of the macro-edge hierarchy; leaves are graph edges."""

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

    @property
    def is_interior(self) -> bool:
        return 1 <= self.edge_type <= 8

    @property
    def is_leaf(self) -> bool:
        return self.halves is None

    def other(self, vertex_id: int) -> int:
        a, b = self.endpoints
        if vertex_id == a:
            return b
        if vertex_id == b:
            return a
        raise ValueError(f"Vertex {vertex_id} is not an endpoint of macro-edge {self.id}")


@dataclass(slots=True)
class MacroTile:
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
    children: Optional[Tuple[int, ...]] = None
    points: Dict[str, int] = field(default_factory=dict)

    @property
    def pasted(self) -> bool:
        return self.position is ChildPosition.PASTED

    def level(self, round_index: int) -> int:
        return tile_level(self, round_index)

    def named_point(self, name: str) -> int:
        """Vertex id for a corner name (UL, UR, LR, LL) or a point name (U, R, D, L, A, B, C)."""
        if name in ("UL", "UR", "LR", "LL"):
            return self.corners[("UL", "UR", "LR", "LL").index(name)]
        return self.points[name]


@dataclass(slots=True)
class Plane:
    id: int
    root_tile: int
    created_round: int
    pasted_tile: Optional[int] = None


@dataclass(frozen=True, slots=True)
class PastingSite:
    """Oriented 4-edge path X1 X2 Y Z2 Z1 selected for a pasting."""

    x1: int
    x2: int
    y: int
    z2: int
    z1: int
    x_segment: int
    z_segment: int
    host_tiles: Tuple[int, ...]
    base_plane: int
    revision: int

    @property
    def path(self) -> Tuple[int, int, int, int, int]:
        return (self.x1, self.x2, self.y, self.z2, self.z1)


@dataclass(slots=True)
class PastingRecord:
    site: PastingSite
    tile: int
    plane: int
    round: int
    t1: int
    t2: int
    t3: int
    ta: int
    tb: int
    tc: int
    macro_edges: Tuple[int, ...]
    entry_edges: List[GraphEdge] = field(default_factory=list)

    @property
    def created_vertices(self) -> Tuple[int, ...]:
        return (self.t1, self.t2, self.t3, self.ta, self.tb, self.tc)


class RoundReport(BaseModel):
    """Summary of one subdivision round."""

    round: int = Field(description="Index of the round after it was committed")
    tiles_subdivided: int = 0
    created_vertices: Dict[str, int] = Field(default_factory=dict)
    created_edges: Dict[int, int] = Field(default_factory=dict)
    split_segments: int = 0
    pastings: int = 0
    max_depth: int = -1


def tile_level(tile: MacroTile, round_index: int) -> int:
    """Level of a tile at a round: birth level plus rounds elapsed since creation."""
    if round_index < tile.created_round:
        raise TileNotCreatedError(tile.id, round_index, tile.created_round)
    return tile.birth_level + (round_index - tile.created_round)


def edge_level(complex_: "Complex", edge: MacroEdge, round_index: Optional[int] = None) -> int:
    """Level of a macro-edge: the level of the tile owning it."""
    if round_index is None:
        round_index = complex_.round
    return tile_level(complex_.tile(edge.owner), round_index)


def marked_position(side_length: int, index: int) -> int:
    """Offset of marked point ``index`` (0 = UL, 1 = U, 2 = UR, ...) along the perimeter."""
    if side_length == 1:
        if index % 2:
            raise ValueError("Minimal tiles have no side midpoints")
        return index // 2
    return index * side_length // 2


class Complex:
    """Growing hierarchical 2-complex.

    Graph edges are exactly the leaf segments of the macro-edge hierarchy. Minimal tiles
    (level 1) are the tiles without children; they are the faces of their plane.
    """

    def __init__(self, rule_table: Optional[RuleTable] = None):
        self.rule_table = rule_table or DEFAULT_RULE_TABLE
        self.vertices: Dict[int, Vertex] = {}
        self.macro_edges: Dict[int, MacroEdge] = {}
        self.tiles: Dict[int, MacroTile] = {}
        self.planes: Dict[int, Plane] = {}
        self.round = 0
        self.max_depth = -1
        self.pasting_log: List[PastingRecord] = []
        self.rounds_log: List[RoundReport] = []
        self.revision = 0
        self._pending: Optional[Tuple[int, int]] = None
        self._adj: Dict[int, Set[int]] = {}
        self._edge_segment: Dict[FrozenSet[int], int] = {}
        self._minimal_by_vertex: Dict[int, Set[int]] = {}
        self._minimal_by_segment: Dict[int, Set[int]] = {}
        self._corner_tiles: Dict[int, List[int]] = {}
        self._cache: Dict[Any, Any] = {}

    # ------------------------------------------------------------------ creation

    @classmethod
    def new_root(cls, rule_table: Optional[RuleTable] = None) -> "Complex":
        """Level-1 complex: a single 4-cycle in the base plane."""
        complex_ = cls(rule_table)
        plane_id = complex_.add_plane(root_tile=0, created_round=0)
        corners = tuple(
            complex_.add_vertex(
                VertexKind.corner_at(position),
                depth=-1,
                created_round=0,
                owner=0,
                plane=plane_id,
                pos=ROOT_COORDS[i],
            )
            for i, position in enumerate(ROOT_CORNER_KINDS)
        )
        sides = []
        for i, letter in enumerate((SideLetter.U, SideLetter.R, SideLetter.D, SideLetter.L)):
            sides.append(
                complex_.add_segment(
                    edge_type=BOUNDARY_TYPES[letter],
                    owner=0,
                    endpoints=(corners[i], corners[(i + 1) % 4]),
                    a_side=ChildPosition.ROOT.value,
                    b_side=EXTERIOR,
                    created_round=0,
                )
            )
        complex_.add_tile(
            corners=corners,
            position=ChildPosition.ROOT,
            parent=None,
            rotation=0,
            created_round=0,
            birth_level=1,
            plane=plane_id,
            sides=tuple(sides),
        )
        complex_.touch()
        return complex_

    def add_vertex(
        self,
        kind: VertexKind,
        depth: int,
        created_round: int,
        owner: int,
        plane: int,
        carrier: Optional[int] = None,
        pos: Tuple[float, float] = (0.0, 0.0),
    ) -> int:
        vertex_id = len(self.vertices)
        self.vertices[vertex_id] = Vertex(
            id=vertex_id,
            kind=kind,
            depth=depth,
            created_round=created_round,
            owner=owner,
            plane=plane,
            carrier=carrier,
            pos=pos,
        )
        self._adj[vertex_id] = set()
        return vertex_id

    def add_segment(
        self,
        edge_type: int,
        owner: int,
        endpoints: Tuple[int, int],
        a_side: str,
        b_side: str,
        created_round: int,
        parent: Optional[int] = None,
    ) -> int:
        """Create a leaf segment and the graph edge it carries."""
        segment_id = len(self.macro_edges)
        self.macro_edges[segment_id] = MacroEdge(
            id=segment_id,
            edge_type=edge_type,
            owner=owner,
            endpoints=endpoints,
            a_side=a_side,
            b_side=b_side,
            created_round=created_round,
            parent=parent,
        )
        self._link(endpoints[0], endpoints[1], segment_id)
        return segment_id

    def split_segment(self, segment_id: int, midpoint: int) -> Tuple[int, int]:
        """Replace a leaf segment's graph edge by its two halves through ``midpoint``."""
        segment = self.macro_edges[segment_id]
        if not segment.is_leaf:
            raise ComplexError(f"Macro-edge {segment_id} is already split")
        a, b = segment.endpoints
        self._unlink(a, b)
        segment.midpoint = midpoint
        halves = tuple(
            self.add_segment(
                edge_type=segment.edge_type,
                owner=segment.owner,
                endpoints=ends,
                a_side=segment.a_side,
                b_side=segment.b_side,
                created_round=self.building_round,
                parent=segment_id,
            )
            for ends in ((a, midpoint), (midpoint, b))
        )
        segment.halves = (halves[0], halves[1])
        self.vertices[midpoint].carrier = segment_id
        return segment.halves

    def add_tile(
        self,
        corners: Tuple[int, int, int, int],
        position: ChildPosition,
        parent: Optional[int],
        rotation: int,
        created_round: int,
        birth_level: int,
        plane: int,
        sides: Tuple[int, int, int, int],
        core: Optional[int] = None,
        minimal: bool = True,
    ) -> int:
        tile_id = len(self.tiles)
        self.tiles[tile_id] = MacroTile(
            id=tile_id,
            corners=corners,
            position=position,
            parent=parent,
            rotation=rotation,
            created_round=created_round,
            birth_level=birth_level,
            plane=plane,
            sides=sides,
            core=core,
        )
        for v in corners:
            self._corner_tiles.setdefault(v, []).append(tile_id)
        if minimal:
            self._register_minimal(tile_id)
        return tile_id

    def add_plane(
        self, root_tile: int, created_round: int, pasted_tile: Optional[int] = None
    ) -> int:
        plane_id = len(self.planes)
        self.planes[plane_id] = Plane(
            id=plane_id, root_tile=root_tile, created_round=created_round, pasted_tile=pasted_tile
        )
        return plane_id

    def retire_minimal(self, tile_id: int) -> None:
        tile = self.tiles[tile_id]
        for v in tile.corners:
            self._minimal_by_vertex.get(v, set()).discard(tile_id)
        for s in tile.sides:
            self._minimal_by_segment.get(s, set()).discard(tile_id)

    def _register_minimal(self, tile_id: int) -> None:
        tile = self.tiles[tile_id]
        for v in tile.corners:
            self._minimal_by_vertex.setdefault(v, set()).add(tile_id)
        for s in tile.sides:
            self._minimal_by_segment.setdefault(s, set()).add(tile_id)

    def _link(self, a: int, b: int, segment_id: int) -> None:
        self._adj.setdefault(a, set()).add(b)
        self._adj.setdefault(b, set()).add(a)
        self._edge_segment[frozenset((a, b))] = segment_id

    def _unlink(self, a: int, b: int) -> None:
        self._adj[a].discard(b)
        self._adj[b].discard(a)
        self._edge_segment.pop(frozenset((a, b)), None)

    def remove_graph_edge(self, a: int, b: int) -> None:
        """Drop a graph edge without touching the hierarchy (used to damage a complex)."""
        if not self.has_edge(a, b):
            raise InvalidPathError(f"No graph edge {a}-{b}")
        self._unlink(a, b)
        self.touch()

    def touch(self) -> None:
        """Record a mutation and drop every derived cache."""
        self.revision += 1
        self._cache.clear()

    # ------------------------------------------------------------------ rounds

    def begin_round(self) -> Tuple[int, int]:
        """Open a subdivision round; returns (round being built, depth of new vertices)."""
        if self._pending is None:
            self._pending = (self.round + 1, self.max_depth + 1)
        return self._pending

    def commit_round(self) -> None:
        if self._pending is None:
            return
        self.round, self.max_depth = self._pending
        self._pending = None
        self.touch()

    @property
    def has_open_round(self) -> bool:
        return self._pending is not None

    @property
    def building_round(self) -> int:
        return self._pending[0] if self._pending else self.round

    # ------------------------------------------------------------------ lookups

    def vertex(self, vertex_id: int) -> Vertex:
        try:
            return self.vertices[vertex_id]
        except KeyError:
            raise UnknownVertexError(vertex_id) from None

    def tile(self, tile_id: int) -> MacroTile:
        try:
            return self.tiles[tile_id]
        except KeyError:
            raise UnknownTileError(tile_id) from None

    def plane(self, plane_id: int) -> Plane:
        try:
            return self.planes[plane_id]
        except KeyError:
            raise UnknownPlaneError(plane_id) from None

    def neighbours(self, vertex_id: int) -> List[int]:
        self.vertex(vertex_id)
        return sorted(self._adj.get(vertex_id, ()))

    def degree(self, vertex_id: int) -> int:
        self.vertex(vertex_id)
        return len(self._adj.get(vertex_id, ()))

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj.get(a, ())

    def segment_of(self, a: int, b: int) -> MacroEdge:
        """Leaf segment carrying the graph edge a-b."""
        try:
            return self.macro_edges[self._edge_segment[frozenset((a, b))]]
        except KeyError:
            raise InvalidPathError(f"No graph edge {a}-{b}") from None

    def graph_edges(self) -> List[GraphEdge]:
        return sorted(tuple(sorted(e)) for e in self._edge_segment)

    def counts(self) -> Dict[str, int]:
        return {
            "vertices": len(self.vertices),
            "edges": len(self._edge_segment),
            "tiles": len(self.tiles),
            "minimal_tiles": len(self.minimal_tiles()),
            "planes": len(self.planes),
            "pastings": len(self.pasting_log),
        }

    def tile_level(self, tile_id: int) -> int:
        return tile_level(self.tile(tile_id), self.round)

    def edge_level(self, a: int, b: int) -> int:
        return edge_level(self, self.segment_of(a, b), self.round)

    def is_minimal(self, tile_id: int) -> bool:
        return self.tile(tile_id).children is None

    def minimal_tiles(self) -> List[int]:
        return [t.id for t in self.tiles.values() if t.children is None]

    def minimal_tiles_at(self, vertex_id: int) -> List[int]:
        return sorted(self._minimal_by_vertex.get(vertex_id, ()))

    def minimal_tiles_on(self, segment_id: int) -> List[int]:
        return sorted(self._minimal_by_segment.get(segment_id, ()))

    def corner_tiles(self, vertex_id: int) -> List[int]:
        return list(self._corner_tiles.get(vertex_id, ()))

    def tiles_of_level(self, level: int, plane: Optional[int] = None) -> List[int]:
        return [
            t.id
            for t in self.tiles.values()
            if t.created_round <= self.round
            and tile_level(t, self.round) == level
            and (plane is None or t.plane == plane)
        ]

    def root_segment(self, segment_id: int) -> int:
        segment = self.macro_edges[segment_id]
        while segment.parent is not None:
            segment = self.macro_edges[segment.parent]
        return segment.id

    def ancestors(self, tile_id: int) -> List[int]:
        """The tile itself followed by its parents up to the root of its plane."""
        chain = []
        current: Optional[int] = tile_id
        while current is not None:
            chain.append(current)
            current = self.tiles[current].parent
        return chain

    def pasting_by_plane(self, plane_id: int) -> Optional[PastingRecord]:
        index = self._cached("pasting_by_plane", lambda: {r.plane: r for r in self.pasting_log})
        return index.get(plane_id)

    def pastings_with_core(self, vertex_id: int) -> List[PastingRecord]:
        return [r for r in self.pasting_log if r.site.y == vertex_id]

    # ------------------------------------------------------------------ tile geometry

    def segment_chain(self, segment_id: int, start: int) -> List[int]:
        """Vertices along a segment, from ``start`` to its other endpoint."""
        segment = self.macro_edges[segment_id]
        if start == segment.endpoints[0]:
            forward = True
        elif start == segment.endpoints[1]:
            forward = False
        else:
            raise ValueError(f"Vertex {start} is not an endpoint of macro-edge {segment_id}")
        out = [start]
        stack = [(segment_id, forward)]
        while stack:
            sid, fwd = stack.pop()
            s = self.macro_edges[sid]
            if s.halves is None:
                out.append(s.endpoints[1] if fwd else s.endpoints[0])
            else:
                first, second = s.halves if fwd else (s.halves[1], s.halves[0])
                stack.append((second, fwd))
                stack.append((first, fwd))
        return out

    def perimeter(self, tile_id: int) -> Tuple[int, ...]:
        """Clockwise cyclic vertex list of the tile boundary, starting at its UL corner."""
        key = ("perimeter", tile_id)
        if key not in self._cache:
            tile = self.tile(tile_id)
            cycle: List[int] = []
            for i in range(4):
                chain = self.segment_chain(tile.sides[i], tile.corners[i])
                if chain[-1] != tile.corners[(i + 1) % 4]:
                    raise ComplexError(f"Side {i} of tile {tile_id} does not end at a corner")
                cycle.extend(chain[:-1])
            self._cache[key] = tuple(cycle)
        return self._cache[key]

    def side_length(self, tile_id: int) -> int:
        return len(self.perimeter(tile_id)) // 4

    def boundary_vertices(self, tile_id: int) -> FrozenSet[int]:
        key = ("boundary", tile_id)
        if key not in self._cache:
            self._cache[key] = frozenset(self.perimeter(tile_id))
        return self._cache[key]

    def marked_point(self, tile_id: int, index: int) -> int:
        length = self.side_length(tile_id)
        return self.perimeter(tile_id)[marked_position(length, index % 8)]

    def half_perimeter(self, tile_id: int, index: int) -> List[int]:
        """Boundary path from marked point ``index`` clockwise to marked point ``index + 4``."""
        cycle = self.perimeter(tile_id)
        length = len(cycle) // 4
        start = marked_position(length, index % 8)
        return [cycle[(start + i) % len(cycle)] for i in range(2 * length + 1)]

    def descendants_minimal(self, tile_id: int) -> FrozenSet[int]:
        key = ("descendants", tile_id)
        if key not in self._cache:
            found = set()
            stack = [tile_id]
            while stack:
                t = self.tiles[stack.pop()]
                if t.children is None:
                    found.add(t.id)
                else:
                    stack.extend(t.children)
            self._cache[key] = frozenset(found)
        return self._cache[key]

    def tile_vertices(self, tile_id: int) -> FrozenSet[int]:
        key = ("tile_vertices", tile_id)
        if key not in self._cache:
            found: Set[int] = set()
            for t in self.descendants_minimal(tile_id):
                found.update(self.tiles[t].corners)
            self._cache[key] = frozenset(found)
        return self._cache[key]

    def membership(self, vertex_id: int) -> Dict[int, bool]:
        """Every tile containing the vertex, mapped to whether it lies on that tile's boundary."""
        key = ("membership", vertex_id)
        if key not in self._cache:
            result: Dict[int, bool] = {}
            for minimal in self._minimal_by_vertex.get(vertex_id, ()):
                for t in self.ancestors(minimal):
                    if t in result:
                        break
                    result[t] = vertex_id in self.boundary_vertices(t)
            self._cache[key] = result
        return self._cache[key]

    # ------------------------------------------------------------------ planes

    def _plane_faces_index(self) -> Dict[int, List[int]]:
        def build() -> Dict[int, List[int]]:
            index: Dict[int, List[int]] = {p: [] for p in self.planes}
            for t in self.tiles.values():
                if t.children is None:
                    index.setdefault(t.plane, []).append(t.id)
            return index

        return self._cached("plane_faces", build)

    def plane_faces(self, plane_id: int) -> List[int]:
        self.plane(plane_id)
        return list(self._plane_faces_index().get(plane_id, []))

    def plane_edges(self, plane_id: int) -> FrozenSet[FrozenSet[int]]:
        """Graph edges that are sides of minimal tiles of the plane."""
        key = ("plane_edges", plane_id)
        if key not in self._cache:
            edges: Set[FrozenSet[int]] = set()
            for t in self.plane_faces(plane_id):
                c = self.tiles[t].corners
                for i in range(4):
                    edge = frozenset((c[i], c[(i + 1) % 4]))
                    if edge in self._edge_segment:
                        edges.add(edge)
            self._cache[key] = frozenset(edges)
        return self._cache[key]

    def plane_adjacency(self, plane_id: int) -> Dict[int, List[int]]:
        key = ("plane_adjacency", plane_id)
        if key not in self._cache:
            adj: Dict[int, Set[int]] = {}
            for edge in self.plane_edges(plane_id):
                a, b = tuple(edge)
                adj.setdefault(a, set()).add(b)
                adj.setdefault(b, set()).add(a)
            self._cache[key] = {v: sorted(ns) for v, ns in adj.items()}
        return self._cache[key]

    def planes_of_edge(self, a: int, b: int) -> Set[int]:
        """Planes having the edge a-b as a side of one of their faces."""
        planes = set()
        for t in self._minimal_by_vertex.get(a, ()):
            tile = self.tiles[t]
            c = tile.corners
            i = c.index(a)
            if b in (c[(i + 1) % 4], c[(i - 1) % 4]):
                planes.add(tile.plane)
        return planes

    def home_plane(self, a: int, b: int) -> int:
        """Plane of the tile owning the segment that carries the edge a-b."""
        return self.tiles[self.segment_of(a, b).owner].plane

    # ------------------------------------------------------------------ indexes

    def point_roles(self, vertex_id: int) -> Tuple[Tuple[int, str], ...]:
        """(tile, name) for every subdivided tile naming this vertex as a corner or point."""
        index = self._cached("point_roles", self._build_point_roles)
        return index.get(vertex_id, ())

    def _build_point_roles(self) -> Dict[int, Tuple[Tuple[int, str], ...]]:
        roles: Dict[int, List[Tuple[int, str]]] = {}
        for t in self.tiles.values():
            if t.children is None:
                continue
            for name, v in zip(("UL", "UR", "LR", "LL"), t.corners):
                roles.setdefault(v, []).append((t.id, name))
            for name, v in t.points.items():
                roles.setdefault(v, []).append((t.id, name))
        return {v: tuple(sorted(r)) for v, r in roles.items()}

    def marked_index(self) -> Dict[int, List[Tuple[int, int]]]:
        """Vertex -> (tile, marked index) for all subdivided tiles."""

        def build() -> Dict[int, List[Tuple[int, int]]]:
            index: Dict[int, List[Tuple[int, int]]] = {}
            for t in sorted(self.tiles):
                if self.tiles[t].children is None:
                    continue
                for s in range(8):
                    index.setdefault(self.marked_point(t, s), []).append((t, s))
            return index

        return self._cached("marked_index", build)

    def to_networkx(self) -> nx.Graph:
        """Undirected graph of the current complex (cached until the next mutation)."""

        def build() -> nx.Graph:
            graph = nx.Graph()
            graph.add_nodes_from(sorted(self.vertices))
            graph.add_edges_from(self.graph_edges())
            return graph

        return self._cached("networkx", build)

    def _cached(self, key: Any, factory) -> Any:
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    # ------------------------------------------------------------------ copies

    def copy(self) -> "Complex":
        """Independent deep copy; caches are not carried over."""
        cache, self._cache = self._cache, {}
        try:
            duplicate = copy.deepcopy(self)
        finally:
            self._cache = cache
        return duplicate

    def rebuild_indexes(self, graph_edges: Optional[Iterable[Tuple[int, int, int]]] = None) -> None:
        """Recompute adjacency and tile indexes from the stored tables.

        Args:
            graph_edges: (a, b, segment) triples; defaults to every leaf segment
        """
        self._adj = {v: set() for v in self.vertices}
        self._edge_segment = {}
        self._minimal_by_vertex = {}
        self._minimal_by_segment = {}
        self._corner_tiles = {}
        if graph_edges is None:
            graph_edges = [
                (s.endpoints[0], s.endpoints[1], s.id)
                for s in self.macro_edges.values()
                if s.is_leaf
            ]
        for a, b, segment_id in graph_edges:
            self._link(a, b, segment_id)
        for t in sorted(self.tiles):
            tile = self.tiles[t]
            for v in tile.corners:
                self._corner_tiles.setdefault(v, []).append(t)
            if tile.children is None:
                self._register_minimal(t)
        self._cache.clear()

    def __repr__(self) -> str:
        c = self.counts()
        return (
            f"Complex(round={self.round}, max_depth={self.max_depth}, V={c['vertices']}, "
            f"E={c['edges']}, tiles={c['tiles']}, planes={c['planes']})"
        )
