"""
Metric layer.

Distances come from breadth-first search on the graph of the complex; the geodesic
bundle of a pair is read off the two BFS layerings, so midpoint sets are exact no matter
how many geodesics there are.
"""
import logging
import math
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import pandas as pd
from pydantic import BaseModel, Field

from hiercomplex.construction.pasting import attaching_vertices, entry_edges
from hiercomplex.core.errors import DisconnectedError
from hiercomplex.core.model import Complex

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _lengths(complex_: Complex, source: int) -> Dict[int, int]:
    key = ("bfs", source)
    cached = complex_._cache.get(key)
    if cached is None:
        complex_.vertex(source)
        cached = nx.single_source_shortest_path_length(complex_.to_networkx(), source)
        complex_._cache[key] = cached
    return cached


def distance(complex_: Complex, a: int, b: int) -> int:
    """
    Number of edges on a shortest path from ``a`` to ``b``.

    Raises:
        UnknownVertexError: If either vertex does not exist
        DisconnectedError: If no path joins them
    """
    complex_.vertex(b)
    lengths = _lengths(complex_, a)
    if b not in lengths:
        raise DisconnectedError(f"Vertices {a} and {b} are not connected")
    return lengths[b]


class GeodesicBundle(BaseModel):
    """All geodesics between two vertices, summarized."""

    source: int
    target: int
    distance: int
    geodesic_count: int = Field(description="Number of geodesics, capped at the requested cap")
    capped: bool = False
    midpoints: List[int] = Field(default_factory=list)
    spread: int = Field(0, description="Largest distance between two midpoints")

    @property
    def ratio(self) -> float:
        return self.spread / self.distance if self.distance else 0.0


def midpoint_set(complex_: Complex, a: int, b: int) -> List[int]:
    """Vertices at distance ceil(D/2) from ``a`` on some geodesic from ``a`` to ``b``."""
    from_a = _lengths(complex_, a)
    from_b = _lengths(complex_, b)
    total = distance(complex_, a, b)
    half = math.ceil(total / 2)
    return sorted(v for v, d in from_a.items() if d == half and from_b.get(v) == total - half)


def geodesic_bundle(complex_: Complex, a: int, b: int, cap: int = 100000) -> GeodesicBundle:
    """
    Distance, geodesic count, midpoint set and midpoint spread of a vertex pair.

    Args:
        complex_: Built complex
        a: Source vertex
        b: Target vertex
        cap: Largest geodesic count reported exactly

    Returns:
        GeodesicBundle
    """
    total = distance(complex_, a, b)
    from_a = _lengths(complex_, a)
    from_b = _lengths(complex_, b)
    graph = complex_.to_networkx()

    on_geodesic = sorted(
        (v for v, d in from_a.items() if from_b.get(v, math.inf) + d == total),
        key=lambda v: from_a[v],
    )
    counts: Dict[int, int] = {a: 1}
    for v in on_geodesic:
        if v == a:
            continue
        counts[v] = min(
            cap + 1,
            sum(counts.get(u, 0) for u in graph.neighbors(v) if from_a.get(u) == from_a[v] - 1),
        )
    count = counts.get(b, 0)

    midpoints = midpoint_set(complex_, a, b)
    spread = 0
    for i, m in enumerate(midpoints):
        lengths = _lengths(complex_, m)
        for other in midpoints[i + 1 :]:
            spread = max(spread, lengths[other])
    return GeodesicBundle(
        source=a,
        target=b,
        distance=total,
        geodesic_count=min(count, cap),
        capped=count > cap,
        midpoints=midpoints,
        spread=spread,
    )


def ellipticity_scan(
    complex_: Complex, pairs: Iterable[Pair], cap: int = 100000
) -> pd.DataFrame:
    """
    Midpoint spread R against distance D for each pair.

    Returns:
        DataFrame with columns source, target, distance, spread, ratio (R / D, 0 when D = 0)
    """
    rows = []
    for a, b in pairs:
        bundle = geodesic_bundle(complex_, a, b, cap)
        rows.append(
            {
                "source": a,
                "target": b,
                "distance": bundle.distance,
                "spread": bundle.spread,
                "ratio": bundle.ratio,
            }
        )
    return pd.DataFrame(rows, columns=["source", "target", "distance", "spread", "ratio"])


def ellipticity_summary(table: pd.DataFrame) -> Dict[str, float]:
    """Minimum and median of R / D over the rows with D > 0."""
    positive = table[table["distance"] > 0]["ratio"]
    if positive.empty:
        return {"pairs": 0, "min_ratio": 0.0, "median_ratio": 0.0}
    return {
        "pairs": int(len(positive)),
        "min_ratio": float(positive.min()),
        "median_ratio": float(positive.median()),
    }


@dataclass(frozen=True)
class CornerPair:
    level: int
    tile: int
    upper_left: int
    lower_right: int


def corner_pairs(complex_: Complex) -> List[CornerPair]:
    """Opposite corners of the nested upper-left tiles of the base plane, largest first."""
    pairs = []
    tile_id: Optional[int] = complex_.planes[0].root_tile
    while tile_id is not None:
        tile = complex_.tiles[tile_id]
        pairs.append(
            CornerPair(complex_.tile_level(tile_id), tile_id, tile.corners[0], tile.corners[2])
        )
        tile_id = tile.children[0] if tile.children else None
    return pairs


def sample_pairs(
    complex_: Complex, count: int, seed: int, vertices: Optional[Sequence[int]] = None
) -> List[Pair]:
    """Reproducible sample of distinct vertex pairs."""
    pool = sorted(vertices if vertices is not None else complex_.vertices)
    if len(pool) < 2:
        return []
    rng = random.Random(seed)
    return [tuple(rng.sample(pool, 2)) for _ in range(count)]


class DistanceChange(BaseModel):
    source: int
    target: int
    before: int
    after: int


def distance_preservation(
    before: Complex, after: Complex, pairs: Iterable[Pair]
) -> List[DistanceChange]:
    """Pairs whose distance differs between two snapshots of a complex."""
    changes = []
    for a, b in pairs:
        d_before = distance(before, a, b)
        d_after = distance(after, a, b)
        if d_before != d_after:
            changes.append(DistanceChange(source=a, target=b, before=d_before, after=d_after))
    return changes


class EntryDistance(BaseModel):
    vertex: int
    pasted_tile: int
    level: int
    host_tile: int
    distance: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.distance >= self.bound


def pasting_entry_distances(complex_: Complex) -> List[EntryDistance]:
    """
    Distance from each entry vertex of a pasted tile to the boundary of its host tile.

    The host tile is the lowest-level tile of the base plane strictly containing the entry
    vertex whose boundary avoids both attaching sides of the pasted tile. Entries without
    such a host are skipped. The bound is 2^(n-1) for a pasted tile of level n.
    """
    graph = complex_.to_networkx()
    found = []
    for record in complex_.pasting_log:
        level = complex_.tile_level(record.tile)
        attached = attaching_vertices(complex_, record)
        host_plane = record.site.base_plane
        for vertex in sorted({a for a, _ in entry_edges(complex_, record)}):
            hosts = [
                t
                for t, on_boundary in complex_.membership(vertex).items()
                if not on_boundary
                and complex_.tiles[t].plane == host_plane
                and not attached & complex_.boundary_vertices(t)
            ]
            if not hosts:
                continue
            host = min(hosts, key=lambda t: (complex_.tile_level(t), t))
            boundary = complex_.boundary_vertices(host)
            lengths = nx.single_source_shortest_path_length(graph, vertex)
            reach = min(lengths[v] for v in boundary if v in lengths)
            found.append(
                EntryDistance(
                    vertex=vertex,
                    pasted_tile=record.tile,
                    level=level,
                    host_tile=host,
                    distance=reach,
                    bound=2 ** (level - 1),
                )
            )
    logger.debug("Measured %d pasting entry distances", len(found))
    return found

