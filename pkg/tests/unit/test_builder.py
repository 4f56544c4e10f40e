"""Unit tests for subdivision rounds, pasting rounds and structural validation."""
import pytest

from hiercomplex.construction.numbering import incoming_edge_order, incoming_macro_edges
from hiercomplex.construction.pasting import (
    check_pasting_site,
    entry_edges,
    enumerate_pasting_sites,
    in_base_plane,
    repeated_cores,
)
from hiercomplex.construction.subdivision import subdivide_tile
from hiercomplex.core.builder import ComplexBuilder, build_complex
from hiercomplex.core.errors import TileNotMinimalError
from hiercomplex.core.kinds import VertexCategory
from hiercomplex.core.structure import degree_snapshot, rotation_orders, validate_complex


class TestSubdivisionCounts:
    """Vertex, edge and face counts of pure macrotiles."""

    @pytest.mark.parametrize(
        "level,vertices,edges,faces",
        [(1, 4, 4, 1), (2, 11, 16, 6), (3, 45, 80, 36), (4, 233, 448, 216)],
    )
    def test_counts(self, rule_table, level, vertices, edges, faces):
        """Counts follow from three interior points and eight interior edges per tile."""
        complex_ = ComplexBuilder(rule_table, with_pastings=False).build(level)
        counts = complex_.counts()
        assert counts["vertices"] == vertices
        assert counts["edges"] == edges
        assert counts["minimal_tiles"] == faces

    def test_level2_kinds(self, complex_level2):
        """Level 2 has four corners, four boundary midpoints and three interior points."""
        categories = [v.kind.category for v in complex_level2.vertices.values()]
        assert categories.count(VertexCategory.CORNER) == 4
        assert categories.count(VertexCategory.EDGE_MID) == 4
        assert categories.count(VertexCategory.INTERIOR) == 3

    def test_root_midpoints_recorded(self, complex_level2):
        """Each side midpoint of the root knows the side it halves."""
        root = complex_level2.tiles[0]
        for letter in ("U", "R", "D", "L"):
            vertex = complex_level2.vertices[root.points[letter]]
            assert (0, letter) in vertex.midpoint_of

    def test_build_levels(self, rule_table):
        """Snapshots of every level are independent and grow in order."""
        snapshots = ComplexBuilder(rule_table).build_levels(3)
        assert [c.counts()["vertices"] for c in snapshots] == [4, 11, 45]
        assert snapshots[0].is_minimal(0)
        assert not snapshots[1].is_minimal(0)

    def test_invalid_level(self, rule_table):
        """Levels below 1 are rejected."""
        with pytest.raises(ValueError):
            build_complex(0, rule_table)


class TestStructure:
    """Structural validation of built complexes."""

    def test_pure_levels_valid(self, complex_level2, complex_level3):
        """Pure macrotiles have no violations and Euler characteristic 1."""
        for complex_ in (complex_level2, complex_level3):
            report = validate_complex(complex_)
            assert report.ok, report.violations
            assert [p.euler for p in report.planes] == [1]

    def test_pasted_level_valid(self, complex_level4):
        """Every plane of a pasted complex is a disc."""
        report = validate_complex(complex_level4)
        assert report.ok, report.violations
        assert all(p.euler == 1 for p in report.planes)
        assert len(report.planes) == 1 + len(complex_level4.pasting_log)

    def test_removed_edge_reported(self, complex_level2):
        """Dropping a graph edge breaks a face boundary."""
        damaged = complex_level2.copy()
        a, b = damaged.graph_edges()[0]
        damaged.remove_graph_edge(a, b)
        assert not validate_complex(damaged).ok

    def test_rotation_per_plane(self, complex_level2, complex_level4):
        """A pasting core has one rotation order in its own plane and one in the pasted plane."""
        a = complex_level2.tiles[0].named_point("A")
        assert {p: len(order) for p, order in rotation_orders(complex_level2, a).items()} == {0: 3}
        record = complex_level4.pasting_log[0]
        planes = set(rotation_orders(complex_level4, record.site.y))
        assert {record.site.base_plane, record.plane} <= planes

    def test_copy_is_independent(self, complex_level2):
        """Mutating a copy leaves the original intact."""
        damaged = complex_level2.copy()
        a, b = damaged.graph_edges()[0]
        damaged.remove_graph_edge(a, b)
        assert complex_level2.has_edge(a, b)


class TestPastings:
    """Pasting rounds from level 4 on."""

    def test_no_pastings_below_level4(self, complex_level3):
        assert complex_level3.pasting_log == []
        assert len(complex_level3.planes) == 1

    def test_level4_has_pastings(self, complex_level4):
        assert complex_level4.pasting_log
        assert len(complex_level4.planes) == 1 + len(complex_level4.pasting_log)

    def test_sites_satisfy_conditions(self, pure_level4):
        """Every enumerated site passes the independent condition checker."""
        sites = enumerate_pasting_sites(pure_level4)
        assert sites
        for site in sites:
            assert check_pasting_site(pure_level4, site) == []

    def test_each_pasting_adds_one_level2_tile(self, complex_level4, pure_level4):
        """A pasted level-2 tile brings six new vertices and twelve new edges."""
        pastings = len(complex_level4.pasting_log)
        before, after = pure_level4.counts(), complex_level4.counts()
        assert after["vertices"] - before["vertices"] == 6 * pastings
        assert after["edges"] - before["edges"] == 12 * pastings
        for record in complex_level4.pasting_log:
            assert len(set(record.created_vertices)) == 6
            assert complex_level4.tile_level(record.tile) == 2

    def test_entry_edges_leave_attaching_sides(self, complex_level4):
        """Entry edges join an attaching vertex to a vertex created by the pasting."""
        for record in complex_level4.pasting_log:
            edges = entry_edges(complex_level4, record)
            assert edges
            for side, inner in edges:
                assert inner in record.created_vertices
                assert side not in record.created_vertices

    def test_sites_stay_in_base_plane(self, complex_level5):
        """Both attaching sides of every pasted tile belong to the plane of its core."""
        for record in complex_level5.pasting_log:
            site = record.site
            assert site.base_plane == complex_level5.vertices[site.y].plane
            for segment_id in (site.x_segment, site.z_segment):
                assert in_base_plane(complex_level5, segment_id, site.y)
            assert {complex_level5.tiles[t].plane for t in site.host_tiles} == {site.base_plane}

    def test_second_pasting_round(self, complex_level5):
        """Level 5 adds pastings whose cores have depth two below the maximum."""
        later = [r for r in complex_level5.pasting_log if r.round == complex_level5.round]
        assert later
        for record in later:
            assert complex_level5.vertices[record.site.y].depth == complex_level5.max_depth - 2

    def test_cores_not_repeated(self, complex_level5):
        assert repeated_cores(complex_level5) == []

    def test_rounds_log(self, complex_level4):
        """One round report per subdivision round, the last one counting the pastings."""
        assert len(complex_level4.rounds_log) == 3
        assert complex_level4.rounds_log[-1].pastings == len(complex_level4.pasting_log)


class TestDegrees:
    """Degree bookkeeping across rounds."""

    def test_old_vertices_settle(self, rule_table):
        """Vertices older than two rounds keep their degree in the next round."""
        builder = ComplexBuilder(rule_table)
        builder.build(4)
        previous = degree_snapshot(builder.complex)
        builder.advance()
        current = degree_snapshot(builder.complex)
        round_index = builder.complex.round
        for v, degree in previous.items():
            if builder.complex.vertices[v].created_round <= round_index - 3:
                assert current[v] == degree


class TestIncomingOrder:
    """Numbering of the incoming edges at every vertex."""

    def test_strict_on_level5(self, complex_level5):
        """Every vertex numbers each of its edges exactly once."""
        for v in complex_level5.vertices:
            order = incoming_edge_order(complex_level5, v)
            neighbours = [b for a, b in order]
            assert all(a == v for a, _ in order)
            assert len(order) == complex_level5.degree(v)
            assert len(set(neighbours)) == len(neighbours)
            assert set(neighbours) == set(complex_level5.neighbours(v))

    def test_macro_edges_follow_the_order(self, complex_level4):
        """Each numbered graph edge maps to a distinct macro-edge ending at the vertex."""
        for v in complex_level4.vertices:
            order = incoming_edge_order(complex_level4, v)
            carriers = incoming_macro_edges(complex_level4, v)
            assert len(carriers) == len(order) == len(set(carriers))
            for (a, b), segment_id in zip(order, carriers):
                segment = complex_level4.macro_edges[segment_id]
                assert v in segment.endpoints
                assert complex_level4.tile_level(segment.owner) == complex_level4.edge_level(a, b)


class TestSingleTileSubdivision:
    """Subdividing one minimal tile outside a round."""

    def test_commits_its_own_round(self, complex_level2):
        complex_ = complex_level2.copy()
        round_index, depth = complex_.round, complex_.max_depth
        tile_id = complex_.minimal_tiles()[0]
        children = subdivide_tile(complex_, tile_id)
        assert len(children) == 6
        assert not complex_.has_open_round
        assert (complex_.round, complex_.max_depth) == (round_index + 1, depth + 1)
        assert all(complex_.is_minimal(c) for c in children)
        assert complex_level2.round == round_index

    def test_round_owner_commits(self, complex_level2):
        """Tiles subdivided inside an open round wait for the round owner."""
        complex_ = complex_level2.copy()
        round_index = complex_.round
        complex_.begin_round()
        first, second = complex_.minimal_tiles()[:2]
        subdivide_tile(complex_, first)
        subdivide_tile(complex_, second)
        assert complex_.has_open_round
        assert complex_.round == round_index
        complex_.commit_round()
        assert complex_.round == round_index + 1
        assert complex_.tiles[first].children and complex_.tiles[second].children

    def test_already_subdivided(self, complex_level2):
        complex_ = complex_level2.copy()
        tile_id = complex_.minimal_tiles()[0]
        subdivide_tile(complex_, tile_id)
        with pytest.raises(TileNotMinimalError):
            subdivide_tile(complex_, tile_id)
