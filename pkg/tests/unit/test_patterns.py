"""Unit tests for path patterns, dead patterns and incorrect segments."""
import pytest

from hiercomplex.core.errors import NotIncidentError, UndefinedKindError
from hiercomplex.paths.patterns import (
    find_dead_patterns,
    has_incorrect_segment,
    incorrect_segments,
    is_main_edge,
    pattern_of,
)


def points(complex_, tile_id, *names):
    tile = complex_.tiles[tile_id]
    return [tile.named_point(name) for name in names]


class TestMainEdges:
    def test_interior_vertex(self, complex_level2):
        """Interior macro-edges of the owning tile are main edges."""
        a, u = points(complex_level2, 0, "A", "U")
        assert is_main_edge(complex_level2, a, (a, u))

    def test_corner_undefined(self, complex_level2):
        ul, u = points(complex_level2, 0, "UL", "U")
        with pytest.raises(UndefinedKindError):
            is_main_edge(complex_level2, ul, (ul, u))

    def test_not_incident(self, complex_level2):
        a, u, b = points(complex_level2, 0, "A", "U", "B")
        with pytest.raises(NotIncidentError):
            is_main_edge(complex_level2, a, (u, b))


class TestPattern:
    """Vertices surviving the main-edge deletion rule."""

    def test_side_walk_collapses(self, complex_level3):
        """A walk along one side keeps only its non-corner endpoint."""
        ul, u = points(complex_level3, 0, "UL", "U")
        left_upper = complex_level3.tiles[0].children[0]
        (halfway,) = points(complex_level3, left_upper, "U")
        pattern = pattern_of(complex_level3, [ul, halfway, u])
        assert pattern.vertices == (u,)

    def test_interior_vertices_kept(self, complex_level2):
        path = points(complex_level2, 0, "A", "U", "B")
        assert pattern_of(complex_level2, path).vertices == tuple(path)


class TestDeadPatterns:
    def test_aub(self, complex_level2):
        """A U B inside one macrotile is a dead pattern."""
        pattern = pattern_of(complex_level2, points(complex_level2, 0, "A", "U", "B"))
        matches = find_dead_patterns(pattern)
        assert [(m.name, m.tile, m.index) for m in matches] == [("AUB", 0, 0)]

    def test_boundary_walk_has_none(self, complex_level2):
        pattern = pattern_of(complex_level2, points(complex_level2, 0, "U", "UR", "R"))
        assert find_dead_patterns(pattern) == []


class TestIncorrectSegments:
    def test_detour_through_boundary(self, complex_level2):
        """Leaving the interior of the root for its boundary and coming back is incorrect."""
        path = points(complex_level2, 0, "A", "U", "B")
        assert incorrect_segments(complex_level2, path) == [(1, 0)]
        assert has_incorrect_segment(complex_level2, path)

    def test_boundary_walk_is_correct(self, complex_level2):
        path = points(complex_level2, 0, "UL", "U", "UR", "R")
        assert incorrect_segments(complex_level2, path) == []
