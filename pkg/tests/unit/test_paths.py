"""Unit tests for paths, local flips, macro flips and bounded searches."""
import pytest

from hiercomplex.core.errors import InvalidPathError, PathShapeError
from hiercomplex.paths.macro import macro_flip
from hiercomplex.paths.moves import check_move, is_null_form, local_moves
from hiercomplex.paths.path import (
    Move,
    apply_moves,
    format_moves,
    format_path,
    parse_moves,
    parse_path,
    replay,
    validate_path,
)
from hiercomplex.paths.sampling import boundary_walk, chain_through, concatenate, shortest_inside
from hiercomplex.paths.search import (
    PushKind,
    flip_closure,
    push_to_boundary,
    reduce_to_null,
    search_reduction,
)


def points(complex_, tile_id, *names):
    tile = complex_.tiles[tile_id]
    return [tile.named_point(name) for name in names]


class TestPathValidation:
    """Vertex sequences against the graph."""

    def test_valid_path(self, complex_level2):
        path = validate_path(complex_level2, points(complex_level2, 0, "UL", "U", "A"))
        assert path.length == 2

    def test_missing_edge(self, complex_level2):
        """UL and A are opposite corners of a minimal tile, not neighbours."""
        with pytest.raises(InvalidPathError):
            validate_path(complex_level2, points(complex_level2, 0, "UL", "A"))

    def test_unknown_vertex(self, complex_level2):
        with pytest.raises(InvalidPathError):
            validate_path(complex_level2, [0, 10_000])

    def test_text_format(self):
        assert format_path([3, 5, 8]) == "3 5 8\n"
        assert parse_path("# header\n3 5\n8\n").vertices == (3, 5, 8)
        assert parse_moves(format_moves([Move(1, 4), Move(2, 7)])) == [Move(1, 4), Move(2, 7)]

    def test_bad_move_line(self):
        with pytest.raises(InvalidPathError):
            parse_moves("1 2 3\n")


class TestLocalMoves:
    """Flips across minimal tiles."""

    def test_flip_across_corner_tile(self, complex_level2):
        """U UR R flips to U B R across the upper right child."""
        u, ur, r, b = points(complex_level2, 0, "U", "UR", "R", "B")
        moves = local_moves(complex_level2, [u, ur, r])
        assert [m.replacement for m in moves] == [b]
        assert apply_moves(complex_level2, [u, ur, r], moves).vertices == (u, b, r)

    def test_no_flip_on_straight_side(self, complex_level2):
        ul, u, ur = points(complex_level2, 0, "UL", "U", "UR")
        assert local_moves(complex_level2, [ul, u, ur]) == []

    def test_illegal_move_rejected(self, complex_level2):
        """UR is not a corner of the upper left child."""
        ul, u, ur = points(complex_level2, 0, "UL", "U", "UR")
        left_upper = complex_level2.tiles[0].children[0]
        assert not check_move(complex_level2, [ul, u, ur], Move(1, left_upper))

    def test_null_form(self, complex_level2):
        u, a = points(complex_level2, 0, "U", "A")
        assert is_null_form(complex_level2, [u, a, u])
        assert not is_null_form(complex_level2, [u, a])


class TestMacroFlip:
    """Half-perimeter flips of macrotiles."""

    @pytest.mark.parametrize("start", range(8))
    def test_root_flip(self, complex_level3, start):
        """Every marked start flips onto the opposite half with fixed endpoints."""
        root = complex_level3.planes[0].root_tile
        path = complex_level3.half_perimeter(root, start)
        moves = macro_flip(complex_level3, path, root)
        trail = replay(complex_level3, path, moves)
        expected = tuple(complex_level3.half_perimeter(root, (start + 4) % 8)[::-1])
        assert trail[-1].vertices == expected
        assert all(p.start == path[0] and p.end == path[-1] for p in trail)

    @pytest.mark.parametrize("fixture", ["complex_level4", "complex_level5"])
    @pytest.mark.parametrize("start", [0, 3, 6])
    def test_flip_on_pasted_complexes(self, request, fixture, start):
        """Root flips stay valid after pasting rounds added planes around the root."""
        complex_ = request.getfixturevalue(fixture)
        root = complex_.planes[0].root_tile
        path = complex_.half_perimeter(root, start)
        trail = replay(complex_, path, macro_flip(complex_, path, root))
        expected = tuple(complex_.half_perimeter(root, (start + 4) % 8)[::-1])
        assert trail[-1].vertices == expected
        assert all(p.length == len(path) - 1 for p in trail)

    @pytest.mark.parametrize("start", [1, 2])
    def test_flip_there_and_back(self, complex_level4, start):
        """Flipping the result again restores the original half perimeter."""
        root = complex_level4.planes[0].root_tile
        path = complex_level4.half_perimeter(root, start)
        there = apply_moves(complex_level4, path, macro_flip(complex_level4, path, root))
        back = apply_moves(complex_level4, there, macro_flip(complex_level4, there, root))
        assert back.vertices == tuple(path)

    def test_reverse_direction(self, complex_level2):
        path = complex_level2.half_perimeter(0, 0)[::-1]
        final = apply_moves(complex_level2, path, macro_flip(complex_level2, path, 0))
        assert final.vertices == tuple(complex_level2.half_perimeter(0, 4))

    def test_wrong_shape(self, complex_level2):
        ul, u, a = points(complex_level2, 0, "UL", "U", "A")
        with pytest.raises(PathShapeError):
            macro_flip(complex_level2, [ul, u, a], 0)


class TestSearch:
    """Closures, reductions and pushes."""

    def test_boundary_walk_reduces(self, complex_level2):
        """Five edges along the boundary of a level-2 tile reach a null form."""
        walk = boundary_walk(complex_level2, 0, 0, 5)
        outcome = search_reduction(complex_level2, walk)
        assert outcome.found
        assert is_null_form(complex_level2, apply_moves(complex_level2, walk, outcome.moves))
        assert reduce_to_null(complex_level2, walk) == list(outcome.moves)

    def test_geodesic_never_reduces(self, complex_level2):
        """Two sides of the root form a geodesic; its closure holds no null form."""
        path = complex_level2.half_perimeter(0, 0)
        outcome = search_reduction(complex_level2, path)
        assert not outcome.found
        assert outcome.exhausted

    def test_closure_reaches_other_half(self, complex_level2):
        path = complex_level2.half_perimeter(0, 0)
        target = complex_level2.half_perimeter(0, 4)[::-1]
        summary = flip_closure(complex_level2, path, target=target)
        assert summary.exhausted
        assert summary.target_found
        assert not summary.null_found

    def test_budget_truncates(self, complex_level3):
        walk = boundary_walk(complex_level3, 0, 0, 12)
        outcome = search_reduction(complex_level3, walk, budget=5)
        assert not outcome.exhausted

    def test_push_geodesic_to_boundary(self, complex_level2):
        ul, c, lr = points(complex_level2, 0, "UL", "C", "LR")
        path = concatenate(
            shortest_inside(complex_level2, 0, ul, c), shortest_inside(complex_level2, 0, c, lr)
        )
        assert path.length == 4
        outcome = push_to_boundary(complex_level2, path, 0)
        assert outcome.kind is PushKind.BOUNDARY
        assert set(outcome.final.vertices) <= complex_level2.boundary_vertices(0)

    def test_push_rejects_interior_endpoint(self, complex_level2):
        a, c = points(complex_level2, 0, "A", "C")
        with pytest.raises(InvalidPathError):
            push_to_boundary(complex_level2, [a, c], 0)


class TestConstructors:
    """Path constructors used by the experiments."""

    def test_chain_through(self, complex_level3):
        """Macro-edge chains inside the root follow the side length of its children."""
        path = chain_through(complex_level3, 0, ("UL", "U", "A", "C", "B"))
        assert path.length == 8
        validate_path(complex_level3, path)

    def test_boundary_walk_wraps(self, complex_level2):
        walk = boundary_walk(complex_level2, 0, 6, 4)
        assert walk.length == 4
        assert walk[2] == complex_level2.perimeter(0)[0]
