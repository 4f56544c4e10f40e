"""Unit tests for distances, geodesic bundles and pasting distance checks."""
from itertools import combinations

import pandas as pd
import pytest

from hiercomplex.core.builder import ComplexBuilder
from hiercomplex.core.errors import UnknownVertexError
from hiercomplex.geodesy.metric import (
    corner_pairs,
    distance,
    distance_preservation,
    ellipticity_scan,
    ellipticity_summary,
    geodesic_bundle,
    midpoint_set,
    pasting_entry_distances,
    sample_pairs,
)


@pytest.fixture(scope="module")
def pure_levels(rule_table):
    """Pure macrotiles of levels 1 to 6."""
    return ComplexBuilder(rule_table, with_pastings=False).build_levels(6)


class TestDistance:
    """Graph distances on built complexes."""

    def test_level2_corners(self, complex_level2):
        root = complex_level2.tiles[0]
        assert distance(complex_level2, root.named_point("UL"), root.named_point("LR")) == 4
        assert distance(complex_level2, root.named_point("UL"), root.named_point("C")) == 3

    def test_nested_corner_pairs(self, complex_level5):
        """Opposite corners of a level-n macrotile are 2^n apart."""
        pairs = corner_pairs(complex_level5)
        assert [p.level for p in pairs] == [5, 4, 3, 2, 1]
        for pair in pairs:
            assert distance(complex_level5, pair.upper_left, pair.lower_right) == 2**pair.level

    @pytest.mark.parametrize("level", range(2, 7))
    def test_opposite_mid_sides(self, pure_levels, level):
        """Midpoints of opposite sides of a pure level-n macrotile are 2^n apart."""
        complex_ = pure_levels[level - 1]
        root = complex_.tiles[complex_.planes[0].root_tile]
        for first, second in (("U", "D"), ("L", "R")):
            a, b = root.named_point(first), root.named_point(second)
            assert distance(complex_, a, b) == 2**level

    @pytest.mark.parametrize("level", range(1, 7))
    def test_opposite_corners_pure(self, pure_levels, level):
        complex_ = pure_levels[level - 1]
        root = complex_.tiles[complex_.planes[0].root_tile]
        assert distance(complex_, root.named_point("UL"), root.named_point("LR")) == 2**level

    def test_symmetric(self, complex_level3):
        for a, b in sample_pairs(complex_level3, 20, seed=3):
            assert distance(complex_level3, a, b) == distance(complex_level3, b, a)

    def test_unknown_vertex(self, complex_level2):
        with pytest.raises(UnknownVertexError):
            distance(complex_level2, 0, 10_000)


class TestGeodesicBundle:
    """Midpoint sets and spreads."""

    def test_level2_root(self, complex_level2):
        """The UL-LR geodesics of a level-2 tile pass through UR, LL, A or B at half way."""
        root = complex_level2.tiles[0]
        ul, lr = root.named_point("UL"), root.named_point("LR")
        expected = sorted(root.named_point(name) for name in ("UR", "LL", "A", "B"))
        bundle = geodesic_bundle(complex_level2, ul, lr)
        assert bundle.distance == 4
        assert bundle.midpoints == expected
        assert midpoint_set(complex_level2, ul, lr) == expected
        assert bundle.spread == 4
        assert bundle.ratio == 1.0
        assert bundle.geodesic_count == 7

    def test_cap(self, complex_level2):
        root = complex_level2.tiles[0]
        ul, lr = root.named_point("UL"), root.named_point("LR")
        bundle = geodesic_bundle(complex_level2, ul, lr, cap=3)
        assert bundle.capped
        assert bundle.geodesic_count == 3

    def test_scan_table(self, complex_level3):
        pairs = [(p.upper_left, p.lower_right) for p in corner_pairs(complex_level3)]
        table = ellipticity_scan(complex_level3, pairs)
        assert isinstance(table, pd.DataFrame)
        assert list(table.columns) == ["source", "target", "distance", "spread", "ratio"]
        assert list(table["distance"]) == [8, 4, 2]
        summary = ellipticity_summary(table)
        assert summary["pairs"] == 3
        assert summary["min_ratio"] > 0


class TestSampling:
    def test_sample_pairs_reproducible(self, complex_level3):
        assert sample_pairs(complex_level3, 10, seed=1) == sample_pairs(complex_level3, 10, seed=1)
        assert all(a != b for a, b in sample_pairs(complex_level3, 10, seed=1))


class TestPastingDistances:
    """Distances around pasted tiles."""

    def test_entries_respect_bound(self, complex_level5):
        for entry in pasting_entry_distances(complex_level5):
            assert entry.ok, entry

    def test_pasting_round_keeps_distances(self, pure_level4, complex_level4):
        """The first pasting round changes no distance between old vertices."""
        pairs = list(combinations(sorted(pure_level4.vertices), 2))
        assert distance_preservation(pure_level4, complex_level4, pairs) == []
