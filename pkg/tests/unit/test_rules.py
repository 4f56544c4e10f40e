"""Unit tests for the subdivision rule table."""
import pytest
from pydantic import ValidationError

from hiercomplex.construction.subdivision import is_subdivision_rotation, validate_rule_table
from hiercomplex.core.builder import build_complex
from hiercomplex.core.kinds import ChildPosition
from hiercomplex.core.rules import RuleTable
from hiercomplex.core.structure import validate_complex


class TestRuleTable:
    def test_default_is_valid(self, rule_table):
        assert validate_rule_table(rule_table) == []

    def test_edge_types_cover_interior_edges(self, rule_table):
        """Types 1..8 name the interior edges, type 1 running from U to A."""
        assert sorted(rule_table.edge_types.values()) == list(range(1, 9))
        assert rule_table.slot(1) == ("U", "A")

    @pytest.mark.parametrize("upper_left", ["U", "B", "C", "A"])
    def test_middle_rotations_valid(self, rule_table, upper_left):
        """Any rotation of the middle child is accepted."""
        table = rule_table.with_middle(upper_left)
        assert validate_rule_table(table) == []
        assert table.orientation[ChildPosition.MIDDLE][0] == upper_left

    def test_every_default_child_is_a_rotation(self, rule_table):
        assert all(is_subdivision_rotation(rule_table, p) for p in rule_table.orientation)

    def test_right_upper_must_start_at_parent_ur(self, rule_table):
        """A rotation of the right upper child starting at U breaks the corner constraint."""
        orientation = dict(rule_table.orientation)
        orientation[ChildPosition.RIGHT_UPPER] = ("U", "UR", "R", "B")
        table = rule_table.model_copy(update={"orientation": orientation})
        violations = validate_rule_table(table)
        assert any("logical UL must be parent UR, got parent U" in v for v in violations)

    def test_reflected_middle(self, rule_table):
        orientation = dict(rule_table.orientation)
        orientation[ChildPosition.MIDDLE] = ("A", "C", "B", "U")
        table = rule_table.model_copy(update={"orientation": orientation})
        assert not is_subdivision_rotation(table, ChildPosition.MIDDLE)
        assert any("reflection" in v for v in validate_rule_table(table))

    def test_middle_unknown_corner(self, rule_table):
        with pytest.raises(ValueError):
            rule_table.with_middle("X")

    def test_rotated_middle_builds(self, rule_table):
        """Complexes built with a rotated middle child are still discs."""
        complex_ = build_complex(3, rule_table.with_middle("B"))
        report = validate_complex(complex_)
        assert report.ok, report.violations

    def test_frozen(self):
        table = RuleTable.default()
        with pytest.raises(ValidationError):
            table.edge_types = {}
