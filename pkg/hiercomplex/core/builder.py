"""
Complex builder.

Orchestrates construction rounds: the level-n complex is the level-(n-1) complex after
one subdivision round and, from level 4 on, one pasting round.
"""
import logging
from typing import List, Optional

from hiercomplex.construction.pasting import pasting_round
from hiercomplex.construction.subdivision import Subdivider, validate_rule_table
from hiercomplex.core.errors import RuleTableError
from hiercomplex.core.model import Complex, RoundReport
from hiercomplex.core.rules import RuleTable

logger = logging.getLogger(__name__)

FIRST_PASTING_LEVEL = 4


class ComplexBuilder:
    """Builds complexes of a given level from a rule table."""

    def __init__(self, rule_table: Optional[RuleTable] = None, with_pastings: bool = True):
        """
        Initialize builder.

        Args:
            rule_table: Subdivision rule table (defaults to the canonical table)
            with_pastings: Apply pasting rounds from level 4 on

        Raises:
            RuleTableError: If the rule table violates the subdivision constraints
        """
        self.rule_table = rule_table or RuleTable.default()
        violations = validate_rule_table(self.rule_table)
        if violations:
            raise RuleTableError(violations)
        self.with_pastings = with_pastings
        self.complex: Optional[Complex] = None

    @property
    def level(self) -> int:
        return 0 if self.complex is None else self.complex.round + 1

    def start(self) -> Complex:
        """Reset to the level-1 complex."""
        self.complex = Complex.new_root(self.rule_table)
        return self.complex

    def advance(self) -> RoundReport:
        """
        Raise the complex by one level.

        Returns:
            RoundReport of the subdivision round (with the pasting count filled in)
        """
        if self.complex is None:
            self.start()
        report = Subdivider.subdivide_round(self.complex, self.rule_table)
        if self.with_pastings and self.level >= FIRST_PASTING_LEVEL:
            pasting_round(self.complex)
        logger.info(
            "Built level %d: %d tiles subdivided, %d pastings, max depth %d",
            self.level,
            report.tiles_subdivided,
            report.pastings,
            report.max_depth,
        )
        return report

    def build(self, level: int) -> Complex:
        """
        Build the level-``level`` complex from scratch.

        Args:
            level: Target level (>= 1)

        Returns:
            The built complex

        Raises:
            ValueError: If level < 1
        """
        if level < 1:
            raise ValueError(f"Level must be >= 1, got {level}")
        self.start()
        while self.level < level:
            self.advance()
        return self.complex

    def build_levels(self, level: int) -> List[Complex]:
        """Snapshots of every level 1..``level`` (independent copies)."""
        if level < 1:
            raise ValueError(f"Level must be >= 1, got {level}")
        snapshots = [self.start().copy()]
        while self.level < level:
            self.advance()
            snapshots.append(self.complex.copy())
        return snapshots


def build_complex(
    level: int, rule_table: Optional[RuleTable] = None, with_pastings: bool = True
) -> Complex:
    return ComplexBuilder(rule_table, with_pastings=with_pastings).build(level)
