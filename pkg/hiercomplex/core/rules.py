"""Subdivision rule table: child orientations, interior edge types and A-side convention."""
from typing import Dict, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hiercomplex.core.kinds import ChildPosition

CORNER_NAMES: Tuple[str, ...] = ("UL", "UR", "LR", "LL")
MIDPOINT_NAMES: Tuple[str, ...] = ("U", "R", "D", "L")
INTERIOR_NAMES: Tuple[str, ...] = ("A", "B", "C")

CHILD_ORDER: Tuple[ChildPosition, ...] = (
    ChildPosition.LEFT_UPPER,
    ChildPosition.MIDDLE,
    ChildPosition.RIGHT_UPPER,
    ChildPosition.RIGHT_LOWER,
    ChildPosition.LOWER,
    ChildPosition.LEFT_LOWER,
)

# Clockwise 4-cycle of every child, starting at the point that is its upper-left under
# rotation 0. Children only ever differ from these by a cyclic shift.
REFERENCE_CYCLES: Dict[ChildPosition, Tuple[str, str, str, str]] = {
    ChildPosition.LEFT_UPPER: ("UL", "U", "A", "L"),
    ChildPosition.MIDDLE: ("U", "B", "C", "A"),
    ChildPosition.RIGHT_UPPER: ("U", "UR", "R", "B"),
    ChildPosition.RIGHT_LOWER: ("B", "R", "LR", "C"),
    ChildPosition.LOWER: ("C", "LR", "D", "LL"),
    ChildPosition.LEFT_LOWER: ("L", "A", "C", "LL"),
}

# Interior macro-edges in type order 1..8.
INTERIOR_EDGE_SLOTS: Tuple[Tuple[str, str], ...] = (
    ("U", "A"),
    ("A", "L"),
    ("A", "C"),
    ("B", "U"),
    ("B", "R"),
    ("C", "B"),
    ("C", "LL"),
    ("C", "LR"),
)

DEFAULT_ORIENTATION: Dict[ChildPosition, Tuple[str, str, str, str]] = {
    ChildPosition.LEFT_UPPER: ("UL", "U", "A", "L"),
    ChildPosition.MIDDLE: ("U", "B", "C", "A"),
    ChildPosition.RIGHT_UPPER: ("UR", "R", "B", "U"),
    ChildPosition.RIGHT_LOWER: ("LR", "C", "B", "R"),
    ChildPosition.LOWER: ("LR", "D", "LL", "C"),
    ChildPosition.LEFT_LOWER: ("C", "LL", "L", "A"),
}


def slot_key(first: str, second: str) -> str:
    return f"{first}-{second}"


def cyclic_shift(reference: Sequence[str], candidate: Sequence[str]) -> Optional[int]:
    """Return k with ``candidate[i] == reference[(i + k) % n]`` for all i, or None."""
    n = len(reference)
    if len(candidate) != n:
        return None
    for k in range(n):
        if all(candidate[i] == reference[(i + k) % n] for i in range(n)):
            return k
    return None


def adjacent_children(first: str, second: str) -> Tuple[ChildPosition, ...]:
    """Children whose 4-cycle contains ``first`` and ``second`` as neighbours."""
    found = []
    for position in CHILD_ORDER:
        cycle = REFERENCE_CYCLES[position]
        for i in range(4):
            if {cycle[i], cycle[(i + 1) % 4]} == {first, second}:
                found.append(position)
                break
    return tuple(found)


def left_child(first: str, second: str) -> ChildPosition:
    """Child lying to the left when walking from ``first`` to ``second``.

    Faces are clockwise, so the face on the left traverses the edge as second -> first.
    """
    for position in adjacent_children(first, second):
        cycle = REFERENCE_CYCLES[position]
        for i in range(4):
            if cycle[i] == second and cycle[(i + 1) % 4] == first:
                return position
    raise ValueError(f"No child borders {first}-{second}")


class RuleTable(BaseModel):
    """Orientation map for the six children plus the interior edge conventions."""

    model_config = ConfigDict(frozen=True)

    orientation: Dict[ChildPosition, Tuple[str, str, str, str]] = Field(
        description="Child position -> parent point names at its logical (UL, UR, LR, LL)"
    )
    edge_types: Dict[str, int] = Field(
        description="Interior slot 'P-Q' -> edge type 1..8"
    )
    a_sides: Dict[int, Tuple[ChildPosition, ChildPosition]] = Field(
        description="Edge type -> (A-side child, B-side child)"
    )

    @classmethod
    def default(cls) -> "RuleTable":
        edge_types = {slot_key(p, q): i + 1 for i, (p, q) in enumerate(INTERIOR_EDGE_SLOTS)}
        a_sides = {}
        for i, (p, q) in enumerate(INTERIOR_EDGE_SLOTS):
            a_child = left_child(p, q)
            b_child = next(c for c in adjacent_children(p, q) if c is not a_child)
            a_sides[i + 1] = (a_child, b_child)
        return cls(orientation=dict(DEFAULT_ORIENTATION), edge_types=edge_types, a_sides=a_sides)

    def with_middle(self, upper_left: str) -> "RuleTable":
        """Copy of this table whose Middle child starts its cycle at ``upper_left``."""
        cycle = REFERENCE_CYCLES[ChildPosition.MIDDLE]
        if upper_left not in cycle:
            raise ValueError(f"Middle child has no corner {upper_left}")
        k = cycle.index(upper_left)
        rotated = tuple(cycle[(k + i) % 4] for i in range(4))
        orientation = dict(self.orientation)
        orientation[ChildPosition.MIDDLE] = rotated
        return self.model_copy(update={"orientation": orientation})

    def rotation(self, position: ChildPosition) -> int:
        """Rotation in degrees of a child relative to its reference cycle (0 if not a rotation)."""
        shift = cyclic_shift(REFERENCE_CYCLES[position], self.orientation[position])
        return 0 if shift is None else 90 * shift

    def slot(self, edge_type: int) -> Tuple[str, str]:
        for key, value in self.edge_types.items():
            if value == edge_type:
                first, second = key.split("-")
                return first, second
        raise KeyError(f"No interior slot has type {edge_type}")

    def slots(self) -> Tuple[Tuple[int, str, str], ...]:
        """(type, first, second) for all interior edges in type order."""
        return tuple((t, *self.slot(t)) for t in sorted(self.edge_types.values()))


DEFAULT_RULE_TABLE = RuleTable.default()
