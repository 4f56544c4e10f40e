"""Vertex kinds and tile positions."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class VertexCategory(str, Enum):
    CORNER = "corner"
    EDGE_MID = "edge_mid"
    INTERIOR = "interior"
    SIDE = "side"


class CornerPosition(str, Enum):
    CUL = "CUL"
    CUR = "CUR"
    CDR = "CDR"
    CDL = "CDL"


class SideLetter(str, Enum):
    """Logical side of a tile, named after the midpoint that sits on it."""

    U = "U"
    R = "R"
    D = "D"
    L = "L"


class InteriorLabel(str, Enum):
    A = "A"
    B = "B"
    C = "C"


class ChildPosition(str, Enum):
    LEFT_UPPER = "LeftUpper"
    MIDDLE = "Middle"
    RIGHT_UPPER = "RightUpper"
    RIGHT_LOWER = "RightLower"
    LOWER = "Lower"
    LEFT_LOWER = "LeftLower"
    ROOT = "Root"
    PASTED = "Pasted"


# Sides in tile order: top, right, bottom, left.
SIDE_ORDER: Tuple[SideLetter, ...] = (SideLetter.U, SideLetter.R, SideLetter.D, SideLetter.L)

EXTERIOR = "exterior"

# Ordering class of a pasting core in the incoming-edge numbering.
_KIND_CLASS = {
    VertexCategory.SIDE: 0,
    VertexCategory.EDGE_MID: 0,
    VertexCategory.CORNER: 1,
}
_LABEL_CLASS = {InteriorLabel.C: 2, InteriorLabel.A: 3, InteriorLabel.B: 4}


@dataclass(frozen=True, slots=True)
class VertexKind:
    """Immutable kind of a vertex: corner, edge-mid, interior A/B/C or side pair."""

    category: VertexCategory
    corner: Optional[CornerPosition] = None
    side: Optional[SideLetter] = None
    label: Optional[InteriorLabel] = None
    pair: Optional[Tuple[SideLetter, SideLetter]] = None

    @classmethod
    def corner_at(cls, position: CornerPosition) -> "VertexKind":
        return cls(VertexCategory.CORNER, corner=position)

    @classmethod
    def edge_mid(cls, side: SideLetter) -> "VertexKind":
        return cls(VertexCategory.EDGE_MID, side=side)

    @classmethod
    def interior(cls, label: InteriorLabel) -> "VertexKind":
        return cls(VertexCategory.INTERIOR, label=label)

    @classmethod
    def side_pair(cls, first: SideLetter, second: SideLetter) -> "VertexKind":
        return cls(VertexCategory.SIDE, pair=(first, second))

    @property
    def code(self) -> str:
        """Compact text form, e.g. ``corner:CUL``, ``edge_mid:U``, ``interior:A``, ``side:UD``."""
        if self.category is VertexCategory.CORNER:
            detail = self.corner.value
        elif self.category is VertexCategory.EDGE_MID:
            detail = self.side.value
        elif self.category is VertexCategory.INTERIOR:
            detail = self.label.value
        else:
            detail = self.pair[0].value + self.pair[1].value
        return f"{self.category.value}:{detail}"

    @classmethod
    def from_code(cls, code: str) -> "VertexKind":
        """Parse the output of :attr:`code`."""
        try:
            category_text, detail = code.split(":", 1)
            category = VertexCategory(category_text)
            if category is VertexCategory.CORNER:
                return cls.corner_at(CornerPosition(detail))
            if category is VertexCategory.EDGE_MID:
                return cls.edge_mid(SideLetter(detail))
            if category is VertexCategory.INTERIOR:
                return cls.interior(InteriorLabel(detail))
            if len(detail) != 2:
                raise ValueError(detail)
            return cls.side_pair(SideLetter(detail[0]), SideLetter(detail[1]))
        except ValueError as e:
            raise ValueError(f"Invalid vertex kind code: {code}") from e

    @property
    def kind_class(self) -> int:
        """Rank of this kind when pasting cores are ordered: side/edge-mid, corner, C, A, B."""
        if self.category is VertexCategory.INTERIOR:
            return _LABEL_CLASS[self.label]
        return _KIND_CLASS[self.category]

    @property
    def is_midpoint(self) -> bool:
        return self.category in (VertexCategory.SIDE, VertexCategory.EDGE_MID)
