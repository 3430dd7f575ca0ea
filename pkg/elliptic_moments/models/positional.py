"""Positional description of a balanced-length word: where the X factors sit among 2M slots."""

import enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TransformKind(enum.Enum):
    """Moment-preserving rewrites applied while canonicalizing."""
    LETTER_SWAP = "letter_swap"
    ROTATION = "rotation"


class OrderingCase(enum.Enum):
    """Relative order of two missing odd slots o1 < o2 and two even slots e1 < e2."""
    OOEE = "o1<o2<=e1<e2"
    OEOE = "o1<=e1<o2<=e2"
    OEEO = "o1<=e1<e2<o2"
    EOOE = "e1<o1<o2<=e2"
    EOEO = "e1<o1<=e2<o2"
    EEOO = "e1<e2<o1<o2"


class PositionTuple(BaseModel):
    """Strictly increasing positions of X inside a word of length 2M."""

    model_config = ConfigDict(frozen=True)

    half_length: int = Field(..., ge=1, description="M, half the word length")
    positions: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_positions(self) -> "PositionTuple":
        size = 2 * self.half_length
        for index, position in enumerate(self.positions):
            if not 1 <= position <= size:
                raise ValueError(f"position {position} outside 1..{size}")
            if index and position <= self.positions[index - 1]:
                raise ValueError(f"positions not strictly increasing at {position}")
        return self

    @property
    def M(self) -> int:
        return self.half_length

    @property
    def k(self) -> int:
        return len(self.positions)

    @property
    def even_count(self) -> int:
        return sum(1 for position in self.positions if position % 2 == 0)

    @property
    def odd_count(self) -> int:
        return self.k - self.even_count

    @property
    def is_canonical(self) -> bool:
        return self.k <= self.half_length and self.odd_count >= self.even_count

    def split(self) -> "EvenOddSplit":
        present = set(self.positions)
        evens = tuple(position // 2 for position in self.positions if position % 2 == 0)
        odds_present = tuple((position + 1) // 2 for position in self.positions if position % 2)
        odds_missing = tuple(o for o in range(1, self.half_length + 1) if 2 * o - 1 not in present)
        return EvenOddSplit(evens=evens, odds_present=odds_present, odds_missing=odds_missing)


class EvenOddSplit(BaseModel):
    """Slot indices: e for position 2e, o for position 2o-1."""

    model_config = ConfigDict(frozen=True)

    evens: Tuple[int, ...]
    odds_present: Tuple[int, ...]
    odds_missing: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.evens)


class TransformRecord(BaseModel):
    """What canonicalize did to reach the canonical tuple."""

    model_config = ConfigDict(frozen=True)

    original: PositionTuple
    transforms: Tuple[TransformKind, ...] = ()
