"""Words over {X, X†} and non-crossing pairings of their letters."""

import enum
from typing import Iterable, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from elliptic_moments.utils.constants import DAGGER_CHAR, PLAIN_CHAR


class Letter(str, enum.Enum):
    """A factor of the trace: the matrix X or its adjoint."""
    PLAIN = PLAIN_CHAR
    DAGGER = DAGGER_CHAR

    def flipped(self) -> "Letter":
        return Letter.DAGGER if self is Letter.PLAIN else Letter.PLAIN


class Word(BaseModel):
    """The product X^ε1 ⋯ X^εL inside a normalized trace."""

    model_config = ConfigDict(frozen=True)

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Build a word from its string form, e.g. ``"xxdxdxdd"``. Raises ValueError on other characters."""
        return cls(letters=tuple(Letter(char) for char in text.strip().lower()))

    @classmethod
    def block(cls, n: int, m: int) -> "Word":
        """X^n (X†)^m."""
        return cls(letters=(Letter.PLAIN,) * n + (Letter.DAGGER,) * m)

    @classmethod
    def from_exponents(cls, ns: Sequence[int], ms: Sequence[int]) -> "Word":
        """X^{n1} (X†)^{m1} X^{n2} (X†)^{m2} ⋯ ; both sequences must have the same length."""
        if len(ns) != len(ms):
            raise ValueError(f"exponent sequences differ in length: {len(ns)} != {len(ms)}")
        letters: Tuple[Letter, ...] = ()
        for n, m in zip(ns, ms):
            letters += (Letter.PLAIN,) * n + (Letter.DAGGER,) * m
        return cls(letters=letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def count(self, letter: Letter) -> int:
        return self.letters.count(letter)

    def rotate(self, shift: int) -> "Word":
        """Cyclic shift to the left by ``shift`` letters."""
        if not self.letters:
            return self
        shift %= self.length
        return Word(letters=self.letters[shift:] + self.letters[:shift])

    def flip(self) -> "Word":
        """Exchange X and X† everywhere."""
        return Word(letters=tuple(letter.flipped() for letter in self.letters))

    def conjugate(self) -> "Word":
        """Word of the adjoint product: reversed, with every letter flipped."""
        return Word(letters=tuple(letter.flipped() for letter in reversed(self.letters)))

    def block_exponents(self) -> Optional[Tuple[int, int]]:
        """(n, m) when the word is X^n (X†)^m, otherwise None."""
        n = 0
        while n < self.length and self.letters[n] is Letter.PLAIN:
            n += 1
        if all(letter is Letter.DAGGER for letter in self.letters[n:]):
            return n, self.length - n
        return None

    def __str__(self) -> str:
        return "".join(letter.value for letter in self.letters)


class Pairing(BaseModel):
    """A non-crossing perfect matching of {1..length}, pairs stored as sorted (lo, hi)."""

    model_config = ConfigDict(frozen=True)

    length: int
    pairs: Tuple[Tuple[int, int], ...]

    @model_validator(mode="after")
    def _check_matching(self) -> "Pairing":
        if self.length % 2:
            raise ValueError(f"odd ground set of size {self.length}")
        seen = sorted(index for pair in self.pairs for index in pair)
        if seen != list(range(1, self.length + 1)):
            raise ValueError("pairs do not cover every index exactly once")
        if any(lo >= hi for lo, hi in self.pairs):
            raise ValueError("every pair must satisfy lo < hi")
        if not self.is_non_crossing():
            raise ValueError("pairing is crossing")
        return self

    @classmethod
    def trusted(cls, length: int, pairs: Iterable[Tuple[int, int]]) -> "Pairing":
        """Build from pairs already known to be a valid non-crossing matching, skipping validation."""
        return cls.model_construct(length=length, pairs=tuple(sorted(pairs)))

    def is_non_crossing(self) -> bool:
        ordered = sorted(self.pairs)
        for index, (a, b) in enumerate(ordered):
            for c, d in ordered[index + 1:]:
                if c > b:
                    break
                if a < c < b < d:
                    return False
        return True

    def partner_map(self) -> dict:
        partners = {}
        for lo, hi in self.pairs:
            partners[lo] = hi
            partners[hi] = lo
        return partners
