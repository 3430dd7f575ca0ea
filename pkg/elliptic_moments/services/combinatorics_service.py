"""
Exact integer combinatorics behind the mixed-moments: Catalan and ballot numbers,
and exhaustive enumeration of non-crossing pairings with their rank statistics.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import repeat
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from elliptic_moments.exceptions import CapacityError, DomainError
from elliptic_moments.models.polynomial import Parity
from elliptic_moments.models.word import Letter, Pairing, Word
from elliptic_moments.utils.config import get_settings
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=None)
def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _triangle_recursive(n: int, k: int) -> int:
    if k > n:
        return 0
    if k == 1:
        return 1
    return _triangle_recursive(n, k - 1) + _triangle_recursive(n - 1, k)


@lru_cache(maxsize=None)
def _ballot_recursive(k: int, t: int) -> int:
    if k > t:
        return 0
    if k == 0:
        return _catalan(t)
    total = 0
    for r in range(k, t + 1):
        inner = sum(_catalan(r - s) * _ballot_recursive(k - 1, s - 1) for s in range(k, r + 1))
        total += _catalan(t - r) * inner
    return total


def _interval_pairings(lo: int, hi: int) -> Iterator[List[Tuple[int, int]]]:
    """Non-crossing matchings of the consecutive indices lo..hi-1 (0-based)."""
    if lo >= hi:
        yield []
        return
    for partner in range(lo + 1, hi, 2):
        for inner in _interval_pairings(lo + 1, partner):
            for outer in _interval_pairings(partner + 1, hi):
                yield [(lo, partner)] + inner + outer


def _interval_sigmas(letters: Sequence[str], lo: int, hi: int) -> Iterator[int]:
    """Same recursion as _interval_pairings, yielding only the same-letter pair count."""
    if lo >= hi:
        yield 0
        return
    for partner in range(lo + 1, hi, 2):
        same = 1 if letters[lo] == letters[partner] else 0
        for inner in _interval_sigmas(letters, lo + 1, partner):
            for outer in _interval_sigmas(letters, partner + 1, hi):
                yield same + inner + outer


def _branch_sigma_counts(letters: Tuple[str, ...], partner: int) -> Dict[int, int]:
    """σ histogram of the pairings whose first pair is (0, partner). Module level so it pickles."""
    same = 1 if letters[0] == letters[partner] else 0
    counts: Counter = Counter()
    for inner in _interval_sigmas(letters, 1, partner):
        for outer in _interval_sigmas(letters, partner + 1, len(letters)):
            counts[same + inner + outer] += 1
    return dict(counts)


class CombinatoricsService:
    """Catalan-family numbers and non-crossing pairing enumeration, all in exact integers."""

    @staticmethod
    def catalan(n: int) -> int:
        """C_n = binom(2n, n) / (n + 1)."""
        if n < 0:
            raise DomainError(f"[catalan]: n must be non-negative, got {n}")
        return _catalan(n)

    @staticmethod
    def catalan_triangle(n: int, k: int) -> int:
        """
        Catalan triangular number C(n, k) = (n - k + 1)/n · binom(n + k - 2, n - 1), zero for k > n.

        Args:
            n: row, n >= 1
            k: column, k >= 1

        Returns:
            C(n, k), satisfying C(n, k) = C(n, k - 1) + C(n - 1, k) and C(n, 1) = 1
        """
        if n < 1 or k < 1:
            raise DomainError(f"[catalan_triangle]: n and k must be positive, got ({n}, {k})")
        if k > n:
            return 0
        return (n - k + 1) * comb(n + k - 2, n - 1) // n

    @staticmethod
    def catalan_triangle_recursive(n: int, k: int) -> int:
        """C(n, k) straight from its defining recursion."""
        if n < 1 or k < 1:
            raise DomainError(f"[catalan_triangle_recursive]: n and k must be positive, got ({n}, {k})")
        return _triangle_recursive(n, k)

    @staticmethod
    def ballot_b(k: int, t: int) -> int:
        """B(k, t) = (2k + 1)/(t + k + 1) · binom(2t, t + k) for k <= t, else 0."""
        if k < 0 or t < 0:
            raise DomainError(f"[ballot_b]: arguments must be non-negative, got ({k}, {t})")
        if k > t:
            return 0
        return (2 * k + 1) * comb(2 * t, t + k) // (t + k + 1)

    @staticmethod
    def ballot_b_recursive(k: int, t: int) -> int:
        """B(k, t) via the double Catalan convolution over B(k - 1, ·), with B(0, t) = C_t."""
        if k < 0 or t < 0:
            raise DomainError(f"[ballot_b_recursive]: arguments must be non-negative, got ({k}, {t})")
        return _ballot_recursive(k, t)

    @staticmethod
    def ballot_b_odd(k: int, t: int) -> int:
        """Odd-block analogue 2(k + 1)/(t + k + 2) · binom(2t + 1, t + k + 1) for k <= t, else 0."""
        if k < 0 or t < 0:
            raise DomainError(f"[ballot_b_odd]: arguments must be non-negative, got ({k}, {t})")
        if k > t:
            return 0
        return 2 * (k + 1) * comb(2 * t + 1, t + k + 1) // (t + k + 2)

    @staticmethod
    def admissible_sequence_identity(a: int, b: int) -> Tuple[int, int]:
        """
        Both sides of C(a + b, b) = Σ_{s=1}^{b} C(s, s) · C(a + b - s, b - s + 1).

        The convolution is what turns the recursion for B(k, t) into a single triangle entry.
        """
        if a < 1 or b < 1:
            raise DomainError(f"[admissible_sequence_identity]: a and b must be positive, got ({a}, {b})")
        triangle = CombinatoricsService.catalan_triangle
        lhs = triangle(a + b, b)
        rhs = sum(triangle(s, s) * triangle(a + b - s, b - s + 1) for s in range(1, b + 1))
        return lhs, rhs

    @staticmethod
    def fuss_catalan(r: int, k: int) -> int:
        """FC_r(k) = binom((r + 1)k, k)/(rk + 1); the Ginibre value of tr((X^r (X†)^r)^k)."""
        if r < 1 or k < 0:
            raise DomainError(f"[fuss_catalan]: need r >= 1 and k >= 0, got ({r}, {k})")
        return comb((r + 1) * k, k) // (r * k + 1)

    @staticmethod
    def rank_cardinality_closed(u: int, v: int, k: int, parity: Parity) -> int:
        """
        Number of non-crossing pairings of a block word with exactly 2k (EVEN) or 2k + 1 (ODD) mixed pairs.

        EVEN counts X^{2u}(X†)^{2v}, ODD counts X^{2u+1}(X†)^{2v+1}.
        """
        if min(u, v, k) < 0:
            raise DomainError(f"[rank_cardinality_closed]: arguments must be non-negative, got ({u}, {v}, {k})")
        if k > min(u, v):
            return 0
        if parity is Parity.EVEN:
            return CombinatoricsService.ballot_b(k, u) * CombinatoricsService.ballot_b(k, v)
        return CombinatoricsService.ballot_b_odd(k, u) * CombinatoricsService.ballot_b_odd(k, v)

    @staticmethod
    def enumerate_nc_pairings(length: int) -> Iterator[Pairing]:
        """Every non-crossing perfect matching of {1..length}; nothing when length is odd."""
        if length < 0 or length % 2:
            return
        for pairs in _interval_pairings(0, length):
            yield Pairing.trusted(length, ((lo + 1, hi + 1) for lo, hi in pairs))

    @staticmethod
    def enumerate_nc_branch(length: int, partner: int) -> Iterator[Pairing]:
        """The pairings of {1..length} whose first pair is (1, partner); partner must be even."""
        if length < 0 or length % 2 or partner % 2 or not 2 <= partner <= length:
            return
        for inner in _interval_pairings(1, partner - 1):
            for outer in _interval_pairings(partner, length):
                pairs = [(0, partner - 1)] + inner + outer
                yield Pairing.trusted(length, ((lo + 1, hi + 1) for lo, hi in pairs))

    @staticmethod
    def sigma_same(word: Word, pairing: Pairing) -> int:
        """Number of pairs joining two equal letters."""
        if word.length != pairing.length:
            raise DomainError(f"[sigma_same]: word of length {word.length} vs pairing of {pairing.length}")
        letters = word.letters
        return sum(1 for lo, hi in pairing.pairs if letters[lo - 1] is letters[hi - 1])

    @staticmethod
    def sigma_mixed(word: Word, pairing: Pairing) -> int:
        """Number of (X, X†) pairs."""
        if word.length != pairing.length:
            raise DomainError(f"[sigma_mixed]: word of length {word.length} vs pairing of {pairing.length}")
        return pairing.length // 2 - CombinatoricsService.sigma_same(word, pairing)

    @staticmethod
    def sigma_census(word: Word) -> Dict[int, int]:
        """
        Exhaustive histogram of σ, the same-letter pair count, over all non-crossing pairings.

        The enumeration is partitioned by the partner of the first letter; with more than one
        configured worker the branches run in a process pool and are merged in branch order.
        """
        length = word.length
        if length % 2:
            return {}
        settings = get_settings()
        if length > settings.max_l:
            raise CapacityError(
                f"[sigma_census]: word length {length} exceeds enumeration ceiling {settings.max_l} "
                f"(raise ELLIPTIC_MOMENTS_MAX_L to force it)"
            )
        if length == 0:
            return {0: 1}
        letters = tuple(letter.value for letter in word.letters)
        partners = list(range(1, length, 2))
        logger.info(f"🔄 Enumerating {_catalan(length // 2)} pairings of {word}")
        if settings.workers > 1 and len(partners) > 1:
            with ProcessPoolExecutor(max_workers=settings.workers) as pool:
                branches = list(pool.map(_branch_sigma_counts, repeat(letters), partners))
        else:
            branches = [_branch_sigma_counts(letters, partner) for partner in partners]
        merged: Counter = Counter()
        for branch in branches:
            merged.update(branch)
        logger.info(f"✅ Census of {word}: {len(merged)} distinct σ values")
        return dict(sorted(merged.items()))

    @staticmethod
    def rank_census(word: Word) -> Dict[int, int]:
        """
        Number of pairings with exactly ℓ mixed pairs, for every admissible ℓ.

        Admissible ℓ share the parity of the X count and never exceed min(#X, #X†); zero
        entries are kept so the support is explicit.
        """
        if word.length % 2:
            return {}
        plain = word.count(Letter.PLAIN)
        dagger = word.length - plain
        census = {ell: 0 for ell in range(plain % 2, min(plain, dagger) + 1, 2)}
        half = word.length // 2
        for sigma, count in CombinatoricsService.sigma_census(word).items():
            census[half - sigma] = census.get(half - sigma, 0) + count
        return census
