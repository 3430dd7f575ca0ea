"""
Service for positional mixed-moments: words of length 2M described by where their X factors sit.

Every pair of a non-crossing pairing of 2M points joins an even slot to an odd slot, so the
moment only depends on how many X's in even slots are paired with X's in odd slots:
σ = 2j + M - k for j such pairs. The closed forms below count pairings by j for up to two
X's in even slots; beyond that the enumeration oracle is used.
"""

from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from pydantic import ValidationError

from elliptic_moments.exceptions import CapacityError, DomainError, PositionError
from elliptic_moments.models.polynomial import MomentPolynomial
from elliptic_moments.models.positional import OrderingCase, PositionTuple, TransformKind, TransformRecord
from elliptic_moments.models.word import Letter, Word
from elliptic_moments.services.combinatorics_service import CombinatoricsService
from elliptic_moments.services.moments_service import MomentsService
from elliptic_moments.utils.config import get_settings
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)

_catalan = CombinatoricsService.catalan


def _chord_pair_count(size: int, first: Tuple[int, int], second: Tuple[int, int]) -> int:
    """Non-crossing pairings of {1..size} containing both chords; endpoints must be distinct."""
    a1, b1 = sorted(first)
    a2, b2 = sorted(second)
    if a2 < a1:
        a1, b1, a2, b2 = a2, b2, a1, b1
    if a2 < b1 < b2:
        return 0
    if b1 < a2:
        inside_first = b1 - a1 - 1
        inside_second = b2 - a2 - 1
        outside = size - 4 - inside_first - inside_second
        return _catalan(inside_first // 2) * _catalan(inside_second // 2) * _catalan(outside // 2)
    inner = b2 - a2 - 1
    middle = (b1 - a1 - 1) - inner - 2
    outside = size - (b1 - a1 + 1)
    return _catalan(inner // 2) * _catalan(middle // 2) * _catalan(outside // 2)


def _even_slots_matched(partners: Dict[int, int], even_x: Sequence[int], odd_x: FrozenSet[int]) -> FrozenSet[int]:
    """Even X positions whose partner is an odd X position."""
    return frozenset(position for position in even_x if partners[position] in odd_x)


class PositionalService:
    """Closed forms for mixed-moments indexed by the positions of X."""

    @staticmethod
    def make_tuple(half_length: int, positions: Sequence[int]) -> PositionTuple:
        try:
            return PositionTuple(half_length=half_length, positions=tuple(positions))
        except ValidationError as e:
            raise PositionError(f"Validation error: {e.errors(include_url=False)}") from e

    @staticmethod
    def canonicalize(half_length: int, positions: Sequence[int]) -> Tuple[PositionTuple, TransformRecord]:
        """
        Rewrite a tuple into canonical form (k <= M, at least as many odd as even positions).

        A letter swap (complement of the positions) is applied first when k > M, then the
        rotation i -> i + 1 (2M -> 1) when even positions outnumber odd ones. Both preserve
        the moment; canonical input comes back unchanged.
        """
        original = PositionalService.make_tuple(half_length, positions)
        size = 2 * half_length
        current = original.positions
        transforms: List[TransformKind] = []
        if len(current) > half_length:
            present = set(current)
            current = tuple(i for i in range(1, size + 1) if i not in present)
            transforms.append(TransformKind.LETTER_SWAP)
        evens = sum(1 for i in current if i % 2 == 0)
        if evens > len(current) - evens:
            current = tuple(sorted(i % size + 1 for i in current))
            transforms.append(TransformKind.ROTATION)
        canonical = PositionTuple(half_length=half_length, positions=current)
        if transforms:
            logger.debug(f"🔄 Canonicalized {original.positions} -> {canonical.positions} via {transforms}")
        return canonical, TransformRecord(original=original, transforms=tuple(transforms))

    @staticmethod
    def word_from_positions(tuple_: PositionTuple) -> Word:
        """X at the listed positions, X† everywhere else."""
        present = set(tuple_.positions)
        return Word(letters=tuple(
            Letter.PLAIN if i in present else Letter.DAGGER for i in range(1, 2 * tuple_.M + 1)
        ))

    @staticmethod
    def pair_block_cardinality(e: int, ell: int, half_length: int) -> int:
        """|A_{e,ℓ}|: pairings of 2M points containing the pair (2e, 2ℓ - 1)."""
        if not (1 <= e <= half_length and 1 <= ell <= half_length):
            raise DomainError(f"[pair_block_cardinality]: need 1 <= e, ℓ <= {half_length}, got ({e}, {ell})")
        if ell <= e:
            return _catalan(e - ell) * _catalan(half_length - e + ell - 1)
        return _catalan(ell - e - 1) * _catalan(half_length - ell + e)

    @staticmethod
    def ordering_case(e1: int, e2: int, o1: int, o2: int) -> OrderingCase:
        """Relative order of the slots 2o1 - 1 < 2o2 - 1 and 2e1 < 2e2."""
        if not (e1 < e2 and o1 < o2):
            raise DomainError(f"[ordering_case]: need e1 < e2 and o1 < o2, got e=({e1}, {e2}) o=({o1}, {o2})")
        slots = sorted([(2 * o1 - 1, "O"), (2 * o2 - 1, "O"), (2 * e1, "E"), (2 * e2, "E")])
        return OrderingCase["".join(label for _, label in slots)]

    @staticmethod
    def pair_intersection_cardinality(e1: int, o_a: int, e2: int, o_b: int, half_length: int) -> int:
        """
        |A_{e1,o_a} ∩ A_{e2,o_b}|: pairings holding both (2e1, 2o_a - 1) and (2e2, 2o_b - 1).

        Zero when the two chords cross; otherwise a product of three Catalan numbers, one per
        region the chords cut the line into.
        """
        values = (e1, o_a, e2, o_b)
        if not all(1 <= value <= half_length for value in values) or e1 >= e2 or o_a == o_b:
            raise DomainError(
                f"[pair_intersection_cardinality]: need e1 < e2, o_a != o_b, all in 1..{half_length}, got {values}"
            )
        case = PositionalService.ordering_case(e1, e2, min(o_a, o_b), max(o_a, o_b))
        count = _chord_pair_count(2 * half_length, (2 * e1, 2 * o_a - 1), (2 * e2, 2 * o_b - 1))
        logger.debug(f"{case.value}: |A({e1},{o_a}) ∩ A({e2},{o_b})| = {count}")
        return count

    @staticmethod
    def positional_moment(tuple_: PositionTuple) -> MomentPolynomial:
        """
        ρ^{M-k} Σ_j N_j ρ^{2j}, N_j counting pairings with j X's in even slots paired to X's.

        Args:
            tuple_: any valid tuple; it is canonicalized first

        Returns:
            The exact moment polynomial

        Raises:
            CapacityError: r >= 3 even positions and 2M beyond the enumeration ceiling
        """
        canonical, _ = PositionalService.canonicalize(tuple_.M, tuple_.positions)
        half_length, k = canonical.M, canonical.k
        split = canonical.split()
        total = _catalan(half_length)
        block = PositionalService.pair_block_cardinality
        if split.r == 0:
            counts = {0: total}
        elif split.r == 1:
            (e,) = split.evens
            n1 = total - sum(block(e, q, half_length) for q in split.odds_missing)
            counts = {0: total - n1, 1: n1}
        elif split.r == 2:
            e1, e2 = split.evens
            singles_1 = sum(block(e1, q, half_length) for q in split.odds_missing)
            singles_2 = sum(block(e2, q, half_length) for q in split.odds_missing)
            crossed = sum(
                PositionalService.pair_intersection_cardinality(e1, q, e2, q_other, half_length)
                for q, q_other in permutations(split.odds_missing, 2)
            )
            n2 = total - singles_1 - singles_2 + crossed
            n1 = (total - singles_1) + (total - singles_2) - 2 * n2
            counts = {0: total - n1 - n2, 1: n1, 2: n2}
        else:
            max_l = get_settings().max_l
            if 2 * half_length > max_l:
                raise CapacityError(
                    f"[positional_moment]: {split.r} X's in even slots has no closed form and the "
                    f"oracle is capped at length {max_l}; raise ELLIPTIC_MOMENTS_MAX_L to enumerate 2M={2 * half_length}"
                )
            logger.info(f"🔄 r={split.r}: falling back to the enumeration oracle for M={half_length}")
            return MomentsService.word_moment_oracle(PositionalService.word_from_positions(canonical))
        return MomentPolynomial(
            coefficients={half_length - k + 2 * j: count for j, count in counts.items()}
        )

    @staticmethod
    def ginibre_moment(tuple_: PositionTuple) -> int:
        """Value at ρ = 0; zero unless the word has as many X as X†."""
        if tuple_.k != tuple_.M:
            return 0
        return PositionalService.positional_moment(tuple_).coefficient(0)

    @staticmethod
    def balanced_single_even_moment(half_length: int, e: int, o: int) -> MomentPolynomial:
        """k = M with one X in an even slot 2e and one missing odd slot 2o - 1."""
        if o <= e:
            paired_away = _catalan(e - o) * _catalan(half_length - e + o - 1)
        else:
            paired_away = _catalan(o - e - 1) * _catalan(half_length - o + e)
        return MomentPolynomial(coefficients={0: paired_away, 2: _catalan(half_length) - paired_away})

    @staticmethod
    def balanced_two_even_moment(half_length: int, e1: int, e2: int, o1: int, o2: int) -> MomentPolynomial:
        """k = M with X's in even slots 2e1 < 2e2 and missing odd slots 2o1 - 1 < 2o2 - 1."""
        block = PositionalService.pair_block_cardinality
        meet = PositionalService.pair_intersection_cardinality
        singles = sum(block(e, o, half_length) for e in (e1, e2) for o in (o1, o2))
        both = meet(e1, o1, e2, o2, half_length) + meet(e1, o2, e2, o1, half_length)
        return MomentPolynomial(coefficients={
            0: both,
            2: singles - 2 * both,
            4: _catalan(half_length) - singles + both,
        })

    @staticmethod
    def occupancy_counts(tuple_: PositionTuple) -> Dict[int, int]:
        """N_j by brute force: pairings with exactly j X's in even slots paired to X's."""
        even_x = [i for i in tuple_.positions if i % 2 == 0]
        odd_x = frozenset(i for i in tuple_.positions if i % 2)
        counts = {j: 0 for j in range(len(even_x) + 1)}
        for pairing in CombinatoricsService.enumerate_nc_pairings(2 * tuple_.M):
            counts[len(_even_slots_matched(pairing.partner_map(), even_x, odd_x))] += 1
        return counts

    @staticmethod
    def inclusion_exclusion_counts(tuple_: PositionTuple) -> Dict[int, int]:
        """
        N_j from N_{>=j} = |∪_{|K|=j} ∩_{e∈K} A_e|, expanded by inclusion-exclusion over the
        j-subsets K of the even X slots. Only the sizes |∩_{e∈T} A_e| are enumerated.
        """
        even_x = [i for i in tuple_.positions if i % 2 == 0]
        odd_x = frozenset(i for i in tuple_.positions if i % 2)
        matched_sets: Dict[FrozenSet[int], int] = {}
        for pairing in CombinatoricsService.enumerate_nc_pairings(2 * tuple_.M):
            matched = _even_slots_matched(pairing.partner_map(), even_x, odd_x)
            matched_sets[matched] = matched_sets.get(matched, 0) + 1

        def covering(slots: FrozenSet[int]) -> int:
            return sum(count for matched, count in matched_sets.items() if slots <= matched)

        r = len(even_x)
        at_least = {}
        for j in range(r + 1):
            families = [frozenset(subset) for subset in combinations(even_x, j)]
            total = 0
            for s in range(1, len(families) + 1):
                for chosen in combinations(families, s):
                    total += (-1) ** (s - 1) * covering(frozenset().union(*chosen))
            at_least[j] = total
        at_least[r + 1] = 0
        return {j: at_least[j] - at_least[j + 1] for j in range(r + 1)}
