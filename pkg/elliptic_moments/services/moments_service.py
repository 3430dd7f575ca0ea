"""
Service computing mixed-moment polynomials: the pairing-sum oracle for arbitrary words
and the closed form for X^n (X†)^m blocks.
"""

from fractions import Fraction
from typing import Sequence, Tuple, Union

from elliptic_moments.exceptions import DomainError
from elliptic_moments.models.polynomial import MomentPolynomial, Parity, SpecialPoint
from elliptic_moments.models.word import Word
from elliptic_moments.services.combinatorics_service import CombinatoricsService
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)

RhoValue = Union[float, int, Fraction]


class MomentsService:
    """Exact mixed-moments as polynomials in ρ."""

    @staticmethod
    def word_moment_oracle(word: Word) -> MomentPolynomial:
        """
        Σ over non-crossing pairings π of ρ^σ(π), σ being the number of same-letter pairs.

        Args:
            word: any word; odd lengths give the zero polynomial

        Returns:
            The exact moment polynomial

        Raises:
            CapacityError: when the word is longer than the configured enumeration ceiling
        """
        if word.length % 2:
            return MomentPolynomial.zero()
        census = CombinatoricsService.sigma_census(word)
        logger.debug(f"✅ Oracle moment of {word}: {census}")
        return MomentPolynomial.from_counts(census)

    @staticmethod
    def block_moment(n: int, m: int) -> MomentPolynomial:
        """
        P_n^m(ρ) = tr(X^n (X†)^m) from the ballot-number closed form, without enumeration.

        Even blocks n = 2u, m = 2v have σ_c = 2k mixed pairs and exponent u + v - 2k; odd blocks
        n = 2u + 1, m = 2v + 1 have σ_c = 2k + 1 and the same exponent. Blocks of different
        parity vanish.
        """
        if n < 0 or m < 0:
            raise DomainError(f"[block_moment]: exponents must be non-negative, got ({n}, {m})")
        if (n - m) % 2:
            return MomentPolynomial.zero()
        parity = Parity.EVEN if n % 2 == 0 else Parity.ODD
        u, v = n // 2, m // 2
        coefficients = {
            u + v - 2 * k: CombinatoricsService.rank_cardinality_closed(u, v, k, parity)
            for k in range(min(u, v) + 1)
        }
        return MomentPolynomial(coefficients=coefficients)

    @staticmethod
    def composite_moment(ns: Sequence[int], ms: Sequence[int]) -> MomentPolynomial:
        """Moment of X^{n1}(X†)^{m1} ⋯ X^{nK}(X†)^{mK}, through the oracle."""
        try:
            word = Word.from_exponents(ns, ms)
        except ValueError as e:
            raise DomainError(f"[composite_moment]: {e}") from e
        return MomentsService.word_moment_oracle(word)

    @staticmethod
    def rho_outside_domain(rho: RhoValue) -> bool:
        return abs(rho) > 1

    @staticmethod
    def evaluate(poly: MomentPolynomial, rho: RhoValue) -> Union[float, Fraction]:
        """
        Evaluate a moment polynomial.

        Integers and Fractions are evaluated exactly and return a Fraction; floats use Horner's
        scheme in floating point. Values outside [-1, 1] are evaluated but logged.
        """
        if MomentsService.rho_outside_domain(rho):
            logger.warning(f"⚠️ Evaluating outside the elliptic range |ρ| <= 1 at ρ={rho}")
        if isinstance(rho, (int, Fraction)) and not isinstance(rho, bool):
            return poly.evaluate_exact(rho)
        return poly.evaluate(float(rho))

    @staticmethod
    def special_value(n: int, m: int, which: SpecialPoint) -> int:
        """
        Closed-form value of P_n^m at ρ = 1 (GOE), ρ = -1 (anti-GOE) and ρ = 0 (Ginibre).
        """
        if n < 0 or m < 0:
            raise DomainError(f"[special_value]: exponents must be non-negative, got ({n}, {m})")
        if (n - m) % 2:
            return 0
        catalan = CombinatoricsService.catalan
        if which is SpecialPoint.GOE:
            return catalan((n + m) // 2)
        if which is SpecialPoint.GINIBRE:
            return 1 if n == m else 0
        u, v = n // 2, m // 2
        sign = -1 if (u + v) % 2 else 1
        if n % 2 == 0:
            return sign * catalan(u + v)
        return sign * catalan(u + v + 1)

    @staticmethod
    def ginibre_fuss_catalan_check(r: int, k: int) -> Tuple[int, int]:
        """(oracle constant term of (X^r (X†)^r)^k, FC_r(k)); the two agree."""
        moment = MomentsService.composite_moment([r] * k, [r] * k)
        return moment.coefficient(0), CombinatoricsService.fuss_catalan(r, k)
