"""
Monte Carlo estimation of normalized traces (1/N) tr(word) over the Gaussian Elliptic Ensemble,
and its comparison against the exact moment polynomial.
"""

from itertools import groupby
from typing import Dict, List, Optional, Sequence

import numpy as np

from elliptic_moments.exceptions import CapacityError, DomainError
from elliptic_moments.interfaces.sampler_interfaces import IMatrixSampler
from elliptic_moments.models.montecarlo import EstimateResult, GeeMatrix, GoeMatrix, ValidationOutcome
from elliptic_moments.models.polynomial import MomentPolynomial
from elliptic_moments.models.word import Letter, Word
from elliptic_moments.services.moments_service import MomentsService
from elliptic_moments.utils.config import get_settings
from elliptic_moments.utils.constants import RELATIVE_TOLERANCE, Z_LIMIT
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)


class GoeSampler(IMatrixSampler):
    """W = (A + Aᵀ) / √(2N) with A standard normal."""

    def sample(self, dim: int, rng: np.random.Generator) -> np.ndarray:
        a = rng.standard_normal((dim, dim))
        return (a + a.T) / np.sqrt(2.0 * dim)


class GeeSampler(IMatrixSampler):
    """X = √((1+ρ)/2) W1 + i √((1-ρ)/2) W2 from two independent GOE draws."""

    def __init__(self, rho: float, goe: Optional[IMatrixSampler] = None):
        if not -1.0 <= rho <= 1.0:
            raise DomainError(f"[GeeSampler]: ρ must lie in [-1, 1], got {rho}")
        self.rho = rho
        self.goe = goe or GoeSampler()

    def sample(self, dim: int, rng: np.random.Generator) -> np.ndarray:
        w1 = self.goe.sample(dim, rng)
        w2 = self.goe.sample(dim, rng)
        return np.sqrt((1.0 + self.rho) / 2.0) * w1 + 1j * np.sqrt((1.0 - self.rho) / 2.0) * w2


def _word_trace(x: np.ndarray, letters: Sequence[Letter]) -> complex:
    """(1/N) tr of the word in x, built from cached powers of each run of equal letters."""
    powers: Dict[int, np.ndarray] = {}

    def power(p: int) -> np.ndarray:
        if p not in powers:
            powers[p] = np.linalg.matrix_power(x, p)
        return powers[p]

    factors: List[np.ndarray] = []
    for letter, run in groupby(letters):
        p = sum(1 for _ in run)
        factors.append(power(p) if letter is Letter.PLAIN else power(p).conj().T)

    if len(factors) == 1:
        return complex(np.trace(factors[0])) / x.shape[0]
    left = factors[0]
    for factor in factors[1:-1]:
        left = left @ factor
    return complex(np.sum(left * factors[-1].T)) / x.shape[0]


class MonteCarloService:
    """Seeded sampling and moment estimation."""

    @staticmethod
    def sample_goe(dim: int, rng: np.random.Generator) -> GoeMatrix:
        return GoeMatrix(dim=dim, entries=GoeSampler().sample(dim, rng))

    @staticmethod
    def sample_gee(dim: int, rho: float, rng: np.random.Generator) -> GeeMatrix:
        return GeeMatrix(dim=dim, rho=rho, entries=GeeSampler(rho).sample(dim, rng))

    @staticmethod
    def entry_correlation(x: np.ndarray) -> float:
        """N · mean over i < j of Re(X_ij X_ji); its expectation is ρ."""
        dim = x.shape[0]
        upper = np.triu_indices(dim, k=1)
        return float(dim * np.mean((x[upper] * x.T[upper]).real))

    @staticmethod
    def word_trace(x: np.ndarray, word: Word) -> complex:
        if word.length == 0:
            return complex(1.0)
        return _word_trace(x, word.letters)

    @staticmethod
    def estimate_word_moment(word: Word, rho: float, dim: int, samples: int, seed: int) -> EstimateResult:
        """
        Average (1/N) tr(word) over independent GEE samples.

        Each sample gets its own generator spawned from SeedSequence(seed), so results only
        depend on (word, ρ, N, samples, seed).

        Args:
            word: non-empty word in X and X†
            rho: elliptic parameter in [-1, 1]
            dim: matrix size N, at most the configured mc_max_dim
            samples: number of samples, at least 2
            seed: root seed

        Returns:
            EstimateResult with the real mean, its standard error and the imaginary diagnostic
        """
        if word.length == 0:
            raise DomainError("[estimate_word_moment]: word must be non-empty")
        if samples < 2:
            raise DomainError(f"[estimate_word_moment]: at least 2 samples are needed, got {samples}")
        if dim < 1:
            raise DomainError(f"[estimate_word_moment]: dimension must be positive, got {dim}")
        max_dim = get_settings().mc_max_dim
        if dim > max_dim:
            raise CapacityError(
                f"[estimate_word_moment]: N={dim} exceeds mc_max_dim={max_dim} "
                f"(raise ELLIPTIC_MOMENTS_MC_MAX_DIM to force it)"
            )
        sampler = GeeSampler(rho)
        streams = np.random.SeedSequence(seed).spawn(samples)
        logger.info(f"🔄 Sampling {samples} GEE matrices of size {dim} at ρ={rho} for {word}")
        values = np.array([
            _word_trace(sampler.sample(dim, np.random.Generator(np.random.PCG64(stream))), word.letters)
            for stream in streams
        ])
        result = EstimateResult(
            word=str(word),
            rho=rho,
            dim=dim,
            mean=float(np.mean(values.real)),
            stderr=float(np.std(values.real, ddof=1) / np.sqrt(samples)),
            imag_mean=float(np.mean(values.imag)),
            imag_stderr=float(np.std(values.imag, ddof=1) / np.sqrt(samples)),
            samples=samples,
            seed=seed,
        )
        logger.debug(f"✅ Estimate {result.mean:.6f} ± {result.stderr:.6f}")
        return result

    @staticmethod
    def exact_polynomial(word: Word) -> MomentPolynomial:
        """Closed form for block words, enumeration otherwise."""
        exponents = word.block_exponents()
        if exponents is not None:
            return MomentsService.block_moment(*exponents)
        return MomentsService.word_moment_oracle(word)

    @staticmethod
    def validate_word_moment(word: Word, rho: float, dim: int, samples: int, seed: int) -> ValidationOutcome:
        """
        Compare an estimate with the exact moment.

        The tolerance is max(5·stderr, 5% of max(1, |exact|)) and z is measured in units of
        tolerance/5, so the check passes iff |z| <= 5.
        """
        poly = MonteCarloService.exact_polynomial(word)
        exact = poly.evaluate(float(rho))
        estimate = MonteCarloService.estimate_word_moment(word, rho, dim, samples, seed)
        tolerance = max(Z_LIMIT * estimate.stderr, RELATIVE_TOLERANCE * max(1.0, abs(exact)))
        z = (estimate.mean - exact) / (tolerance / Z_LIMIT)
        passed = abs(z) <= Z_LIMIT
        if passed:
            logger.info(f"✅ {word} at ρ={rho}: {estimate.mean:.5f} vs exact {exact:.5f} (z={z:.2f})")
        else:
            logger.warning(f"⚠️ {word} at ρ={rho}: {estimate.mean:.5f} vs exact {exact:.5f} (z={z:.2f})")
        return ValidationOutcome(
            estimate=estimate, exact=exact, tolerance=tolerance, z=z, passed=passed, exact_text=str(poly)
        )
