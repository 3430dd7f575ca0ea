"""
Saddle-point asymptotics of the rescaled block moments P_{2u}^{2v}(ρ) / √(P_{2u}^{2u} P_{2v}^{2v})
along rays u = q·v, together with their exact log-space counterpart.
"""

import math
from typing import Tuple

import numpy as np
from scipy.special import gammaln, logsumexp, xlogy

from elliptic_moments.exceptions import DomainError
from elliptic_moments.models.asymptotics import AsymptoticParams, AsymptoticRegime, AsymptoticSummary
from elliptic_moments.services.combinatorics_service import CombinatoricsService
from elliptic_moments.utils.config import get_settings
from elliptic_moments.utils.constants import HALF_GAUSSIAN_REGIME_RATIO, SADDLE_REGIME_RATIO
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)


def _log_ballot_exact(k: np.ndarray, t: int, odd: bool) -> np.ndarray:
    ballot = CombinatoricsService.ballot_b_odd if odd else CombinatoricsService.ballot_b
    return np.array([math.log(ballot(int(j), t)) for j in k])


def _log_ballot_gamma(k: np.ndarray, t: int, odd: bool) -> np.ndarray:
    if odd:
        return (np.log(2.0 * (k + 1)) + gammaln(2 * t + 2) - gammaln(t + k + 2)
                - gammaln(t - k + 1) - np.log(t + k + 2.0))
    return (np.log(2.0 * k + 1) + gammaln(2 * t + 1) - gammaln(t + k + 1)
            - gammaln(t - k + 1) - np.log(t + k + 1.0))


class AsymptoticsService:
    """Rate function, saddle point and prefactors of the even-block asymptotics."""

    @staticmethod
    def catalan_gf(z: float) -> float:
        """𝔤(z) = (1 - √(1 - 4z)) / (2z), 𝔤(0) = 1; defined for z <= 1/4."""
        if z > 0.25:
            raise DomainError(f"[catalan_gf]: z must be <= 1/4, got {z}")
        return float(2.0 / (1.0 + np.sqrt(1.0 - 4.0 * z)))

    @staticmethod
    def saddle_point(q: float, x: float) -> float:
        """
        Maximizer y* of y -> F_q(x, y) on [0, 1).

        Args:
            q: ray u/v, q >= 1
            x: 1/ρ, x >= 1

        Returns:
            y* = q/(q+1) · t · 𝔤(q t² / (q+1)²) with t = (x² - 1)/(x² + 1)
        """
        if q < 1 or x < 1:
            raise DomainError(f"[saddle_point]: need q >= 1 and x >= 1, got q={q}, x={x}")
        t = (x * x - 1.0) / (x * x + 1.0)
        ratio = q / (q + 1.0)
        return ratio * t * AsymptoticsService.catalan_gf(ratio * t * t / (q + 1.0))

    @staticmethod
    def saddle_point_radical(q: float, x: float) -> float:
        """Smaller root of (x² - 1)y² - (q + 1)(x² + 1)y + q(x² - 1) = 0."""
        if q < 1 or x < 1:
            raise DomainError(f"[saddle_point_radical]: need q >= 1 and x >= 1, got q={q}, x={x}")
        a = x * x - 1.0
        b = (q + 1.0) * (x * x + 1.0)
        # 2c / (b + √Δ): no cancellation as x -> 1
        return float(2.0 * q * a / (b + np.sqrt(b * b - 4.0 * q * a * a)))

    @staticmethod
    def rate_function(q: float, x: float, y: float) -> float:
        """F_q(x, y); the terms (1 ± y)log(1 ± y) vanish at y = ±1."""
        s = y / q
        return float(
            y * np.log(x * x)
            - xlogy(1.0 + y, 1.0 + y) - xlogy(1.0 - y, 1.0 - y)
            - q * xlogy(1.0 + s, 1.0 + s) - q * xlogy(1.0 - s, 1.0 - s)
        )

    @staticmethod
    def rate_first_derivative(q: float, x: float, y: float) -> float:
        """∂F_q/∂y; zero at the saddle."""
        return float(np.log(x * x) + np.log((1.0 - y) * (1.0 - y / q) / ((1.0 + y) * (1.0 + y / q))))

    @staticmethod
    def rate_second_derivative(q: float, y: float) -> float:
        """∂²F_q/∂y² = -2/(1 - y²) - 2/(q(1 - y²/q²)), independent of x."""
        return float(-2.0 / (1.0 - y * y) - 2.0 / (q * (1.0 - (y / q) ** 2)))

    @staticmethod
    def prefactor_g(q: float, y: float) -> float:
        """g_q(y) = 1 / [(1 + y)(1 + y/q) √((1 - y²)(1 - y²/q²))]."""
        s = y / q
        return float(1.0 / ((1.0 + y) * (1.0 + s) * np.sqrt((1.0 - y * y) * (1.0 - s * s))))

    @staticmethod
    def h_function(q: float, y: float) -> float:
        """H_q(y) = g_q(y) / √(-∂²F_q/∂y²)."""
        curvature = -AsymptoticsService.rate_second_derivative(q, y)
        return float(AsymptoticsService.prefactor_g(q, y) / np.sqrt(curvature))

    @staticmethod
    def h_function_printed(q: float, y: float) -> float:
        """Simplified H_q(y) = √(q / (2(q + 1))) / [(1 + y)(1 + y/q) √(1 - y²/q)]."""
        return float(np.sqrt(q / (2.0 * (q + 1.0))) / ((1.0 + y) * (1.0 + y / q) * np.sqrt(1.0 - y * y / q)))

    @staticmethod
    def _check_rho(rho: float, op: str) -> float:
        if not 0.0 < rho < 1.0:
            raise DomainError(f"[{op}]: ρ must lie in (0, 1), got {rho}")
        return 1.0 / rho

    @staticmethod
    def psi_prefactor(q: float, rho: float) -> float:
        """Ψ_q(ρ) = q^{-5/4} y_q² H_q(y_q) / (y_1² H_1(y_1)) at x = 1/ρ; Ψ_1 = 1."""
        x = AsymptoticsService._check_rho(rho, "psi_prefactor")
        y_q = AsymptoticsService.saddle_point(q, x)
        y_1 = AsymptoticsService.saddle_point(1.0, x)
        h = AsymptoticsService.h_function
        return float(q ** -1.25 * y_q * y_q * h(q, y_q) / (y_1 * y_1 * h(1.0, y_1)))

    @staticmethod
    def psi_prefactor_printed(q: float, rho: float) -> float:
        """16 q^{-5/4} √ρ H_q(y_q) / ((1 - ρ)²(1 + ρ)), the form without the y_q² factor."""
        x = AsymptoticsService._check_rho(rho, "psi_prefactor_printed")
        y_q = AsymptoticsService.saddle_point(q, x)
        h_q = AsymptoticsService.h_function_printed(q, y_q)
        return float(16.0 * q ** -1.25 * np.sqrt(rho) * h_q / ((1.0 - rho) ** 2 * (1.0 + rho)))

    @staticmethod
    def phi_rate(q: float, rho: float) -> float:
        """Φ_q(ρ) = -F_q(x, y_q) + (q + 1)/2 · F_1(x, y_1) at x = 1/ρ; Φ_1 = 0 and Φ_q >= 0."""
        x = AsymptoticsService._check_rho(rho, "phi_rate")
        rate = AsymptoticsService.rate_function
        y_q = AsymptoticsService.saddle_point(q, x)
        y_1 = AsymptoticsService.saddle_point(1.0, x)
        return -rate(q, x, y_q) + 0.5 * (q + 1.0) * rate(1.0, x, y_1)

    @staticmethod
    def phi_hat(q: float, rho: float) -> float:
        return AsymptoticsService.phi_rate(q, rho) / (q + 1.0)

    @staticmethod
    def log_block_moment(n: int, m: int, rho: float) -> Tuple[int, float]:
        """
        (sign, log|P_n^m(ρ)|) for a same-parity block, without forming the polynomial.

        Coefficient logs come from exact integers up to the configured limit and from gammaln
        beyond it. The log of zero is -inf.
        """
        if n < 0 or m < 0 or (n - m) % 2:
            raise DomainError(f"[log_block_moment]: need non-negative same-parity exponents, got ({n}, {m})")
        odd = n % 2 == 1
        u, v = n // 2, m // 2
        k = np.arange(min(u, v) + 1)
        exponents = u + v - 2 * k
        sign = -1 if rho < 0 and (u + v) % 2 else 1
        magnitude = abs(rho)
        if magnitude == 0.0:
            return (1, 0.0) if u == v else (1, -np.inf)
        log_ballot = _log_ballot_exact if max(u, v) <= get_settings().exact_log_limit else _log_ballot_gamma
        terms = log_ballot(k, u, odd) + log_ballot(k, v, odd) + exponents * np.log(magnitude)
        return sign, float(logsumexp(terms))

    @staticmethod
    def rescaled_exact(n: int, m: int, rho: float) -> float:
        """P_n^m(ρ) / √(P_n^n(ρ) P_m^m(ρ)), a value in [-1, 1]; zero for mixed parity."""
        if n < 0 or m < 0:
            raise DomainError(f"[rescaled_exact]: exponents must be non-negative, got ({n}, {m})")
        if abs(rho) > 1:
            raise DomainError(f"[rescaled_exact]: ρ must lie in [-1, 1], got {rho}")
        if (n - m) % 2:
            return 0.0
        if rho == 0:
            return 1.0 if n == m else 0.0
        sign, log_mixed = AsymptoticsService.log_block_moment(n, m, rho)
        _, log_left = AsymptoticsService.log_block_moment(n, n, rho)
        _, log_right = AsymptoticsService.log_block_moment(m, m, rho)
        return float(sign * np.exp(log_mixed - 0.5 * (log_left + log_right)))

    @staticmethod
    def rescaled_estimate(u: int, v: int, rho: float) -> float:
        """
        Ψ_{u/v}(|ρ|) · exp(-(u + v) Φ̂_{u/v}(|ρ|)), times (-1)^{u+v} when ρ < 0.

        Args:
            u: half of the X exponent, u >= v
            v: half of the X† exponent, v >= 1
            rho: 0 < |ρ| < 1
        """
        if not u >= v >= 1:
            raise DomainError(f"[rescaled_estimate]: need u >= v >= 1, got ({u}, {v})")
        if not 0.0 < abs(rho) < 1.0:
            raise DomainError(f"[rescaled_estimate]: need 0 < |ρ| < 1, got {rho}")
        q = u / v
        magnitude = abs(rho)
        value = AsymptoticsService.psi_prefactor(q, magnitude) * np.exp(
            -(u + v) * AsymptoticsService.phi_hat(q, magnitude)
        )
        sign = -1 if rho < 0 and (u + v) % 2 else 1
        return float(sign * value)

    @staticmethod
    def near_one_plateau(q: float) -> float:
        """Limit of the rescaled moment at ρ = 1 along the ray q: (2√q / (1 + q))^{3/2}."""
        return float((2.0 * np.sqrt(q) / (1.0 + q)) ** 1.5)

    @staticmethod
    def near_one_log_estimate(u: int, v: int) -> float:
        """log(4^{u+v} / (√π (u + v)^{3/2})), the log of the Catalan asymptote of C_{u+v}."""
        total = u + v
        return float(total * np.log(4.0) - 0.5 * np.log(np.pi) - 1.5 * np.log(total))

    @staticmethod
    def regime_ratio(q: float, rho: float, v: int) -> float:
        """Saddle position over the gaussian width (v · (-∂²F))^{-1/2}."""
        x = AsymptoticsService._check_rho(rho, "regime_ratio")
        y = AsymptoticsService.saddle_point(q, x)
        width = 1.0 / np.sqrt(v * -AsymptoticsService.rate_second_derivative(q, y))
        return float(y / width)

    @staticmethod
    def regime(q: float, rho: float, v: int) -> AsymptoticRegime:
        ratio = AsymptoticsService.regime_ratio(q, rho, v)
        if ratio >= SADDLE_REGIME_RATIO:
            return AsymptoticRegime.SADDLE
        if ratio <= HALF_GAUSSIAN_REGIME_RATIO:
            return AsymptoticRegime.HALF_GAUSSIAN
        return AsymptoticRegime.CROSSOVER

    @staticmethod
    def summarize(params: AsymptoticParams) -> AsymptoticSummary:
        """Saddle quantities at |ρ|; only the estimate carries the sign of ρ."""
        q, v = params.q, params.v
        rho = abs(params.rho)
        x = 1.0 / rho
        y = AsymptoticsService.saddle_point(q, x)
        phi = AsymptoticsService.phi_rate(q, rho)
        summary = AsymptoticSummary(
            params=params,
            saddle=y,
            rate=AsymptoticsService.rate_function(q, x, y),
            curvature=-AsymptoticsService.rate_second_derivative(q, y),
            h_value=AsymptoticsService.h_function(q, y),
            psi=AsymptoticsService.psi_prefactor(q, rho),
            phi=phi,
            phi_hat=phi / (q + 1.0),
            estimate=AsymptoticsService.rescaled_estimate(max(params.u, v), v, params.rho),
            regime=AsymptoticsService.regime(q, rho, v),
        )
        logger.debug(f"🔍 Asymptotic summary for q={q}, ρ={params.rho}, v={v}: {summary.regime.value}")
        return summary
