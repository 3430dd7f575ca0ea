"""Tables behind the decay and Monte Carlo figures, as pandas DataFrames."""

import math
from typing import Sequence

import pandas as pd
from pydantic import ValidationError

from elliptic_moments.exceptions import DomainError
from elliptic_moments.models.asymptotics import AsymptoticParams
from elliptic_moments.models.word import Letter, Word
from elliptic_moments.services.asymptotics_service import AsymptoticsService
from elliptic_moments.services.combinatorics_service import CombinatoricsService
from elliptic_moments.services.montecarlo_service import MonteCarloService
from elliptic_moments.utils.constants import ASYMPTOTIC_EXTRA_COLUMNS, FIGURE_COLUMNS, MONTECARLO_EXTRA_COLUMNS
from elliptic_moments.utils.logger import get_logger

logger = get_logger(__name__)


class FigureDataService:

    @staticmethod
    def asymptotic_sweep(q: float, rho: float, vs: Sequence[int]) -> pd.DataFrame:
        """
        Exact rescaled moment against its saddle-point estimate along the ray u = round(q·v).

        Args:
            q: ray, q >= 1
            rho: elliptic parameter, 0 < |ρ| < 1
            vs: values of v, each >= 1

        Returns:
            One row per v; normalized is the exact value divided by its value at ρ = 1
        """
        rows = []
        for v in vs:
            try:
                params = AsymptoticParams(q=q, rho=rho, v=v)
            except ValidationError as e:
                raise DomainError(f"Validation error: {e.errors(include_url=False)}") from e
            u = max(params.u, v)
            summary = AsymptoticsService.summarize(params)
            exact = AsymptoticsService.rescaled_exact(2 * u, 2 * v, rho)
            rows.append({
                "rho": rho,
                "n": 2 * u,
                "m": 2 * v,
                "exact": exact,
                "normalized": exact / AsymptoticsService.rescaled_exact(2 * u, 2 * v, 1.0),
                "estimate": summary.estimate,
                "ratio": exact / summary.estimate if summary.estimate else math.nan,
                "v": v,
                "q": q,
                "phi": summary.phi,
                "psi": summary.psi,
                "regime": summary.regime.value,
            })
        logger.info(f"✅ Asymptotic sweep q={q}, ρ={rho}: {len(rows)} rows")
        return pd.DataFrame(rows, columns=FIGURE_COLUMNS + ASYMPTOTIC_EXTRA_COLUMNS)

    @staticmethod
    def montecarlo_sweep(word: Word, rhos: Sequence[float], dim: int, samples: int, seed: int) -> pd.DataFrame:
        """
        Monte Carlo estimates of one word over a ρ grid, every point seeded with the same root seed.

        n and m count the X and X† letters; normalized divides the estimate by C_{L/2}, the
        value of every word at ρ = 1.
        """
        catalan = CombinatoricsService.catalan(word.length // 2)
        rows = []
        for rho in rhos:
            outcome = MonteCarloService.validate_word_moment(word, rho, dim, samples, seed)
            estimate = outcome.estimate
            rows.append({
                "rho": rho,
                "n": word.count(Letter.PLAIN),
                "m": word.count(Letter.DAGGER),
                "exact": outcome.exact,
                "normalized": estimate.mean / catalan,
                "estimate": estimate.mean,
                "ratio": estimate.mean / outcome.exact if outcome.exact else math.nan,
                "stderr": estimate.stderr,
                "z": outcome.z,
                "passed": outcome.passed,
            })
        failed = sum(1 for row in rows if not row["passed"])
        if failed:
            logger.warning(f"⚠️ {failed}/{len(rows)} grid points outside tolerance for {word}")
        return pd.DataFrame(rows, columns=FIGURE_COLUMNS + MONTECARLO_EXTRA_COLUMNS)
