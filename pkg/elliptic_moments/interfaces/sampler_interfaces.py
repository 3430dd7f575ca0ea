"""Interfaces for random matrix samplers."""

from abc import ABC, abstractmethod

import numpy as np


class IMatrixSampler(ABC):
    """Interface for an ensemble that draws one N×N matrix per call."""

    @abstractmethod
    def sample(self, dim: int, rng: np.random.Generator) -> np.ndarray:
        """Draw one matrix of size dim×dim from the given generator."""
        pass  # pragma: no cover
