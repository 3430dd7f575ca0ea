"""Value models."""

from .word import Letter, Word, Pairing
from .polynomial import MomentPolynomial, Parity, SpecialPoint
from .positional import PositionTuple, EvenOddSplit, TransformKind, TransformRecord, OrderingCase
from .asymptotics import AsymptoticParams, AsymptoticRegime, AsymptoticSummary
from .montecarlo import GoeMatrix, GeeMatrix, EstimateResult, ValidationOutcome

__all__ = [
    'Letter', 'Word', 'Pairing', 'MomentPolynomial', 'Parity', 'SpecialPoint',
    'PositionTuple', 'EvenOddSplit', 'TransformKind', 'TransformRecord', 'OrderingCase',
    'AsymptoticParams', 'AsymptoticRegime', 'AsymptoticSummary',
    'GoeMatrix', 'GeeMatrix', 'EstimateResult', 'ValidationOutcome'
]
