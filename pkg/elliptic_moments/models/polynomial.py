"""Sparse integer polynomials in the elliptic parameter ρ."""

import enum
from fractions import Fraction
from typing import Dict, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, field_validator

Rational = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class Parity(enum.Enum):
    """Parity shared by every exponent of a moment polynomial, or by a block's exponents."""
    EVEN = "even"
    ODD = "odd"


class SpecialPoint(enum.Enum):
    """Values of ρ where the ensemble reduces to a classical one: 1, -1 and 0."""
    GOE = "goe"
    ANTIGOE = "antigoe"
    GINIBRE = "ginibre"


class MomentPolynomial(BaseModel):
    """Σ_e c_e ρ^e with exact integer coefficients; zero coefficients are never stored."""

    model_config = ConfigDict(frozen=True)

    coefficients: Dict[int, int] = {}

    @field_validator("coefficients")
    @classmethod
    def _drop_zeros(cls, value: Dict[int, int]) -> Dict[int, int]:
        if any(exponent < 0 for exponent in value):
            raise ValueError("exponents must be non-negative")
        return {exponent: coeff for exponent, coeff in sorted(value.items()) if coeff != 0}

    @classmethod
    def zero(cls) -> "MomentPolynomial":
        return cls(coefficients={})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "MomentPolynomial":
        return cls(coefficients={exponent: coefficient})

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "MomentPolynomial":
        """Polynomial whose coefficient of ρ^e is ``counts[e]``."""
        return cls(coefficients=dict(counts))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> Optional[int]:
        return max(self.coefficients) if self.coefficients else None

    def coefficient(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def coefficient_sum(self) -> int:
        return sum(self.coefficients.values())

    def parity(self) -> Optional[Parity]:
        """EVEN or ODD when all exponents agree, None for the zero polynomial."""
        if not self.coefficients:
            return None
        parities = {exponent % 2 for exponent in self.coefficients}
        if len(parities) > 1:
            raise ValueError(f"mixed-parity exponents in {self}")
        return Parity.EVEN if parities == {0} else Parity.ODD

    def add(self, other: "MomentPolynomial") -> "MomentPolynomial":
        merged = dict(self.coefficients)
        for exponent, coeff in other.coefficients.items():
            merged[exponent] = merged.get(exponent, 0) + coeff
        return MomentPolynomial(coefficients=merged)

    def __add__(self, other: "MomentPolynomial") -> "MomentPolynomial":
        return self.add(other)

    def scale(self, factor: int) -> "MomentPolynomial":
        return MomentPolynomial(coefficients={e: c * factor for e, c in self.coefficients.items()})

    def shift(self, exponent: int) -> "MomentPolynomial":
        """Multiply by ρ^exponent."""
        return MomentPolynomial(coefficients={e + exponent: c for e, c in self.coefficients.items()})

    def evaluate(self, rho: float) -> float:
        """Horner evaluation in floating point."""
        if not self.coefficients:
            return 0.0
        value = 0.0
        for exponent in range(self.degree, -1, -1):
            value = value * rho + self.coefficients.get(exponent, 0)
        return float(value)

    def evaluate_exact(self, rho: Rational) -> Fraction:
        """Exact evaluation at a rational ρ."""
        rho = Fraction(rho)
        if not self.coefficients:
            return Fraction(0)
        value = Fraction(0)
        for exponent in range(self.degree, -1, -1):
            value = value * rho + self.coefficients.get(exponent, 0)
        return value

    def to_json_map(self) -> Dict[str, str]:
        """Exponent -> coefficient, both as decimal strings."""
        return {str(exponent): str(coeff) for exponent, coeff in self.coefficients.items()}

    @classmethod
    def from_json_map(cls, payload: Mapping[str, str]) -> "MomentPolynomial":
        return cls(coefficients={int(exponent): int(coeff) for exponent, coeff in payload.items()})

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for exponent, coeff in self.coefficients.items():
            if exponent == 0:
                terms.append(str(coeff))
            elif exponent == 1:
                terms.append(f"{coeff}ρ")
            else:
                terms.append(f"{coeff}ρ{str(exponent).translate(_SUPERSCRIPTS)}")
        return " + ".join(terms).replace("+ -", "- ")
