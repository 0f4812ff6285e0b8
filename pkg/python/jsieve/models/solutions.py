"""Solver outputs for the divisor classes L and Delta."""

from fractions import Fraction
from typing import Dict, Optional

from jsieve.models.divisor import DivisorClass, format_rational
from pydantic import BaseModel, ConfigDict, Field, field_serializer


class LSolution(BaseModel):
    """An integral class L pinned by the four L-conditions."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    L: DivisorClass
    pairings: Dict[int, Fraction] = Field(
        default_factory=dict, description="L . E_v for every vertex v"
    )
    kernel_dimension: int = Field(0, ge=0, description="Dimension of the type-2 system kernel")

    @field_serializer("pairings")
    def serialize_pairings(self, pairings: Dict[int, Fraction]) -> Dict[str, str]:
        return {str(k): format_rational(pairings[k]) for k in sorted(pairings)}


class DeltaSolution(BaseModel):
    """A type-2-supported class Delta with its slope profile."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Delta: DivisorClass
    slope: Dict[int, Optional[Fraction]] = Field(
        default_factory=dict, description="d_v / L_v per type-2 vertex; None when L_v = 0"
    )
    rr_l_minus_delta: Optional[int] = Field(
        None, description="Riemann-Roch lower bound of L - Delta"
    )

    @field_serializer("slope")
    def serialize_slope(self, slope: Dict[int, Optional[Fraction]]) -> Dict[str, str]:
        return {
            str(k): "undefined" if slope[k] is None else format_rational(slope[k])
            for k in sorted(slope)
        }
