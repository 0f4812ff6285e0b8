"""Curve type assignments and constraint violations."""

from enum import IntEnum
from typing import Dict, List, Tuple

from jsieve.exceptions import InputError
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_serializer


class CurveType(IntEnum):
    """Behaviour of a curve at infinity under the hypothetical counterexample map."""

    ONTO_INFINITY = 1  # maps onto the line at infinity
    POINT_AT_INFINITY = 2  # maps to a point on the line at infinity
    AFFINE_CURVE = 3  # maps onto another curve
    AFFINE_POINT = 4  # maps to a point off the line at infinity


class Violation(BaseModel):
    """One failed rule, naming the offending vertices."""

    model_config = ConfigDict(frozen=True)

    rule: str = Field(..., description="Rule id, e.g. 'gcd' or 'C6'")
    vertices: Tuple[int, ...] = Field(default_factory=tuple)
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.message}"


class TypeAssignment(BaseModel):
    """Map vertex id -> curve type."""

    model_config = ConfigDict(frozen=True)

    types: Dict[int, CurveType]

    @field_serializer("types")
    def serialize_types(self, types: Dict[int, CurveType]) -> Dict[str, int]:
        return {str(k): int(types[k]) for k in sorted(types)}

    @classmethod
    def from_json(cls, text: str) -> "TypeAssignment":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise InputError("Invalid type assignment JSON", str(e)) from None

    def type_of(self, vertex: int) -> CurveType:
        return self.types[vertex]

    def of_type(self, curve_type: int) -> List[int]:
        """Sorted ids of the vertices with the given type."""
        return sorted(v for v, t in self.types.items() if t == curve_type)

    def ramification(self, tree) -> Dict[int, int]:
        """Ramification index ``r = -kbar / 2`` of every type-1 curve."""
        return {v: -tree.kbar(v) // 2 for v in self.of_type(CurveType.ONTO_INFINITY)}

    def signature(self) -> Tuple[int, ...]:
        """Types in vertex-id order; used to order and deduplicate assignments."""
        return tuple(int(self.types[k]) for k in sorted(self.types))
