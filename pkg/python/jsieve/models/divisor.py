"""Divisor classes over the curve basis, with exact rational coefficients."""

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

from jsieve.exceptions import InputError
from pydantic import BaseModel, ConfigDict, ValidationError, field_serializer, field_validator

Rational = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    """``Fraction(3, 2)`` -> ``"3/2"``, ``Fraction(4)`` -> ``"4"``."""
    return str(Fraction(value))


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rational coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"unsupported coefficient {value!r}; use an integer or 'num/den' string")


class DivisorClass(BaseModel):
    """Sparse integer or rational combination of curve classes ``sum c_i E_i``.

    Zero coefficients are dropped so that equal classes compare equal.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coeffs: Dict[int, Fraction]

    @field_validator("coeffs", mode="before")
    def parse_coeffs(cls, v):  # pylint: disable=no-self-argument
        parsed = {int(k): parse_rational(c) for k, c in dict(v).items()}
        return {k: parsed[k] for k in sorted(parsed) if parsed[k] != 0}

    @field_serializer("coeffs")
    def serialize_coeffs(self, coeffs: Dict[int, Fraction]) -> Dict[str, str]:
        return {str(k): format_rational(coeffs[k]) for k in sorted(coeffs)}

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, Rational]) -> "DivisorClass":
        return cls(coeffs=dict(coeffs))

    @classmethod
    def from_json(cls, text: str, layer: str = "L") -> "DivisorClass":
        """Parse the class for ``layer`` (``"L"`` or ``"Delta"``).

        Accepts ``{"coeffs": {...}}``, a bare ``{id: coeff}`` mapping, or solver
        output wrapping the class under ``layer``. A ``solve`` line read as
        Delta gives its Delta when it lists exactly one.

        Raises:
            InputError: Malformed JSON, a wrapper of the other layer, or a
                ``solve`` line with zero or several Deltas.
        """
        other = {"L": "Delta", "Delta": "L"}[layer]
        try:
            data = json.loads(text)
            while isinstance(data, dict) and "coeffs" not in data:
                if isinstance(data.get(layer), dict):
                    data = data[layer]
                elif layer == "Delta" and isinstance(data.get("deltas"), list):
                    deltas = data["deltas"]
                    if len(deltas) != 1:
                        raise InputError(
                            "Ambiguous Delta input", f"solve output lists {len(deltas)} Deltas"
                        )
                    data = deltas[0]
                elif other in data:
                    raise InputError(f"Expected a {layer} class", f"found a wrapper for {other}")
                else:
                    break
            if isinstance(data, dict) and "coeffs" not in data:
                data = {"coeffs": data}
            return cls.model_validate(data)
        except (ValueError, ValidationError) as e:
            raise InputError("Invalid divisor class JSON", str(e)) from None

    @classmethod
    def zero(cls) -> "DivisorClass":
        return cls(coeffs={})

    @classmethod
    def curve(cls, vertex: int) -> "DivisorClass":
        """The class ``E_vertex``."""
        return cls(coeffs={vertex: 1})

    def coefficient(self, vertex: int) -> Fraction:
        return self.coeffs.get(vertex, Fraction(0))

    @property
    def support(self) -> Iterable[int]:
        return self.coeffs.keys()

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def integer_coeffs(self) -> Dict[int, int]:
        """Coefficients as plain ints; only valid for integral classes."""
        return {k: int(c) for k, c in self.coeffs.items()}

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        merged = dict(self.coeffs)
        for k, c in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return DivisorClass(coeffs=merged)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(coeffs={k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def scaled(self, factor: Rational) -> "DivisorClass":
        return DivisorClass(coeffs={k: c * factor for k, c in self.coeffs.items()})
