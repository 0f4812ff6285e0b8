"""Blowup script models and the one-step-per-line text format."""

from typing import List, Literal, Optional, Tuple, Union

from jsieve.exceptions import ScriptError
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
)


class PointBlowup(BaseModel):
    """Blow up a general point on one curve."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["P"] = "P"
    vertex: int = Field(..., ge=0)

    def to_text(self) -> str:
        return f"P {self.vertex}"


class EdgeBlowup(BaseModel):
    """Blow up the intersection point of two adjacent curves."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["E"] = "E"
    i: int = Field(..., ge=0)
    j: int = Field(..., ge=0)

    def to_text(self) -> str:
        return f"E {self.i} {self.j}"


Step = Union[PointBlowup, EdgeBlowup]


def parse_step(line: str, line_number: Optional[int] = None) -> Step:
    """Parse a single ``P <id>`` or ``E <id> <id>`` line."""
    parts = line.split()
    if not parts:
        raise ScriptError("empty step", line_number)
    try:
        if parts[0] == "P" and len(parts) == 2:
            return PointBlowup(vertex=int(parts[1]))
        if parts[0] == "E" and len(parts) == 3:
            return EdgeBlowup(i=int(parts[1]), j=int(parts[2]))
    except (ValueError, ValidationError):
        raise ScriptError(f"bad vertex id in {line.strip()!r}", line_number) from None
    raise ScriptError(f"malformed step {line.strip()!r}", line_number)


class BlowupScript(BaseModel):
    """Replayable sequence of blowups starting from the projective plane."""

    model_config = ConfigDict(frozen=True)

    steps: Tuple[Step, ...] = Field(default_factory=tuple)

    @field_validator("steps", mode="before")
    def parse_text_steps(cls, v):  # pylint: disable=no-self-argument
        """Accept steps given in their text form (as stored in reports)."""
        return tuple(parse_step(s) if isinstance(s, str) else s for s in v)

    @field_serializer("steps")
    def serialize_steps(self, steps: Tuple[Step, ...]) -> List[str]:
        return [step.to_text() for step in steps]

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, step: Step) -> "BlowupScript":
        """Return a new script with ``step`` appended."""
        return BlowupScript.model_construct(steps=self.steps + (step,))

    @classmethod
    def parse(cls, text: str) -> "BlowupScript":
        """Parse the text format; blank lines and ``#`` comment lines are skipped."""
        steps = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            steps.append(parse_step(line, number))
        return cls.model_construct(steps=tuple(steps))

    def to_text(self) -> str:
        return "".join(f"{step.to_text()}\n" for step in self.steps)
