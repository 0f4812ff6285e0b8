"""Exception classes for jsieve."""

from typing import Any, List, Optional, Sequence

# Exit codes shared with the command line surface
EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


class JsieveError(Exception):
    """Base exception for all jsieve errors."""

    def __init__(
        self, message: str, detail: Optional[str] = None, exit_code: int = EXIT_VIOLATIONS
    ):
        # Include detail in the displayed message
        full_message = message
        if detail:
            full_message = f"{message}: {detail}"
        super().__init__(full_message)
        self.message = message
        self.detail = detail
        self.exit_code = exit_code


class InputError(JsieveError):
    """Raised when user-supplied data is malformed or inconsistent."""

    def __init__(self, message: str, detail: Optional[str] = None):
        super().__init__(message, detail, EXIT_INPUT)


class UnknownVertexError(InputError):
    """Raised when a vertex id does not exist in the tree."""

    def __init__(self, vertex: int, detail: Optional[str] = None):
        super().__init__(f"Unknown vertex id {vertex}", detail)
        self.vertex = vertex


class NotAnEdgeError(InputError):
    """Raised when an edge blowup names a pair that is not an edge."""

    def __init__(self, i: int, j: int):
        super().__init__(f"Vertices {i} and {j} are not adjacent")
        self.pair = (i, j)


class ScriptError(InputError):
    """Raised when a blowup script is malformed or references a missing id."""

    def __init__(self, message: str, line: Optional[int] = None, detail: Optional[str] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, detail)
        self.line = line


class PartialAssignmentError(InputError):
    """Raised when a type assignment does not cover every vertex."""

    def __init__(self, missing: Sequence[int]):
        super().__init__("Type assignment is not total", f"untyped vertices {sorted(missing)}")
        self.missing = sorted(missing)


class NonIntegralError(InputError):
    """Raised when an integral divisor class is required."""

    def __init__(
        self, message: str = "Divisor class is not integral", detail: Optional[str] = None
    ):
        super().__init__(message, detail)


class NotContractibleError(JsieveError):
    """Raised when a vertex cannot be blown down."""

    def __init__(self, vertex: int, detail: Optional[str] = None):
        super().__init__(f"Vertex {vertex} is not contractible", detail, EXIT_INPUT)
        self.vertex = vertex


class UnrealizableError(JsieveError):
    """Raised when a tree cannot be reached from the projective plane by blowups."""

    def __init__(self, detail: Optional[str] = None):
        super().__init__("Tree is not realizable by blowups", detail)


class PreconditionError(JsieveError):
    """Raised when an operation's input fails the constraints it relies on."""

    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        violations = violations or []
        detail = "; ".join(str(v) for v in violations) or None
        super().__init__(message, detail)
        self.violations = violations


class SolverError(JsieveError):
    """Raised when a divisor solver cannot produce an admissible class.

    The ``reason`` attribute is one of the stable report codes.
    """

    reason = "SolverError"

    def __init__(self, detail: Optional[str] = None):
        super().__init__(f"Solver failed ({self.reason})", detail)


class SingularNoSolution(SolverError):
    """The type-2 system is singular and inconsistent."""

    reason = "SingularNoSolution"


class Underdetermined(SolverError):
    """The type-2 system has a nontrivial kernel."""

    reason = "Underdetermined"

    def __init__(self, particular: Any, kernel: List[Any], detail: Optional[str] = None):
        super().__init__(detail or f"kernel dimension {len(kernel)}")
        self.particular = particular
        self.kernel = kernel


class NonIntegral(SolverError):
    """The unique rational solution is not integral."""

    reason = "NonIntegral"


class Condition2Failed(SolverError):
    """L does not meet some type-1 curve exactly once."""

    reason = "Condition2Failed"

    def __init__(self, vertices: Sequence[int]):
        super().__init__(f"type-1 vertices with L-pairing != 1: {sorted(vertices)}")
        self.vertices = sorted(vertices)


class NegativeCoefficient(SolverError):
    """L has a negative coefficient while negative coefficients are disallowed."""

    reason = "NegativeCoefficient"


class CapExhausted(SolverError):
    """The Delta search stopped at its result cap; partial solutions are attached."""

    reason = "CapExhausted"

    def __init__(self, partial: List[Any], detail: Optional[str] = None):
        super().__init__(detail or f"stopped after {len(partial)} solutions")
        self.partial = partial


class ResourceLimitError(JsieveError):
    """Raised when a search exceeds its configured resource limit."""

    def __init__(self, message: str, detail: Optional[str] = None):
        super().__init__(message, detail, EXIT_RESOURCE)
