"""
Exception hierarchy shared by geometry, tree, experiments and the CLI
"""
from typing import Optional


class QuadtreeError(Exception):
    """Base class for every error raised by this project"""


class OutOfDomainError(QuadtreeError, ValueError):
    """A coordinate falls outside the half-open unit interval"""


class DegenerateInputError(QuadtreeError, ValueError):
    """Input that has no well-defined answer, e.g. two identical points"""


class DuplicatePointError(DegenerateInputError):
    """Two input points quantize to the same lattice point"""

    def __init__(self, first_id: int, second_id: int, coords, policy: str = "reject"):
        self.first_id = first_id
        self.second_id = second_id
        self.coords = tuple(coords)
        self.policy = policy
        super().__init__(
            f"points {first_id} and {second_id} quantize to the same lattice point "
            f"{self.coords} (duplicate_policy={policy})"
        )


class ContractViolation(QuadtreeError, ValueError):
    """A caller broke an operation's precondition"""


class IndivisibleCellError(ContractViolation):
    """A cell at the finest level cannot be split further"""


class InvariantViolation(QuadtreeError, RuntimeError):
    """Internal state no longer satisfies a structural invariant"""


class UnsupportedDimensionError(QuadtreeError, ValueError):
    """The operation only exists for a specific dimension"""


class PointFileParseError(QuadtreeError, ValueError):
    """A point or tree file could not be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None, path: Optional[str] = None):
        self.line_number = line_number
        self.path = path
        location = ""
        if path:
            location += f"{path}:"
        if line_number is not None:
            location += f"{line_number}:"
        super().__init__(f"{location} {message}".strip())
