"""Exception hierarchy shared by the whole package.

Errors split into two families that the CLI maps onto exit codes:
``InputError`` (bad data, violated preconditions -> exit 2) and
``ResourceError`` (configurable caps exhausted -> exit 3).
"""

from __future__ import annotations


class UretractError(Exception):
    """Base class for all package errors."""


class InputError(UretractError):
    """Invalid input or violated precondition (CLI exit code 2)."""


class ResourceError(UretractError):
    """A configurable resource cap was exhausted (CLI exit code 3)."""


class ArityMismatch(InputError):
    pass


class UnknownVariableError(InputError):
    pass


class ParseError(InputError):
    """Syntax error with position information."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SingularMatrix(InputError):
    pass


class LimitExceeded(ResourceError):
    pass


class LiftLimitsExceeded(LimitExceeded):
    """No lift certified inside the (degree, jet-order) caps.

    ``attempts`` lists, per coordinate still unsolved, the highest
    (degree, jet order) pair that was tried.
    """

    def __init__(self, attempts: dict[int, tuple[int, int]]):
        super().__init__(f"lift caps exhausted; highest (D, N) tried per coordinate: {attempts}")
        self.attempts = attempts


class DimOfUnitIdeal(InputError):
    pass


class PointNotOnVariety(InputError):
    pass


class PreconditionViolated(InputError):
    def __init__(self, which: str):
        super().__init__(which)
        self.which = which


class PropertyCheckFailed(UretractError):
    """An internally guaranteed property failed; indicates a bug upstream."""

    def __init__(self, which: int, detail: str = ""):
        super().__init__(f"sigma property ({which}) failed{': ' + detail if detail else ''}")
        self.which = which


class ExhaustedTries(ResourceError):
    def __init__(self, reasons: list[str]):
        super().__init__("no generic frame found; " + "; ".join(reasons))
        self.reasons = reasons


class NotSmoothAtPoint(InputError):
    pass


class NotRegularAtPoint(InputError):
    def __init__(self, coordinate: int, detail: str = ""):
        super().__init__(f"coordinate {coordinate} of the map is not regular at the point"
                         + (f" ({detail})" if detail else ""))
        self.coordinate = coordinate


class DescentFailed(UretractError):
    """Division guaranteed by the theory failed; internal-error signal."""


class CompositionUndefined(InputError):
    pass


class PremiseCertMissing(InputError):
    pass


class VersionMismatch(InputError):
    pass
