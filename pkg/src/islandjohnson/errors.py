"""Exception types shared across the package."""


class IslandJohnsonError(Exception):
    """Base class for all package errors."""


class ParameterError(IslandJohnsonError, ValueError):
    """Parameters outside an operation's domain (e.g. l >= k)."""


class GeneralPositionViolation(IslandJohnsonError, ValueError):
    """Three collinear points (or a duplicate) where general position is required."""


class WeightUndefined(IslandJohnsonError, ValueError):
    """Island weight requested for an island with fewer than two non-apex points."""


class NotProjectable(IslandJohnsonError, ValueError):
    """Projection requested for an island whose non-apex part is not a radial run."""


class NotAnIsland(IslandJohnsonError, ValueError):
    """An index set that fails the island property where an island is required."""

    def __init__(self, members, message=None):
        self.members = tuple(members)
        super().__init__(message or f"{self.members} is not an island")


class Unreachable(IslandJohnsonError):
    """No path exists between the requested vertices."""


class PreconditionViolation(IslandJohnsonError):
    """A size/parameter threshold required by a construction does not hold."""


class ConstructionError(IslandJohnsonError):
    """A path construction exhausted every candidate, including fallbacks."""


class BudgetExceeded(IslandJohnsonError):
    """Exact search ran out of budget; carries the best bound found so far."""

    def __init__(self, best, message=None):
        self.best = best
        super().__init__(message or f"budget exceeded; best bound found: {best}")


class ResourceCapExceeded(IslandJohnsonError):
    """A build would exceed the configured vertex or pair cap; refused outright."""


class GenerationFailure(IslandJohnsonError):
    """Point generation could not satisfy its constraints within the retry budget."""


class VerificationFailure(IslandJohnsonError):
    """A generated structure failed its own validity check."""


class CheckFailure(IslandJohnsonError):
    """A verified claim does not hold on the given instance."""


class PointFileError(IslandJohnsonError, ValueError):
    """Malformed point or island file; carries the offending line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
