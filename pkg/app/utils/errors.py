class SupertropError(Exception):
    """Base error; `exit_code` is what the CLI returns for it."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DomainError(SupertropError):
    """Operation undefined for the given value (division by zero, singular matrix, ...)."""


class PreconditionError(SupertropError):
    """A mathematical hypothesis of the construct does not hold."""


class ShapeError(SupertropError):
    """Dimension or shape mismatch."""


class CapacityError(SupertropError):
    """Input exceeds a documented size cap."""


class ParseError(SupertropError):
    exit_code = 2


class CounterexampleError(SupertropError):
    exit_code = 3
