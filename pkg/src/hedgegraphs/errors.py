"""Exception types shared across the package."""


class HedgegraphError(Exception):
    """Base class for errors raised by this package."""


class ParseError(HedgegraphError):
    """Malformed `.hg` input. Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class LimitExceededError(HedgegraphError):
    """An exhaustive enumeration would exceed the configured limits."""


class InfeasibleError(HedgegraphError):
    """A construction is infeasible; carries a certificate when available."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate
