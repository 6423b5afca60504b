"""Exception types and the shared enumeration budget."""

DEFAULT_BUDGET = 2**26


class BibifixError(Exception):
    pass


class InvalidInputError(BibifixError, ValueError):
    """Raised for malformed or out-of-range arguments."""


class ResourceLimitError(BibifixError):
    """Raised when an enumeration would exceed the configured budget."""


class NoGrayOrderError(BibifixError):
    """Raised when a set admits no ordering with successive Hamming distance 1."""


def check_budget(count: int, budget: int | None, what: str) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if limit < 1:
        raise InvalidInputError(f"budget must be >= 1, got {limit}")
    if count > limit:
        raise ResourceLimitError(f"{what}: {count} candidates exceeds budget {limit}")
