"""Exception hierarchy and exit-code handlers for the duality verifier."""

import logging

from pydantic import ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_MALFORMED = 3
EXIT_INTERNAL = 4


class DualityError(Exception):
    """Base exception for every error raised by the verifier."""

    def __init__(self, message: str, details: str | None = None):
        self.message = message
        self.details = details
        super().__init__(self.message)


class BudgetExceededError(DualityError):
    """Raised when a model or space would exceed the configured dimension budget."""

    def __init__(self, requested: int, budget: int, what: str = "model"):
        self.requested = requested
        self.budget = budget
        message = f"{what} of dimension {requested} exceeds budget {budget}"
        super().__init__(message, details="raise --budget or DUALITY_BUDGET")


class MalformedInputError(DualityError):
    """Raised when user data (flags, tableaux, parameters) is invalid."""

    def __init__(
        self,
        message: str,
        details: str | None = None,
        chain_index: int | None = None,
    ):
        self.chain_index = chain_index
        super().__init__(message, details)


class AmbientMismatchError(MalformedInputError):
    """Raised when subspaces or flags live in different ambient spaces."""

    def __init__(self, left: int, right: int):
        super().__init__(f"ambient dimensions differ: {left} != {right}")


class ShapeMismatchError(MalformedInputError):
    """Raised when sizes or shapes of combinatorial objects do not agree."""


class RankMismatchError(MalformedInputError):
    """Raised when intertwiners are composed through different middle ranks."""

    def __init__(self, left: int, right: int):
        super().__init__(f"middle ranks differ: {left} != {right}")


class VerificationFailure(DualityError):
    """Raised by ``VerificationReport.raise_for_status`` for a failing check."""

    def __init__(self, check: str, failed: int):
        super().__init__(f"{check}: {failed} witness(es) failed")


def budget_exception_handler(exc: BudgetExceededError) -> int:
    """Handle budget refusals."""
    logger.error(f"Budget exceeded: {exc.message}")
    return EXIT_BUDGET


def malformed_input_handler(exc: MalformedInputError) -> int:
    """Handle malformed user input."""
    if exc.chain_index is not None:
        logger.error(f"Malformed input at chain index {exc.chain_index}: {exc.message}")
    else:
        logger.error(f"Malformed input: {exc.message}")
    return EXIT_MALFORMED


def validation_exception_handler(exc: ValidationError) -> int:
    """Handle Pydantic validation errors raised while parsing input."""
    logger.error(f"Validation error: {exc}")
    return EXIT_MALFORMED


def general_exception_handler(exc: Exception) -> int:
    """Handle unexpected exceptions."""
    logger.exception(f"Unexpected error: {exc}")
    return EXIT_INTERNAL


def exit_code_for(exc: Exception) -> int:
    """Dispatch an exception to its handler and return the process exit code."""
    if isinstance(exc, BudgetExceededError):
        return budget_exception_handler(exc)
    if isinstance(exc, MalformedInputError):
        return malformed_input_handler(exc)
    if isinstance(exc, ValidationError):
        return validation_exception_handler(exc)
    return general_exception_handler(exc)
