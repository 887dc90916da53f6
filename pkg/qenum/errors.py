"""
Custom Exception Classes for the Quantum Enumerator Toolkit

This module defines the exception classes raised by the enumerator, Krawtchouk and bound
machinery. They separate the different ways a computation can fail so that callers (the
command-line front end and the tool server) can react to each category on its own terms.

Exception Categories:
- Input Errors: malformed code files, dependent or non-commuting generators
- Budget Errors: brute-force enumerations that would exceed the configured limits
- Identity Errors: exact identities or roundings that failed to hold
- Bound Errors: certificate conditions, validity windows and root brackets
- Configuration Errors: invalid environment settings

Usage:
    Library functions raise these exceptions with the offending index, cell or budget in
    the message. The CLI maps each category to its own exit status via ``exit_code_for``.
"""
from typing import Optional, Tuple, Union


class QenumError(Exception):
    """Base class for all toolkit errors."""


# --- Input errors ---
class CodeParseError(QenumError):
    """Raised when a code file has a malformed header, symbol or row length."""


class DependentGeneratorsError(QenumError):
    """Raised when generators are not linearly independent over F2."""


class NonCommutingGeneratorsError(QenumError):
    """Raised when stabilizer generators have a nonzero symplectic product."""


class EmptyEigenspaceError(QenumError):
    """Raised when the joint +1 eigenspace has the wrong dimension (inconsistent phases)."""


# --- Budget errors ---
class BudgetExceededError(QenumError):
    """Raised when an enumeration would exceed the configured size guard."""


# --- Identity errors ---
class RoundingResidueError(QenumError):
    """Raised when a floating accumulator is too far from the integer it should be."""


class IdentityFailureError(QenumError):
    """Raised when an exact enumerator or Krawtchouk identity does not hold."""


class NegativeCoefficientError(QenumError):
    """Raised when a MacWilliams transform produces a negative coefficient."""


# --- Bound errors ---
class KeyInequalityViolation(QenumError):
    """Raised when a certificate violates one of the three key-inequality conditions."""

    def __init__(
        self,
        condition: int,
        cell: Optional[Union[Tuple[int, int], int]],
        message: str,
    ):
        super().__init__(f"condition {condition} violated at {cell}: {message}")
        self.condition = condition
        self.cell = cell


class ValidityWindowError(QenumError):
    """Raised when asymptotic parameters fall outside the window where the formula is real."""


class BracketError(QenumError):
    """Raised when a root bracket has no sign change."""


class DomainError(QenumError, ValueError):
    """Raised when an index or argument is outside its allowed range."""


# --- Configuration errors ---
class ConfigurationError(QenumError):
    """Raised when there are configuration-related errors."""


EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4
EXIT_BUDGET = 5
EXIT_IDENTITY = 6
EXIT_BOUND = 7
EXIT_INTERNAL = 1

_EXIT_CODES = (
    (ConfigurationError, EXIT_USAGE),
    (CodeParseError, EXIT_PARSE),
    (DependentGeneratorsError, EXIT_PARSE),
    (NonCommutingGeneratorsError, EXIT_PARSE),
    (EmptyEigenspaceError, EXIT_PARSE),
    (BudgetExceededError, EXIT_BUDGET),
    (RoundingResidueError, EXIT_IDENTITY),
    (IdentityFailureError, EXIT_IDENTITY),
    (NegativeCoefficientError, EXIT_IDENTITY),
    (KeyInequalityViolation, EXIT_BOUND),
    (ValidityWindowError, EXIT_BOUND),
    (BracketError, EXIT_BOUND),
    (DomainError, EXIT_BOUND),
    (OSError, EXIT_IO),
)


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit status of its category."""
    for error_type, code in _EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_INTERNAL
