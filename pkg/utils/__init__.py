"""chainscope - Utilities Package"""

from .errors import (
    ChainscopeError, SystemDefinitionError, SystemParseError,
    UnknownGeneratorError, InvalidPermutationError, InputFormatError,
    DomainError, PreconditionError, ActionNotMinimalError,
    ResourceCapExceeded, UndecidedAtCap, CertificateError,
    InvariantError, check_invariant, Undecided, is_undecided,
)
from .logging_config import get_logger, setup_logging

__all__ = [
    "ChainscopeError", "SystemDefinitionError", "SystemParseError",
    "UnknownGeneratorError", "InvalidPermutationError", "InputFormatError",
    "DomainError", "PreconditionError", "ActionNotMinimalError",
    "ResourceCapExceeded", "UndecidedAtCap", "CertificateError",
    "InvariantError", "check_invariant", "Undecided", "is_undecided",
    "get_logger", "setup_logging",
]
