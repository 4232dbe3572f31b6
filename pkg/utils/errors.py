"""
chainscope - Error Types

Every failure raised by the library derives from ``ChainscopeError``. Input
problems also derive from ``ValueError`` so callers that only know the
standard library still catch them.
"""

from dataclasses import dataclass
from typing import Any, Optional


class ChainscopeError(Exception):
    """Base class for all chainscope failures."""


# =============================================================================
# INPUT ERRORS (CLI exit code 2)
# =============================================================================

class SystemDefinitionError(ChainscopeError, ValueError):
    """An automaton system definition is malformed."""


class SystemParseError(SystemDefinitionError):
    """Syntax error in system text, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownGeneratorError(SystemDefinitionError):
    def __init__(self, name: str, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown generator name {name!r}{where}")
        self.name = name
        self.line = line


class InvalidPermutationError(SystemDefinitionError):
    def __init__(self, images, degree: int, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"root permutation {list(images)} is not a bijection of 0..{degree - 1}{where}")
        self.images = tuple(images)
        self.degree = degree
        self.line = line


class InputFormatError(ChainscopeError, ValueError):
    """Bad vertex, boundary point, cylinder or word text."""


# =============================================================================
# PRECONDITION AND DOMAIN ERRORS (CLI exit code 4)
# =============================================================================

class DomainError(ChainscopeError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(ChainscopeError):
    """A documented precondition of a probe does not hold."""


class ActionNotMinimalError(PreconditionError):
    """The level action is intransitive, so the boundary action is not minimal."""

    def __init__(self, level: int, orbit_size: int, points: int):
        super().__init__(
            f"action not minimal on tree boundary: level {level} orbit of "
            f"vertex 0 has {orbit_size} of {points} vertices"
        )
        self.level = level
        self.orbit_size = orbit_size
        self.points = points


# =============================================================================
# RESOURCE CAPS (CLI exit code 3)
# =============================================================================

class ResourceCapExceeded(ChainscopeError):
    """A configured resource cap was hit before an answer was found."""

    def __init__(self, cap_name: str, cap: int, partial: Any = None, message: str = None):
        super().__init__(message or f"{cap_name} cap of {cap} exceeded")
        self.cap_name = cap_name
        self.cap = cap
        self.partial = partial


class UndecidedAtCap(ResourceCapExceeded):
    """A decision procedure stopped at its cap without deciding."""


class CertificateError(ChainscopeError):
    """A certificate failed independent re-verification."""


# =============================================================================
# UNDECIDED TABLE CELLS
# =============================================================================

@dataclass(frozen=True)
class Undecided:
    """Marker stored in a table cell whose value was not decided at a cap."""
    cap_name: str
    cap: int
    reason: str = ""

    def __str__(self) -> str:
        return "undecided"

    def to_dict(self) -> dict:
        return {"undecided": True, "cap_name": self.cap_name, "cap": self.cap, "reason": self.reason}


def is_undecided(value: Any) -> bool:
    return isinstance(value, Undecided)


class InvariantError(ChainscopeError, AssertionError):
    """An internal mathematical invariant failed; always a bug, never bad input."""


def check_invariant(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantError(message)
