"""
chainscope - Group Words

Elements of an automaton group are handled as freely reduced words over the
generator names and their inverses. Equality of group elements is semantic
(``is_identity(u.inverse() * v)``); equality of ``GroupWord`` objects is only
equality of reduced words.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from utils.errors import InputFormatError, UnknownGeneratorError

Letter = Tuple[str, int]

IDENTITY_NAME = "e"
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\s*\^\s*([+-]?\d+))?$")


def is_valid_name(name: str) -> bool:
    return bool(_NAME_RE.match(name)) and name != IDENTITY_NAME


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack = []
    for name, exp in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((name, exp))
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word; each factor is ``(name, +1)`` or ``(name, -1)``."""
    factors: Tuple[Letter, ...] = ()

    @classmethod
    def from_factors(cls, letters: Iterable[Letter]) -> "GroupWord":
        expanded = []
        for name, exp in letters:
            if exp == 0:
                continue
            sign = 1 if exp > 0 else -1
            expanded.extend([(name, sign)] * abs(exp))
        return cls(_reduce(expanded))

    @classmethod
    def generator(cls, name: str, exp: int = 1) -> "GroupWord":
        return cls.from_factors([(name, exp)])

    @property
    def is_empty(self) -> bool:
        return not self.factors

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_reduce(self.factors + other.factors))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((name, -exp) for name, exp in reversed(self.factors)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "GroupWord":
        if n == 0:
            return IDENTITY
        if n < 0:
            return self.inverse() ** -n
        half = self ** (n // 2)
        result = half * half
        return result * self if n % 2 else result

    def conjugate(self, by: "GroupWord") -> "GroupWord":
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def names(self) -> set:
        return {name for name, _ in self.factors}

    def syllables(self) -> Tuple[Letter, ...]:
        """Runs of equal letters collapsed into ``(name, power)``."""
        runs = []
        for name, exp in self.factors:
            if runs and runs[-1][0] == name and (runs[-1][1] > 0) == (exp > 0):
                runs[-1] = (name, runs[-1][1] + exp)
            else:
                runs.append((name, exp))
        return tuple(runs)

    def __str__(self) -> str:
        if not self.factors:
            return IDENTITY_NAME
        return "*".join(name if power == 1 else f"{name}^{power}" for name, power in self.syllables())

    def __repr__(self) -> str:
        return f"GroupWord({str(self)!r})"


IDENTITY = GroupWord()


def parse_word(text: str, names: Optional[Sequence[str]] = None) -> GroupWord:
    """Parse ``e``, ``a``, ``a^-1``, ``a1^2*a2`` and similar.

    Parameters
    ----------
    text : str
        Factors joined with ``*``; ``name^k`` for a nonzero integer ``k``.
    names : sequence of str, optional
        Known generator names; unknown names raise ``UnknownGeneratorError``.
    """
    text = text.strip()
    if not text:
        raise InputFormatError("empty word text")
    known = set(names) if names is not None else None
    letters = []
    for raw in text.split("*"):
        factor = raw.strip()
        match = _FACTOR_RE.match(factor)
        if match is None:
            raise InputFormatError(f"bad factor {factor!r} in word {text!r}")
        name, power = match.group(1), match.group(2)
        k = int(power) if power is not None else 1
        if name == IDENTITY_NAME:
            continue
        if k == 0:
            raise InputFormatError(f"exponent must be nonzero in factor {factor!r}")
        if known is not None and name not in known:
            raise UnknownGeneratorError(name)
        letters.append((name, k))
    return GroupWord.from_factors(letters)


def product_of(words: Iterable[GroupWord]) -> GroupWord:
    """Reduced product ``w1 * w2 * ...`` in one pass."""
    letters = []
    for word in words:
        letters.extend(word.factors)
    return GroupWord(_reduce(letters))
