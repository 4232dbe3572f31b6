"""
chainscope - Eventually Periodic Boundary Points

A boundary point is the infinite path ``u v v v ...``. Points are stored in
canonical form: the period is primitive and the preperiod is rolled back as
far as possible, so two points are equal iff their canonical forms agree.
Text form is ``PREPERIOD.(PERIOD)``, e.g. ``0001110.(0)`` or ``.(1)``.
"""

import re
from dataclasses import dataclass
from typing import Tuple

from utils.errors import DomainError, InputFormatError

from .vertices import Cylinder, Vertex, format_vertex, parse_vertex

_POINT_RE = re.compile(r"^\s*([0-9a-zA-Z]*)\s*\.?\s*\(\s*([0-9a-zA-Z]+)\s*\)\s*$")


def _primitive_root(word: Vertex) -> Vertex:
    n = len(word)
    for k in range(1, n + 1):
        if n % k == 0 and word[:k] * (n // k) == word:
            return word[:k]
    return word


def canonical_form(preperiod: Vertex, period: Vertex) -> Tuple[Vertex, Vertex]:
    preperiod, period = tuple(preperiod), tuple(period)
    if not period:
        raise InputFormatError("boundary point period must be nonempty")
    period = _primitive_root(period)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1:] + period[:-1]
    return preperiod, period


@dataclass(frozen=True)
class BoundaryPoint:
    """Eventually periodic point; construct through ``BoundaryPoint.of``."""
    preperiod: Vertex
    period: Vertex

    @classmethod
    def of(cls, preperiod, period) -> "BoundaryPoint":
        pre, per = canonical_form(preperiod, period)
        return cls(pre, per)

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def __str__(self) -> str:
        return format_point(self)


def format_point(x: BoundaryPoint) -> str:
    pre = "" if not x.preperiod else format_vertex(x.preperiod)
    return f"{pre}.({format_vertex(x.period)})"


def parse_point(text: str, d: int) -> BoundaryPoint:
    match = _POINT_RE.match(text)
    if match is None:
        raise InputFormatError(f"boundary point {text!r} is not of the form PREPERIOD.(PERIOD)")
    pre_text, per_text = match.groups()
    return BoundaryPoint.of(
        parse_vertex(pre_text, d) if pre_text else (),
        parse_vertex(per_text, d),
    )


def prefix(x: BoundaryPoint, n: int) -> Vertex:
    """First ``n`` letters of ``x``."""
    if n < 0:
        raise DomainError(f"prefix length must be >= 0, got {n}")
    return tuple(x.letter(i) for i in range(n))


unroll = prefix


def contains(c: Cylinder, x: BoundaryPoint) -> bool:
    return prefix(x, c.level) == c.root


def shift(c: Cylinder, x: BoundaryPoint) -> BoundaryPoint:
    """Remove the prefix ``c.root`` from ``x``."""
    if not contains(c, x):
        raise DomainError(f"{format_point(x)} is not in cylinder {c}")
    return drop(x, c.level)


def drop(x: BoundaryPoint, k: int) -> BoundaryPoint:
    """``x`` with its first ``k`` letters removed."""
    if k <= len(x.preperiod):
        return BoundaryPoint.of(x.preperiod[k:], x.period)
    offset = (k - len(x.preperiod)) % len(x.period)
    return BoundaryPoint.of((), x.period[offset:] + x.period[:offset])


def prepend(v: Vertex, x: BoundaryPoint) -> BoundaryPoint:
    return BoundaryPoint.of(tuple(v) + x.preperiod, x.period)


def constant_point(letter: int = 0) -> BoundaryPoint:
    return BoundaryPoint.of((), (letter,))


def check_point(x: BoundaryPoint, d: int) -> BoundaryPoint:
    for letter in x.preperiod + x.period:
        if not 0 <= letter < d:
            raise DomainError(f"letter {letter} out of range for degree {d}")
    return x
