"""
chainscope - Vertices, Levels and Cylinders

Vertices of the rooted d-ary tree are tuples of letters in ``0..d-1``. At each
level the lexicographic order of vertices is the canonical point index used by
every permutation in the package: vertex ``v`` of level ``n`` has index
``sum(v[i] * d**(n-1-i))``, so the descendants of a vertex form one contiguous
block of indices.
"""

from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

from utils.errors import DomainError, InputFormatError, ResourceCapExceeded

Vertex = Tuple[int, ...]

MAX_DEGREE = 36
DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
ROOT_TEXT = "^"
DEFAULT_POINT_CAP = 2 ** 14


def check_degree(d: int) -> int:
    if not isinstance(d, int) or d < 2 or d > MAX_DEGREE:
        raise DomainError(f"tree degree must be an integer in 2..{MAX_DEGREE}, got {d!r}")
    return d


def check_vertex(v: Vertex, d: int) -> Vertex:
    v = tuple(v)
    for letter in v:
        if not 0 <= letter < d:
            raise DomainError(f"letter {letter} out of range for degree {d}")
    return v


def check_point_cap(d: int, n: int, point_cap: int = DEFAULT_POINT_CAP) -> int:
    """Return ``d**n``, raising when it exceeds the point cap."""
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    count = d ** n
    if count > point_cap:
        raise ResourceCapExceeded(
            "point_cap", point_cap,
            message=f"level {n} of the degree-{d} tree has {count} vertices, above point cap {point_cap}",
        )
    return count


# =============================================================================
# TEXT FORMS
# =============================================================================

def format_vertex(v: Vertex) -> str:
    if not v:
        return ROOT_TEXT
    return "".join(DIGITS[letter] for letter in v)


def parse_vertex(text: str, d: int) -> Vertex:
    """Parse a digit string (``"0110"``) or ``"^"`` for the root."""
    text = text.strip()
    if text in (ROOT_TEXT, ""):
        return ()
    letters = []
    for pos, ch in enumerate(text.lower()):
        value = DIGITS.find(ch)
        if value < 0 or value >= d:
            raise InputFormatError(f"bad letter {ch!r} at position {pos} of vertex {text!r} (degree {d})")
        letters.append(value)
    return tuple(letters)


# =============================================================================
# CYLINDERS
# =============================================================================

@dataclass(frozen=True, order=True)
class Cylinder:
    """The clopen set of boundary paths through ``root``."""
    root: Vertex = ()

    @property
    def level(self) -> int:
        return len(self.root)

    def parent(self) -> "Cylinder":
        if not self.root:
            raise DomainError("the whole boundary has no parent cylinder")
        return Cylinder(self.root[:-1])

    def child(self, letter: int) -> "Cylinder":
        return Cylinder(self.root + (letter,))

    def contains_vertex(self, v: Vertex) -> bool:
        return tuple(v[: len(self.root)]) == self.root

    def __str__(self) -> str:
        return format_cylinder(self)


def format_cylinder(c: Cylinder) -> str:
    return ("" if not c.root else format_vertex(c.root)) + "T"


def parse_cylinder(text: str, d: int) -> Cylinder:
    """Accepts ``"01T"``, ``"T"``, ``"01"`` or ``"^"``."""
    text = text.strip()
    if text.endswith("T"):
        text = text[:-1]
    return Cylinder(parse_vertex(text, d))


# =============================================================================
# LEVELS
# =============================================================================

def level_vertices(d: int, n: int, point_cap: int = DEFAULT_POINT_CAP) -> List[Vertex]:
    """All ``d**n`` vertices of level ``n`` in lexicographic order."""
    check_degree(d)
    check_point_cap(d, n, point_cap)
    return [tuple(v) for v in product(range(d), repeat=n)]


def vertex_index(v: Vertex, d: int) -> int:
    index = 0
    for letter in v:
        index = index * d + letter
    return index


def vertex_at(index: int, n: int, d: int) -> Vertex:
    if not 0 <= index < d ** n:
        raise DomainError(f"index {index} out of range for level {n} of degree {d}")
    letters = []
    for _ in range(n):
        index, letter = divmod(index, d)
        letters.append(letter)
    return tuple(reversed(letters))


def descendants(v: Vertex, n: int, d: int) -> range:
    """Level-``n`` descendants of ``v`` as a contiguous range of point indices."""
    if len(v) > n:
        raise DomainError(f"vertex of level {len(v)} has no descendants at level {n}")
    block = d ** (n - len(v))
    start = vertex_index(v, d) * block
    return range(start, start + block)
