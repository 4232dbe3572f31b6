"""
chainscope - Exact Action on Vertices and Boundary Points

A product word ``u*v`` acts as ``u`` after ``v``. Everything here is computed
from ``AutomatonSystem.step``: the root permutation and one-letter sections of
a word.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from utils.errors import ResourceCapExceeded, UndecidedAtCap
from utils.logging_config import get_logger
from tree.boundary import BoundaryPoint, drop, prepend
from tree.vertices import Vertex, check_point_cap, format_vertex, DEFAULT_POINT_CAP

from .system import AutomatonSystem, RootPerm
from .words import GroupWord

logger = get_logger("automaton")

DEFAULT_STATE_CAP = 10 ** 6


def walk(sys: AutomatonSystem, w: GroupWord, v: Vertex) -> Tuple[Vertex, GroupWord]:
    """Image of ``v`` under ``w`` together with the section of ``w`` at ``v``."""
    image = []
    current = w
    for letter in v:
        if current.is_empty:
            image.append(letter)
            continue
        roots, sections = sys.step(current)
        image.append(roots[letter])
        current = sections[letter]
    return tuple(image), current


def act_on_vertex(sys: AutomatonSystem, w: GroupWord, v: Vertex) -> Vertex:
    return walk(sys, w, v)[0]


def section(sys: AutomatonSystem, w: GroupWord, v: Vertex) -> GroupWord:
    """Reduced word with ``w(v s) = w(v) section(w, v)(s)``."""
    return walk(sys, w, v)[1]


def root_permutation(sys: AutomatonSystem, w: GroupWord) -> RootPerm:
    return RootPerm(sys.step(w)[0])


def _boundary_states(sys: AutomatonSystem, w: GroupWord, x: BoundaryPoint) -> Iterator[Tuple[int, GroupWord]]:
    """Yield ``(position, section word)`` while reading ``x`` letter by letter."""
    pos = 0
    current = w
    while True:
        yield pos, current
        roots, sections = sys.step(current)
        current = sections[x.letter(pos)]
        pos += 1


def act_on_boundary(sys: AutomatonSystem, w: GroupWord, x: BoundaryPoint,
                    state_cap: int = DEFAULT_STATE_CAP) -> BoundaryPoint:
    """Exact image of an eventually periodic point.

    Iterates ``(section word, phase in the period of x)`` until the pair
    repeats; the output between the two visits is the image's period.

    Raises
    ------
    ResourceCapExceeded
        More than ``state_cap`` distinct states; ``partial`` holds the image
        prefix computed so far.
    """
    pre_len, per_len = len(x.preperiod), len(x.period)
    out: List[int] = []
    seen: Dict[Tuple[GroupWord, int], int] = {}
    for pos, current in _boundary_states(sys, w, x):
        if current.is_empty:
            return prepend(tuple(out), drop(x, pos))
        if pos >= pre_len:
            key = (current, (pos - pre_len) % per_len)
            first = seen.get(key)
            if first is not None:
                return BoundaryPoint.of(tuple(out[:first]), tuple(out[first:]))
            if len(seen) >= state_cap:
                logger.warning("boundary action of %s stopped at state cap %d", w, state_cap)
                raise ResourceCapExceeded("state_cap", state_cap, partial=format_vertex(tuple(out)))
            seen[key] = pos
        roots = sys.step(current)[0]
        out.append(roots[x.letter(pos)])


def fixes_boundary_point(sys: AutomatonSystem, w: GroupWord, x: BoundaryPoint,
                         state_cap: int = DEFAULT_STATE_CAP) -> bool:
    """Whether ``w . x = x``; false as soon as one letter moves.

    Raises
    ------
    UndecidedAtCap
        The state space exceeded ``state_cap`` before a repeat.
    """
    pre_len, per_len = len(x.preperiod), len(x.period)
    seen = set()
    for pos, current in _boundary_states(sys, w, x):
        if current.is_empty:
            return True
        if pos >= pre_len:
            key = (current, (pos - pre_len) % per_len)
            if key in seen:
                return True
            if len(seen) >= state_cap:
                raise UndecidedAtCap("state_cap", state_cap)
            seen.add(key)
        letter = x.letter(pos)
        if sys.step(current)[0][letter] != letter:
            return False


# =============================================================================
# PORTRAITS
# =============================================================================

@dataclass
class Portrait:
    """Root permutations of the sections of a word at every vertex of levels ``0..depth``."""
    depth: int
    degree: int
    perms: Dict[Vertex, Tuple[int, ...]] = field(default_factory=dict)

    def at(self, v: Vertex) -> Tuple[int, ...]:
        return self.perms[tuple(v)]

    def is_trivial(self) -> bool:
        identity = tuple(range(self.degree))
        return all(p == identity for p in self.perms.values())

    def act(self, v: Vertex) -> Vertex:
        """Image of a vertex of level ``<= depth + 1``."""
        image = []
        for k, letter in enumerate(v):
            image.append(self.perms[tuple(v[:k])][letter])
        return tuple(image)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "perms": {format_vertex(v): list(p) for v, p in sorted(self.perms.items(), key=lambda kv: (len(kv[0]), kv[0]))},
        }


def portrait(sys: AutomatonSystem, w: GroupWord, n: int, point_cap: int = DEFAULT_POINT_CAP) -> Portrait:
    """Portrait of ``w`` at vertices of levels ``0..n``; it determines the action on level ``n + 1``."""
    check_point_cap(sys.degree, n, point_cap)
    result = Portrait(depth=n, degree=sys.degree)
    layer = [((), w)]
    for level in range(n + 1):
        nxt = []
        for v, word in layer:
            roots, sections = sys.step(word)
            result.perms[v] = roots
            if level < n:
                nxt.extend((v + (i,), sections[i]) for i in range(sys.degree))
        layer = nxt
    return result
