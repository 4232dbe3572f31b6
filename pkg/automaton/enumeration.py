"""
chainscope - Reduced Word Enumeration

The single search order used by every box-bounded probe: by length, then
lexicographically over the alphabet ``g1, g1^-1, g2, g2^-1, ...``.
"""

from collections import deque
from typing import Dict, Iterable, Iterator, Optional

from tree.vertices import Vertex, format_vertex
from utils.errors import ResourceCapExceeded

from .action import walk
from .system import AutomatonSystem
from .words import GroupWord, IDENTITY

DEFAULT_WORD_CAP = 10 ** 6


def word_enumeration(sys: AutomatonSystem, max_length: int, include_identity: bool = True,
                     include_inverses: bool = True, cap: int = DEFAULT_WORD_CAP) -> Iterator[GroupWord]:
    """Yield all reduced words of length ``<= max_length``.

    Raises
    ------
    ResourceCapExceeded
        More than ``cap`` words would be produced.
    """
    alphabet = sys.alphabet() if include_inverses else [(name, 1) for name in sys.names]
    count = 0
    if include_identity:
        count += 1
        yield IDENTITY
    layer = [()]
    for _ in range(max_length):
        nxt = []
        for factors in layer:
            last = factors[-1] if factors else None
            for name, exp in alphabet:
                if last is not None and last[0] == name and last[1] == -exp:
                    continue
                count += 1
                if count > cap:
                    raise ResourceCapExceeded("word_cap", cap)
                word = factors + ((name, exp),)
                nxt.append(word)
                yield GroupWord(word)
        layer = nxt
        if not layer:
            break


def count_reduced_words(generators: int, length: int) -> int:
    """Number of reduced words of exactly ``length`` over ``generators`` free generators."""
    if length == 0:
        return 1
    return 2 * generators * (2 * generators - 1) ** (length - 1)


def vertex_transversal(sys: AutomatonSystem, v: Vertex, targets: Optional[Iterable[Vertex]] = None,
                       cap: int = DEFAULT_WORD_CAP) -> Dict[Vertex, GroupWord]:
    """Shortest words ``t[u]`` with ``t[u](v) == u`` over the orbit of ``v``.

    Breadth-first in the canonical letter order, so every probe sees the same
    representatives. With ``targets`` the search stops once all are reached.

    Raises
    ------
    ResourceCapExceeded
        The orbit search visited more than ``cap`` vertices.
    """
    v = tuple(v)
    words = {v: IDENTITY}
    pending = None if targets is None else {tuple(t) for t in targets} - {v}
    queue = deque([v])
    letters = sys.alphabet()
    while queue and (pending is None or pending):
        u = queue.popleft()
        for letter in letters:
            step = GroupWord((letter,))
            image = walk(sys, step, u)[0]
            if image in words:
                continue
            if len(words) >= cap:
                raise ResourceCapExceeded("word_cap", cap, message=f"orbit search from {format_vertex(v)} exceeded {cap} vertices")
            words[image] = step * words[u]
            queue.append(image)
            if pending is not None:
                pending.discard(image)
    return words
