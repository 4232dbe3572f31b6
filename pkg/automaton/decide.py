"""
chainscope - Exact Decision Procedures

``is_identity`` explores the closure of a word under one-letter sections.
A word is the identity iff every word in that closure has a trivial root
permutation (greatest fixpoint: revisiting a word assumes it is the
identity). Answers are memoized on the system behind its lock.
"""

from collections import deque
from typing import List, Optional, Tuple

from utils.errors import DomainError, UndecidedAtCap
from utils.logging_config import get_logger
from tree.vertices import Cylinder, Vertex

from .action import walk
from .system import AutomatonSystem, check_same_tree
from .words import GroupWord

logger = get_logger("automaton.decide")

DEFAULT_IDENTITY_CAP = 10 ** 6


def is_identity(sys: AutomatonSystem, w: GroupWord, cap: int = DEFAULT_IDENTITY_CAP,
                memo: bool = True) -> bool:
    """Decide whether ``w`` acts trivially on the whole tree.

    With ``memo=False`` the system's answer table is neither read nor
    written, so the closure is recomputed from the section table alone.

    Raises
    ------
    UndecidedAtCap
        The section closure grew beyond ``cap`` distinct words.
    """
    if w.is_empty:
        return True
    table = sys._identity_memo if memo else {}
    with sys._lock:
        known = table.get(w)
    if known is not None:
        return known

    identity = tuple(range(sys.degree))
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        with sys._lock:
            known = table.get(u)
        if known is True:
            continue
        roots, sections = sys.step(u)
        if known is False or roots != identity:
            with sys._lock:
                table[w] = False
            return False
        for s in sections:
            if not s.is_empty and s not in seen:
                if len(seen) >= cap:
                    logger.warning("identity closure of %s exceeded cap %d", w, cap)
                    raise UndecidedAtCap("identity_cap", cap)
                seen.add(s)
                queue.append(s)

    with sys._lock:
        for u in seen:
            table[u] = True
    logger.debug("identity closure of %s: %d words", w, len(seen))
    return True


def is_identity_on_cylinder(sys: AutomatonSystem, w: GroupWord, c: Cylinder,
                            cap: int = DEFAULT_IDENTITY_CAP, memo: bool = True) -> bool:
    image, sec = walk(sys, w, c.root)
    return image == c.root and is_identity(sys, sec, cap, memo)


def equal_on_cylinder(sys: AutomatonSystem, w1: GroupWord, w2: GroupWord, c: Cylinder,
                      cap: int = DEFAULT_IDENTITY_CAP, memo: bool = True) -> bool:
    """Whether ``w1`` and ``w2`` restrict to the same map on the paths through ``c``."""
    if walk(sys, w1, c.root)[0] != walk(sys, w2, c.root)[0]:
        return False
    _, sec = walk(sys, w1.inverse() * w2, c.root)
    return is_identity(sys, sec, cap, memo)


def restriction(sys: AutomatonSystem, w: GroupWord, c: Cylinder) -> GroupWord:
    """The action of ``w`` on ``c`` carried back to the whole tree.

    Raises
    ------
    DomainError
        ``w`` does not map ``c`` to itself.
    """
    image, sec = walk(sys, w, c.root)
    if image != c.root:
        raise DomainError(f"{w} does not fix the root of {c}")
    return sec


def agree_on_cylinder(sys_a: AutomatonSystem, w_a: GroupWord, sys_b: AutomatonSystem, w_b: GroupWord,
                      c: Cylinder, cap: int = DEFAULT_IDENTITY_CAP, memo: bool = True) -> bool:
    """Whether words of two systems on the same tree act identically on ``c``.

    Same closure argument as ``is_identity``, run on pairs of section words.
    """
    check_same_tree(sys_a, sys_b)
    if sys_a is sys_b:
        return equal_on_cylinder(sys_a, w_a, w_b, c, cap, memo)
    image_a, sec_a = walk(sys_a, w_a, c.root)
    image_b, sec_b = walk(sys_b, w_b, c.root)
    if image_a != image_b:
        return False
    start = (sec_a, sec_b)
    seen = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        roots_u, secs_u = sys_a.step(u)
        roots_v, secs_v = sys_b.step(v)
        if roots_u != roots_v:
            return False
        for pair in zip(secs_u, secs_v):
            if pair not in seen:
                if len(seen) >= cap:
                    raise UndecidedAtCap("identity_cap", cap)
                seen.add(pair)
                queue.append(pair)
    return True


# =============================================================================
# IDENTITY CYLINDERS
# =============================================================================

def fixed_vertex_layers(sys: AutomatonSystem, w: GroupWord, start: Vertex = (), max_level: int = 8,
                        avoid: Optional[Vertex] = None, cap: int = DEFAULT_IDENTITY_CAP):
    """Walk the vertices below ``start`` that ``w`` fixes, level by level.

    Yields ``(vertex, section, identity)`` in level-then-lexicographic order.
    Vertices where the section is the identity are leaves. When ``avoid`` is
    given, vertices that are prefixes of it are walked through but never
    reported as leaves.
    """
    image, sec = walk(sys, w, start)
    if image != tuple(start):
        return
    layer = [(tuple(start), sec)]
    while layer:
        nxt = []
        for v, s in layer:
            on_avoided_branch = avoid is not None and tuple(avoid[: len(v)]) == v
            trivial = is_identity(sys, s, cap)
            if trivial and not on_avoided_branch:
                yield v, s, True
                continue
            yield v, s, False
            if len(v) >= max_level:
                continue
            roots, sections = sys.step(s)
            for i in range(sys.degree):
                if roots[i] == i:
                    nxt.append((v + (i,), sections[i]))
        layer = nxt


def identity_cylinders(sys: AutomatonSystem, w: GroupWord, depth: int, start: Vertex = (),
                       avoid: Optional[Vertex] = None, cap: int = DEFAULT_IDENTITY_CAP) -> List[Cylinder]:
    """Minimal cylinders below ``start``, of level ``<= depth``, on which ``w`` is the identity."""
    return [Cylinder(v) for v, _, trivial in fixed_vertex_layers(sys, w, start, depth, avoid, cap) if trivial]


def first_identity_cylinder(sys: AutomatonSystem, w: GroupWord, depth: int, start: Vertex = (),
                            avoid: Optional[Vertex] = None,
                            cap: int = DEFAULT_IDENTITY_CAP) -> Optional[Tuple[Cylinder, GroupWord]]:
    for v, s, trivial in fixed_vertex_layers(sys, w, start, depth, avoid, cap):
        if trivial:
            return Cylinder(v), s
    return None
