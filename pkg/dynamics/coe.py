"""
chainscope - Continuous Orbit Equivalence Check

Two systems on the same tree, identity map on the boundary. For a partition
into level-``level`` cylinders, ``alpha(g, B)`` is a word of the second system
acting exactly like the generator ``g`` of the first on the block ``B``, and
``beta`` goes the other way. Assignments are searched in the canonical word
order, trying the generator of the same name first.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from automaton.action import act_on_vertex
from automaton.decide import DEFAULT_IDENTITY_CAP, agree_on_cylinder, is_identity
from automaton.enumeration import DEFAULT_WORD_CAP, word_enumeration
from automaton.system import AutomatonSystem, check_same_tree
from automaton.words import GroupWord, IDENTITY
from quotients.permutations import level_image
from tree.vertices import DEFAULT_POINT_CAP, Cylinder, level_vertices
from utils.errors import DomainError, UndecidedAtCap
from utils.logging_config import get_logger

from .models import AlphaCollision, CoeWitness
from .verify import verify

logger = get_logger("dynamics.coe")

DEFAULT_COLLISION_LENGTH = 2


def _match(source: AutomatonSystem, name: str, target: AutomatonSystem, candidates: Sequence[GroupWord],
           block: Cylinder, identity_cap: int) -> Optional[GroupWord]:
    g = GroupWord.generator(name)
    ordered = list(candidates)
    if name in target.names:
        ordered.insert(0, GroupWord.generator(name))
    for h in ordered:
        try:
            if agree_on_cylinder(source, g, target, h, block, identity_cap):
                return h
        except UndecidedAtCap:
            logger.warning("coe: %s vs %s on %s undecided at cap", g, h, block)
    return None


def _assign(source: AutomatonSystem, target: AutomatonSystem, partition: List[Cylinder], word_length: int,
            label: str, witness: CoeWitness, identity_cap: int, word_cap: int) -> Dict[Tuple[str, Cylinder], GroupWord]:
    candidates = list(word_enumeration(target, word_length, cap=word_cap))
    out: Dict[Tuple[str, Cylinder], GroupWord] = {}
    for name in source.names:
        for block in partition:
            h = _match(source, name, target, candidates, block, identity_cap)
            if h is None:
                witness.unresolved.append((label, name, block))
            else:
                out[(name, block)] = h
    return out


def block_partition_preserved(sys: AutomatonSystem, words: Sequence[GroupWord], level: int,
                              point_cap: int = DEFAULT_POINT_CAP) -> bool:
    """Points in one level-``level`` block go to one block under every word.

    Checked on level ``level + 1`` images.
    """
    d = sys.degree
    for w in words:
        images = level_image(sys, w, level + 1, point_cap).images // d
        if not (images.reshape(-1, d) == images[::d, None]).all():
            return False
    return True


def alpha_on_block(witness: CoeWitness, w: GroupWord, block: Cylinder) -> Optional[GroupWord]:
    """Extend ``alpha`` from generators to ``w`` by the cocycle rule.

    ``alpha(uv, y) = alpha(u, v y) alpha(v, y)``; inverse letters use
    ``alpha(g^-1, B) = alpha(g, g^-1 B)^-1``.
    """
    G = witness.system_g
    result = IDENTITY
    current = block
    for name, exp in reversed(w.factors):
        letter = GroupWord(((name, exp),))
        image = Cylinder(act_on_vertex(G, letter, current.root))
        key = (name, current if exp > 0 else image)
        h = witness.alpha.get(key)
        if h is None:
            return None
        result = (h if exp > 0 else h.inverse()) * result
        current = image
    return result


def alpha_collisions(witness: CoeWitness, word_length: int = DEFAULT_COLLISION_LENGTH,
                     identity_cap: int = DEFAULT_IDENTITY_CAP) -> List[AlphaCollision]:
    """Distinct elements of the first group with the same ``alpha`` on a block."""
    G, H = witness.system_g, witness.system_h
    words = list(word_enumeration(G, word_length))
    collisions: List[AlphaCollision] = []
    for block in witness.partition:
        classes: List[Tuple[GroupWord, List[GroupWord]]] = []
        for w in words:
            value = alpha_on_block(witness, w, block)
            if value is None:
                continue
            for rep_value, members in classes:
                if is_identity(H, rep_value.inverse() * value, identity_cap):
                    if not any(is_identity(G, m.inverse() * w, identity_cap) for m in members):
                        members.append(w)
                    break
            else:
                classes.append((value, [w]))
        for value, members in classes:
            if len(members) > 1:
                collisions.append(AlphaCollision(block, value, members))
    return collisions


def coe_check(sys_g: AutomatonSystem, sys_h: AutomatonSystem, level: int, word_length: int,
              collision_length: int = DEFAULT_COLLISION_LENGTH,
              identity_cap: int = DEFAULT_IDENTITY_CAP, word_cap: int = DEFAULT_WORD_CAP,
              point_cap: int = DEFAULT_POINT_CAP) -> CoeWitness:
    """Alpha/beta assignments on the level-``level`` partition plus partition checks.

    Blocks with no matching word in the box are listed in ``unresolved``.
    """
    check_same_tree(sys_g, sys_h)
    if level < 0 or word_length < 0:
        raise DomainError("partition level and word length must be >= 0")
    partition = [Cylinder(v) for v in level_vertices(sys_g.degree, level, point_cap)]
    witness = CoeWitness(level, word_length, sys_g, sys_h, partition)
    witness.alpha = _assign(sys_g, sys_h, partition, word_length, "alpha", witness, identity_cap, word_cap)
    witness.beta = _assign(sys_h, sys_g, partition, word_length, "beta", witness, identity_cap, word_cap)

    preserved = True
    for sys in (sys_g, sys_h):
        words = list(word_enumeration(sys, word_length, cap=word_cap))
        witness.words_checked += len(words)
        preserved = preserved and block_partition_preserved(sys, words, level, point_cap)
    witness.partition_preserved = preserved

    if not witness.unresolved:
        witness.collisions = alpha_collisions(witness, collision_length, identity_cap)
    verify(witness, identity_cap)
    logger.info("coe check at level %d: %d alpha, %d beta, %d unresolved",
                level, len(witness.alpha), len(witness.beta), len(witness.unresolved))
    return witness
