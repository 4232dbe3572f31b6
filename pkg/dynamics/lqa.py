"""
chainscope - Local Quasi-Analyticity and Topological Freeness Probes

Both probes walk the same box: every nontrivial reduced word up to a length
bound, and the cylinders up to a level bound on which it is the exact
identity. An empty result means nothing was found in the box; it proves
neither property.
"""

from typing import List

from automaton.decide import DEFAULT_IDENTITY_CAP, identity_cylinders, is_identity
from automaton.enumeration import DEFAULT_WORD_CAP, word_enumeration
from automaton.system import AutomatonSystem
from tree.vertices import Cylinder
from utils.errors import DomainError, UndecidedAtCap
from utils.logging_config import get_logger

from .models import FreenessReport, LqaViolation
from .verify import verify

logger = get_logger("dynamics.lqa")


def lqa_probe(sys: AutomatonSystem, max_word_length: int, max_outer_level: int, max_inner_level: int,
              identity_cap: int = DEFAULT_IDENTITY_CAP, word_cap: int = DEFAULT_WORD_CAP) -> List[LqaViolation]:
    """Every violation ``V < U`` in the box.

    ``V`` runs over the minimal identity cylinders of each word up to level
    ``max_inner_level``, and ``U`` over the proper ancestors of ``V`` up to
    level ``max_outer_level``. Since ``V`` is minimal, no ancestor of ``V`` is
    an identity cylinder. Ordered by word, then ``V``, then the level of ``U``.
    """
    if min(max_word_length, max_outer_level, max_inner_level) < 0:
        raise DomainError("lqa box bounds must be >= 0")
    out: List[LqaViolation] = []
    if not sys.names:
        return out
    for w in word_enumeration(sys, max_word_length, include_identity=False, cap=word_cap):
        try:
            if is_identity(sys, w, identity_cap):
                continue
            cylinders = identity_cylinders(sys, w, max_inner_level, cap=identity_cap)
        except UndecidedAtCap:
            logger.warning("lqa probe: %s undecided at cap", w)
            continue
        for inner in cylinders:
            for level in range(min(max_outer_level, inner.level - 1) + 1):
                violation = LqaViolation(w, Cylinder(inner.root[:level]), inner, sys)
                verify(violation, identity_cap)
                out.append(violation)
    logger.info("lqa probe on %s: %d violations", sys.name, len(out))
    return out


def topological_freeness_probe(sys: AutomatonSystem, max_word_length: int, depth: int,
                               identity_cap: int = DEFAULT_IDENTITY_CAP,
                               word_cap: int = DEFAULT_WORD_CAP) -> FreenessReport:
    """Identity cylinders (levels ``<= depth``) of every nontrivial element in the box."""
    report = FreenessReport(max_word_length, depth, sys)
    for w in word_enumeration(sys, max_word_length, include_identity=False, cap=word_cap):
        report.searched += 1
        try:
            if is_identity(sys, w, identity_cap):
                continue
            cylinders = identity_cylinders(sys, w, depth, cap=identity_cap)
        except UndecidedAtCap:
            report.undecided.append(w)
            continue
        if cylinders:
            report.fixed_cylinders[w] = cylinders
    verify(report, identity_cap)
    logger.info("freeness probe on %s: %s", sys.name, report.status)
    return report
