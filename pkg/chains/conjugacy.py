"""
chainscope - Conjugate-Equivalence Witnesses Along Tree Paths

Words ``w_l`` with ``w_l(prefix(x, l)) = prefix(y, l)``, each extending the
previous one inside its coset: ``w_{l+1} = w_l h`` with ``h`` fixing
``prefix(x, l)``.
"""

from dataclasses import dataclass, field
from typing import List

from automaton.action import act_on_vertex
from automaton.enumeration import DEFAULT_WORD_CAP, vertex_transversal
from automaton.system import AutomatonSystem
from automaton.words import GroupWord, IDENTITY
from tree.boundary import BoundaryPoint, check_point, format_point, prefix
from utils.errors import CertificateError, DomainError, PreconditionError
from utils.logging_config import get_logger

logger = get_logger("chains.conjugacy")


@dataclass
class ConjugacyWitness:
    x: BoundaryPoint
    y: BoundaryPoint
    words: List[GroupWord] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.words) - 1

    def to_dict(self) -> dict:
        return {
            "x": format_point(self.x),
            "y": format_point(self.y),
            "depth": self.depth,
            "words": [str(w) for w in self.words],
        }


def verify_conjugacy(sys: AutomatonSystem, witness: ConjugacyWitness) -> None:
    for level, w in enumerate(witness.words):
        if act_on_vertex(sys, w, prefix(witness.x, level)) != prefix(witness.y, level):
            raise CertificateError(f"w_{level} = {w} does not map prefix(x, {level}) to prefix(y, {level})")
        if level and act_on_vertex(sys, w, prefix(witness.x, level - 1)) != prefix(witness.y, level - 1):
            raise CertificateError(f"w_{level} = {w} leaves the coset of w_{level - 1}")


def conjugacy_witness(sys: AutomatonSystem, x: BoundaryPoint, y: BoundaryPoint, L: int,
                      word_cap: int = DEFAULT_WORD_CAP) -> ConjugacyWitness:
    """Coherent words for levels ``0..L``.

    Raises
    ------
    ResourceCapExceeded
        A per-level orbit search passed ``word_cap`` vertices. Transitivity
        guarantees a witness, so this only reports the budget.
    """
    if L < 0:
        raise DomainError(f"depth must be >= 0, got {L}")
    x, y = check_point(x, sys.degree), check_point(y, sys.degree)
    witness = ConjugacyWitness(x, y, [IDENTITY])
    current = IDENTITY
    for level in range(1, L + 1):
        source = prefix(x, level)
        target = act_on_vertex(sys, current.inverse(), prefix(y, level))
        words = vertex_transversal(sys, source, targets=[target], cap=word_cap)
        if target not in words:
            raise PreconditionError(f"{format_point(y)} is not in the orbit of {format_point(x)} at level {level}")
        current = current * words[target]
        witness.words.append(current)
        logger.debug("level %d: w = %s", level, current)
    verify_conjugacy(sys, witness)
    return witness
