"""
chainscope - Totally-Not-Normal Check

For every nontrivial ``h`` in the isotropy ``D`` of a level there should be
``g`` in ``Q`` with ``g h g^-1`` outside ``D``. If ``h`` moves the vertex
``u`` and ``t(b) = u`` for the basepoint index ``b``, then ``g = t^-1`` works:
``g h g^-1`` sends ``b`` to ``t^-1(h(u)) != b``.
"""

from dataclasses import dataclass, field
from typing import List, Tuple, Union

from quotients.groups import enumerate_elements
from quotients.permutations import LevelPermutation
from utils.errors import CertificateError, Undecided, is_undecided
from utils.logging_config import get_logger

from .chain import QuotientLevel

logger = get_logger("chains.tnn")

DEFAULT_TNN_CAP = 10 ** 4


@dataclass
class TnnResult:
    level: int
    holds: Union[bool, Undecided]
    witnesses: List[Tuple[LevelPermutation, LevelPermutation]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "holds": self.holds if isinstance(self.holds, bool) else self.holds.to_dict(),
            "witnesses": [{"h": h.to_list(), "g": g.to_list()} for h, g in self.witnesses],
        }


def totally_not_normal_check(q: QuotientLevel, basepoint_index: int,
                             cap: int = DEFAULT_TNN_CAP) -> TnnResult:
    """Witness ``g`` for every nontrivial element of ``q.D``; undecided above ``cap``."""
    elements = enumerate_elements(q.D, cap)
    if is_undecided(elements):
        logger.warning("level %d: |D| = %d above cap %d, TNN undecided", q.level, q.order_D, cap)
        return TnnResult(q.level, elements)

    transversal = q.Q.transversal(basepoint_index)
    result = TnnResult(q.level, True)
    for h in elements:
        if h.is_identity:
            continue
        u = int(h.moved_points()[0])
        g = transversal[u].inverse()
        conj = g * h * g.inverse()
        if int(conj.images[basepoint_index]) == basepoint_index:
            raise CertificateError(f"level {q.level}: conjugate of a nontrivial isotropy element stays in D")
        result.witnesses.append((h, g))
    logger.debug("level %d: %d TNN witnesses", q.level, len(result.witnesses))
    return result
