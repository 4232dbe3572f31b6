"""
chainscope - Stabilizer and Centralizer Subchains

At truncation level ``n`` with discriminant approximation ``D``:

- ``K_l`` fixes every level-``n`` descendant of ``prefix(x, l)`` (acts as the
  identity on ``U_l`` as far as level ``n`` can see);
- ``Z_l`` commutes with the image of ``G_l`` in ``Q_n``, which is the
  stabilizer of ``prefix(x, l)`` in ``Q_n``.

Both are increasing in ``l`` and ``Z_l <= K_l``.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from automaton.words import GroupWord
from quotients.groups import PermGroup, block_stabilizer, centralizers_by_enumeration
from quotients.permutations import level_image
from tree.vertices import descendants
from utils.errors import Undecided, check_invariant, is_undecided
from utils.logging_config import get_logger

from .chain import DiscriminantApprox, GroupChain

logger = get_logger("chains.subchains")

ZEntry = Union[PermGroup, Undecided]


@dataclass
class SubchainTable:
    n: int
    approx: DiscriminantApprox
    K: List[PermGroup]
    Z: List[ZEntry]
    heights: Dict[str, Optional[int]] = field(default_factory=dict)

    @property
    def levels(self) -> int:
        return len(self.K) - 1

    def order_K(self, level: int) -> int:
        return self.K[level].order()

    def order_Z(self, level: int) -> Union[int, Undecided]:
        z = self.Z[level]
        return z if is_undecided(z) else z.order()

    def orders_K(self) -> List[int]:
        return [k.order() for k in self.K]

    def orders_Z(self) -> List[Union[int, Undecided]]:
        return [self.order_Z(level) for level in range(len(self.Z))]


def stabilizer_subchain(chain: GroupChain, n: int, approx: DiscriminantApprox) -> List[PermGroup]:
    """``K_l`` for ``l = 0..n`` inside the discriminant approximation at level ``n``."""
    d = chain.degree
    out = []
    for level in range(n + 1):
        block = descendants(chain.vertex(level), n, d)
        out.append(approx.group.pointwise_stabilizer_indices(block))
    for level in range(n):
        check_invariant(out[level].is_subgroup_of(out[level + 1]),
                        f"K_{level} is not contained in K_{level + 1} at truncation {n}")
    return out


def centralizer_subchain(chain: GroupChain, n: int, approx: DiscriminantApprox,
                         K: Sequence[PermGroup] = None) -> List[ZEntry]:
    """``Z_l`` for ``l = 0..n``; every entry is ``Undecided`` above the enumeration cap."""
    cap = chain.limits.enum_cap
    q_n = chain.quotient(n)
    target_sets = [block_stabilizer(q_n, level, chain.vertex(level)).generators for level in range(n + 1)]
    out: List[ZEntry] = centralizers_by_enumeration(approx.group, target_sets, cap)
    if any(is_undecided(z) for z in out):
        logger.warning("centralizer chain undecided at truncation %d: |D| = %d above cap %d",
                       n, approx.group.order(), cap)
        return out

    for level in range(n + 1):
        logger.debug("truncation %d level %d: |Z| = %d", n, level, out[level].order())
        if K is not None:
            check_invariant(out[level].is_subgroup_of(K[level]),
                            f"Z_{level} is not contained in K_{level} at truncation {n}")
        if level < n:
            check_invariant(out[level].is_subgroup_of(out[level + 1]),
                            f"Z_{level} is not contained in Z_{level + 1} at truncation {n}")
    return out


def height(chain: GroupChain, K: Sequence[PermGroup], w: GroupWord, n: int) -> Optional[int]:
    """Least ``l`` whose ``K_l`` contains the level-``n`` image of ``w``."""
    p = level_image(chain.system, w, n, chain.limits.point_cap)
    for level, k in enumerate(K):
        if k.contains(p):
            return level
    return None


def subchain_table(chain: GroupChain, n: int, approx: DiscriminantApprox,
                   probe_words: Sequence[GroupWord] = ()) -> SubchainTable:
    K = stabilizer_subchain(chain, n, approx)
    Z = centralizer_subchain(chain, n, approx, K)
    heights = {str(w): height(chain, K, w, n) for w in probe_words}
    return SubchainTable(n, approx, K, Z, heights)
