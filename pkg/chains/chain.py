"""
chainscope - Vertex-Stabilizer Group Chains

A chain along the basepoint ``x`` has ``G_l`` = stabilizer of ``prefix(x, l)``
and ``U_l`` = the cylinder through that prefix. At level ``l`` the finite
model is the level image ``Q_l`` (the kernel of the level action is the core
of ``G_l``) and the isotropy ``D_l`` = stabilizer of the prefix in ``Q_l``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set

from automaton.system import AutomatonSystem
from automaton.action import DEFAULT_STATE_CAP
from automaton.decide import DEFAULT_IDENTITY_CAP
from automaton.enumeration import DEFAULT_WORD_CAP
from quotients.groups import DEFAULT_ENUM_CAP, PermGroup, group_image
from quotients.permutations import LevelPermutation
from tree.boundary import BoundaryPoint, check_point, format_point, prefix
from tree.vertices import DEFAULT_POINT_CAP, Cylinder, Vertex, check_point_cap, format_vertex, vertex_index
from utils.errors import ActionNotMinimalError, DomainError, check_invariant
from utils.logging_config import get_logger

from database.models import CacheKind

logger = get_logger("chains")


@dataclass(frozen=True)
class ChainLimits:
    """Resource caps shared by chain computations and probes."""
    point_cap: int = DEFAULT_POINT_CAP
    enum_cap: int = DEFAULT_ENUM_CAP
    identity_cap: int = DEFAULT_IDENTITY_CAP
    state_cap: int = DEFAULT_STATE_CAP
    word_cap: int = DEFAULT_WORD_CAP


class GroupChain:
    """Chain ``G = G_0 > G_1 > ... > G_L`` along ``basepoint``.

    Level groups are computed lazily and memoized; with a ``BsgsCache`` they
    are also read from and written to the cache database.
    """

    def __init__(self, system: AutomatonSystem, basepoint: BoundaryPoint, depth: int,
                 limits: ChainLimits = None, cache=None):
        self.system = system
        self.basepoint = check_point(basepoint, system.degree)
        self.depth = depth
        self.limits = limits or ChainLimits()
        self.cache = cache
        self._quotients: Dict[int, PermGroup] = {}
        self._isotropy: Dict[int, PermGroup] = {}
        self._stored: Set[int] = set()

    @property
    def degree(self) -> int:
        return self.system.degree

    def vertex(self, level: int) -> Vertex:
        return prefix(self.basepoint, level)

    def cylinder(self, level: int) -> Cylinder:
        return Cylinder(self.vertex(level))

    def basepoint_index(self, level: int) -> int:
        return vertex_index(self.vertex(level), self.degree)

    def _check_level(self, level: int) -> None:
        if not 0 <= level <= self.depth:
            raise DomainError(f"level {level} outside chain depth 0..{self.depth}")

    # =========================================================================
    # LEVEL GROUPS
    # =========================================================================

    def _from_cache(self, level: int, kind, key: str = "") -> Optional[PermGroup]:
        if self.cache is None:
            return None
        hit = self.cache.load(self.system.content_hash, level, kind, key)
        if hit is None:
            return None
        _, strong_gens, order = hit
        gens = [LevelPermutation(g, level, self.degree, check=False) for g in strong_gens]
        return PermGroup(gens, level, self.degree, order=order)

    def _to_cache(self, group: PermGroup, kind, key: str = "") -> None:
        if self.cache is None:
            return
        base, strong_gens = group.bsgs()
        self.cache.store(self.system.content_hash, group.level, kind, self.degree,
                         base, strong_gens, group.order(), key)

    def quotient(self, level: int) -> PermGroup:
        """``Q_level``: the image of the system group on level ``level``.

        Only generators are built here; the Schreier-Sims data is computed
        when an order, a stabilizer or a membership test first needs it.
        """
        group = self._quotients.get(level)
        if group is None:
            check_point_cap(self.degree, level, self.limits.point_cap)
            group = self._from_cache(level, CacheKind.QUOTIENT)
            if group is None:
                group = group_image(self.system, level, self.limits.point_cap)
            else:
                self._stored.add(level)
            self._quotients[level] = group
            logger.info("level %d: Q has %d generators", level, len(group.generators))
        return group

    def isotropy(self, level: int) -> PermGroup:
        """``D_level``: stabilizer of ``prefix(x, level)`` in ``Q_level``."""
        group = self._isotropy.get(level)
        if group is None:
            key = format_vertex(self.vertex(level))
            group = self._from_cache(level, CacheKind.ISOTROPY, key)
            if group is None:
                group = self.quotient(level).point_stabilizer(self.vertex(level))
                self._to_cache(group, CacheKind.ISOTROPY, key)
            # the stabilizer computation already ran Schreier-Sims on Q
            if level not in self._stored:
                self._to_cache(self.quotient(level), CacheKind.QUOTIENT)
                self._stored.add(level)
            self._isotropy[level] = group
            if logger.isEnabledFor(logging.INFO):
                logger.info("level %d: |Q| = %d, |D| = %d", level, self.quotient(level).order(), group.order())
        return group

    def to_dict(self) -> dict:
        return {
            "system": self.system.name,
            "system_hash": self.system.content_hash,
            "basepoint": format_point(self.basepoint),
            "depth": self.depth,
        }


def build_chain(sys: AutomatonSystem, x: BoundaryPoint, L: int, limits: ChainLimits = None,
                cache=None) -> GroupChain:
    """Chain of depth ``L`` along ``x``, refusing intransitive level actions.

    Raises
    ------
    ActionNotMinimalError
        Some level ``<= L`` is not a single orbit.
    ResourceCapExceeded
        ``d**L`` exceeds the point cap.
    """
    if L < 0:
        raise DomainError(f"chain depth must be >= 0, got {L}")
    limits = limits or ChainLimits()
    check_point_cap(sys.degree, L, limits.point_cap)
    chain = GroupChain(sys, x, L, limits, cache)
    for level in range(1, L + 1):
        q = chain.quotient(level)
        if not q.is_transitive():
            raise ActionNotMinimalError(level, len(q.orbit(0)), q.npoints)
    # Level images are tree automorphisms (checked on construction), so each
    # U_l is adapted: g U_l meets U_l only if g U_l = U_l.
    return chain


# =============================================================================
# QUOTIENT TABLE
# =============================================================================

@dataclass
class QuotientLevel:
    level: int
    Q: PermGroup
    D: PermGroup
    points: int

    @property
    def order_Q(self) -> int:
        return self.Q.order()

    @property
    def order_D(self) -> int:
        return self.D.order()

    def to_dict(self) -> dict:
        return {"l": self.level, "orderQ": str(self.order_Q), "orderD": str(self.order_D), "points": self.points}


def quotient_table(chain: GroupChain, L: int = None) -> List[QuotientLevel]:
    L = chain.depth if L is None else L
    chain._check_level(L)
    table = []
    for level in range(L + 1):
        q, d = chain.quotient(level), chain.isotropy(level)
        points = chain.degree ** level
        check_invariant(q.order() == points * d.order(),
                        f"orbit-stabilizer fails at level {level}: {q.order()} != {points} * {d.order()}")
        table.append(QuotientLevel(level, q, d, points))
    return table


# =============================================================================
# DISCRIMINANT APPROXIMATION
# =============================================================================

@dataclass
class DiscriminantApprox:
    """``pi_{m -> n}(D_m)`` for the last lookahead ``m`` reached."""
    n: int
    lookahead: int
    group: PermGroup
    stabilized: bool
    orders: List[int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lookahead": self.lookahead,
            "order": str(self.group.order()),
            "stabilized": self.stabilized,
            "orders": [str(o) for o in self.orders],
        }


def discriminant_approx(chain: GroupChain, n: int, max_lookahead: int) -> DiscriminantApprox:
    """Descending projections of isotropy groups to level ``n``.

    Stops at the first ``m`` where the image equals the previous one; when
    ``max_lookahead`` is reached first, ``stabilized`` stays false.
    """
    if not 0 <= n <= max_lookahead <= chain.depth:
        raise DomainError(f"need 0 <= n <= lookahead <= depth, got n={n}, lookahead={max_lookahead}, depth={chain.depth}")
    previous: Optional[PermGroup] = None
    orders: List[int] = []
    stabilized = False
    m = n
    for m in range(n, max_lookahead + 1):
        image = chain.isotropy(m).project(n)
        orders.append(image.order())
        if previous is not None:
            check_invariant(image.is_subgroup_of(previous),
                            f"projected isotropy at lookahead {m} is not inside the image at {m - 1}")
            if image.order() == previous.order():
                stabilized = True
                previous = image
                break
        previous = image
    if not stabilized:
        logger.warning("discriminant at level %d not stabilized by lookahead %d", n, max_lookahead)
    return DiscriminantApprox(n, m, previous, stabilized, orders)


def discriminant_surjectivity(chain: GroupChain, n: int) -> List[bool]:
    """Whether restriction maps ``D_{l+1}`` onto ``D_l``, for ``l < n``."""
    chain._check_level(n)
    return [
        chain.isotropy(level + 1).project(level).order() == chain.isotropy(level).order()
        for level in range(n)
    ]
