"""
chainscope - Chain Reports

``chain_report`` runs the whole chain pipeline at one truncation depth and
assembles a pydantic ``ChainReport``. Only orders, flags and word strings go
into the report, so cached and fresh runs serialize identically.
"""

from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from automaton.words import GroupWord
from quotients.groups import restricted_action
from utils.logging_config import get_logger

from .certificates import DEFAULT_SEED_LENGTH, wildness_certificates
from .chain import GroupChain, discriminant_approx, discriminant_surjectivity, quotient_table
from .classify import (
    DEFAULT_LOOKAHEAD, DEFAULT_MIN_STRICT_LEVELS, DEFAULT_TRAILING_WINDOW, classify,
)
from .subchains import subchain_table
from .tnn import DEFAULT_TNN_CAP, totally_not_normal_check

logger = get_logger("chains.report")


# =============================================================================
# REPORT MODELS
# =============================================================================

class LevelRow(BaseModel):
    l: int = Field(..., ge=0)
    orderQ: str
    orderD: str
    orderK: str
    orderZ: str
    orderH: str
    flags: List[str] = Field(default_factory=list)


class DiscriminantSummary(BaseModel):
    n: int
    lookahead: int
    order: str
    stabilized: bool
    orders: List[str]


class CertificateEntry(BaseModel):
    level: int
    word: str
    seed: str
    seed_cylinder: str
    conjugator: str


class ChainReport(BaseModel):
    system: str
    system_hash: str
    basepoint: str
    depth: int = Field(..., ge=0)
    lookahead: int = Field(..., ge=0)
    levels: List[LevelRow]
    discriminant: DiscriminantSummary
    surjective: List[bool]
    verdicts: Dict[str, str]
    first_strict_level: Optional[int] = None
    gap_level: Optional[int] = None
    witnesses: List[CertificateEntry] = Field(default_factory=list)
    heights: Dict[str, Optional[int]] = Field(default_factory=dict)
    tnn: Dict[str, str] = Field(default_factory=dict)


# =============================================================================
# TABLES
# =============================================================================

def restricted_table(chain: GroupChain, n: int) -> List[int]:
    """Orders of the actions of ``Stab(prefix(x, l))`` on the level-``n`` part of ``U_l``."""
    chain._check_level(n)
    q_n = chain.quotient(n)
    return [restricted_action(q_n, chain.vertex(level)).order() for level in range(n + 1)]


def _level_flags(level: int, n: int, orders_K, orders_Z, certified) -> List[str]:
    flags = []
    if level < n and orders_K[level] < orders_K[level + 1]:
        flags.append("K-strict")
    if level in certified:
        flags.append("certified")
    if isinstance(orders_Z[level], int) and orders_Z[level] < orders_K[level]:
        flags.append("Z<K")
    if not isinstance(orders_Z[level], int):
        flags.append("Z-undecided")
    return flags


def chain_report(chain: GroupChain, n: int, lookahead: int = DEFAULT_LOOKAHEAD,
                 trailing_window: int = DEFAULT_TRAILING_WINDOW,
                 min_strict_levels: int = DEFAULT_MIN_STRICT_LEVELS,
                 seed_length: int = DEFAULT_SEED_LENGTH,
                 probe_words: Sequence[GroupWord] = (),
                 tnn_cap: int = DEFAULT_TNN_CAP) -> ChainReport:
    """Quotient table, discriminant, both subchains and verdicts at depth ``n``."""
    chain._check_level(n)
    quotients = quotient_table(chain, n)
    approx = discriminant_approx(chain, n, min(n + lookahead, chain.depth))
    table = subchain_table(chain, n, approx, probe_words)
    certs = wildness_certificates(chain, n, seed_length=seed_length) if n else {}
    verdict = classify(chain, n, lookahead, trailing_window, min_strict_levels, seed_length,
                       table=table, certificates=certs)
    restricted = restricted_table(chain, n)

    orders_K, orders_Z = table.orders_K(), table.orders_Z()
    certified = set(verdict.certified_levels)
    rows = [
        LevelRow(
            l=q.level,
            orderQ=str(q.order_Q),
            orderD=str(q.order_D),
            orderK=str(orders_K[q.level]),
            orderZ=str(orders_Z[q.level]),
            orderH=str(restricted[q.level]),
            flags=_level_flags(q.level, n, orders_K, orders_Z, certified),
        )
        for q in quotients
    ]

    tnn = {}
    for q in quotients:
        holds = totally_not_normal_check(q, chain.basepoint_index(q.level), tnn_cap).holds
        tnn[str(q.level)] = str(holds).lower() if isinstance(holds, bool) else str(holds)

    logger.info("chain report for %s at depth %d assembled", chain.system.name, n)
    return ChainReport(
        system=chain.system.name,
        system_hash=chain.system.content_hash,
        basepoint=chain.to_dict()["basepoint"],
        depth=n,
        lookahead=approx.lookahead,
        levels=rows,
        discriminant=DiscriminantSummary(**approx.to_dict()),
        surjective=discriminant_surjectivity(chain, n),
        verdicts={k: v.value for k, v in verdict.evidence.items()},
        first_strict_level=verdict.first_strict_level,
        gap_level=verdict.gap_level,
        witnesses=[CertificateEntry(**c.to_dict()) for _, c in sorted(certs.items()) if c is not None],
        heights=dict(table.heights),
        tnn=tnn,
    )
