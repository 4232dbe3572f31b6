"""
chainscope - Stable / Wild Classification Evidence

Every verdict is qualified by the truncation depth ``n``. "Stable" is at best
consistent with the data; "wild" is witnessed only by a run of consecutive
levels whose strict growth ``K_l < K_{l+1}`` is certified by exact words.

Rules at depth ``n``:

- wild: witnessed when at least ``min_strict_levels`` consecutive levels carry
  a certificate visible at level ``n``; witnessed-against when ``K`` is
  constant over all levels; otherwise undecided.
- stable: witnessed-against when wild is witnessed; consistent-with when the
  ``K`` orders are constant over the trailing window; otherwise undecided.
- algebraically stable: the same window test on the ``Z`` orders.
- wild of finite type: needs wild witnessed; consistent-with when ``|K_l|``
  agrees at truncations ``n - 1`` and ``n`` below the trailing window,
  otherwise undecided. Finite type is a property of the limit chain, so a
  finite truncation never rules it out.
- wild of flat type: needs wild witnessed; ``Z_l = K_l`` at every level.
- dynamically wild: wild witnessed together with some ``Z_l < K_l``.

When wild is witnessed-against, so are the three wild-type properties.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from utils.errors import is_undecided
from utils.logging_config import get_logger

from .certificates import (
    DEFAULT_SEED_LENGTH, WildnessCertificate, check_against_subchain, longest_certified_run,
    wildness_certificates,
)
from .chain import GroupChain, discriminant_approx
from .subchains import SubchainTable, subchain_table

logger = get_logger("chains.classify")

DEFAULT_LOOKAHEAD = 2
DEFAULT_TRAILING_WINDOW = 3
DEFAULT_MIN_STRICT_LEVELS = 3


class Evidence(str, Enum):
    WITNESSED = "witnessed"
    CONSISTENT_WITH = "consistent-with"
    WITNESSED_AGAINST = "witnessed-against"
    UNDECIDED = "undecided"


PROPERTIES = (
    "stable",
    "algebraically-stable",
    "wild",
    "wild-of-finite-type",
    "wild-of-flat-type",
    "dynamically-wild",
)


@dataclass
class ClassificationVerdict:
    depth: int
    evidence: Dict[str, Evidence]
    orders_K: List[int] = field(default_factory=list)
    orders_Z: List[object] = field(default_factory=list)
    strict_levels: List[int] = field(default_factory=list)
    first_strict_level: Optional[int] = None
    gap_level: Optional[int] = None
    certified_levels: List[int] = field(default_factory=list)
    certified_run: int = 0
    finite_type_levels: List[int] = field(default_factory=list)

    def __getitem__(self, prop: str) -> Evidence:
        return self.evidence[prop]

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "evidence": {k: v.value for k, v in self.evidence.items()},
            "orders_K": [str(o) for o in self.orders_K],
            "orders_Z": [str(o) for o in self.orders_Z],
            "strict_levels": list(self.strict_levels),
            "first_strict_level": self.first_strict_level,
            "gap_level": self.gap_level,
            "certified_levels": list(self.certified_levels),
            "certified_run": self.certified_run,
            "finite_type_levels": list(self.finite_type_levels),
        }


def undecided_verdict(n: int) -> ClassificationVerdict:
    return ClassificationVerdict(n, {p: Evidence.UNDECIDED for p in PROPERTIES})


def table_at(chain: GroupChain, n: int, lookahead: int = DEFAULT_LOOKAHEAD) -> SubchainTable:
    """Subchain table at truncation ``n`` with up to ``lookahead`` extra levels."""
    approx = discriminant_approx(chain, n, min(n + lookahead, chain.depth))
    return subchain_table(chain, n, approx)


def _constant(values: List[object]) -> bool:
    return all(v == values[0] for v in values)


def classify(chain: GroupChain, n: int, lookahead: int = DEFAULT_LOOKAHEAD,
             trailing_window: int = DEFAULT_TRAILING_WINDOW,
             min_strict_levels: int = DEFAULT_MIN_STRICT_LEVELS,
             seed_length: int = DEFAULT_SEED_LENGTH,
             table: SubchainTable = None, previous: SubchainTable = None,
             certificates: Dict[int, Optional[WildnessCertificate]] = None) -> ClassificationVerdict:
    """Depth-``n`` evidence for each property in ``PROPERTIES``.

    ``table``, ``previous`` (truncation ``n - 1``) and ``certificates`` are
    computed when not supplied.
    """
    chain._check_level(n)
    if n == 0 or chain.depth == 0:
        return undecided_verdict(n)

    table = table or table_at(chain, n, lookahead)
    if certificates is None:
        certificates = wildness_certificates(chain, n, seed_length=seed_length)
    check_against_subchain(chain, certificates, table.K, n)

    orders_K = table.orders_K()
    orders_Z = table.orders_Z()
    z_decided = not any(is_undecided(z) for z in orders_Z)
    strict = [level for level in range(n) if orders_K[level] < orders_K[level + 1]]
    gaps = [level for level in range(n + 1) if z_decided and orders_Z[level] < orders_K[level]]
    run, _ = longest_certified_run(certificates)

    verdict = ClassificationVerdict(
        n, {},
        orders_K=orders_K,
        orders_Z=orders_Z,
        strict_levels=strict,
        first_strict_level=strict[0] if strict else None,
        gap_level=gaps[0] if gaps else None,
        certified_levels=sorted(level for level, c in certificates.items() if c is not None),
        certified_run=run,
    )
    ev = verdict.evidence

    if run >= min_strict_levels:
        ev["wild"] = Evidence.WITNESSED
    elif not strict:
        ev["wild"] = Evidence.WITNESSED_AGAINST
    else:
        ev["wild"] = Evidence.UNDECIDED
    wild = ev["wild"]

    window = range(max(0, n - trailing_window), n + 1)
    if wild is Evidence.WITNESSED:
        ev["stable"] = Evidence.WITNESSED_AGAINST
    elif _constant([orders_K[level] for level in window]):
        ev["stable"] = Evidence.CONSISTENT_WITH
    else:
        ev["stable"] = Evidence.UNDECIDED

    if z_decided and _constant([orders_Z[level] for level in window]):
        ev["algebraically-stable"] = Evidence.CONSISTENT_WITH
    else:
        ev["algebraically-stable"] = Evidence.UNDECIDED

    if wild is Evidence.WITNESSED_AGAINST:
        for prop in ("wild-of-finite-type", "wild-of-flat-type", "dynamically-wild"):
            ev[prop] = Evidence.WITNESSED_AGAINST
        return verdict
    if wild is not Evidence.WITNESSED:
        for prop in ("wild-of-finite-type", "wild-of-flat-type", "dynamically-wild"):
            ev[prop] = Evidence.UNDECIDED
        return verdict

    # finite type: K_l must stop growing with the truncation at fixed low levels
    compared = list(range(0, n - trailing_window))
    verdict.finite_type_levels = compared
    if not compared:
        ev["wild-of-finite-type"] = Evidence.UNDECIDED
    else:
        previous = previous or table_at(chain, n - 1, lookahead)
        before = previous.orders_K()
        if all(before[level] == orders_K[level] for level in compared):
            ev["wild-of-finite-type"] = Evidence.CONSISTENT_WITH
        else:
            # K_l may still grow at larger truncations and settle later
            ev["wild-of-finite-type"] = Evidence.UNDECIDED

    if not z_decided:
        ev["wild-of-flat-type"] = Evidence.UNDECIDED
        ev["dynamically-wild"] = Evidence.UNDECIDED
    elif gaps:
        ev["wild-of-flat-type"] = Evidence.WITNESSED_AGAINST
        ev["dynamically-wild"] = Evidence.WITNESSED
    else:
        ev["wild-of-flat-type"] = Evidence.CONSISTENT_WITH
        ev["dynamically-wild"] = Evidence.UNDECIDED

    logger.info("depth %d verdicts: %s", n, {k: v.value for k, v in ev.items()})
    return verdict
