"""
chainscope - BSGS Cache

Stores base and strong generators of level groups keyed by
``(system hash, level, kind, key)``. Each write runs in its own transaction,
so a crashed run never leaves a half-written entry.
"""

import json
from typing import Dict, List, Optional, Tuple

from sqlalchemy import func
from sqlalchemy.exc import IntegrityError

from .connection import dispose_engine, get_cache_url, get_session
from .models import CacheEntry, CacheKind

from utils.logging_config import get_logger

logger = get_logger("database.cache")

CachedGroup = Tuple[List[int], List[List[int]], int]


class BsgsCache:
    """Read-through store for level-group BSGS data.

    Parameters
    ----------
    cache_dir : str, optional
        Directory of the SQLite file (``~/.cache/chainscope`` by default).
    """

    def __init__(self, cache_dir: str = None, url: str = None):
        self.url = url or get_cache_url(cache_dir)
        self.hits = 0
        self.misses = 0

    def load(self, system_hash: str, level: int, kind: CacheKind, key: str = "") -> Optional[CachedGroup]:
        with get_session(self.url) as session:
            entry = (
                session.query(CacheEntry)
                .filter_by(system_hash=system_hash, level=level, kind=kind.value, key=key)
                .one_or_none()
            )
            if entry is None:
                self.misses += 1
                return None
            self.hits += 1
            logger.info("cache hit: %s level %d %s %s", system_hash[:12], level, kind.value, key)
            return json.loads(entry.base_json), json.loads(entry.strong_gens_json), int(entry.order_text)

    def store(self, system_hash: str, level: int, kind: CacheKind, degree: int,
              base: List[int], strong_gens: List[List[int]], order: int, key: str = "") -> None:
        try:
            with get_session(self.url) as session:
                session.add(CacheEntry(
                    system_hash=system_hash, level=level, kind=kind.value, key=key, degree=degree,
                    base_json=json.dumps(base), strong_gens_json=json.dumps(strong_gens),
                    order_text=str(order),
                ))
        except IntegrityError:
            # another run stored the same entry first
            logger.debug("cache entry %s level %d %s already present", system_hash[:12], level, kind.value)

    def stats(self) -> Dict[str, int]:
        counts = {kind.value: 0 for kind in CacheKind}
        with get_session(self.url) as session:
            rows = session.query(CacheEntry.kind, func.count(CacheEntry.id)).group_by(CacheEntry.kind).all()
            systems = session.query(func.count(func.distinct(CacheEntry.system_hash))).scalar() or 0
        for kind, count in rows:
            counts[kind] = int(count)
        counts["total"] = sum(counts[kind.value] for kind in CacheKind)
        counts["systems"] = int(systems)
        return counts

    def clear(self) -> int:
        with get_session(self.url) as session:
            removed = session.query(CacheEntry).delete()
        logger.info("cleared %d cache entries", removed)
        return int(removed)

    def close(self) -> None:
        dispose_engine(self.url)
