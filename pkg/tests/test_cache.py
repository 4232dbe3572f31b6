"""
chainscope - BSGS Cache Tests

Run with: python -m pytest tests/test_cache.py -v
"""

import sys
import os
import logging

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from chains.chain import build_chain, quotient_table
from database import BsgsCache, CacheKind, get_cache_url
from tree.boundary import parse_point


@pytest.fixture
def cache(tmp_path):
    store = BsgsCache(url=f"sqlite:///{tmp_path / 'bsgs.sqlite3'}")
    yield store
    store.close()


class TestBsgsCache:

    def test_miss_then_hit(self, cache):
        assert cache.load("abc", 2, CacheKind.QUOTIENT) is None
        cache.store("abc", 2, CacheKind.QUOTIENT, 2, [0], [[1, 0, 3, 2], [2, 3, 1, 0]], 8)
        assert cache.load("abc", 2, CacheKind.QUOTIENT) == ([0], [[1, 0, 3, 2], [2, 3, 1, 0]], 8)
        assert (cache.hits, cache.misses) == (1, 1)

    def test_kind_and_key_are_part_of_the_entry(self, cache):
        cache.store("abc", 1, CacheKind.ISOTROPY, 2, [], [], 1, key="0")
        assert cache.load("abc", 1, CacheKind.ISOTROPY, "1") is None
        assert cache.load("abc", 1, CacheKind.QUOTIENT, "0") is None
        assert cache.load("abc", 1, CacheKind.ISOTROPY, "0") == ([], [], 1)

    def test_duplicate_store_is_ignored(self, cache, caplog):
        cache.store("abc", 1, CacheKind.QUOTIENT, 2, [0], [[1, 0]], 2)
        with caplog.at_level(logging.DEBUG, logger="database.cache"):
            cache.store("abc", 1, CacheKind.QUOTIENT, 2, [0], [[1, 0]], 2)
        assert cache.stats()["total"] == 1
        assert "already present" in caplog.text

    def test_large_orders_survive(self, cache):
        order = 2 ** 200
        cache.store("abc", 9, CacheKind.QUOTIENT, 2, [], [], order)
        assert cache.load("abc", 9, CacheKind.QUOTIENT)[2] == order

    def test_stats_and_clear(self, cache):
        cache.store("abc", 1, CacheKind.QUOTIENT, 2, [0], [[1, 0]], 2)
        cache.store("abc", 1, CacheKind.ISOTROPY, 2, [], [], 1, key="0")
        cache.store("def", 1, CacheKind.QUOTIENT, 2, [0], [[1, 0]], 2)
        assert cache.stats() == {"Q": 2, "D": 1, "total": 3, "systems": 2}
        assert cache.clear() == 3
        assert cache.stats()["total"] == 0

    def test_url_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("CHAINSCOPE_CACHE_URL", "sqlite:///:memory:")
        assert get_cache_url(str(tmp_path)) == "sqlite:///:memory:"
        monkeypatch.delenv("CHAINSCOPE_CACHE_URL")
        assert get_cache_url(str(tmp_path)) == f"sqlite:///{tmp_path / 'bsgs.sqlite3'}"


class TestChainWithCache:

    def test_cached_chain_matches_fresh_chain(self, cache, pink2s2):
        x = parse_point(".(0)", 2)
        fresh = [q.to_dict() for q in quotient_table(build_chain(pink2s2, x, 3), 3)]
        first = [q.to_dict() for q in quotient_table(build_chain(pink2s2, x, 3, cache=cache), 3)]
        assert first == fresh
        assert cache.hits == 0

        second = [q.to_dict() for q in quotient_table(build_chain(pink2s2, x, 3, cache=cache), 3)]
        assert second == fresh
        assert cache.hits > 0
        assert cache.stats()["systems"] == 1

    def test_levels_are_stored_once_isotropy_is_known(self, cache, pink2s2):
        chain = build_chain(pink2s2, parse_point(".(0)", 2), 4, cache=cache)
        assert cache.stats()["total"] == 0
        chain.isotropy(2)
        stats = cache.stats()
        assert (stats["Q"], stats["D"]) == (1, 1)
