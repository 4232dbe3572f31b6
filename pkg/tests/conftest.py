"""
chainscope - Shared pytest Fixtures
"""

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from automaton.builtins import builtin_system


@pytest.fixture
def odometer():
    return builtin_system("odometer")


@pytest.fixture
def coe_pair():
    return builtin_system("coe-pair")


@pytest.fixture
def coe_pair_h():
    return builtin_system("coe-pair-H")


@pytest.fixture
def pink23():
    return builtin_system("pink:2,3")


@pytest.fixture
def pink2s2():
    return builtin_system("pink2s:2")


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    """Keep every test away from the user's cache directory and environment."""
    monkeypatch.delenv("CHAINSCOPE_CACHE_URL", raising=False)
    for name in list(os.environ):
        if name.startswith("CHAINSCOPE_") and name != "CHAINSCOPE_LOG_LEVEL":
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("HOME", str(tmp_path))
