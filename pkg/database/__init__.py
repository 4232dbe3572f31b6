"""chainscope - Cache Database Package"""

from .models import Base, CacheEntry, CacheKind
from .connection import get_session, get_engine, get_cache_url, dispose_engine, DEFAULT_CACHE_DIR
from .cache import BsgsCache

__all__ = [
    "Base", "CacheEntry", "CacheKind",
    "get_session", "get_engine", "get_cache_url", "dispose_engine", "DEFAULT_CACHE_DIR",
    "BsgsCache",
]
