"""
chainscope - Cache Database Connection Management

One SQLite file per cache directory. ``CHAINSCOPE_CACHE_URL`` overrides the
location with any SQLAlchemy URL.
"""

import os
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Generator

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from .models import Base

from utils.logging_config import get_logger

logger = get_logger("database")

DEFAULT_CACHE_DIR = "~/.cache/chainscope"
CACHE_FILENAME = "bsgs.sqlite3"

_engines: Dict[str, Engine] = {}
_factories: Dict[str, sessionmaker] = {}


def get_cache_url(cache_dir: str = None) -> str:
    url = os.environ.get("CHAINSCOPE_CACHE_URL", "")
    if url:
        return url
    directory = Path(os.path.expanduser(cache_dir or DEFAULT_CACHE_DIR))
    return f"sqlite:///{directory / CACHE_FILENAME}"


def get_engine(url: str) -> Engine:
    engine = _engines.get(url)
    if engine is None:
        if url.startswith("sqlite:///"):
            Path(url[len("sqlite:///"):]).parent.mkdir(parents=True, exist_ok=True)
        engine = create_engine(url, echo=os.environ.get("SQL_ECHO", "false").lower() == "true")
        Base.metadata.create_all(engine)
        _engines[url] = engine
        logger.debug("cache database ready at %s", url)
    return engine


def get_session_factory(url: str) -> sessionmaker:
    factory = _factories.get(url)
    if factory is None:
        factory = sessionmaker(bind=get_engine(url))
        _factories[url] = factory
    return factory


@contextmanager
def get_session(url: str) -> Generator[Session, None, None]:
    """Transactional session: commit on success, roll back on any error."""
    session = get_session_factory(url)()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def dispose_engine(url: str) -> None:
    engine = _engines.pop(url, None)
    _factories.pop(url, None)
    if engine is not None:
        engine.dispose()
