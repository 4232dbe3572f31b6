"""
chainscope - SQLAlchemy Cache Models
"""

from datetime import datetime
from enum import Enum as PyEnum

from sqlalchemy import Column, DateTime, Integer, String, Text, UniqueConstraint
from sqlalchemy.orm import declarative_base

Base = declarative_base()


# Enums
class CacheKind(PyEnum):
    QUOTIENT = "Q"          # image of the whole group at a level
    ISOTROPY = "D"          # point stabilizer of the basepoint prefix


# Models
class CacheEntry(Base):
    """Serialized base-and-strong-generating-set data of one level group."""
    __tablename__ = "bsgs_cache"
    __table_args__ = (UniqueConstraint("system_hash", "level", "kind", "key", name="uq_bsgs_entry"),)

    id = Column(Integer, primary_key=True, autoincrement=True)
    system_hash = Column(String(64), nullable=False, index=True)
    level = Column(Integer, nullable=False)
    kind = Column(String(8), nullable=False)
    key = Column(String(256), nullable=False, default="")
    degree = Column(Integer, nullable=False)
    base_json = Column(Text, nullable=False)
    strong_gens_json = Column(Text, nullable=False)
    order_text = Column(Text, nullable=False)
    created_at = Column(DateTime, nullable=False, default=datetime.utcnow)
