"""
chainscope - Dynamics Result Types

Witnesses keep a reference to the system(s) they were found in so that
``dynamics.verify.verify`` can re-check them without extra arguments. The
system references never reach ``to_dict``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from automaton.system import AutomatonSystem
from automaton.words import GroupWord
from tree.boundary import BoundaryPoint, format_point
from tree.vertices import Cylinder, format_cylinder


# =============================================================================
# LOCAL QUASI-ANALYTICITY
# =============================================================================

@dataclass(frozen=True)
class LqaViolation:
    """``word`` is the identity on ``inner`` but not on ``outer``."""
    word: GroupWord
    outer: Cylinder
    inner: Cylinder
    system: AutomatonSystem = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "outer": format_cylinder(self.outer),
            "inner": format_cylinder(self.inner),
            "certificates": {"identity_on_inner": True, "identity_on_outer": False},
        }


# =============================================================================
# NON-HAUSDORFF ELEMENTS AND GERMS
# =============================================================================

@dataclass(frozen=True)
class NonHausdorffLevel:
    level: int
    outer: Cylinder
    inner: Cylinder
    fixed_point: BoundaryPoint

    def to_dict(self) -> dict:
        return {
            "l": self.level,
            "U": format_cylinder(self.outer),
            "W": format_cylinder(self.inner),
            "fixed_point": format_point(self.fixed_point),
            "certificates": {"identity_on_U": False, "identity_on_W": True, "fixes_point": True},
        }


@dataclass
class NonHausdorffWitness:
    word: GroupWord
    basepoint: BoundaryPoint
    depth: int
    system: AutomatonSystem = field(repr=False)
    records: List[NonHausdorffLevel] = field(default_factory=list)
    failed_at: Optional[int] = None
    reason: str = ""

    @property
    def succeeded(self) -> bool:
        return self.failed_at is None

    @property
    def deepest_level(self) -> int:
        return self.records[-1].level if self.records else -1

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "basepoint": format_point(self.basepoint),
            "depth": self.depth,
            "succeeded": self.succeeded,
            "failed_at": self.failed_at,
            "reason": self.reason,
            "levels": [r.to_dict() for r in self.records],
        }


@dataclass
class GermReport:
    word: GroupWord
    basepoint: BoundaryPoint
    depth: int
    system: AutomatonSystem = field(repr=False)
    trivial_germ: bool = False
    germ_level: Optional[int] = None
    accumulating: List[Tuple[int, Cylinder]] = field(default_factory=list)

    @property
    def non_hausdorff_configuration(self) -> bool:
        """Nontrivial germ with an identity cylinder inside every ``U_l`` searched."""
        return not self.trivial_germ and len(self.accumulating) == self.depth + 1

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "basepoint": format_point(self.basepoint),
            "depth": self.depth,
            "trivial_germ": self.trivial_germ,
            "germ_level": self.germ_level,
            "accumulating": [{"l": level, "W": format_cylinder(c)} for level, c in self.accumulating],
            "non_hausdorff_configuration": self.non_hausdorff_configuration,
        }


# =============================================================================
# TOPOLOGICAL FREENESS
# =============================================================================

@dataclass
class FreenessReport:
    word_length: int
    depth: int
    system: AutomatonSystem = field(repr=False)
    searched: int = 0
    fixed_cylinders: Dict[GroupWord, List[Cylinder]] = field(default_factory=dict)
    undecided: List[GroupWord] = field(default_factory=list)

    @property
    def witnessed_not_free(self) -> bool:
        return bool(self.fixed_cylinders)

    @property
    def status(self) -> str:
        if self.witnessed_not_free:
            return "not topologically free: witnessed"
        return "consistent with topologically free in the searched box"

    def to_dict(self) -> dict:
        return {
            "word_length": self.word_length,
            "depth": self.depth,
            "searched": self.searched,
            "status": self.status,
            "witnesses": {str(w): [format_cylinder(c) for c in cs] for w, cs in self.fixed_cylinders.items()},
            "undecided": [str(w) for w in self.undecided],
        }


# =============================================================================
# CONTINUOUS ORBIT EQUIVALENCE
# =============================================================================

@dataclass
class AlphaCollision:
    block: Cylinder
    value: GroupWord
    words: List[GroupWord]

    def to_dict(self) -> dict:
        return {"block": format_cylinder(self.block), "value": str(self.value), "words": [str(w) for w in self.words]}


@dataclass
class CoeWitness:
    """Orbit-transfer assignments on the level-``level`` partition.

    ``alpha[(g, block)]`` is a word of the second system agreeing with the
    generator ``g`` of the first on ``block``; ``beta`` is the reverse.
    """
    level: int
    word_length: int
    system_g: AutomatonSystem = field(repr=False)
    system_h: AutomatonSystem = field(repr=False)
    partition: List[Cylinder] = field(default_factory=list)
    alpha: Dict[Tuple[str, Cylinder], GroupWord] = field(default_factory=dict)
    beta: Dict[Tuple[str, Cylinder], GroupWord] = field(default_factory=dict)
    unresolved: List[Tuple[str, str, Cylinder]] = field(default_factory=list)
    partition_preserved: bool = True
    words_checked: int = 0
    collisions: List[AlphaCollision] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.unresolved and self.partition_preserved

    def to_dict(self) -> dict:
        def table(assignments):
            return [
                {"generator": g, "block": format_cylinder(b), "word": str(w)}
                for (g, b), w in sorted(assignments.items(), key=lambda kv: (kv[0][0], kv[0][1].root))
            ]
        return {
            "level": self.level,
            "word_length": self.word_length,
            "partition": [format_cylinder(c) for c in self.partition],
            "alpha": table(self.alpha),
            "beta": table(self.beta),
            "unresolved": [{"map": m, "generator": g, "block": format_cylinder(b)} for m, g, b in self.unresolved],
            "partition_preserved": self.partition_preserved,
            "words_checked": self.words_checked,
            "alpha_collisions": [c.to_dict() for c in self.collisions],
            "complete": self.complete,
        }


# =============================================================================
# SERIALIZED ENVELOPE
# =============================================================================

class ProbeReport(BaseModel):
    """What ``probe`` subcommands print."""
    probe: str
    system: str
    system_hash: str
    params: Dict[str, Any] = Field(default_factory=dict)
    verified: bool
    result: Any
