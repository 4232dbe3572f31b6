"""
chainscope - Kernel and G-Rational Point Probe

Exhaustive over reduced words up to a length bound: which words fix the
basepoint (a sample of the chain kernel), which act trivially everywhere
(a sample of its normal core), and the fixers up to equality as elements.
"""

from dataclasses import dataclass, field
from typing import List

from automaton.action import fixes_boundary_point
from automaton.decide import is_identity
from automaton.enumeration import word_enumeration
from automaton.system import AutomatonSystem
from automaton.words import GroupWord
from tree.boundary import BoundaryPoint, check_point, format_point
from utils.errors import UndecidedAtCap, check_invariant
from utils.logging_config import get_logger

from .chain import ChainLimits

logger = get_logger("chains.kernel")


@dataclass
class KernelReport:
    basepoint: BoundaryPoint
    word_length: int
    fixers: List[GroupWord] = field(default_factory=list)
    trivial_actors: List[GroupWord] = field(default_factory=list)
    rational_points: List[GroupWord] = field(default_factory=list)
    undecided: List[GroupWord] = field(default_factory=list)

    @property
    def has_rational_points(self) -> bool:
        return bool(self.rational_points)

    def to_dict(self) -> dict:
        return {
            "basepoint": format_point(self.basepoint),
            "word_length": self.word_length,
            "fixers": [str(w) for w in self.fixers],
            "trivial_actors": [str(w) for w in self.trivial_actors],
            "rational_points": [str(w) for w in self.rational_points],
            "undecided": [str(w) for w in self.undecided],
        }


def kernel_probe(sys: AutomatonSystem, x: BoundaryPoint, word_length: int,
                 limits: ChainLimits = None) -> KernelReport:
    """Test every reduced word of length ``<= word_length`` against ``x``.

    Rational points are nontrivial fixers listed once per group element: a
    fixer is skipped when it equals an earlier representative.
    """
    limits = limits or ChainLimits()
    x = check_point(x, sys.degree)
    report = KernelReport(x, word_length)
    for w in word_enumeration(sys, word_length, cap=limits.word_cap):
        try:
            if not fixes_boundary_point(sys, w, x, limits.state_cap):
                continue
            report.fixers.append(w)
            if is_identity(sys, w, limits.identity_cap):
                report.trivial_actors.append(w)
                continue
            if not any(is_identity(sys, r.inverse() * w, limits.identity_cap) for r in report.rational_points):
                report.rational_points.append(w)
        except UndecidedAtCap:
            logger.warning("kernel probe: %s undecided at cap", w)
            report.undecided.append(w)

    fixer_set = set(report.fixers)
    check_invariant(all(w in fixer_set for w in report.trivial_actors), "trivial actor missing from fixers")
    logger.info("kernel probe at %s: %d fixers, %d trivial, %d rational classes",
                format_point(x), len(report.fixers), len(report.trivial_actors), len(report.rational_points))
    return report
