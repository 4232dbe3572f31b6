"""
chainscope - Non-Hausdorff Elements and Germs

An element ``g`` fixing ``x`` is non-Hausdorff at ``x`` when it is not the
identity on any ``U_l`` while every ``U_l`` contains a cylinder ``W_l`` off
the branch of ``x`` on which ``g`` is the identity. The ``W_l`` accumulate at
``x``, and each carries fixed points of ``g``.
"""

from typing import Optional

from automaton.action import DEFAULT_STATE_CAP, fixes_boundary_point
from automaton.decide import DEFAULT_IDENTITY_CAP, first_identity_cylinder, is_identity_on_cylinder
from automaton.system import AutomatonSystem
from automaton.words import GroupWord
from tree.boundary import BoundaryPoint, check_point, constant_point, format_point, prefix, prepend
from tree.vertices import Cylinder
from utils.errors import DomainError, PreconditionError, UndecidedAtCap
from utils.logging_config import get_logger

from .models import GermReport, NonHausdorffLevel, NonHausdorffWitness
from .verify import verify

logger = get_logger("dynamics.hausdorff")

DEFAULT_SEARCH_LEVELS = 6


def _require_fixed(sys: AutomatonSystem, g: GroupWord, x: BoundaryPoint, state_cap: int) -> BoundaryPoint:
    x = check_point(x, sys.degree)
    if not fixes_boundary_point(sys, g, x, state_cap):
        raise PreconditionError(f"{g} does not fix {format_point(x)}")
    return x


def off_branch_identity_cylinder(sys: AutomatonSystem, g: GroupWord, x: BoundaryPoint, level: int,
                                 search_levels: int = DEFAULT_SEARCH_LEVELS,
                                 identity_cap: int = DEFAULT_IDENTITY_CAP) -> Optional[Cylinder]:
    """First identity cylinder of ``g`` inside ``U_level`` that misses ``x``.

    Searched down to level ``level + search_levels``.
    """
    max_level = level + search_levels
    found = first_identity_cylinder(sys, g, max_level, start=prefix(x, level),
                                    avoid=prefix(x, max_level), cap=identity_cap)
    return None if found is None else found[0]


def non_hausdorff_probe(sys: AutomatonSystem, g: GroupWord, x: BoundaryPoint, depth: int,
                        search_levels: int = DEFAULT_SEARCH_LEVELS,
                        identity_cap: int = DEFAULT_IDENTITY_CAP,
                        state_cap: int = DEFAULT_STATE_CAP) -> NonHausdorffWitness:
    """Certified ``(U_l, W_l)`` pairs for ``l = 0..depth``.

    On failure the witness records the levels achieved and ``failed_at``.

    Raises
    ------
    PreconditionError
        ``g`` does not fix ``x``.
    """
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    x = _require_fixed(sys, g, x, state_cap)
    witness = NonHausdorffWitness(g, x, depth, sys)
    for level in range(depth + 1):
        outer = Cylinder(prefix(x, level))
        try:
            if is_identity_on_cylinder(sys, g, outer, identity_cap):
                witness.failed_at, witness.reason = level, f"identity on {outer}"
                break
            inner = off_branch_identity_cylinder(sys, g, x, level, search_levels, identity_cap)
        except UndecidedAtCap:
            witness.failed_at, witness.reason = level, "identity closure hit the cap"
            break
        if inner is None:
            witness.failed_at = level
            witness.reason = f"no identity cylinder off the basepoint within level {level + search_levels}"
            break
        fixed = prepend(inner.root, constant_point(0))
        witness.records.append(NonHausdorffLevel(level, outer, inner, fixed))
    if witness.failed_at is not None:
        logger.info("non-Hausdorff probe for %s at %s failed at level %d: %s",
                    g, format_point(x), witness.failed_at, witness.reason)
    verify(witness, identity_cap)
    return witness


def germ_hausdorff_probe(sys: AutomatonSystem, g: GroupWord, x: BoundaryPoint, depth: int,
                         search_levels: int = DEFAULT_SEARCH_LEVELS,
                         identity_cap: int = DEFAULT_IDENTITY_CAP,
                         state_cap: int = DEFAULT_STATE_CAP) -> GermReport:
    """Whether the germ of ``g`` at ``x`` is trivial, up to level ``depth``.

    For a nontrivial germ, also collects identity cylinders off the basepoint
    inside each ``U_l``.
    """
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    x = _require_fixed(sys, g, x, state_cap)
    report = GermReport(g, x, depth, sys)
    for level in range(depth + 1):
        if is_identity_on_cylinder(sys, g, Cylinder(prefix(x, level)), identity_cap):
            report.trivial_germ, report.germ_level = True, level
            break
    if not report.trivial_germ:
        for level in range(depth + 1):
            inner = off_branch_identity_cylinder(sys, g, x, level, search_levels, identity_cap)
            if inner is None:
                break
            report.accumulating.append((level, inner))
    verify(report, identity_cap)
    return report
