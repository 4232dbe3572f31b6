"""
chainscope - Certificate Re-Verification

Second, independent pass over every probe result. Each check recomputes the
certificate from the automaton decision procedures, bypassing the identity
answers memoized on the system, and raises ``CertificateError`` on the first
mismatch.
"""

from functools import singledispatch

from automaton.action import fixes_boundary_point
from automaton.decide import DEFAULT_IDENTITY_CAP, agree_on_cylinder, is_identity, is_identity_on_cylinder
from tree.boundary import contains, format_point, prefix
from tree.vertices import Cylinder
from utils.errors import CertificateError

from .models import CoeWitness, FreenessReport, GermReport, LqaViolation, NonHausdorffWitness


def _identity_on(sys, w, c: Cylinder, cap: int) -> bool:
    return is_identity_on_cylinder(sys, w, c, cap, memo=False)


@singledispatch
def verify(witness, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    raise TypeError(f"no verifier for {type(witness).__name__}")


@verify.register
def _(witness: LqaViolation, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    sys = witness.system
    if not witness.outer.contains_vertex(witness.inner.root) or witness.outer == witness.inner:
        raise CertificateError(f"{witness.inner} is not a proper sub-cylinder of {witness.outer}")
    if not _identity_on(sys, witness.word, witness.inner, identity_cap):
        raise CertificateError(f"{witness.word} is not the identity on {witness.inner}")
    if _identity_on(sys, witness.word, witness.outer, identity_cap):
        raise CertificateError(f"{witness.word} is the identity on {witness.outer}")


@verify.register
def _(witness: NonHausdorffWitness, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    sys, g, x = witness.system, witness.word, witness.basepoint
    if not fixes_boundary_point(sys, g, x):
        raise CertificateError(f"{g} does not fix {format_point(x)}")
    for record in witness.records:
        if contains(record.inner, x) or not record.outer.contains_vertex(record.inner.root):
            raise CertificateError(f"level {record.level}: {record.inner} is not off the basepoint branch inside {record.outer}")
        if _identity_on(sys, g, record.outer, identity_cap):
            raise CertificateError(f"level {record.level}: {g} is the identity on {record.outer}")
        if not _identity_on(sys, g, record.inner, identity_cap):
            raise CertificateError(f"level {record.level}: {g} is not the identity on {record.inner}")
        if not contains(record.inner, record.fixed_point) or not fixes_boundary_point(sys, g, record.fixed_point):
            raise CertificateError(f"level {record.level}: {format_point(record.fixed_point)} is not a fixed point in {record.inner}")


@verify.register
def _(report: GermReport, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    sys, g, x = report.system, report.word, report.basepoint
    if report.trivial_germ:
        if not _identity_on(sys, g, Cylinder(prefix(x, report.germ_level)), identity_cap):
            raise CertificateError(f"{g} is not the identity near {format_point(x)} at level {report.germ_level}")
    for level, c in report.accumulating:
        outer = Cylinder(prefix(x, level))
        if not outer.contains_vertex(c.root):
            raise CertificateError(f"level {level}: {c} does not lie inside {outer}")
        if contains(c, x) or not _identity_on(sys, g, c, identity_cap):
            raise CertificateError(f"level {level}: {c} is not an identity cylinder off the basepoint")


@verify.register
def _(report: FreenessReport, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    sys = report.system
    for w, cylinders in report.fixed_cylinders.items():
        if is_identity(sys, w, identity_cap, memo=False):
            raise CertificateError(f"{w} is the identity element")
        for c in cylinders:
            if not _identity_on(sys, w, c, identity_cap):
                raise CertificateError(f"{w} is not the identity on {c}")


@verify.register
def _(witness: CoeWitness, identity_cap: int = DEFAULT_IDENTITY_CAP) -> None:
    G, H = witness.system_g, witness.system_h
    for (name, block), word in witness.alpha.items():
        if not agree_on_cylinder(G, G.word(name), H, word, block, identity_cap, memo=False):
            raise CertificateError(f"alpha({name}, {block}) = {word} does not agree on {block}")
    for (name, block), word in witness.beta.items():
        if not agree_on_cylinder(H, H.word(name), G, word, block, identity_cap, memo=False):
            raise CertificateError(f"beta({name}, {block}) = {word} does not agree on {block}")
