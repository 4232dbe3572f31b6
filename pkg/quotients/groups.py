"""
chainscope - Finite Permutation Groups on Tree Levels

``PermGroup`` wraps a sympy ``PermutationGroup`` whose points are the
vertices of one level in canonical order. Base-and-strong-generating-set
data comes from sympy's deterministic Schreier-Sims with the default base
order, so orders, stabilizers and membership tests are reproducible.

sympy multiplies left to right (``p*q`` applies ``p`` first); only image
arrays cross the boundary, and all products are taken on
``LevelPermutation`` objects.
"""

from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from automaton.system import AutomatonSystem
from tree.vertices import DEFAULT_POINT_CAP, Vertex, check_point_cap, descendants, vertex_index
from utils.errors import DomainError, ResourceCapExceeded, Undecided
from utils.logging_config import get_logger

from .permutations import LevelPermutation, level_image

logger = get_logger("quotients.groups")

DEFAULT_ENUM_CAP = 10 ** 7
CENTRALIZER_CHUNK = 1 << 14


class PermGroup:
    """Subgroup of the automorphisms of level ``level`` of the degree-``degree`` tree.

    Parameters
    ----------
    generators : sequence of LevelPermutation
        All at the same level; identities and duplicates are dropped.
    level, degree : int
    order : int, optional
        Known order (from a cache); otherwise computed on demand.
    """

    def __init__(self, generators: Sequence[LevelPermutation], level: int, degree: int,
                 order: Optional[int] = None):
        self.level = level
        self.degree = degree
        gens: List[LevelPermutation] = []
        seen = set()
        for g in generators:
            if g.level != level or g.degree != degree:
                raise DomainError(f"generator of level {g.level} in a group of level {level}")
            if g.is_identity or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.generators: Tuple[LevelPermutation, ...] = tuple(gens)
        self._order = order
        self._sympy: Optional[PermutationGroup] = None
        self._transitive: Optional[bool] = None

    @classmethod
    def trivial(cls, level: int, degree: int) -> "PermGroup":
        return cls([], level, degree, order=1)

    @classmethod
    def from_sympy(cls, group: PermutationGroup, level: int, degree: int) -> "PermGroup":
        gens = [LevelPermutation(p.array_form, level, degree, check=False) for p in group.generators]
        return cls(gens, level, degree)

    @property
    def npoints(self) -> int:
        return self.degree ** self.level

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def sympy_group(self) -> PermutationGroup:
        if self._sympy is None:
            if self.generators:
                perms = [Permutation(g.to_list()) for g in self.generators]
            else:
                perms = [Permutation(list(range(self.npoints)))]
            self._sympy = PermutationGroup(perms)
        return self._sympy

    # =========================================================================
    # ORDER, ORBITS, MEMBERSHIP
    # =========================================================================

    def order(self) -> int:
        """Exact order from the Schreier-Sims transversals."""
        if self._order is None:
            self._order = 1 if self.is_trivial else int(self.sympy_group().order())
            logger.debug("level %d group with %d generators has order %d",
                         self.level, len(self.generators), self._order)
        return self._order

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        queue = deque([point])
        arrays = [g.images for g in self.generators]
        while queue:
            p = queue.popleft()
            for arr in arrays:
                q = int(arr[p])
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def is_transitive(self) -> bool:
        if self._transitive is None:
            self._transitive = len(self.orbit(0)) == self.npoints
        return self._transitive

    def contains(self, p: LevelPermutation) -> bool:
        """Exact sifting test through the strong generating set."""
        self._check_level(p.level, p.degree)
        if p.is_identity:
            return True
        if self.is_trivial:
            return False
        return bool(self.sympy_group().contains(Permutation(p.to_list())))

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def _check_level(self, level: int, degree: int = None) -> None:
        if level != self.level or (degree is not None and degree != self.degree):
            raise DomainError(f"level mismatch: group at level {self.level}, argument at level {level}")

    # =========================================================================
    # SUBGROUPS
    # =========================================================================

    def point_stabilizer(self, v: Vertex) -> "PermGroup":
        if len(v) != self.level:
            raise DomainError(f"vertex of level {len(v)} in a group of level {self.level}")
        return self.pointwise_stabilizer_indices([vertex_index(v, self.degree)])

    def pointwise_stabilizer(self, vs: Iterable[Vertex]) -> "PermGroup":
        indices = []
        for v in vs:
            if len(v) != self.level:
                raise DomainError(f"vertex of level {len(v)} in a group of level {self.level}")
            indices.append(vertex_index(v, self.degree))
        return self.pointwise_stabilizer_indices(indices)

    def pointwise_stabilizer_indices(self, points: Iterable[int]) -> "PermGroup":
        points = sorted(set(int(p) for p in points))
        if not points or self.is_trivial:
            return self
        if len(points) == self.npoints:
            return PermGroup.trivial(self.level, self.degree)
        stab = self.sympy_group().pointwise_stabilizer(points, incremental=True)
        return PermGroup.from_sympy(stab, self.level, self.degree)

    def project(self, n: int) -> "PermGroup":
        """Image group under restriction to level ``n``."""
        if n > self.level or n < 0:
            raise DomainError(f"cannot project level {self.level} group to level {n}")
        if n == self.level:
            return self
        return PermGroup([g.project(n) for g in self.generators], n, self.degree)

    # =========================================================================
    # ENUMERATION
    # =========================================================================

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[LevelPermutation]:
        """All elements in sympy's Schreier-Sims order; refuses groups above ``cap``."""
        if self.order() > cap:
            raise ResourceCapExceeded("enum_cap", cap, message=f"group of order {self.order()} exceeds enumeration cap {cap}")
        if self.is_trivial:
            yield LevelPermutation.identity(self.level, self.degree)
            return
        for af in self.sympy_group().generate_schreier_sims(af=True):
            yield LevelPermutation(af, self.level, self.degree, check=False)

    def transversal(self, point: int) -> Dict[int, LevelPermutation]:
        """Schreier tree representatives ``t[q]`` with ``t[q](point) == q``."""
        trans = {point: LevelPermutation.identity(self.level, self.degree)}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = int(g.images[p])
                if q not in trans:
                    trans[q] = g * trans[p]
                    queue.append(q)
        return trans

    def to_dict(self, with_generators: bool = True) -> dict:
        data = {
            "level": self.level,
            "order": str(self.order()),
            "transitive": self.is_transitive(),
        }
        if with_generators:
            data["generators"] = [g.to_list() for g in self.generators]
        return data

    def bsgs(self) -> Tuple[List[int], List[List[int]]]:
        """Base and strong generating set as plain lists."""
        if self.is_trivial:
            return [], []
        group = self.sympy_group()
        return [int(b) for b in group.base], [[int(i) for i in p.array_form] for p in group.strong_gens]

    def __repr__(self) -> str:
        order = self._order if self._order is not None else "?"
        return f"PermGroup(level={self.level}, generators={len(self.generators)}, order={order})"


# =============================================================================
# GROUP CONSTRUCTIONS
# =============================================================================

def group_image(sys: AutomatonSystem, n: int, point_cap: int = DEFAULT_POINT_CAP) -> PermGroup:
    """Image of the whole system group acting on level ``n``."""
    check_point_cap(sys.degree, n, point_cap)
    gens = [level_image(sys, w, n, point_cap) for w in sys.generator_words()]
    return PermGroup(gens, n, sys.degree)


def order(group: PermGroup) -> int:
    return group.order()


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()


def point_stabilizer(group: PermGroup, v: Vertex) -> PermGroup:
    return group.point_stabilizer(v)


def pointwise_stabilizer(group: PermGroup, vs: Iterable[Vertex]) -> PermGroup:
    return group.pointwise_stabilizer(vs)


def membership(group: PermGroup, p: LevelPermutation) -> bool:
    return group.contains(p)


def project(obj: Union[PermGroup, LevelPermutation], n: int):
    return obj.project(n)


def generated_subgroup(elements: Iterable[LevelPermutation], level: int, degree: int,
                       known_order: Optional[int] = None) -> PermGroup:
    """Small generating set for the group generated by ``elements``.

    Keeps an element only when it is not already in the span of the ones
    kept before it; stops early once ``known_order`` is reached.
    """
    group = PermGroup.trivial(level, degree)
    for x in elements:
        if known_order is not None and group.order() >= known_order:
            break
        if group.contains(x):
            continue
        group = PermGroup(list(group.generators) + [x], level, degree)
    return group


def enumerate_elements(group: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> Union[List[LevelPermutation], Undecided]:
    if group.order() > cap:
        return Undecided("enum_cap", cap, reason=f"group order {group.order()} above cap")
    return list(group.elements(cap))


def centralizer_in(group: PermGroup, targets: Sequence[LevelPermutation],
                   cap: int = DEFAULT_ENUM_CAP) -> Union[PermGroup, Undecided]:
    """Elements of ``group`` commuting with every target, by filtered enumeration.

    Returns an ``Undecided`` marker when the group order exceeds ``cap``.
    """
    result = centralizers_by_enumeration(group, [targets], cap)[0]
    if isinstance(result, Undecided):
        logger.warning("centralizer undecided: group order %d above enumeration cap %d", group.order(), cap)
    return result


def centralizers_by_enumeration(group: PermGroup, target_sets: Sequence[Sequence[LevelPermutation]],
                                cap: int = DEFAULT_ENUM_CAP,
                                chunk: int = CENTRALIZER_CHUNK) -> List[Union[PermGroup, Undecided]]:
    """Centralizers of several target sets from a single pass over ``group``.

    Elements are streamed in chunks of ``chunk`` rows and tested against every
    target with vectorized composition; only the commuting rows are kept.
    """
    stacks = []
    for targets in target_sets:
        for t in targets:
            group._check_level(t.level, t.degree)
        moving = [t.images for t in targets if not t.is_identity]
        stacks.append(np.stack(moving) if moving else None)
    if all(s is None for s in stacks):
        return [group] * len(stacks)
    if group.order() > cap:
        marker = Undecided("enum_cap", cap, reason=f"group order {group.order()} above cap")
        return [group if s is None else marker for s in stacks]

    kept: List[List[np.ndarray]] = [[] for _ in stacks]
    batch: List[np.ndarray] = []

    def flush() -> None:
        if not batch:
            return
        rows = np.stack(batch)
        for i, stacked in enumerate(stacks):
            if stacked is None:
                continue
            mask = np.ones(rows.shape[0], dtype=bool)
            for t in stacked:
                mask &= (rows[:, t] == t[rows]).all(axis=1)
            kept[i].extend(rows[mask])
        batch.clear()

    for x in group.elements(cap):
        batch.append(x.images)
        if len(batch) >= chunk:
            flush()
    flush()

    out: List[Union[PermGroup, Undecided]] = []
    for stacked, rows in zip(stacks, kept):
        if stacked is None:
            out.append(group)
            continue
        elements = [LevelPermutation(row, group.level, group.degree, check=False) for row in rows]
        out.append(generated_subgroup(elements, group.level, group.degree, known_order=len(elements)))
    return out


# =============================================================================
# VERTEX STABILIZERS ACTING ON DEEPER LEVELS
# =============================================================================

def block_stabilizer_generators(group: PermGroup, ell: int, v: Vertex) -> List[LevelPermutation]:
    """Schreier generators of the stabilizer of level-``ell`` vertex ``v``.

    The group acts on level ``group.level >= ell``; the generators come from a
    Schreier tree on the level-``ell`` orbit of ``v``.
    """
    n, d = group.level, group.degree
    if len(v) != ell or ell > n:
        raise DomainError(f"vertex {v} is not at level {ell} <= {n}")
    block = d ** (n - ell)
    target = vertex_index(v, d)
    projected = [g.images[::block] // block for g in group.generators]
    trans = {target: LevelPermutation.identity(n, d)}
    queue = deque([target])
    while queue:
        beta = queue.popleft()
        for g, proj in zip(group.generators, projected):
            gamma = int(proj[beta])
            if gamma not in trans:
                trans[gamma] = g * trans[beta]
                queue.append(gamma)
    out: List[LevelPermutation] = []
    seen = set()
    for beta in sorted(trans):
        for g, proj in zip(group.generators, projected):
            gamma = int(proj[beta])
            h = trans[gamma].inverse() * g * trans[beta]
            if not h.is_identity and h not in seen:
                seen.add(h)
                out.append(h)
    return out


def block_stabilizer(group: PermGroup, ell: int, v: Vertex) -> PermGroup:
    """Stabilizer of a level-``ell`` vertex, with a pruned generating set."""
    if ell == 0:
        return group
    orbit_size = len(group.project(ell).orbit(vertex_index(v, group.degree)))
    known = group.order() // orbit_size
    return generated_subgroup(block_stabilizer_generators(group, ell, v), group.level, group.degree, known_order=known)


def restricted_action(group: PermGroup, v: Vertex) -> PermGroup:
    """Action of the stabilizer of ``v`` on the level-``group.level`` descendants of ``v``.

    The block is re-indexed as the tree of depth ``group.level - len(v)``.
    """
    n, d = group.level, group.degree
    block = descendants(v, n, d)
    stab = block_stabilizer(group, len(v), v)
    gens = [
        LevelPermutation(g.images[block.start:block.stop] - block.start, n - len(v), d, check=False)
        for g in stab.generators
    ]
    return PermGroup(gens, n - len(v), d)
