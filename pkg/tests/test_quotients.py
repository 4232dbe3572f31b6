"""
chainscope - Level Permutation and Quotient Group Tests

Group orders, stabilizers and centralizers are compared with brute-force
closures from tests/oracles.py.

Run with: python -m pytest tests/test_quotients.py -v
"""

import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from automaton.builtins import builtin_system
from quotients.groups import (
    PermGroup, block_stabilizer, centralizer_in, centralizers_by_enumeration, enumerate_elements,
    generated_subgroup, group_image, restricted_action,
)
from quotients.permutations import LevelPermutation, level_image
from tree.vertices import descendants, vertex_index
from utils.errors import DomainError, ResourceCapExceeded, is_undecided

from oracles import closure, closure_order, commuting_rows, stabilizer_rows


# =============================================================================
# LEVEL PERMUTATIONS
# =============================================================================

class TestLevelPermutation:

    def test_composition_applies_right_factor_first(self):
        p = LevelPermutation([1, 0, 2, 3], 2, 2)
        q = LevelPermutation([2, 3, 0, 1], 2, 2)
        assert (p * q).to_list() == [2, 3, 1, 0]

    def test_odometer_is_a_full_cycle(self, odometer):
        a = level_image(odometer, odometer.word("a"), 3)
        assert a.order() == 8
        assert a.cycle_lengths() == [8]
        assert a.project(2) == level_image(odometer, odometer.word("a"), 2)

    def test_tree_structure_is_checked(self):
        with pytest.raises(DomainError):
            LevelPermutation([2, 1, 0, 3], 2, 2)
        with pytest.raises(DomainError):
            LevelPermutation([0, 1, 2], 2, 2)

    def test_inverse_and_identity(self, coe_pair):
        p = level_image(coe_pair, coe_pair.word("a1*a2^-1"), 3)
        assert (p * p.inverse()).is_identity
        assert LevelPermutation.identity(3, 2).is_identity
        assert not p.is_identity

    def test_call_on_vertex(self, odometer):
        a = level_image(odometer, odometer.word("a"), 2)
        assert a((0, 0)) == (1, 0)
        assert a((1, 1)) == (0, 0)

    def test_point_cap(self, odometer):
        with pytest.raises(ResourceCapExceeded):
            level_image(odometer, odometer.word("a"), 6, point_cap=32)


# =============================================================================
# GROUPS
# =============================================================================

class TestPermGroup:

    def test_odometer_quotients_are_cyclic(self, odometer):
        for n in range(1, 6):
            q = group_image(odometer, n)
            assert q.order() == 2 ** n
            assert q.is_transitive()
            assert q.point_stabilizer((0,) * n).order() == 1

    @pytest.mark.parametrize("name,n", [("coe-pair", 3), ("pink:2,3", 3), ("pink2s:2", 3)])
    def test_order_matches_closure(self, name, n):
        sys_ = builtin_system(name)
        q = group_image(sys_, n)
        assert q.order() == closure_order([g.images for g in q.generators])

    def test_coe_pair_level_two_is_the_full_automorphism_group(self, coe_pair):
        q = group_image(coe_pair, 2)
        assert q.order() == 8
        assert q.point_stabilizer((0, 0)).order() == 2

    def test_stabilizer_matches_closure(self, pink2s2):
        q = group_image(pink2s2, 3)
        elements = closure([g.images for g in q.generators])
        for v in [(0, 0, 0), (1, 0, 1)]:
            expected = len(stabilizer_rows(elements, [vertex_index(v, 2)]))
            assert q.point_stabilizer(v).order() == expected

    def test_membership(self, coe_pair):
        q = group_image(coe_pair, 3)
        assert q.contains(level_image(coe_pair, coe_pair.word("a2*a1^3*a2^-1"), 3))
        assert not PermGroup.trivial(3, 2).contains(level_image(coe_pair, coe_pair.word("a1"), 3))
        assert PermGroup.trivial(3, 2).order() == 1

    def test_projection(self, pink2s2):
        q3 = group_image(pink2s2, 3)
        assert q3.project(2).order() == group_image(pink2s2, 2).order()
        with pytest.raises(DomainError):
            q3.project(4)

    def test_enumeration_and_cap(self, coe_pair):
        q = group_image(coe_pair, 2)
        elements = enumerate_elements(q)
        assert len(elements) == 8
        assert len({e.key() for e in elements}) == 8
        assert is_undecided(enumerate_elements(q, cap=4))

    def test_transversal(self, coe_pair):
        q = group_image(coe_pair, 3)
        trans = q.transversal(0)
        assert sorted(trans) == list(range(8))
        for point, t in trans.items():
            assert int(t.images[0]) == point

    def test_bsgs_round_trip_keeps_order(self, pink2s2):
        q = group_image(pink2s2, 3)
        _, strong = q.bsgs()
        rebuilt = PermGroup([LevelPermutation(g, 3, 2, check=False) for g in strong], 3, 2)
        assert rebuilt.order() == q.order()


class TestSubgroups:

    def test_centralizer_of_a_full_cycle(self, coe_pair):
        q = group_image(coe_pair, 2)
        a1 = level_image(coe_pair, coe_pair.word("a1"), 2)
        c = centralizer_in(q, [a1])
        assert c.order() == 4

    def test_centralizers_match_closure(self, pink2s2):
        q = group_image(pink2s2, 3)
        elements = closure([g.images for g in q.generators])
        targets = [
            [level_image(pink2s2, pink2s2.word("a1"), 3)],
            [level_image(pink2s2, pink2s2.word("a2"), 3), level_image(pink2s2, pink2s2.word("a3"), 3)],
            [],
        ]
        result = centralizers_by_enumeration(q, targets, chunk=7)
        for group, target in zip(result, targets):
            expected = len(commuting_rows(elements, [tuple(t.to_list()) for t in target]))
            assert group.order() == expected

    def test_centralizer_above_cap_is_undecided(self, pink2s2):
        q = group_image(pink2s2, 3)
        a1 = level_image(pink2s2, pink2s2.word("a1"), 3)
        assert is_undecided(centralizer_in(q, [a1], cap=2))

    def test_block_stabilizer(self, pink2s2):
        q = group_image(pink2s2, 3)
        elements = closure([g.images for g in q.generators])
        for v in [(0,), (1, 1)]:
            block = descendants(v, 3, 2)
            top = vertex_index(v, 2) * (2 ** (3 - len(v)))
            expected = [row for row in elements if block.start <= row[top] < block.stop]
            stab = block_stabilizer(q, len(v), v)
            assert stab.order() == len(expected)
        assert block_stabilizer(q, 0, ()) is q

    def test_restricted_action(self, coe_pair):
        q = group_image(coe_pair, 3)
        restricted = restricted_action(q, (0,))
        assert restricted.level == 2
        assert restricted.order() <= 8

    def test_generated_subgroup_drops_redundant_elements(self, odometer):
        a = level_image(odometer, odometer.word("a"), 3)
        g = generated_subgroup([a * a, a, a ** 3], 3, 2)
        assert g.order() == 8
        assert len(g.generators) == 2

    def test_generators_must_share_a_level(self, odometer):
        with pytest.raises(DomainError):
            PermGroup([level_image(odometer, odometer.word("a"), 2)], 3, 2)
