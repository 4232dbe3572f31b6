"""
chainscope - End-to-End Scenarios on the Built-in Systems

Desk-scale runs of the odometer, the orbit-equivalent pair and the
recursive families. Marked slow.

Run with: python -m pytest tests/test_acceptance.py -v -m slow
"""

import sys
import os
import json

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from automaton.action import act_on_boundary
from automaton.decide import agree_on_cylinder, equal_on_cylinder, is_identity_on_cylinder
from chains.chain import build_chain
from chains.classify import table_at
from chains.report import chain_report
from chains.subchains import height
from cli.main import main
from dynamics.coe import coe_check
from dynamics.hausdorff import non_hausdorff_probe
from dynamics.lqa import lqa_probe, topological_freeness_probe
from dynamics.verify import verify
from quotients.groups import group_image
from quotients.permutations import level_image
from tree.boundary import parse_point
from tree.vertices import Cylinder

pytestmark = pytest.mark.slow


class TestOdometer:

    @pytest.mark.parametrize("before,after", [
        ("0001110.(0)", "1001110.(0)"),
        ("11001.(1)", "00101.(1)"),
        (".(1)", ".(0)"),
    ])
    def test_evaluation(self, odometer, before, after):
        assert act_on_boundary(odometer, odometer.word("a"), parse_point(before, 2)) == parse_point(after, 2)

    def test_free_transitive_levels(self, odometer):
        for n in range(1, 11):
            q = group_image(odometer, n)
            assert q.order() == 2 ** n
            assert q.is_transitive()
            assert q.point_stabilizer((1,) * n).order() == 1

    def test_chain_report_is_stable(self, odometer):
        chain = build_chain(odometer, parse_point(".(1)", 2), 8)
        report = chain_report(chain, 6, lookahead=2)
        for row in report.levels:
            assert (row.orderD, row.orderK, row.orderZ) == ("1", "1", "1")
        assert report.verdicts["stable"] == "consistent-with"
        assert report.verdicts["wild"] == "witnessed-against"


class TestOrbitEquivalentPair:

    def test_a2_pieces(self, coe_pair):
        a2 = coe_pair.word("a2")
        assert is_identity_on_cylinder(coe_pair, a2, Cylinder((1,)))
        assert equal_on_cylinder(coe_pair, a2, coe_pair.word("a1^2"), Cylinder((0,)))

    def test_coe_at_word_length_eight(self, coe_pair, coe_pair_h):
        witness = coe_check(coe_pair, coe_pair_h, 1, 8)
        assert witness.complete
        assert str(witness.alpha[("a2", Cylinder((0,)))]) == "a1^2"
        left = [c for c in witness.collisions if c.block == Cylinder((0,))]
        assert any({"a2", "a1^2"} <= {str(w) for w in c.words} for c in left)
        verify(witness)

    def test_freeness(self, coe_pair, coe_pair_h):
        report = topological_freeness_probe(coe_pair, 2, 2)
        assert report.witnessed_not_free
        assert report.fixed_cylinders[coe_pair.word("a2")] == [Cylinder((1,))]
        # every fixer in the box is a power of a2
        assert all(set(w.names()) == {"a2"} for w in report.fixed_cylinders)
        assert not topological_freeness_probe(coe_pair_h, 8, 8).witnessed_not_free

    def test_beta_sends_powers_of_a1_to_themselves(self, coe_pair, coe_pair_h):
        witness = coe_check(coe_pair, coe_pair_h, 1, 4)
        blocks = [Cylinder((0,)), Cylinder((1,))]
        for block in blocks:
            assert str(witness.beta[("a1", block)]) == "a1"
        for k in range(1, 9):
            power = f"a1^{k}" if k > 1 else "a1"
            for block in blocks:
                assert agree_on_cylinder(coe_pair_h, coe_pair_h.word(power), coe_pair, coe_pair.word(power), block)


class TestRecursiveFamilies:

    def test_generators_lie_in_the_stabilizer_subchain(self, pink2s2):
        chain = build_chain(pink2s2, parse_point("11.(0)", 2), 6)
        table = table_at(chain, 4, lookahead=2)
        for name in ("a2", "a3", "a4"):
            level = height(chain, table.K, pink2s2.word(name), 4)
            assert level is not None and level <= 2

    def test_a2_a4_order_doubles_every_other_level(self, pink2s2):
        w = pink2s2.word("a2*a4")
        orders = [level_image(pink2s2, w, n).order() for n in (2, 4, 6, 8, 10)]
        assert orders == [2, 4, 8, 16, 32]

    def test_pink2s2_is_wild_at_depth_five(self, pink2s2):
        chain = build_chain(pink2s2, parse_point("11.(0)", 2), 7)
        report = chain_report(chain, 5, lookahead=2)
        orders_K = [int(row.orderK) for row in report.levels]
        assert orders_K[0] == 1
        # strict growth over the certified levels 0..3
        assert all(orders_K[level] < orders_K[level + 1] for level in range(4))
        assert [w.level for w in report.witnesses] == [0, 1, 2, 3]
        for level in range(4):
            assert {"K-strict", "certified"} <= set(report.levels[level].flags)
        assert report.verdicts["wild"] == "witnessed"
        assert report.verdicts["stable"] == "witnessed-against"
        assert report.verdicts["wild-of-finite-type"] != "witnessed-against"
        assert report.first_strict_level == 0

    @pytest.mark.parametrize("n", [4, 5])
    def test_pink23_is_dynamically_wild(self, pink23, n):
        chain = build_chain(pink23, parse_point(".(1)", 2), n + 2)
        report = chain_report(chain, n, lookahead=2)
        orders_K = [int(row.orderK) for row in report.levels]
        orders_Z = [int(row.orderZ) for row in report.levels]
        assert all(z <= k for z, k in zip(orders_Z, orders_K))
        assert orders_Z[1] < orders_K[1]
        assert report.gap_level == 1
        assert "Z<K" in report.levels[1].flags
        assert report.verdicts["wild"] == "witnessed"
        assert report.verdicts["dynamically-wild"] == "witnessed"
        assert report.verdicts["wild-of-flat-type"] == "witnessed-against"

    def test_non_hausdorff_to_depth_six(self, pink23):
        witness = non_hausdorff_probe(pink23, pink23.word("a3"), parse_point(".(1)", 2), 6)
        assert witness.succeeded
        assert witness.deepest_level == 6
        verify(witness)
        # the same box holds a quasi-analyticity violation
        assert "a3" in [str(v.word) for v in lqa_probe(pink23, 1, 2, 2)]


def test_chain_output_is_deterministic(capsys):
    argv = ["chain", "pink2s:2", "11.(0)", "--depth", "3", "--no-cache"]
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["basepoint"] == "11.(0)"
