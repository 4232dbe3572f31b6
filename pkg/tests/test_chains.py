"""
chainscope - Group Chain Tests

Quotient tables, discriminant approximations, the stabilizer and centralizer
subchains, wildness certificates, classification evidence and the small
chain probes (kernel, totally-not-normal, conjugacy).

Run with: python -m pytest tests/test_chains.py -v
"""

import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from dataclasses import replace

import pytest

from automaton.parser import parse_system
from automaton.words import IDENTITY
from chains.certificates import (
    WildnessCertificate, longest_certified_run, moves_block, verify_certificate, wildness_certificates,
)
from chains.chain import (
    ChainLimits, build_chain, discriminant_approx, discriminant_surjectivity, quotient_table,
)
from chains.classify import Evidence, PROPERTIES, classify, table_at
from chains.conjugacy import ConjugacyWitness, conjugacy_witness, verify_conjugacy
from chains.kernel import kernel_probe
from chains.report import chain_report, restricted_table
from chains.subchains import height
from chains.tnn import totally_not_normal_check
from quotients.groups import PermGroup
from tree.boundary import parse_point
from tree.vertices import Cylinder
from utils.errors import (
    ActionNotMinimalError, CertificateError, DomainError, PreconditionError, ResourceCapExceeded,
    is_undecided,
)

TRIVIAL_TEXT = "degree = 2\ngen b = [0,1] (b, e)\n"


@pytest.fixture
def odometer_chain(odometer):
    return build_chain(odometer, parse_point(".(0)", 2), 4)


@pytest.fixture
def pink_chain(pink2s2):
    return build_chain(pink2s2, parse_point(".(0)", 2), 3)


# =============================================================================
# CHAIN CONSTRUCTION
# =============================================================================

class TestBuildChain:

    def test_odometer_quotient_table(self, odometer_chain):
        table = quotient_table(odometer_chain, 3)
        assert [q.order_Q for q in table] == [1, 2, 4, 8]
        assert [q.order_D for q in table] == [1, 1, 1, 1]
        assert table[2].to_dict() == {"l": 2, "orderQ": "4", "orderD": "1", "points": 4}

    def test_orbit_stabilizer_on_pink(self, pink_chain):
        for q in quotient_table(pink_chain):
            assert q.order_Q == q.points * q.order_D

    def test_intransitive_system_is_refused(self):
        sys_ = parse_system(TRIVIAL_TEXT)
        with pytest.raises(ActionNotMinimalError) as info:
            build_chain(sys_, parse_point(".(0)", 2), 2)
        assert info.value.level == 1
        assert isinstance(info.value, PreconditionError)

    def test_construction_checks_orbits_only(self, pink2s2):
        chain = build_chain(pink2s2, parse_point("11.(0)", 2), 6)
        for level in range(1, 7):
            q = chain.quotient(level)
            assert q.is_transitive()
            # no Schreier-Sims run yet
            assert q._order is None and q._sympy is None
        assert chain.isotropy(3).order() * 8 == chain.quotient(3).order()

    def test_depth_and_caps(self, odometer):
        with pytest.raises(DomainError):
            build_chain(odometer, parse_point(".(0)", 2), -1)
        with pytest.raises(ResourceCapExceeded):
            build_chain(odometer, parse_point(".(0)", 2), 6, ChainLimits(point_cap=32))

    def test_levels_outside_the_chain(self, odometer_chain):
        with pytest.raises(DomainError):
            quotient_table(odometer_chain, 5)


class TestDiscriminant:

    def test_odometer_discriminant_is_trivial(self, odometer_chain):
        approx = discriminant_approx(odometer_chain, 2, 4)
        assert approx.group.order() == 1
        assert approx.stabilized
        assert approx.lookahead == 3
        assert approx.orders == [1, 1]

    def test_no_lookahead_is_not_stabilized(self, odometer_chain):
        approx = discriminant_approx(odometer_chain, 2, 2)
        assert not approx.stabilized
        assert approx.lookahead == 2

    def test_projected_isotropy_shrinks(self, pink_chain):
        approx = discriminant_approx(pink_chain, 1, 3)
        orders = approx.orders
        assert all(b <= a for a, b in zip(orders, orders[1:]))
        assert approx.group.is_subgroup_of(pink_chain.isotropy(1))

    def test_bad_lookahead(self, odometer_chain):
        with pytest.raises(DomainError):
            discriminant_approx(odometer_chain, 3, 2)

    def test_surjectivity(self, odometer_chain):
        assert discriminant_surjectivity(odometer_chain, 3) == [True, True, True]


# =============================================================================
# SUBCHAINS
# =============================================================================

class TestSubchains:

    def test_odometer_subchains_are_trivial(self, odometer_chain):
        table = table_at(odometer_chain, 3, lookahead=1)
        assert table.orders_K() == [1, 1, 1, 1]
        assert table.orders_Z() == [1, 1, 1, 1]

    def test_pink_subchains_increase(self, pink_chain):
        table = table_at(pink_chain, 2, lookahead=1)
        orders_K = table.orders_K()
        assert orders_K[0] == 1
        assert all(a <= b for a, b in zip(orders_K, orders_K[1:]))
        for level in range(3):
            z = table.Z[level]
            assert not is_undecided(z)
            assert z.is_subgroup_of(table.K[level])

    def test_centralizer_undecided_above_cap(self, pink2s2):
        chain = build_chain(pink2s2, parse_point(".(0)", 2), 3, ChainLimits(enum_cap=1))
        table = table_at(chain, 3, lookahead=0)
        if table.approx.group.order() > 1:
            assert any(is_undecided(z) for z in table.Z)

    def test_height(self, pink_chain):
        table = table_at(pink_chain, 2, lookahead=1)
        w = pink_chain.system.word("a1^-1*a2*a1")
        assert height(pink_chain, table.K, w, 2) == 1
        assert height(pink_chain, table.K, IDENTITY, 2) == 0
        assert height(pink_chain, table.K, pink_chain.system.word("a1"), 2) is None

    def test_restricted_table_on_odometer(self, odometer_chain):
        assert restricted_table(odometer_chain, 3) == [8, 4, 2, 1]


# =============================================================================
# CERTIFICATES
# =============================================================================

class TestCertificates:

    def test_level_zero_certificate_on_pink(self, pink_chain):
        certs = wildness_certificates(pink_chain, 2)
        cert = certs[0]
        assert cert is not None
        assert str(cert.word) == "a1^-1*a2*a1"
        assert str(cert.seed) == "a2"
        assert cert.seed_cylinder == Cylinder((1,))
        assert str(cert.conjugator) == "a1^-1"
        assert certs[1] is None
        verify_certificate(pink_chain, cert, 2)
        assert moves_block(pink_chain, cert.word, 0, 2)

    def test_odometer_has_no_certificates(self, odometer_chain):
        certs = wildness_certificates(odometer_chain, 3)
        assert certs == {0: None, 1: None, 2: None}

    def test_bogus_certificate_is_rejected(self, pink_chain):
        a1 = pink_chain.system.word("a1")
        bogus = WildnessCertificate(0, a1, a1, Cylinder((1,)), IDENTITY)
        with pytest.raises(CertificateError):
            verify_certificate(pink_chain, bogus)

    def test_longest_run(self):
        marker = object()
        certs = {0: marker, 1: None, 2: marker, 3: marker, 4: marker, 5: None}
        assert longest_certified_run(certs) == (3, 2)
        assert longest_certified_run({0: None}) == (0, None)
        assert longest_certified_run({}) == (0, None)


# =============================================================================
# CLASSIFICATION
# =============================================================================

class TestClassify:

    def test_odometer_is_stable(self, odometer_chain):
        verdict = classify(odometer_chain, 3, lookahead=1)
        assert verdict["wild"] is Evidence.WITNESSED_AGAINST
        assert verdict["stable"] is Evidence.CONSISTENT_WITH
        assert verdict["algebraically-stable"] is Evidence.CONSISTENT_WITH
        for prop in ("wild-of-finite-type", "wild-of-flat-type", "dynamically-wild"):
            assert verdict[prop] is Evidence.WITNESSED_AGAINST
        assert verdict.first_strict_level is None

    def test_depth_zero_is_undecided(self, odometer_chain):
        verdict = classify(odometer_chain, 0)
        assert all(verdict[p] is Evidence.UNDECIDED for p in PROPERTIES)

    def test_short_run_leaves_wild_undecided(self, pink_chain):
        verdict = classify(pink_chain, 2, lookahead=1, min_strict_levels=3)
        assert verdict["wild"] is Evidence.UNDECIDED
        assert verdict["stable"] is Evidence.UNDECIDED
        assert verdict.first_strict_level == 0
        assert verdict.certified_levels == [0]
        for prop in ("wild-of-finite-type", "wild-of-flat-type", "dynamically-wild"):
            assert verdict[prop] is Evidence.UNDECIDED

    def test_witnessed_wild_rules_out_stable(self, pink_chain):
        verdict = classify(pink_chain, 2, lookahead=1, min_strict_levels=1)
        assert verdict["wild"] is Evidence.WITNESSED
        assert verdict["stable"] is Evidence.WITNESSED_AGAINST
        # no levels below the trailing window at depth 2
        assert verdict["wild-of-finite-type"] is Evidence.UNDECIDED
        if verdict["wild-of-flat-type"] is Evidence.CONSISTENT_WITH:
            assert verdict.gap_level is None
        if verdict["dynamically-wild"] is Evidence.WITNESSED:
            assert verdict.gap_level is not None

    def test_growth_between_truncations_leaves_finite_type_open(self, pink_chain):
        # a previous truncation with trivial K disagrees with K_1 at depth 3
        stale = replace(table_at(pink_chain, 2, lookahead=1), K=[PermGroup.trivial(2, 2)] * 3)
        verdict = classify(pink_chain, 3, lookahead=0, trailing_window=1, min_strict_levels=1,
                           previous=stale)
        assert verdict["wild"] is Evidence.WITNESSED
        assert verdict.finite_type_levels == [0, 1]
        assert verdict.orders_K[1] > 1
        assert verdict["wild-of-finite-type"] is Evidence.UNDECIDED

        agreeing = classify(pink_chain, 3, lookahead=0, trailing_window=1, min_strict_levels=1,
                            previous=table_at(pink_chain, 3, lookahead=0))
        assert agreeing["wild-of-finite-type"] is Evidence.CONSISTENT_WITH

    def test_verdict_serializes(self, odometer_chain):
        data = classify(odometer_chain, 2, lookahead=1).to_dict()
        assert data["evidence"]["wild"] == "witnessed-against"
        assert data["orders_K"] == ["1", "1", "1"]


# =============================================================================
# REPORT
# =============================================================================

class TestChainReport:

    def test_odometer_report(self, odometer_chain, odometer):
        report = chain_report(odometer_chain, 3, lookahead=1, probe_words=[odometer.word("a")])
        assert report.system == "odometer"
        assert report.basepoint == ".(0)"
        assert [row.orderQ for row in report.levels] == ["1", "2", "4", "8"]
        assert [row.orderH for row in report.levels] == ["8", "4", "2", "1"]
        assert report.verdicts["wild"] == "witnessed-against"
        assert report.witnesses == []
        assert report.heights == {"a": None}
        assert report.tnn == {"0": "true", "1": "true", "2": "true", "3": "true"}

    def test_pink_report_lists_certificates(self, pink_chain):
        report = chain_report(pink_chain, 2, lookahead=1, min_strict_levels=1)
        assert [w.word for w in report.witnesses] == ["a1^-1*a2*a1"]
        assert "certified" in report.levels[0].flags
        assert "K-strict" in report.levels[0].flags
        data = report.model_dump(mode="json")
        assert data["verdicts"]["wild"] == "witnessed"


# =============================================================================
# KERNEL, TNN, CONJUGACY
# =============================================================================

class TestKernel:

    def test_odometer_has_no_rational_points(self, odometer):
        report = kernel_probe(odometer, parse_point(".(0)", 2), 3)
        assert report.fixers == [IDENTITY]
        assert report.trivial_actors == [IDENTITY]
        assert not report.has_rational_points

    def test_coe_pair_fixers_at_the_constant_point(self, coe_pair):
        report = kernel_probe(coe_pair, parse_point(".(1)", 2), 1)
        assert [str(w) for w in report.fixers] == ["e", "a2", "a2^-1"]
        assert [str(w) for w in report.rational_points] == ["a2", "a2^-1"]
        assert report.to_dict()["basepoint"] == ".(1)"


class TestTotallyNotNormal:

    def test_odometer_isotropy_is_trivial(self, odometer_chain):
        q = quotient_table(odometer_chain, 3)[3]
        result = totally_not_normal_check(q, 0)
        assert result.holds is True
        assert result.witnesses == []

    def test_coe_pair_level_two(self, coe_pair):
        chain = build_chain(coe_pair, parse_point(".(0)", 2), 2)
        q = quotient_table(chain, 2)[2]
        result = totally_not_normal_check(q, 0)
        assert result.holds is True
        assert len(result.witnesses) == 1
        h, g = result.witnesses[0]
        conj = g * h * g.inverse()
        assert int(conj.images[0]) != 0

    def test_cap(self, coe_pair):
        chain = build_chain(coe_pair, parse_point(".(0)", 2), 3)
        q = quotient_table(chain, 3)[3]
        assert is_undecided(totally_not_normal_check(q, 0, cap=1).holds)


class TestConjugacy:

    def test_odometer_words(self, odometer):
        witness = conjugacy_witness(odometer, parse_point(".(1)", 2), parse_point(".(0)", 2), 4)
        assert [str(w) for w in witness.words] == ["e", "a", "a", "a", "a"]
        assert witness.depth == 4

    def test_pink_words_are_coherent(self, pink2s2):
        x, y = parse_point(".(0)", 2), parse_point("1.(01)", 2)
        witness = conjugacy_witness(pink2s2, x, y, 4)
        verify_conjugacy(pink2s2, witness)
        assert witness.to_dict()["y"] == ".(10)"

    def test_broken_witness_is_rejected(self, odometer):
        x, y = parse_point(".(1)", 2), parse_point(".(0)", 2)
        broken = ConjugacyWitness(x, y, [IDENTITY, IDENTITY])
        with pytest.raises(CertificateError):
            verify_conjugacy(odometer, broken)

    def test_unreachable_target(self):
        sys_ = parse_system(TRIVIAL_TEXT)
        with pytest.raises(PreconditionError):
            conjugacy_witness(sys_, parse_point(".(0)", 2), parse_point(".(1)", 2), 1)
