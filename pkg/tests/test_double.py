"""
Tests for the skew pairing tau: H_- x H_+ -> k and the generalized quantum double
"""

import pytest

from src.qdeform.algebra.deform import check_cocycle
from src.qdeform.algebra.double import (QUOTIENT_NAME, PairingError, SkewPairing, build_double,
                                        centrality_report, check_double, check_pairing,
                                        check_pairing_admissibility, check_pairing_consistency,
                                        cocycle_from_pairing, generator_products, pairing_basis,
                                        quotient_central, verify_double, verify_double_iso)
from src.qdeform.algebra.groebner import DegreeBoundError

LOWER_F = ((0,), (0,))
UPPER_E = ((0,), (0,))


@pytest.fixture(scope="module")
def tau(sl2_job):
    return sl2_job.pairing(5)


@pytest.fixture(scope="module")
def dpres(tau):
    return build_double(tau, 5)


class TestSkewPairing:

    def test_factor_algebras(self, tau):
        assert tau.minus_label == "minus"
        assert tau.plus_label == "plus"
        assert tau.gamma_prime.names == ("g_f",)
        assert [tau.left.pres.name, tau.right.pres.name] == ["H-", "H+"]

    def test_letter_values(self, tau, sl2_linking_value):
        assert tau.letter_value(0, 0) == -sl2_linking_value
        assert tau(LOWER_F, UPPER_E) == -sl2_linking_value

    def test_group_values(self, tau, q):
        assert tau.group_value((1,), (1,)) == q ** -2
        assert tau(((), (1,)), ((), (1,))) == q ** -2
        assert tau(((), (0,)), ((), (3,))) == 1

    def test_mixed_degrees_vanish(self, tau):
        assert tau(LOWER_F, ((), (1,))) == 0
        assert tau(((), (1,)), UPPER_E) == 0
        assert tau(((0, 0), (0,)), UPPER_E) == 0

    def test_inverse_forms(self, tau, q, sl2_linking_value):
        # tau(g_f', K) = q^-2 divides out of the degree-two convolution
        assert tau.inverse(LOWER_F, UPPER_E) == q ** 2 * sl2_linking_value
        assert tau.convolution_inverse(LOWER_F, UPPER_E) == tau.inverse(LOWER_F, UPPER_E)

    def test_degree_bound(self, tau):
        with pytest.raises(DegreeBoundError):
            tau(((0,) * 3, (0,)), ((0,) * 3, (0,)))

    def test_render_pair(self, tau):
        assert tau.render_pair(LOWER_F, UPPER_E) == "f ; e"

    def test_shared_group_names(self, sl2_job):
        shared = SkewPairing.build(sl2_job.datum, sl2_job.links, sl2_job.extra, 3, shared_group=True)
        assert shared.gamma_prime.names == ("K_p",)

    def test_needs_two_components(self, sl3_plus_job):
        with pytest.raises(PairingError):
            sl3_plus_job.pairing(3)


class TestPairingChecks:

    def test_pairing_laws(self, tau):
        report = check_pairing(tau, 3)
        assert report.passed, report.lines()
        assert {"UNIT-L"} <= set(report.summary())

    def test_admissibility(self, tau):
        assert check_pairing_admissibility(tau).passed

    def test_zero_links_are_noted(self, sl2_zero_job):
        report = check_pairing_admissibility(sl2_zero_job.pairing(3))
        assert report.passed
        assert [entry.info for entry in report.entries] == [True]

    def test_pairing_cocycle(self, tau):
        sigma = cocycle_from_pairing(tau)
        assert sigma.source == "pairing"
        assert check_cocycle(sigma, pairing_basis(tau, 2), 2).passed

    def test_pairing_basis_respects_degree(self, tau):
        basis = pairing_basis(tau, 2)
        assert basis
        assert all(len(a[0]) + len(x[0]) <= 2 for a, x in basis)


class TestDouble:

    def test_group_is_the_product(self, dpres):
        assert dpres.datum.group.names == ("g_f", "K")
        assert dpres.prime_rank == 1
        assert [x.name for x in dpres.datum.letters] == ["f", "e"]

    def test_generator_rules(self, dpres):
        report = check_double(dpres)
        assert report.passed, report.lines()
        assert set(report.summary()) == {"RULE", "PRODUCT"}

    def test_generator_products(self, dpres):
        lines = generator_products(dpres)
        assert len(lines) == 4
        assert any(line.startswith("e * f -> ") for line in lines)

    def test_factorize_cross_product(self, dpres, tau, q, sl2_linking_value):
        product = dpres.product(UPPER_E, LOWER_F)
        assert product[(LOWER_F, UPPER_E)] == q ** -2
        assert product[(((), (1,)), ((), (1,)))] == sl2_linking_value
        assert product[(tau.left.unit_key, tau.right.unit_key)] == -sl2_linking_value

    def test_central_elements(self, dpres):
        assert [label for label, _ in dpres.central_elements()] == ["g_f*g_f^-1"]
        assert centrality_report(dpres).passed

    def test_quotient(self, dpres):
        quotient = quotient_central(dpres)
        assert quotient.pres.name == QUOTIENT_NAME
        assert quotient.datum.group.names == ("K",)

    def test_quotient_matches_hlambda(self, dpres, sl2_dp):
        report = verify_double_iso(dpres, sl2_dp, 5)
        assert report.passed, report.lines()
        assert {"REL-TRANSPORT", "COUNT"} <= set(report.summary())

    def test_pairing_consistency(self, dpres, sl2_dp):
        assert check_pairing_consistency(dpres, sl2_dp).passed

    def test_verify_bundle(self, tau, dpres, sl2_dp):
        report = verify_double(tau, dpres, sl2_dp, 2)
        assert report.passed, report.lines()

    def test_root_of_unity_double(self, uq5_job, uq5_dp):
        tau = uq5_job.pairing(5)
        dpres = build_double(tau, 5)
        assert check_double(dpres).passed
        assert verify_double_iso(dpres, uq5_dp, 5).passed

    def test_wrong_sign_linking_fails_at_the_cross_relation(self, sl2_job, sl2_dp):
        flipped = SkewPairing.build(sl2_job.datum, sl2_job.links.scaled(-1), (), 5)
        report = verify_double_iso(build_double(flipped, 5), sl2_dp, 5)
        assert not report.passed
        failure = report.first_failure()
        assert failure.axiom == "REL-TRANSPORT"
        assert "e*f" in failure.subject
        assert report.summary()["REL-TRANSPORT"]["fail"] == 2

    @pytest.mark.slow
    def test_sl3_double(self, sl3_job):
        tau = sl3_job.pairing(4)
        dpres = build_double(tau, 4)
        assert check_double(dpres).passed
        report = verify_double_iso(dpres, sl3_job.deformation(4), 4)
        assert report.passed, report.lines()
