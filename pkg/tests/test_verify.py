import json

import pytest

from riordan.algebra import X, Y
from riordan.laguerre import biv_via_uni, uni_explicit
from riordan.verify import (
    CheckReport,
    HarnessConfig,
    Witness,
    all_passed,
    check_biv_routes,
    check_bivariate_goldens,
    check_cube_layers_golden,
    check_diagonal_sum,
    check_egf_biv,
    check_egf_uni,
    check_ftra_chain,
    check_integer_rows_golden,
    check_layer2_product_golden,
    check_layer_homomorphism,
    check_newton_rule,
    check_orthogonality,
    check_pair_matmul,
    check_pascal_self_inverse,
    check_signed_pascal_golden,
    check_table_product,
    check_uni_routes,
    run_all,
    sign_flip_mutation,
)


class TestGoldens:
    def test_signed_pascal(self):
        assert check_signed_pascal_golden().passed

    def test_integer_rows(self):
        assert check_integer_rows_golden().passed

    def test_cube_layers(self):
        assert check_cube_layers_golden().passed

    def test_bivariate_table(self):
        assert check_bivariate_goldens().passed

    def test_layer2_product(self):
        assert check_layer2_product_golden().passed


class TestGeneratingFunctions:
    @pytest.mark.parametrize("alpha", [0, 1, 3])
    def test_uni_egf(self, alpha):
        report = check_egf_uni(alpha, 10)
        assert report.passed
        assert report.witness is None

    def test_uni_egf_first_coefficient(self):
        # t^1 coefficient on both sides is the linear member
        assert uni_explicit(1, 0).value == 1 - X

    def test_biv_egf_pairing_resolution(self):
        report = check_egf_biv(6)
        assert report.passed
        assert report.details["pairing-s-x"] == "match"
        assert report.details["pairing-s-y"].startswith("mismatch")


class TestOrthogonality:
    def test_unit_mass(self):
        assert check_orthogonality(0, 0, 0).passed

    def test_off_diagonal_zero(self):
        assert check_orthogonality(0, 1, 0).passed

    def test_weighted_diagonal(self):
        # 2! 2! 2! C(4,2) = 48, computed through the moment functional
        from riordan.verify import _moment

        member = uni_explicit(2, 2).value
        assert _moment(member * member * X**2) == 48
        report = check_orthogonality(2, 2, 2)
        assert report.passed

    def test_grid(self):
        for alpha in range(3):
            for n in range(4):
                for m in range(4):
                    assert check_orthogonality(n, m, alpha).passed


class TestDiagonalSums:
    def test_degree_one_by_hand(self):
        # binomial sum: (1-y) + (1-x) = 2 - x - y
        lhs = biv_via_uni(0, 1, "x").value + biv_via_uni(1, 0, "x").value
        assert lhs == 2 - X - Y
        assert check_diagonal_sum(1, "sum").passed

    def test_alternating_degree_one(self):
        lhs = -biv_via_uni(0, 1, "x").value + biv_via_uni(1, 0, "x").value
        assert lhs == Y - X
        assert check_diagonal_sum(1, "asum").passed

    def test_reciprocal_degree_one(self):
        assert check_diagonal_sum(1, "xsum").passed

    @pytest.mark.parametrize("which", ["sum", "asum", "xysum", "xsum"])
    def test_all_identities_to_degree_six(self, which):
        for k in range(1, 7):
            assert check_diagonal_sum(k, which).passed

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            check_diagonal_sum(1, "nope")


class TestTableAndChain:
    def test_table_product(self):
        assert check_table_product(4, 4).passed

    def test_boundary_row(self):
        assert check_table_product(0, 4).passed

    def test_ftra_chain(self):
        assert check_ftra_chain(1, 3).passed
        assert check_ftra_chain(0, 4).passed
        assert check_ftra_chain(2, 5).passed


class TestRoutesAndGroups:
    def test_uni_routes(self):
        assert check_uni_routes(6, 4).passed

    def test_biv_routes(self):
        assert check_biv_routes(4).passed

    def test_layer_homomorphism(self):
        assert check_layer_homomorphism(pairs=6, max_k=3, order=10, size=6, seed=4).passed

    def test_pair_matmul(self):
        assert check_pair_matmul(pairs=4, order=10, size=6, seed=5).passed

    def test_pascal_self_inverse(self):
        assert check_pascal_self_inverse().passed

    def test_newton_rule(self):
        assert check_newton_rule().passed


class TestReports:
    def test_json_round_trip(self):
        report = check_egf_uni(0, 6)
        payload = json.loads(report.to_json())
        assert payload["name"] == "uni-egf"
        assert payload["passed"] is True
        assert "witness" not in payload

    def test_summary_line(self):
        line = check_orthogonality(1, 2, 0).summary()
        assert line.startswith("PASS orthogonality")

    def test_fail_report_carries_witness(self):
        report = CheckReport(
            name="demo",
            params={},
            passed=False,
            witness=Witness(index="(0,0)", lhs="1", rhs="2"),
        )
        payload = json.loads(report.to_json())
        assert payload["witness"] == {"index": "(0,0)", "lhs": "1", "rhs": "2"}


class TestHarness:
    def test_default_run_passes(self):
        reports = run_all(
            HarnessConfig(
                max_n=4,
                max_alpha=3,
                max_biv=3,
                max_k=3,
                egf_alphas=(0, 1),
                egf_order=6,
                biv_degree=4,
                orth_max=2,
                orth_alphas=(0, 1),
                ftra_max_n=1,
                ftra_max_m=3,
                hom_pairs=4,
                hom_order=10,
                matmul_size=6,
                newton_max=4,
            )
        )
        assert reports
        assert all_passed(reports)

    def test_empty_config_yields_empty_report(self):
        assert run_all(HarnessConfig.empty()) == []

    def test_only_filter(self):
        reports = run_all(HarnessConfig(only="newton-rule"))
        assert [r.name for r in reports] == ["newton-rule"]

    def test_only_filter_within_grouped_family(self):
        reports = run_all(HarnessConfig(only="pascal-self-inverse"))
        assert [r.name for r in reports] == ["pascal-self-inverse"]

    def test_deterministic_order(self):
        cfg = HarnessConfig(
            max_n=2, max_alpha=2, max_biv=2, max_k=2, egf_alphas=(0,), egf_order=4,
            biv_degree=3, orth_max=1, orth_alphas=(0,), ftra_max_n=0, ftra_max_m=2,
            hom_pairs=2, hom_order=8, matmul_size=4, newton_max=2,
        )
        first = [r.summary() for r in run_all(cfg)]
        second = [r.summary() for r in run_all(cfg)]
        assert first == second


class TestMutation:
    def test_mutation_is_scoped(self):
        clean = uni_explicit(2, 0).value
        with sign_flip_mutation():
            import riordan.laguerre as module

            mutated = module.uni_explicit(2, 0).value
            assert mutated != clean
        assert uni_explicit(2, 0).value == clean

    def test_mutated_run_fails_with_witnesses(self):
        cfg = HarnessConfig(
            max_n=3, max_alpha=2, max_biv=2, max_k=2, egf_alphas=(0,), egf_order=5,
            biv_degree=3, orth_max=2, orth_alphas=(0,), ftra_max_n=1, ftra_max_m=2,
            hom_pairs=2, hom_order=8, matmul_size=4, newton_max=2, mutate=True,
        )
        reports = run_all(cfg)
        failed = {r.name for r in reports if not r.passed}
        assert {"bivariate-table-goldens", "uni-routes", "biv-routes", "uni-egf"} <= failed
        for report in reports:
            if not report.passed:
                assert report.witness is not None
