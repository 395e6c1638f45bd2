"""
Bannai-Ito 代数（実現・関係式・偶数ケースの閉包・Racah 埋め込み）のテスト
"""

from fractions import Fraction

import pytest

from algebras import (bi_constants, bi_realization, complete_bi_parameters,
                      even_case_combinations, enumerate_even_cases, quadratic_generators, racah_in_bi,
                      run_bannai_ito_suite, verify_bi, verify_bi_spectrum)
from checks import FAIL, ORACLE, PAPER_CLAIM, PASS, STRUCTURAL
from exact import RatMatrix, anticommutator, commutator
from grids import ClosureError, EvenRhoR, OddRho

F = Fraction

# 偶数ケースの例: 2(r1+ρ1) = N+1 を満たす N=2 のパラメータ
EVEN_EXAMPLE = (F(1, 4), F(1, 2), F(5, 4), F(1, 2))


def structural_failures(report):
    return [e for e in report.entries if e.verdict == FAIL and e.category in (STRUCTURAL, ORACLE)]


class TestBIConstants:
    def test_even_example_scalars(self):
        constants = bi_constants(*EVEN_EXAMPLE)
        assert (constants.w1, constants.w2, constants.w3) == (-2, -3, 3)
        assert constants.Q == 4

    def test_eigenvalues_alternate(self, odd_rho_params):
        kappa = odd_rho_params.kappa
        assert odd_rho_params.eigenvalues()[:2] == [kappa, -(1 + kappa)]


class TestBIRealization:
    def test_small_odd_rho(self):
        params = complete_bi_parameters(0, F(1, 3), F(1, 5), F(2, 7), 1, OddRho())
        real = bi_realization(params)
        assert params.rho1 == F(-4, 3)
        assert real.Btilde1 == RatMatrix.diagonal([F(1, 3), F(-4, 3)])

    def test_affine_generators(self, odd_rho_realization):
        real = odd_rho_realization
        assert real.B1 == (real.Btilde1 * 2).plus_scalar(F(1, 2))
        assert real.B2 == (real.Btilde2 * 2).plus_scalar(real.params.kappa)

    def test_operator_annihilates_constants(self, odd_rho_realization):
        assert odd_rho_realization.Btilde2.apply([1, 1, 1, 1]) == [0, 0, 0, 0]

    def test_odd_r_realization(self, odd_r_params):
        real = bi_realization(odd_r_params)
        assert real.Btilde1 == RatMatrix.diagonal([F(-1, 6), F(1, 6), F(-7, 6), F(7, 6)])

    def test_even_sum_case_does_not_close(self):
        params = complete_bi_parameters(*EVEN_EXAMPLE, 2, EvenRhoR())
        with pytest.raises(ClosureError) as info:
            bi_realization(params)
        assert info.value.row == 2


class TestBISpectrum:
    @pytest.mark.parametrize("params_fixture", ["odd_rho_params", "odd_r_params"])
    def test_eigenvalues_belong_to_B2(self, params_fixture, request):
        report = verify_bi_spectrum(bi_realization(request.getfixturevalue(params_fixture)))
        assert report.find("spectrum_B2")[0].verdict == PASS
        assert report.find("spectrum_Btilde2")[0].verdict == PASS

    def test_stated_Btilde2_spectrum_mismatch(self, odd_rho_realization):
        (entry,) = verify_bi_spectrum(odd_rho_realization).find("spectrum")
        assert entry.category == PAPER_CLAIM
        assert entry.verdict == FAIL
        assert odd_rho_realization.params.kappa != 0

    def test_suite_spectrum_has_no_oracle_failure(self, odd_rho_params):
        report = run_bannai_ito_suite(odd_rho_params)
        assert report.find("spectrum_B2")[0].verdict == PASS


class TestBIRelations:
    def test_anticommutator_relations(self, odd_rho_realization):
        report = verify_bi(odd_rho_realization)
        assert report.find("fit_constants")[0].verdict == PASS
        assert report.find("graded_jacobi")[0].verdict == PASS
        assert report.find("casimir_scalar")[0].verdict == PASS

    def test_fitted_omegas_match_relations(self, odd_rho_realization):
        real = odd_rho_realization
        report = verify_bi(real)
        w1 = real.B3 - anticommutator(real.B1, real.B2)
        fitted = report.fitted_constants["bannai_ito"]
        assert fitted["status"] == "solved"
        assert w1 == RatMatrix.scalar(4, -Fraction(fitted["w1"]))

    def test_quadratic_generators_share_commutator(self, odd_rho_realization):
        gens = quadratic_generators(odd_rho_realization)
        assert commutator(gens["A"], gens["B"]) == commutator(gens["B"], gens["C"])
        for name in ("A", "B", "C"):
            assert commutator(gens["Gamma"], gens[name]).is_zero()

    def test_racah_embedding_fit(self, odd_rho_realization):
        _, report = racah_in_bi(odd_rho_realization)
        assert report.find("embedding_fit")[0].verdict == PASS
        assert structural_failures(report) == []


class TestEvenCases:
    def test_combination_count(self):
        cases = even_case_combinations()
        assert len(cases) == 12
        assert sum(case.relation == "difference" for case in cases) == 4

    def test_enumeration_records_closure(self):
        report = enumerate_even_cases(*EVEN_EXAMPLE, 2)
        (failing,) = report.find("even_closure_i1_j1_anchor1_sum")
        assert failing.verdict == FAIL and failing.category == PAPER_CLAIM
        (closing,) = report.find("even_closure_i1_j1_anchor1_difference")
        assert closing.verdict == PASS and closing.category == STRUCTURAL

    def test_suite_reports_sum_case_as_claim(self):
        params = complete_bi_parameters(*EVEN_EXAMPLE, 2, EvenRhoR())
        report = run_bannai_ito_suite(params)
        (closure,) = report.find("realization_closure")
        assert closure.verdict == FAIL
        assert closure.category == PAPER_CLAIM
        assert closure.witness["row"] == 2

    def test_suite_with_difference_case(self):
        params = complete_bi_parameters(*EVEN_EXAMPLE, 2, EvenRhoR(1, 1, 1, "difference"))
        assert params.r1 == F(7, 4)
        report = run_bannai_ito_suite(params)
        assert report.find("realization_closure")[0].verdict == PASS
        assert structural_failures(report) == []


def test_odd_suite_has_no_structural_failures(odd_rho_params):
    report = run_bannai_ito_suite(odd_rho_params)
    assert structural_failures(report) == []
    assert report.fitted_constants["bannai_ito.params"]["case"] == "odd_rho"
