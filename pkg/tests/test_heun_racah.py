"""
Heun-Racah 作用素・代数のテスト
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebras import (HeunRacahParams, HRConstants, PreconditionError, RacahParams, TauParams,
                      algebraic_heun_racah, apply_racah_truncation, build_heun_racah, racah_realization,
                      recover_heun_racah_params, run_heun_racah_suite, specialize_to_racah, tau_to_pi,
                      truncation_nullity, verify_degree_raising, verify_heun_racah_algebra)
from checks import FAIL, ORACLE, PASS, STRUCTURAL
from conftest import small_rationals
from grids import ClosureError, racah_grid

F = Fraction


@pytest.fixture
def wide_params() -> RacahParams:
    """N=4 の Racah パラメータ（π の復元に N >= 3 が必要）"""
    return RacahParams(F(-5), F(1, 2), F(1, 2), F(1, 3), 4, "alpha")


free_params = st.builds(HeunRacahParams, t0=small_rationals, t1=small_rationals, u0=small_rationals,
                        u1=small_rationals, u2=small_rationals, v2=small_rationals, v3=small_rationals)


class TestAlgebraicOperator:
    def test_tau4_gives_difference_operator(self, canonical_racah, tau_y):
        assert algebraic_heun_racah(canonical_racah, tau_y).matrix == canonical_racah.Y

    def test_tau3_gives_multiplication_operator(self, canonical_racah):
        assert algebraic_heun_racah(canonical_racah, TauParams(tau3=1)).matrix == canonical_racah.X

    def test_tau_to_pi_leading_terms(self, canonical_racah_params, canonical_racah, tau_y):
        grid = canonical_racah.grid
        pi = tau_to_pi(TauParams(tau1=2, tau2=3), canonical_racah_params, grid)
        assert pi.v3 == 5
        assert tau_to_pi(tau_y, canonical_racah_params, grid).u1 == F(-1, 4)

    def test_linear_tau_matches_pi_form(self, canonical_racah_params, canonical_racah):
        tau = TauParams(tau0=F(1, 2), tau3=-1, tau4=2)
        claimed = tau_to_pi(tau, canonical_racah_params, canonical_racah.grid)
        built = build_heun_racah(claimed, canonical_racah.grid)
        assert built.matrix == algebraic_heun_racah(canonical_racah, tau).matrix


class TestTruncation:
    def test_parameter_count(self):
        assert truncation_nullity(racah_grid(F(1, 2), F(1, 3), 2)) == 7

    def test_untruncated_operator_leaves_grid(self):
        grid = racah_grid(F(1, 2), F(1, 3), 2)
        with pytest.raises(ClosureError):
            build_heun_racah(HeunRacahParams(u0=1, v2=1), grid)

    def test_zero_size_rejected(self):
        with pytest.raises(PreconditionError):
            apply_racah_truncation(HeunRacahParams(), racah_grid(F(1, 2), F(1, 3), 0))

    def test_specialization_is_racah_operator(self, canonical_racah_params, canonical_racah):
        special = specialize_to_racah(canonical_racah_params, canonical_racah.grid)
        assert (special.t0, special.t1, special.u2, special.v3) == (0, 0, 0, 0)
        assert build_heun_racah(special, canonical_racah.grid).matrix == canonical_racah.Y

    @settings(max_examples=30, deadline=None)
    @given(free_params)
    def test_truncated_operator_raises_degree_by_one(self, free):
        grid = racah_grid(F(1, 2), F(1, 3), 4)
        truncated = apply_racah_truncation(free, grid)
        W = build_heun_racah(truncated, grid)
        report = verify_degree_raising(W, grid, truncated)
        assert report.find("degree_bound")[0].verdict == PASS

    def test_degree_check_needs_two_steps(self):
        grid = racah_grid(F(1, 2), F(1, 3), 1)
        truncated = apply_racah_truncation(HeunRacahParams(t1=1, u0=1), grid)
        report = verify_degree_raising(build_heun_racah(truncated, grid), grid, truncated)
        assert report.find("degree_bound")[0].verdict == "skipped"


class TestRecovery:
    def test_recover_from_matrix(self, wide_params):
        real = racah_realization(wide_params)
        free = HeunRacahParams(t0=1, t1=F(1, 2), u0=2, u1=-1, u2=F(1, 3), v2=1, v3=F(-1, 2))
        truncated = apply_racah_truncation(free, real.grid)
        recovered = recover_heun_racah_params(build_heun_racah(truncated, real.grid), real.grid)
        assert recovered == truncated

    def test_small_grid_not_recoverable(self, canonical_racah, tau_y):
        W = algebraic_heun_racah(canonical_racah, tau_y)
        assert recover_heun_racah_params(W, canonical_racah.grid) is None


class TestHeunRacahAlgebra:
    def test_jacobi_coefficients(self):
        hc = HRConstants(*(F(k) for k in range(10)))
        assert hc.k1 == hc.x1 - hc.x3 * hc.x4
        assert hc.k2 == hc.x2 - hc.x3 * hc.x5
        assert set(hc.omega_coefficients()) == {f"e{k}" for k in range(1, 10)}

    def test_fit_on_algebraic_operator(self, wide_params, tau_mixed):
        real = racah_realization(wide_params)
        W = algebraic_heun_racah(real, tau_mixed).matrix
        report = verify_heun_racah_algebra(real.X, W, HRConstants(*([F(0)] * 10)))
        assert report.find("relation_zdef")[0].verdict == PASS
        assert report.find("relation_jacobi")[0].verdict == PASS
        assert report.find("fit_constants")[0].verdict == PASS

    def test_suite_has_no_structural_failures(self, wide_params, tau_mixed):
        report = run_heun_racah_suite(wide_params, tau_mixed,
                                      free=HeunRacahParams(t1=1, u0=1, u2=F(1, 2), v3=1))
        failed = [e for e in report.entries if e.verdict == FAIL and e.category in (STRUCTURAL, ORACLE)]
        assert failed == []
        assert report.exit_status() in (0, 2)
