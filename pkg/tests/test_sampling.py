"""
乱数サンプリングのテスト
"""

import numpy as np
import pytest

from algebras import ALPHA_TRUNC, GAMMA_TRUNC, PreconditionError
from grids import EvenRhoR, OddR, OddRho, bi_grid, racah_grid
from workbench import TAU_EQUAL, TAU_SUM_ZERO, ParameterSampler, SamplingError, SamplingSettings


def make_sampler(seed: int = 0, **overrides) -> ParameterSampler:
    return ParameterSampler(SamplingSettings(**overrides), np.random.default_rng(seed))


class TestRationals:
    def test_bounds(self):
        sampler = make_sampler(numerator_bound=3, denominator_bound=2)
        for _ in range(50):
            value = sampler.rational()
            assert abs(value) <= 3
            assert value.denominator in (1, 2)

    def test_nonzero(self):
        sampler = make_sampler(numerator_bound=1, denominator_bound=1)
        assert all(sampler.rational(nonzero=True) != 0 for _ in range(30))

    def test_size_parity(self):
        sampler = make_sampler(n_min=2, n_max=5)
        assert {sampler.size(parity=1) for _ in range(30)} <= {3, 5}

    def test_size_without_matching_parity(self):
        sampler = make_sampler(n_min=2, n_max=2)
        with pytest.raises(SamplingError, match="偶奇"):
            sampler.size(parity=1)

    def test_tau_not_all_zero(self):
        sampler = make_sampler(numerator_bound=1, denominator_bound=1)
        for _ in range(10):
            assert any(sampler.tau().to_dict().values())

    @pytest.mark.parametrize("line, sign", [(TAU_SUM_ZERO, -1), (TAU_EQUAL, 1)])
    def test_tau_on_degenerate_line(self, line, sign):
        sampler = make_sampler(seed=3)
        for _ in range(10):
            tau = sampler.tau(line)
            assert tau.tau1 != 0
            assert tau.tau2 == sign * tau.tau1

    def test_unknown_tau_line(self):
        with pytest.raises(SamplingError, match="退化直線"):
            make_sampler().tau("diagonal")


class TestParameters:
    @pytest.mark.parametrize("truncation", [ALPHA_TRUNC, GAMMA_TRUNC])
    def test_racah_params_satisfy_truncation(self, truncation):
        params = make_sampler(seed=7).racah_params(truncation)
        assert params.truncation == truncation
        assert params.truncation_value() == -params.N
        racah_grid(params.gamma, params.delta, params.N)

    @pytest.mark.parametrize("case", [OddRho(), OddR(), EvenRhoR(1, 1, 1, "difference")])
    def test_bi_params_build_grid(self, case):
        params = make_sampler(seed=11).bi_params(case)
        assert params.N % 2 == (0 if isinstance(case, EvenRhoR) else 1)
        bi_grid(params.rho1, params.rho2, params.r1, params.r2, params.N, params.case)

    def test_same_seed_same_draws(self):
        first, second = make_sampler(seed=5), make_sampler(seed=5)
        assert first.racah_params(ALPHA_TRUNC) == second.racah_params(ALPHA_TRUNC)
        assert first.bi_params(OddRho()) == second.bi_params(OddRho())
        assert first.tau() == second.tau()


def test_attempt_limit():
    sampler = make_sampler(max_attempts=3)

    def never():
        raise PreconditionError("条件違反")

    with pytest.raises(SamplingError, match="3 回以内"):
        sampler._draw("test", never)
    assert sampler.stats == {"draw_count": 3, "rejected_count": 3}
