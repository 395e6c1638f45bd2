"""
テスト共通設定
lib をパスに追加し、標準パラメータの実現をフィクスチャとして提供
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root / "lib"))
sys.path.insert(0, str(project_root))

from algebras import (BIParams, RacahParams, TauParams, bi_realization,  # noqa: E402
                      complete_bi_parameters, racah_realization)
from grids import OddR, OddRho  # noqa: E402

# 有界な分子・分母の有理数
small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=6),
)


@pytest.fixture
def canonical_racah_params() -> RacahParams:
    """α=-3, β=1/2, γ=1/2, δ=1/3, N=2（α+1 = -N）"""
    return RacahParams(Fraction(-3), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), 2, "alpha")


@pytest.fixture
def canonical_racah(canonical_racah_params):
    return racah_realization(canonical_racah_params)


@pytest.fixture
def odd_rho_params() -> BIParams:
    """ρ2=1/3, N=3 の OddRho（ρ1 = -7/3、格子 1/3, -4/3, 4/3, -7/3）"""
    return complete_bi_parameters(0, Fraction(1, 3), Fraction(1, 5), Fraction(2, 7), 3, OddRho())


@pytest.fixture
def odd_r_params() -> BIParams:
    """r1=1/3, N=3 の OddR（r2 = 5/3）"""
    return complete_bi_parameters(Fraction(2, 5), Fraction(1, 7), Fraction(1, 3), 0, 3, OddR())


@pytest.fixture
def odd_rho_realization(odd_rho_params):
    return bi_realization(odd_rho_params)


@pytest.fixture
def tau_y() -> TauParams:
    """W = Y"""
    return TauParams(tau4=Fraction(1))


@pytest.fixture
def tau_mixed() -> TauParams:
    """W = XY + 2YX - X + Y + 1/2"""
    return TauParams(Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1), Fraction(1))
