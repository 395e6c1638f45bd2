"""
シード付き乱数による有理数パラメータのサンプリング
"""

import logging
from fractions import Fraction
from typing import Callable, Optional, TypeVar

import numpy as np

from algebras import (ALPHA_TRUNC, BETA_DELTA_TRUNC, FREE_NAMES, GAMMA_TRUNC, P_NAMES, BIParams,
                      HBIParams, HeunRacahParams, PreconditionError, RacahParams, TauParams,
                      bi_realization, complete_bi_parameters, complete_racah_params)
from grids import BICase, ClosureError, EvenRhoR, GridConstructionError, racah_grid

from .errors import SamplingError
from .settings import SamplingSettings

# ロガー設定
logger = logging.getLogger(__name__)

T = TypeVar("T")

# 切断条件で決まらない3パラメータ
RACAH_FREE = {
    ALPHA_TRUNC: ("beta", "gamma", "delta"),
    BETA_DELTA_TRUNC: ("alpha", "gamma", "delta"),
    GAMMA_TRUNC: ("alpha", "beta", "delta"),
}

# 乱数試行で巡回する τ の取り方（独立・τ1+τ2=0・τ1=τ2）
TAU_FREE = "free"
TAU_SUM_ZERO = "sum_zero"
TAU_EQUAL = "equal"
TAU_LINES = (TAU_FREE, TAU_SUM_ZERO, TAU_EQUAL)


class ParameterSampler:
    """有界な分子・分母の有理数を引き、構成条件を満たすまで引き直す"""

    def __init__(self, settings: SamplingSettings, rng: np.random.Generator):
        """
        初期化

        Args:
            settings: 分子・分母の上限、N の範囲、引き直し上限
            rng: numpy の乱数生成器（スイートごとに独立）
        """
        self.settings = settings
        self.rng = rng
        self.stats = {
            "draw_count": 0,
            "rejected_count": 0,
        }

    def rational(self, nonzero: bool = False) -> Fraction:
        """分子 |p| <= numerator_bound、分母 1..denominator_bound の有理数"""
        bound = self.settings.numerator_bound
        while True:
            p = int(self.rng.integers(-bound, bound + 1))
            q = int(self.rng.integers(1, self.settings.denominator_bound + 1))
            if p != 0 or not nonzero:
                return Fraction(p, q)

    def size(self, parity: Optional[int] = None) -> int:
        """n_min..n_max の N（parity 指定時はその偶奇のみ）"""
        choices = [n for n in range(self.settings.n_min, self.settings.n_max + 1)
                   if parity is None or n % 2 == parity]
        if not choices:
            raise SamplingError(
                f"N の範囲 {self.settings.n_min}..{self.settings.n_max} に偶奇 {parity} の値がありません")
        return choices[int(self.rng.integers(0, len(choices)))]

    def tau(self, line: str = TAU_FREE) -> TauParams:
        """
        τ0..τ4（全零は引き直す）

        Args:
            line: TAU_FREE は独立に引く。TAU_SUM_ZERO は τ2 = -τ1、TAU_EQUAL は τ2 = τ1（τ1 は非零）

        Raises:
            SamplingError: line が不明、または引き直し上限
        """
        if line not in TAU_LINES:
            raise SamplingError(f"不明な τ の退化直線: {line}")
        return self._draw("τ", lambda: self._nonzero_tau(line))

    def _nonzero_tau(self, line: str) -> TauParams:
        values = [self.rational() for _ in range(5)]
        if line != TAU_FREE:
            values[1] = self.rational(nonzero=True)
            values[2] = -values[1] if line == TAU_SUM_ZERO else values[1]
        tau = TauParams.from_sequence(values)
        if not any(tau.to_dict().values()):
            raise PreconditionError("τ がすべて零です")
        return tau

    def racah_params(self, truncation: str) -> RacahParams:
        """切断条件 truncation を満たし格子の不変条件を通る Racah パラメータ"""
        def build() -> RacahParams:
            N = self.size()
            params = complete_racah_params({name: self.rational() for name in RACAH_FREE[truncation]},
                                           N, truncation)
            racah_grid(params.gamma, params.delta, params.N)
            return params
        return self._draw(f"Racah ({truncation})", build)

    def bi_params(self, case: BICase) -> BIParams:
        """切断条件 case の格子上で標準実現が閉じる Bannai-Ito パラメータ"""
        parity = 0 if isinstance(case, EvenRhoR) else 1

        def build() -> BIParams:
            N = self.size(parity)
            params = complete_bi_parameters(*(self.rational() for _ in range(4)), N=N, case=case)
            bi_realization(params)
            return params
        return self._draw(f"Bannai-Ito ({case.label()})", build)

    def heun_racah_free(self) -> HeunRacahParams:
        return HeunRacahParams(**{name: self.rational() for name in FREE_NAMES})

    def hbi_free(self) -> HBIParams:
        return HBIParams(**{name: self.rational() for name in P_NAMES})

    def _draw(self, label: str, build: Callable[[], T]) -> T:
        """
        build が構成条件違反を起こす間は引き直す

        Raises:
            SamplingError: max_attempts 回続けて条件違反
        """
        last_error = None
        for attempt in range(1, self.settings.max_attempts + 1):
            self.stats["draw_count"] += 1
            try:
                return build()
            except (PreconditionError, GridConstructionError, ClosureError) as e:
                self.stats["rejected_count"] += 1
                last_error = e
                logger.debug(f"{label} 引き直し {attempt}: {e}")
        raise SamplingError(
            f"{label} のパラメータを {self.settings.max_attempts} 回以内に得られませんでした"
            f"（最後の理由: {last_error}）")
