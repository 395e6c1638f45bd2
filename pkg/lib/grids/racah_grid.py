"""
Racah 格子 λ(x) = x(x+γ+δ+1), x = 0..N
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pandas as pd

from exact import RationalLike, format_rational, to_rational

from .errors import GridConstructionError

# ロガー設定
logger = logging.getLogger(__name__)


def racah_lambda(x: RationalLike, gamma: RationalLike, delta: RationalLike) -> Fraction:
    x, gamma, delta = to_rational(x), to_rational(gamma), to_rational(delta)
    return x * (x + gamma + delta + 1)


def racah_theta(x: RationalLike, gamma: RationalLike, delta: RationalLike) -> Fraction:
    """θ(x) = ∇λ(x) = 2x + γ + δ"""
    return 2 * to_rational(x) + to_rational(gamma) + to_rational(delta)


@dataclass(frozen=True)
class RacahGrid:
    """Racah 二次格子（N+1 点）"""
    N: int
    gamma: Fraction
    delta: Fraction
    lambda_values: Tuple[Fraction, ...]
    theta_values: Tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return self.N + 1

    @property
    def coordinates(self) -> Tuple[Fraction, ...]:
        """次数を測る座標（λ 値）"""
        return self.lambda_values

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame({
            "index": list(range(self.size)),
            "coordinate": [format_rational(v) for v in self.lambda_values],
            "theta": [format_rational(v) for v in self.theta_values],
        })

    def to_csv(self) -> str:
        return self.to_dataframe()[["index", "coordinate"]].to_csv(index=False)


def racah_grid(gamma: RationalLike, delta: RationalLike, N: int) -> RacahGrid:
    """
    Racah 格子を構成し、不変条件を検査する

    Args:
        gamma, delta: 格子パラメータ
        N: 格子サイズ（N+1 点）

    Returns:
        RacahGrid

    Raises:
        GridConstructionError: λ の重複、または θ, θ+1, θ+2 が零になる点がある場合
    """
    if not isinstance(N, int) or N < 0:
        raise GridConstructionError(f"N は非負整数である必要があります: {N!r}")
    gamma, delta = to_rational(gamma), to_rational(delta)
    lambdas = tuple(racah_lambda(x, gamma, delta) for x in range(N + 1))
    thetas = tuple(racah_theta(x, gamma, delta) for x in range(N + 1))

    seen = {}
    for x, value in enumerate(lambdas):
        if value in seen:
            raise GridConstructionError(
                f"λ の値が重複しています: x={seen[value]} と x={x} (λ={format_rational(value)})")
        seen[value] = x
    for x, theta in enumerate(thetas):
        for shift in (0, 1, 2):
            if theta + shift == 0:
                raise GridConstructionError(f"実現の分母が零になります: x={x} で θ+{shift}=0")
    offset = (gamma + delta + 1) ** 2
    for x, (lam, theta) in enumerate(zip(lambdas, thetas)):
        if (theta + 1) ** 2 != 4 * lam + offset:
            raise GridConstructionError(f"(θ+1)² = 4λ + (γ+δ+1)² が x={x} で不成立")
    logger.debug(f"Racah格子構成: γ={gamma}, δ={delta}, N={N}")
    return RacahGrid(N, gamma, delta, lambdas, thetas)
