"""
格子上の作用素（差分・シフト・反射）を行列として構成
境界で格子外を参照する係数は零でなければならない
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

from exact import RatMatrix, RationalLike, format_rational, to_rational

from .bi_grid import BIGrid
from .errors import ClosureError, GridConstructionError
from .racah_grid import RacahGrid

# ロガー設定
logger = logging.getLogger(__name__)

Grid = Union[RacahGrid, BIGrid]


@dataclass(frozen=True)
class GridOperator:
    """格子に束縛された作用素行列"""
    matrix: RatMatrix
    grid: Grid
    provenance: str

    def __post_init__(self):
        if self.matrix.dim != self.grid.size:
            raise GridConstructionError(
                f"作用素の次元 {self.matrix.dim} が格子サイズ {self.grid.size} と一致しません")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def apply(self, values: Sequence[RationalLike]) -> List[Fraction]:
        return self.matrix.apply(values)


def _coefficients(values: Sequence[RationalLike], grid: Grid, name: str) -> List[Fraction]:
    if len(values) != grid.size:
        raise GridConstructionError(f"{name} の長さ {len(values)} が格子サイズ {grid.size} と一致しません")
    return [to_rational(v) for v in values]


def build_shift_operator(up: Sequence[RationalLike], down: Sequence[RationalLike],
                         diag: Sequence[RationalLike], grid: Grid,
                         provenance: str = "shift") -> GridOperator:
    """
    up(x) T⁺ + down(x) T⁻ + diag(x) を構成

    Args:
        up: f(x+1) の係数（up(N) = 0 が必要）
        down: f(x-1) の係数（down(0) = 0 が必要）
        diag: f(x) の係数
        grid: 束縛先の格子
        provenance: 構成元の式名

    Raises:
        ClosureError: 端点で格子外を参照する非零係数
    """
    up = _coefficients(up, grid, "up")
    down = _coefficients(down, grid, "down")
    diag = _coefficients(diag, grid, "diag")
    n = grid.size - 1
    if up[n] != 0:
        raise ClosureError(f"{provenance}: x=N で x+1 が格子外", n, up[n])
    if down[0] != 0:
        raise ClosureError(f"{provenance}: x=0 で x-1 が格子外", 0, down[0])
    rows = [[Fraction(0)] * grid.size for _ in range(grid.size)]
    for x in range(grid.size):
        rows[x][x] = diag[x]
        if x < n:
            rows[x][x + 1] = up[x]
        if x > 0:
            rows[x][x - 1] = down[x]
    return GridOperator(RatMatrix(rows), grid, provenance)


def build_difference_operator(B_vals: Sequence[RationalLike], D_vals: Sequence[RationalLike],
                              grid: RacahGrid, provenance: str = "B Δ - D ∇") -> GridOperator:
    """
    B(x)Δ - D(x)∇ を構成

    Args:
        B_vals: 前進差分の係数（B(N) = 0 が必要）
        D_vals: 後退差分の係数（D(0) = 0 が必要）
        grid: Racah 格子

    Returns:
        行 x に B(x) (列 x+1), -B(x)-D(x) (列 x), D(x) (列 x-1) を持つ作用素
    """
    B = _coefficients(B_vals, grid, "B")
    D = _coefficients(D_vals, grid, "D")
    diag = [-(b + d) for b, d in zip(B, D)]
    return build_shift_operator(B, D, diag, grid, provenance)


def build_reflection_operator(coeff_R1: Sequence[RationalLike], coeff_R2: Sequence[RationalLike],
                              coeff_I: Sequence[RationalLike], grid: BIGrid,
                              provenance: str = "A1 R1 + A2 R2 + A0") -> GridOperator:
    """
    A1(x)R1 + A2(x)R2 + A0(x) を構成（R1 f(x) = f(-x), R2 f(x) = f(-x-1)）

    Args:
        coeff_R1, coeff_R2, coeff_I: 各格子点での係数
        grid: Bannai-Ito 格子

    Raises:
        ClosureError: 反射像が格子外の点で係数が非零
    """
    a1 = _coefficients(coeff_R1, grid, "A1")
    a2 = _coefficients(coeff_R2, grid, "A2")
    a0 = _coefficients(coeff_I, grid, "A0")
    rows = [[Fraction(0)] * grid.size for _ in range(grid.size)]
    for s in range(grid.size):
        rows[s][s] += a0[s]
        for name, coefficient, target in (("R1", a1[s], grid.r1_map[s]), ("R2", a2[s], grid.r2_map[s])):
            if target is None:
                if coefficient != 0:
                    raise ClosureError(
                        f"{provenance}: x={format_rational(grid.x_values[s])} の {name} 像が格子外",
                        s, coefficient)
                continue
            rows[s][target] += coefficient
    return GridOperator(RatMatrix(rows), grid, provenance)


def build_multiplication_operator(values: Sequence[RationalLike], grid: Grid,
                                  provenance: str = "multiplication") -> GridOperator:
    """座標関数などによる掛け算作用素（対角行列）"""
    return GridOperator(RatMatrix.diagonal(_coefficients(values, grid, "values")), grid, provenance)
