"""
厳密線形代数
特性多項式（Faddeev-LeVerrier）と完全ピボット選択付きガウス消去
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import DimensionMismatchError, WorkbenchError
from .matrix import RatMatrix
from .rational import RationalLike, format_vector, to_rational

# ロガー設定
logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


def char_poly(a: RatMatrix) -> List[Fraction]:
    """
    特性多項式 det(tI - A) の係数を求める

    Args:
        a: 正方行列

    Returns:
        最高次から順の係数リスト（長さ dim+1、先頭は 1）
    """
    n = a.dim
    identity = RatMatrix.identity(n)
    coefficients = [Fraction(1)]
    m = RatMatrix.zeros(n)
    for k in range(1, n + 1):
        m = a @ m + identity * coefficients[-1]
        coefficients.append(-(a @ m).trace() / k)
    return coefficients


def poly_from_roots(roots: Sequence[RationalLike]) -> List[Fraction]:
    """∏(t - r) の係数（最高次から）"""
    coefficients = [Fraction(1)]
    for root in roots:
        r = to_rational(root)
        shifted = coefficients + [_ZERO]
        for k in range(1, len(shifted)):
            shifted[k] -= r * coefficients[k - 1]
        coefficients = shifted
    return coefficients


@dataclass(frozen=True)
class Solution:
    """一意解"""
    values: Tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {"status": "solved", "values": format_vector(self.values)}


@dataclass(frozen=True)
class NoSolution:
    """
    不整合の証拠
    combination·A = 0 かつ combination·rhs = residual ≠ 0
    """
    witness_row: int
    combination: Tuple[Fraction, ...]
    residual: Fraction

    def to_dict(self) -> dict:
        support = [i for i, c in enumerate(self.combination) if c != 0]
        return {
            "status": "no_solution",
            "witness_row": self.witness_row,
            "residual": format_vector([self.residual])[0],
            "support": support,
        }


@dataclass(frozen=True)
class UnderdeterminedWitness:
    """解空間が1点でない場合：特殊解と自由方向"""
    particular: Tuple[Fraction, ...]
    free_directions: Tuple[Tuple[Fraction, ...], ...]
    free_variables: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "status": "underdetermined",
            "particular": format_vector(self.particular),
            "free_variables": list(self.free_variables),
            "free_directions": [format_vector(d) for d in self.free_directions],
        }


SolveResult = Union[Solution, NoSolution, UnderdeterminedWitness]


def _as_rows(a: Union[RatMatrix, Sequence[Sequence[RationalLike]]]) -> List[List[Fraction]]:
    if isinstance(a, RatMatrix):
        return a.rows()
    rows = [[to_rational(v) for v in row] for row in a]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise WorkbenchError("係数行列の行の長さが揃っていません")
    return rows


def solve_exact(a: Union[RatMatrix, Sequence[Sequence[RationalLike]]],
                rhs: Sequence) -> Union[SolveResult, List[SolveResult]]:
    """
    A x = rhs を有理数上で厳密に解く

    Args:
        a: 係数行列（RatMatrix または長方形の行リスト）
        rhs: 右辺ベクトル、または右辺ベクトルのリスト

    Returns:
        Solution / NoSolution / UnderdeterminedWitness（右辺が複数ならそのリスト）
    """
    rows = _as_rows(a)
    if rhs and isinstance(rhs[0], (list, tuple)):
        return [solve_exact(rows, vector) for vector in rhs]
    m = len(rows)
    if len(rhs) != m:
        raise DimensionMismatchError(m, len(rhs), "連立方程式")
    n = len(rows[0]) if rows else 0

    # [A | b | I_m] を消去し、I_m 部分で行操作を記録する
    augmented = [list(rows[i]) + [to_rational(rhs[i])] + [Fraction(int(i == k)) for k in range(m)]
                 for i in range(m)]
    columns = list(range(n))
    rank = 0
    for k in range(min(m, n)):
        pivot = _find_pivot(augmented, k, m, n)
        if pivot is None:
            break
        r, c = pivot
        augmented[k], augmented[r] = augmented[r], augmented[k]
        if c != k:
            for row in augmented:
                row[k], row[c] = row[c], row[k]
            columns[k], columns[c] = columns[c], columns[k]
        pivot_value = augmented[k][k]
        augmented[k] = [v / pivot_value for v in augmented[k]]
        for i in range(m):
            factor = augmented[i][k]
            if i != k and factor != 0:
                pivot_row = augmented[k]
                augmented[i] = [v - factor * p for v, p in zip(augmented[i], pivot_row)]
        rank += 1
    logger.debug(f"消去完了: {m}x{n}, 階数 {rank}")

    for i in range(rank, m):
        if augmented[i][n] != 0:
            return NoSolution(witness_row=i,
                              combination=tuple(augmented[i][n + 1:]),
                              residual=augmented[i][n])

    particular = [_ZERO] * n
    for k in range(rank):
        particular[columns[k]] = augmented[k][n]
    if rank == n:
        return Solution(tuple(particular))

    directions = []
    for j in range(rank, n):
        direction = [_ZERO] * n
        direction[columns[j]] = Fraction(1)
        for k in range(rank):
            direction[columns[k]] = -augmented[k][j]
        directions.append(tuple(direction))
    return UnderdeterminedWitness(particular=tuple(particular),
                                  free_directions=tuple(directions),
                                  free_variables=tuple(columns[j] for j in range(rank, n)))


def _find_pivot(augmented: List[List[Fraction]], k: int, m: int, n: int):
    """残り部分行列で絶対値最大の成分（同値なら行優先で最初）"""
    best = None
    best_value = _ZERO
    for i in range(k, m):
        row = augmented[i]
        for j in range(k, n):
            value = abs(row[j])
            if value > best_value:
                best, best_value = (i, j), value
    return best


def nullity(a: Union[RatMatrix, Sequence[Sequence[RationalLike]]]) -> int:
    """斉次系 A x = 0 の解空間の次元"""
    rows = _as_rows(a)
    result = solve_exact(rows, [_ZERO] * len(rows))
    if isinstance(result, UnderdeterminedWitness):
        return len(result.free_directions)
    return 0
