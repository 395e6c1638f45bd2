"""
格子関数の多項式次数（Newton 差分商による厳密計算）
"""

from fractions import Fraction
from typing import List, Sequence

from exact import RationalLike, to_rational

from .errors import GridConstructionError

# 零関数の次数（-∞ の代わり）
ZERO_FUNCTION = -1


def newton_coefficients(values: Sequence[RationalLike], coords: Sequence[RationalLike]) -> List[Fraction]:
    """
    差分商 f[x0], f[x0,x1], ... を計算

    Raises:
        GridConstructionError: 長さ不一致または座標の重複
    """
    if len(values) != len(coords):
        raise GridConstructionError(f"値と座標の長さが一致しません: {len(values)} != {len(coords)}")
    xs = [to_rational(c) for c in coords]
    if len(set(xs)) != len(xs):
        raise GridConstructionError("座標が重複しています")
    table = [to_rational(v) for v in values]
    coefficients = [table[0]] if table else []
    for level in range(1, len(xs)):
        table = [(table[k + 1] - table[k]) / (xs[k + level] - xs[k]) for k in range(len(table) - 1)]
        coefficients.append(table[0])
    return coefficients


def newton_to_monomial(coefficients: Sequence[Fraction], coords: Sequence[RationalLike]) -> List[Fraction]:
    """Newton 形式を単項式係数（低次から）へ変換"""
    xs = [to_rational(c) for c in coords]
    result: List[Fraction] = []
    for k in range(len(coefficients) - 1, -1, -1):
        # result <- result * (t - x_k) + c_k
        shifted = [Fraction(0)] + result
        for i, value in enumerate(result):
            shifted[i] -= xs[k] * value
        shifted[0] += coefficients[k]
        result = shifted
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def interpolate(values: Sequence[RationalLike], coords: Sequence[RationalLike]) -> List[Fraction]:
    """格子関数を補間する多項式の単項式係数（低次から）"""
    return newton_to_monomial(newton_coefficients(values, coords), coords)


def degree_on_grid(values: Sequence[RationalLike], coords: Sequence[RationalLike]) -> int:
    """
    格子関数の次数

    Returns:
        最後の非零差分商の添字（零関数は ZERO_FUNCTION）
    """
    coefficients = newton_coefficients(values, coords)
    for k in range(len(coefficients) - 1, -1, -1):
        if coefficients[k] != 0:
            return k
    return ZERO_FUNCTION


def leading_coefficient(values: Sequence[RationalLike], coords: Sequence[RationalLike]) -> Fraction:
    """最高次の差分商（零関数なら 0）"""
    coefficients = newton_coefficients(values, coords)
    degree = degree_on_grid(values, coords)
    return coefficients[degree] if degree != ZERO_FUNCTION else Fraction(0)
