"""
有理数スカラーの生成・テキスト変換
すべての係数は fractions.Fraction で厳密に保持する
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, List, Union

from .errors import WorkbenchError

# 唯一のスカラー型
Rational = Fraction

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    値を Fraction に変換

    Args:
        value: Fraction, int, または "p/q" / "p" 形式の文字列

    Returns:
        既約分数
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise WorkbenchError(f"真偽値は有理数として扱えません: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise WorkbenchError(f"有理数に変換できない値です: {value!r}")


def parse_rational(text: str) -> Fraction:
    """'p/q' または 'p' 形式のテキストを解析（小数・指数表記は不可）"""
    stripped = text.strip()
    parts = stripped.split("/")
    if len(parts) > 2 or not all(_is_integer_text(p) for p in parts):
        raise WorkbenchError(f"有理数の形式が不正です: '{text}'")
    if len(parts) == 2 and int(parts[1]) == 0:
        raise WorkbenchError(f"分母が0です: '{text}'")
    return Fraction(int(parts[0]), int(parts[1])) if len(parts) == 2 else Fraction(int(parts[0]))


def _is_integer_text(text: str) -> bool:
    body = text.strip()
    if body[:1] in "+-":
        body = body[1:]
    return body.isdigit()


def format_rational(value: RationalLike) -> str:
    """既約形のテキスト表現（整数なら 'p'、それ以外は 'p/q'）"""
    q = to_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vector(values: Iterable[RationalLike]) -> List[str]:
    return [format_rational(v) for v in values]
