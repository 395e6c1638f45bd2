"""
有理数正方行列 RatMatrix
numpy の object 配列に Fraction を格納し、演算はすべて厳密に行う
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatchError, WorkbenchError
from .rational import RationalLike, format_rational, to_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """有理数の正方行列（生成後は不変）"""

    __slots__ = ("_entries",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        """
        初期化

        Args:
            rows: 行ごとの成分（Fraction / int / "p/q"）
        """
        if isinstance(rows, np.ndarray):
            data = [[to_rational(v) for v in row] for row in rows.tolist()]
        else:
            data = [[to_rational(v) for v in row] for row in rows]
        dim = len(data)
        if dim == 0 or any(len(row) != dim for row in data):
            raise WorkbenchError(f"正方行列ではありません: {[len(r) for r in data]}")
        entries = np.empty((dim, dim), dtype=object)
        for i, row in enumerate(data):
            for j, value in enumerate(row):
                entries[i, j] = value
        entries.setflags(write=False)
        self._entries = entries

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "RatMatrix":
        matrix = cls.__new__(cls)
        array = np.array(array, dtype=object)
        # numpy の演算結果に int が混じる場合があるため正規化
        for index, value in np.ndenumerate(array):
            if not isinstance(value, Fraction):
                array[index] = to_rational(value)
        array.setflags(write=False)
        matrix._entries = array
        return matrix

    # ---- 生成 ----
    @classmethod
    def zeros(cls, dim: int) -> "RatMatrix":
        return cls([[_ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "RatMatrix":
        return cls.scalar(dim, _ONE)

    @classmethod
    def scalar(cls, dim: int, value: RationalLike) -> "RatMatrix":
        q = to_rational(value)
        return cls([[q if i == j else _ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RatMatrix":
        dim = len(values)
        return cls([[values[i] if i == j else _ZERO for j in range(dim)] for i in range(dim)])

    # ---- 参照 ----
    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """読み取り専用の object 配列"""
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._entries[index]

    def rows(self) -> List[List[Fraction]]:
        return self._entries.tolist()

    def diagonal_values(self) -> List[Fraction]:
        return [self._entries[i, i] for i in range(self.dim)]

    # ---- 演算 ----
    def _check_dim(self, other: "RatMatrix", operation: str) -> None:
        if not isinstance(other, RatMatrix):
            raise WorkbenchError(f"{operation}: RatMatrix 以外との演算です: {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatchError(self.dim, other.dim, operation)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_dim(other, "加算")
        return RatMatrix._wrap(self._entries + other._entries)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_dim(other, "減算")
        return RatMatrix._wrap(self._entries - other._entries)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix._wrap(-self._entries)

    def __mul__(self, factor: RationalLike) -> "RatMatrix":
        if isinstance(factor, RatMatrix):
            raise WorkbenchError("行列積には @ を使用してください")
        return RatMatrix._wrap(self._entries * to_rational(factor))

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_dim(other, "行列積")
        return RatMatrix._wrap(np.dot(self._entries, other._entries))

    def plus_scalar(self, value: RationalLike) -> "RatMatrix":
        """self + value·I"""
        return self + RatMatrix.scalar(self.dim, value)

    def apply(self, vector: Sequence[RationalLike]) -> List[Fraction]:
        """値ベクトルへの作用（行列・ベクトル積）"""
        if len(vector) != self.dim:
            raise DimensionMismatchError(self.dim, len(vector), "作用")
        column = [to_rational(v) for v in vector]
        return [sum((self._entries[i, j] * column[j] for j in range(self.dim)), _ZERO)
                for i in range(self.dim)]

    def trace(self) -> Fraction:
        return sum(self.diagonal_values(), _ZERO)

    # ---- 判定 ----
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix) or other.dim != self.dim:
            return False
        return bool(np.array_equal(self._entries, other._entries))

    __hash__ = None

    def first_nonzero(self) -> Optional[Tuple[int, int, Fraction]]:
        """行優先で最初の非零成分 (行, 列, 値)、零行列なら None"""
        for (i, j), value in np.ndenumerate(self._entries):
            if value != 0:
                return i, j, value
        return None

    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def scalar_value(self) -> Optional[Fraction]:
        """スカラー行列 c·I なら c、そうでなければ None"""
        c = self._entries[0, 0]
        if self == RatMatrix.scalar(self.dim, c):
            return c
        return None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self.rows())
        return f"RatMatrix([{body}])"


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """[a, b] = ab - ba"""
    a._check_dim(b, "交換子")
    return a @ b - b @ a


def anticommutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """{a, b} = ab + ba"""
    a._check_dim(b, "反交換子")
    return a @ b + b @ a


def linear_combination(terms: Iterable[Tuple[RationalLike, RatMatrix]], dim: int) -> RatMatrix:
    """Σ c_k M_k"""
    result = RatMatrix.zeros(dim)
    for coefficient, matrix in terms:
        result = result + matrix * coefficient
    return result
