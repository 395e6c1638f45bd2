"""
厳密計算モジュール
有理数スカラーと有理数行列の厳密な線形代数
"""

from .errors import WorkbenchError, DimensionMismatchError
from .rational import Rational, RationalLike, to_rational, parse_rational, format_rational, format_vector
from .matrix import RatMatrix, commutator, anticommutator, linear_combination
from .linalg import (
    char_poly,
    poly_from_roots,
    solve_exact,
    nullity,
    Solution,
    NoSolution,
    UnderdeterminedWitness,
)
from .export import matrix_to_dataframe, matrix_to_csv, write_matrix_csv

__all__ = [
    'WorkbenchError',
    'DimensionMismatchError',
    'Rational',
    'RationalLike',
    'to_rational',
    'parse_rational',
    'format_rational',
    'format_vector',
    'RatMatrix',
    'commutator',
    'anticommutator',
    'linear_combination',
    'char_poly',
    'poly_from_roots',
    'solve_exact',
    'nullity',
    'Solution',
    'NoSolution',
    'UnderdeterminedWitness',
    'matrix_to_dataframe',
    'matrix_to_csv',
    'write_matrix_csv',
]
