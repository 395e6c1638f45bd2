"""
格子モジュール
Racah / Bannai-Ito 格子と格子上作用素、次数測定
"""

from .errors import GridConstructionError, ClosureError
from .racah_grid import RacahGrid, racah_grid, racah_lambda, racah_theta
from .bi_grid import (
    BIGrid,
    BICase,
    OddRho,
    OddR,
    EvenRhoR,
    bi_grid,
    parse_case,
    rho_factor,
    r_factor,
)
from .operators import (
    GridOperator,
    build_shift_operator,
    build_difference_operator,
    build_reflection_operator,
    build_multiplication_operator,
)
from .degree import (
    ZERO_FUNCTION,
    newton_coefficients,
    newton_to_monomial,
    interpolate,
    degree_on_grid,
    leading_coefficient,
)

__all__ = [
    'GridConstructionError',
    'ClosureError',
    'RacahGrid',
    'racah_grid',
    'racah_lambda',
    'racah_theta',
    'BIGrid',
    'BICase',
    'OddRho',
    'OddR',
    'EvenRhoR',
    'bi_grid',
    'parse_case',
    'rho_factor',
    'r_factor',
    'GridOperator',
    'build_shift_operator',
    'build_difference_operator',
    'build_reflection_operator',
    'build_multiplication_operator',
    'ZERO_FUNCTION',
    'newton_coefficients',
    'newton_to_monomial',
    'interpolate',
    'degree_on_grid',
    'leading_coefficient',
]
