"""
ワークベンチ実行モジュール
設定ファイル、乱数サンプリング、スイート実行管理、作用素出力とコマンドライン
"""

from .errors import ConfigError, SamplingError
from .settings import (
    SECTIONS,
    SamplingSettings,
    UpsilonSettings,
    WorkbenchSettings,
    parse_settings,
    load_settings,
)
from .sampling import TAU_EQUAL, TAU_FREE, TAU_LINES, TAU_SUM_ZERO, ParameterSampler
from .suite_manager import SUITE_NAMES, SuiteManager, normalize_suite_name
from .operators import (
    OPERATOR_NAMES,
    REALIZATIONS,
    build_operator,
    export_operator,
    realization_generators,
    fit_relations,
)
from .cli import main

__all__ = [
    'ConfigError',
    'SamplingError',
    'SECTIONS',
    'SamplingSettings',
    'UpsilonSettings',
    'WorkbenchSettings',
    'parse_settings',
    'load_settings',
    'ParameterSampler',
    'TAU_FREE',
    'TAU_SUM_ZERO',
    'TAU_EQUAL',
    'TAU_LINES',
    'SUITE_NAMES',
    'SuiteManager',
    'normalize_suite_name',
    'OPERATOR_NAMES',
    'REALIZATIONS',
    'build_operator',
    'export_operator',
    'realization_generators',
    'fit_relations',
    'main',
]
