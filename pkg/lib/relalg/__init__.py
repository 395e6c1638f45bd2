"""
関係式DSLモジュール
代数の表示をデータとして読み込み、行列実現に対して評価・定数当てはめを行う
"""

from .errors import ParseError, UndeclaredIdentifierError, UnknownScalarError, NonlinearFitError
from .nodes import (Node, Number, Name, Neg, BinOp, Power, Commutator, Anticommutator,
                    Group, Relation, to_source)
from .presentation import Presentation, ScalarSymbol, IDENTITY_NAME
from .parser import tokenize, parse, parse_expression
from .evaluator import (UNKNOWN, Assignment, AffineForm, evaluate, evaluate_expression,
                        evaluate_presentation)
from .fitting import FitResult, fit_constants, check_central, SOLVED, NO_SOLUTION, UNDERDETERMINED
from .fixtures import FIXTURE_DIR, FIXTURE_NAMES, load_fixture, load_presentation

__all__ = [
    'ParseError',
    'UndeclaredIdentifierError',
    'UnknownScalarError',
    'NonlinearFitError',
    'Node',
    'Number',
    'Name',
    'Neg',
    'BinOp',
    'Power',
    'Commutator',
    'Anticommutator',
    'Group',
    'Relation',
    'to_source',
    'Presentation',
    'ScalarSymbol',
    'IDENTITY_NAME',
    'tokenize',
    'parse',
    'parse_expression',
    'UNKNOWN',
    'Assignment',
    'AffineForm',
    'evaluate',
    'evaluate_expression',
    'evaluate_presentation',
    'FitResult',
    'fit_constants',
    'check_central',
    'SOLVED',
    'NO_SOLUTION',
    'UNDERDETERMINED',
    'FIXTURE_DIR',
    'FIXTURE_NAMES',
    'load_fixture',
    'load_presentation',
]
