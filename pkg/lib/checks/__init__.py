"""
検証レポートモジュール
"""

from .report import (
    CheckEntry,
    CheckReport,
    STRUCTURAL,
    ORACLE,
    PAPER_CLAIM,
    PASS,
    FAIL,
    SKIPPED,
    matrix_witness,
    residual_entry,
    equality_entry,
    value_entry,
    skipped_entry,
)

__all__ = [
    'CheckEntry',
    'CheckReport',
    'STRUCTURAL',
    'ORACLE',
    'PAPER_CLAIM',
    'PASS',
    'FAIL',
    'SKIPPED',
    'matrix_witness',
    'residual_entry',
    'equality_entry',
    'value_entry',
    'skipped_entry',
]
