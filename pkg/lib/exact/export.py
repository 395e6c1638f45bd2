"""
行列の CSV 出力
"""

import logging
from pathlib import Path
from typing import Union

import pandas as pd

from .matrix import RatMatrix
from .rational import format_rational

# ロガー設定
logger = logging.getLogger(__name__)


def matrix_to_dataframe(matrix: RatMatrix) -> pd.DataFrame:
    """成分を有理数テキストにした DataFrame"""
    return pd.DataFrame([[format_rational(v) for v in row] for row in matrix.rows()], dtype=str)


def matrix_to_csv(matrix: RatMatrix) -> str:
    """1行につき行列の1行、ヘッダ・インデックスなし"""
    return matrix_to_dataframe(matrix).to_csv(header=False, index=False)


def write_matrix_csv(matrix: RatMatrix, path: Union[str, Path]) -> Path:
    """
    行列を CSV ファイルに書き出す

    Args:
        matrix: 出力する行列
        path: 出力先

    Returns:
        書き出したパス
    """
    output = Path(path)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(matrix_to_csv(matrix), encoding="utf-8")
    logger.info(f"行列CSV出力: {output} ({matrix.dim}x{matrix.dim})")
    return output
