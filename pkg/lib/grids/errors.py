"""
格子・格子上作用素の例外
"""

from fractions import Fraction
from typing import Optional

from exact import WorkbenchError, format_rational


class GridConstructionError(WorkbenchError):
    """格子の構成条件違反"""


class ClosureError(WorkbenchError):
    """格子外を参照する非零係数（格子の閉包違反）"""

    def __init__(self, message: str, row: int, coefficient: Optional[Fraction] = None):
        self.row = row
        self.coefficient = coefficient
        detail = f" 係数={format_rational(coefficient)}" if coefficient is not None else ""
        super().__init__(f"{message} (行 {row}{detail})")

    def to_witness(self) -> dict:
        witness = {"row": self.row}
        if self.coefficient is not None:
            witness["coefficient"] = format_rational(self.coefficient)
        return witness
