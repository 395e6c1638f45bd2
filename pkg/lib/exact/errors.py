"""
ワークベンチ共通例外
"""


class WorkbenchError(Exception):
    """ワークベンチ全体の基底例外"""


class DimensionMismatchError(WorkbenchError):
    """行列・ベクトルの次元不一致"""

    def __init__(self, left: int, right: int, operation: str = ""):
        self.left = left
        self.right = right
        label = f"{operation}: " if operation else ""
        super().__init__(f"{label}次元不一致 ({left} と {right})")
