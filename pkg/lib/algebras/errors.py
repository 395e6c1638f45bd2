"""
代数モジュールの例外
"""

from exact import WorkbenchError


class PreconditionError(WorkbenchError):
    """パラメータが構成・検証の前提条件を満たさない"""
