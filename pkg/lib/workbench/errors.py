"""
ワークベンチ実行系の例外
"""

from typing import Optional

from exact import WorkbenchError


class ConfigError(WorkbenchError):
    """設定ファイル・コマンドライン指定の誤り"""

    def __init__(self, message: str, line: Optional[int] = None, source: str = ""):
        self.line = line
        self.source = source
        where = ""
        if line is not None:
            where = f"{source}:{line}: " if source else f"{line}行目: "
        super().__init__(f"{where}{message}")


class SamplingError(WorkbenchError):
    """乱数サンプリングが上限回数内に条件を満たすパラメータを得られない"""
