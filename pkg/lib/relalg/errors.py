"""
関係式DSLの例外
"""

from exact import WorkbenchError


class ParseError(WorkbenchError):
    """字句・構文エラー（行:列 つき）"""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.detail = message
        super().__init__(f"{line}:{column}: {message}")


class UndeclaredIdentifierError(ParseError):
    """未宣言の識別子"""


class UnknownScalarError(WorkbenchError):
    """値が未定（Unknown）のスカラーを評価しようとした"""


class NonlinearFitError(WorkbenchError):
    """未知スカラーについて非線形な関係式"""
