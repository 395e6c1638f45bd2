"""
関係式DSLの字句解析・構文解析（再帰下降）

文法:
    relation := expr '=' expr
    expr     := ['-'] term (('+'|'-') term)*
    term     := factor ('*'? factor)*
    factor   := atom ('^' uint)?
    atom     := rational | name | '[' expr ',' expr ']' | '{' expr ',' expr '}' | '(' expr ')'
ヘッダ行 `gens ...;` `scalars ...;` `central ...;` で名前を宣言する。
関係式は ';' または改行で区切り、先頭に `label:` を付けられる。
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .errors import ParseError, UndeclaredIdentifierError
from .nodes import (Anticommutator, BinOp, Commutator, Group, Name, Neg, Node,
                    Number, Power, Relation)
from .presentation import IDENTITY_NAME, Presentation, ScalarSymbol

# ロガー設定
logger = logging.getLogger(__name__)

KEYWORDS = ("gens", "scalars", "central")

_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^=,;:\[\]{}()])
""", re.VERBOSE)

_OPENERS = "([{"
_CLOSERS = ")]}"
# 直後の改行を継続行とみなすトークン
_CONTINUATION = set("+-*^=,([{:")
_ATOM_START = set("[{(")


@dataclass(frozen=True)
class Token:
    kind: str  # number / name / op / newline / eof
    text: str
    line: int
    column: int


def tokenize(source: str) -> List[Token]:
    """ソースをトークン列に分割"""
    tokens: List[Token] = []
    line, line_start, pos, depth = 1, 0, 0, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise ParseError(f"不正な文字 '{source[pos]}'", line, column)
        kind = match.lastgroup
        text = match.group()
        if kind == "newline":
            previous = tokens[-1] if tokens else None
            if (depth == 0 and previous is not None and previous.kind != "newline"
                    and not (previous.kind == "op" and previous.text in _CONTINUATION)):
                tokens.append(Token("newline", "\n", line, column))
            line += 1
            line_start = match.end()
        elif kind in ("number", "name", "op"):
            if kind == "op" and text in _OPENERS:
                depth += 1
            elif kind == "op" and text in _CLOSERS:
                depth = max(depth - 1, 0)
            tokens.append(Token(kind, text, line, column))
        pos = match.end()
    if tokens and tokens[-1].kind == "newline":
        tokens.pop()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Parser:
    """トークン列からの再帰下降構文解析器"""

    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.index = 0

    # ---- トークン操作 ----
    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.index += 1
        return token

    def _is_op(self, text: str) -> bool:
        return self.current.kind == "op" and self.current.text == text

    def _expect_op(self, text: str) -> Token:
        if not self._is_op(text):
            raise self._error(f"'{text}'")
        return self._advance()

    def _error(self, expected: str) -> ParseError:
        token = self.current
        found = "入力終端" if token.kind == "eof" else ("改行" if token.kind == "newline" else f"'{token.text}'")
        return ParseError(f"{expected} が必要ですが {found} があります", token.line, token.column)

    # ---- 文 ----
    def parse_program(self) -> Tuple[List[str], List[ScalarSymbol], List[Relation]]:
        generators: List[str] = []
        scalars: List[ScalarSymbol] = []
        relations: List[Relation] = []
        while True:
            self._skip_separators()
            token = self.current
            if token.kind == "eof":
                break
            if token.kind == "name" and token.text in KEYWORDS:
                self._advance()
                names = self._parse_name_list()
                if token.text == "gens":
                    generators.extend(names)
                else:
                    scalars.extend(ScalarSymbol(n, central=(token.text == "central")) for n in names)
            else:
                relations.append(self._parse_relation(len(relations)))
            if self.current.kind not in ("eof", "newline") and not self._is_op(";"):
                raise self._error("';' または改行")
        return generators, scalars, relations

    def _skip_separators(self) -> None:
        while self.current.kind == "newline" or self._is_op(";"):
            self._advance()

    def _parse_name_list(self) -> List[str]:
        names = []
        while self.current.kind == "name":
            names.append(self._advance().text)
        return names

    def _parse_relation(self, index: int) -> Relation:
        start = self.current
        label = ""
        if start.kind == "name" and self._peek().kind == "op" and self._peek().text == ":":
            label = self._advance().text
            self._advance()
        lhs = self.parse_expr()
        self._expect_op("=")
        rhs = self.parse_expr()
        return Relation(lhs, rhs, label or f"r{index + 1}", position=(start.line, start.column))

    # ---- 式 ----
    def parse_expr(self) -> Node:
        start = self.current
        if self._is_op("-"):
            self._advance()
            node: Node = Neg(self.parse_term(), position=(start.line, start.column))
        else:
            node = self.parse_term()
        while self._is_op("+") or self._is_op("-"):
            op = self._advance()
            node = BinOp(op.text, node, self.parse_term(), position=(op.line, op.column))
        return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while True:
            if self._is_op("*"):
                op = self._advance()
                node = BinOp("*", node, self.parse_factor(), position=(op.line, op.column))
            elif self._starts_atom():
                token = self.current
                node = BinOp("*", node, self.parse_factor(), position=(token.line, token.column))
            else:
                return node

    def _starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("number", "name") or (token.kind == "op" and token.text in _ATOM_START)

    def parse_factor(self) -> Node:
        base = self.parse_atom()
        if self._is_op("^"):
            caret = self._advance()
            if self.current.kind != "number" or "/" in self.current.text:
                raise self._error("非負整数の指数")
            exponent = int(self._advance().text)
            return Power(base, exponent, position=(caret.line, caret.column))
        return base

    def parse_atom(self) -> Node:
        token = self.current
        position = (token.line, token.column)
        if token.kind == "number":
            self._advance()
            numerator, _, denominator = token.text.partition("/")
            if denominator and int(denominator) == 0:
                raise ParseError("分母が0です", token.line, token.column)
            value = Fraction(int(numerator), int(denominator)) if denominator else Fraction(int(numerator))
            return Number(value, position=position)
        if token.kind == "name":
            if token.text in KEYWORDS:
                raise self._error("式")
            self._advance()
            return Name(token.text, position=position)
        if self._is_op("["):
            self._advance()
            left = self.parse_expr()
            self._expect_op(",")
            right = self.parse_expr()
            self._expect_op("]")
            return Commutator(left, right, position=position)
        if self._is_op("{"):
            self._advance()
            left = self.parse_expr()
            self._expect_op(",")
            right = self.parse_expr()
            self._expect_op("}")
            return Anticommutator(left, right, position=position)
        if self._is_op("("):
            self._advance()
            inner = self.parse_expr()
            self._expect_op(")")
            return Group(inner, position=position)
        raise self._error("数・名前・'['・'{'・'('")


def parse(source: str) -> Presentation:
    """
    DSLテキストを解析して Presentation を返す

    Args:
        source: ヘッダ行と関係式を含むテキスト

    Returns:
        位置情報つき構文木を持つ Presentation
    """
    generators, scalars, relations = Parser(source).parse_program()
    declared = _check_declarations(generators, [s.name for s in scalars])
    labels: Set[str] = set()
    for rel in relations:
        if rel.label in labels:
            line, column = rel.position or (0, 0)
            raise ParseError(f"関係式ラベルが重複しています: {rel.label}", line, column)
        labels.add(rel.label)
        _check_identifiers(rel, declared)
    logger.debug(f"DSL解析完了: 生成元 {len(generators)}, スカラー {len(scalars)}, 関係式 {len(relations)}")
    return Presentation(tuple(generators), tuple(scalars), tuple(relations))


def parse_expression(source: str, generators: Sequence[str] = (),
                     scalars: Sequence[str] = ()) -> Node:
    """単独の式を解析（元の定義式の記述用）"""
    parser = Parser(source)
    while parser.current.kind == "newline":
        parser._advance()
    node = parser.parse_expr()
    while parser.current.kind == "newline":
        parser._advance()
    if parser.current.kind != "eof":
        raise parser._error("入力終端")
    declared = _check_declarations(list(generators), list(scalars))
    _check_identifiers(node, declared)
    return node


def _check_declarations(generators: Sequence[str], scalars: Sequence[str]) -> Set[str]:
    seen: Set[str] = set()
    for name in list(generators) + list(scalars):
        if name == IDENTITY_NAME:
            raise ParseError(f"'{IDENTITY_NAME}' は恒等元として予約されています", 0, 0)
        if name in seen:
            raise ParseError(f"名前が重複して宣言されています: {name}", 0, 0)
        seen.add(name)
    return seen | {IDENTITY_NAME}


def _check_identifiers(node: Node, declared: Iterable[str]) -> None:
    declared = set(declared)
    for child in node.walk():
        if isinstance(child, Name) and child.ident not in declared:
            line, column = child.position or (0, 0)
            raise UndeclaredIdentifierError(f"未宣言の識別子 '{child.ident}'", line, column)
