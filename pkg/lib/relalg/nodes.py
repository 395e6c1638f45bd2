"""
関係式の構文木ノード
位置情報 (行, 列) は構造比較に含めない
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from exact import format_rational

Position = Tuple[int, int]


@dataclass(frozen=True)
class Node:
    """構文木ノードの基底"""

    def children(self) -> Tuple["Node", ...]:
        return ()

    def walk(self) -> Iterator["Node"]:
        yield self
        for child in self.children():
            yield from child.walk()

    def pformat(self, indent: int = 0) -> str:
        """字下げ付きの木表示（デバッグ用）"""
        pad = "  " * indent
        head = f"{pad}{type(self).__name__}{self._label()}"
        lines = [head] + [child.pformat(indent + 1) for child in self.children()]
        return "\n".join(lines)

    def _label(self) -> str:
        return ""


@dataclass(frozen=True)
class Number(Node):
    value: Fraction
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def _label(self) -> str:
        return f" {format_rational(self.value)}"


@dataclass(frozen=True)
class Name(Node):
    ident: str
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def _label(self) -> str:
        return f" {self.ident}"


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class BinOp(Node):
    """op は '+', '-', '*' のいずれか（'*' は並置も含む）"""
    op: str
    left: Node
    right: Node
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)

    def _label(self) -> str:
        return f" {self.op}"


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.base,)

    def _label(self) -> str:
        return f" ^{self.exponent}"


@dataclass(frozen=True)
class Commutator(Node):
    left: Node
    right: Node
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Anticommutator(Node):
    left: Node
    right: Node
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Group(Node):
    inner: Node
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Relation(Node):
    """lhs = rhs"""
    lhs: Node
    rhs: Node
    label: str = ""
    position: Optional[Position] = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.lhs, self.rhs)

    def _label(self) -> str:
        return f" {self.label}" if self.label else ""


def to_source(node: Node) -> str:
    """構文木をDSLテキストに戻す（再解析で同一構造になる形）"""
    if isinstance(node, Number):
        return format_rational(node.value)
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Neg):
        return f"-{to_source(node.operand)}"
    if isinstance(node, BinOp):
        return f"{to_source(node.left)} {node.op} {to_source(node.right)}"
    if isinstance(node, Power):
        return f"{to_source(node.base)}^{node.exponent}"
    if isinstance(node, Commutator):
        return f"[{to_source(node.left)}, {to_source(node.right)}]"
    if isinstance(node, Anticommutator):
        return f"{{{to_source(node.left)}, {to_source(node.right)}}}"
    if isinstance(node, Group):
        return f"({to_source(node.inner)})"
    if isinstance(node, Relation):
        return f"{to_source(node.lhs)} = {to_source(node.rhs)}"
    raise TypeError(f"未対応のノード: {type(node).__name__}")
