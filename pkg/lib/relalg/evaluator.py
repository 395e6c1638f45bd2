"""
関係式の評価
未知スカラーについてアフィンな形 (定数部 + Σ 未知数 × 係数行列) で評価する
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

from exact import DimensionMismatchError, RatMatrix, WorkbenchError, anticommutator, commutator, to_rational

from .errors import NonlinearFitError, UndeclaredIdentifierError, UnknownScalarError
from .nodes import (Anticommutator, BinOp, Commutator, Group, Name, Neg, Node,
                    Number, Power, Relation, to_source)
from .presentation import IDENTITY_NAME, Presentation

# ロガー設定
logger = logging.getLogger(__name__)


class _Unknown:
    """値未定のスカラーを表す目印"""

    def __repr__(self) -> str:
        return "UNKNOWN"


UNKNOWN = _Unknown()

ScalarValue = Union[Fraction, _Unknown]


@dataclass(frozen=True)
class Assignment:
    """生成元 -> 行列、スカラー記号 -> 有理数（または UNKNOWN）"""
    matrices: Mapping[str, RatMatrix]
    scalars: Mapping[str, ScalarValue] = field(default_factory=dict)

    def __post_init__(self):
        if not self.matrices:
            raise WorkbenchError("生成元の行列が1つも割り当てられていません")
        dims = {name: m.dim for name, m in self.matrices.items()}
        first = next(iter(dims.values()))
        for name, dim in dims.items():
            if dim != first:
                raise DimensionMismatchError(first, dim, f"割り当て {name}")
        converted = {name: (v if v is UNKNOWN else to_rational(v)) for name, v in self.scalars.items()}
        object.__setattr__(self, "scalars", converted)
        object.__setattr__(self, "matrices", dict(self.matrices))

    @property
    def dim(self) -> int:
        return next(iter(self.matrices.values())).dim

    @property
    def unknowns(self) -> Tuple[str, ...]:
        return tuple(name for name, v in self.scalars.items() if v is UNKNOWN)

    def with_scalars(self, values: Mapping[str, ScalarValue]) -> "Assignment":
        merged = dict(self.scalars)
        merged.update(values)
        return Assignment(self.matrices, merged)

    def check_against(self, pres: Presentation) -> None:
        """表示の全生成元・全スカラーが割り当て済みか確認"""
        missing = [g for g in pres.generators if g not in self.matrices]
        missing += [s for s in pres.scalar_names if s not in self.scalars]
        if missing:
            raise WorkbenchError(f"割り当てが不足しています: {', '.join(missing)}")


class AffineForm:
    """定数部 (キー None) と未知数ごとの係数行列"""

    __slots__ = ("parts", "dim")

    def __init__(self, parts: Dict[Optional[str], RatMatrix], dim: int):
        self.parts = parts
        self.dim = dim

    @classmethod
    def constant(cls, matrix: RatMatrix) -> "AffineForm":
        return cls({None: matrix}, matrix.dim)

    @classmethod
    def unknown(cls, name: str, dim: int) -> "AffineForm":
        return cls({name: RatMatrix.identity(dim)}, dim)

    @property
    def unknown_names(self) -> Tuple[str, ...]:
        return tuple(k for k in self.parts if k is not None)

    def constant_part(self) -> RatMatrix:
        return self.parts.get(None, RatMatrix.zeros(self.dim))

    def coefficient(self, name: str) -> RatMatrix:
        return self.parts.get(name, RatMatrix.zeros(self.dim))

    def combine(self, other: "AffineForm", sign: int) -> "AffineForm":
        parts = dict(self.parts)
        for key, matrix in other.parts.items():
            term = matrix if sign > 0 else -matrix
            parts[key] = parts[key] + term if key in parts else term
        return AffineForm(parts, self.dim)

    def scaled(self, factor: Fraction) -> "AffineForm":
        return AffineForm({k: m * factor for k, m in self.parts.items()}, self.dim)

    def bilinear(self, other: "AffineForm", op, context: str) -> "AffineForm":
        """行列積型の演算。両辺が未知数を含む場合は非線形"""
        if self.unknown_names and other.unknown_names:
            raise NonlinearFitError(f"未知スカラーの積が現れます: {context}")
        parts: Dict[Optional[str], RatMatrix] = {}
        for key_a, a in self.parts.items():
            for key_b, b in other.parts.items():
                key = key_a if key_a is not None else key_b
                value = op(a, b)
                parts[key] = parts[key] + value if key in parts else value
        return AffineForm(parts, self.dim)


class Evaluator:
    """構文木を割り当てのもとでアフィン形に評価する"""

    def __init__(self, asg: Assignment, context: str = ""):
        self.asg = asg
        self.context = context

    def visit(self, node: Node) -> AffineForm:
        dim = self.asg.dim
        if isinstance(node, Number):
            return AffineForm.constant(RatMatrix.scalar(dim, node.value))
        if isinstance(node, Name):
            return self._lookup(node)
        if isinstance(node, Neg):
            return self.visit(node.operand).scaled(Fraction(-1))
        if isinstance(node, Group):
            return self.visit(node.inner)
        if isinstance(node, BinOp):
            left, right = self.visit(node.left), self.visit(node.right)
            if node.op == "+":
                return left.combine(right, 1)
            if node.op == "-":
                return left.combine(right, -1)
            return left.bilinear(right, lambda a, b: a @ b, self._where(node))
        if isinstance(node, Power):
            base = self.visit(node.base)
            if node.exponent == 0:
                return AffineForm.constant(RatMatrix.identity(dim))
            if base.unknown_names and node.exponent > 1:
                raise NonlinearFitError(f"未知スカラーのべき乗が現れます: {self._where(node)}")
            result = base
            for _ in range(node.exponent - 1):
                result = result.bilinear(base, lambda a, b: a @ b, self._where(node))
            return result
        if isinstance(node, Commutator):
            return self.visit(node.left).bilinear(self.visit(node.right), commutator, self._where(node))
        if isinstance(node, Anticommutator):
            return self.visit(node.left).bilinear(self.visit(node.right), anticommutator, self._where(node))
        if isinstance(node, Relation):
            return self.visit(node.lhs).combine(self.visit(node.rhs), -1)
        raise TypeError(f"未対応のノード: {type(node).__name__}")

    def _lookup(self, node: Name) -> AffineForm:
        name = node.ident
        if name in self.asg.matrices:
            return AffineForm.constant(self.asg.matrices[name])
        if name in self.asg.scalars:
            value = self.asg.scalars[name]
            if value is UNKNOWN:
                return AffineForm.unknown(name, self.asg.dim)
            return AffineForm.constant(RatMatrix.scalar(self.asg.dim, value))
        if name == IDENTITY_NAME:
            return AffineForm.constant(RatMatrix.identity(self.asg.dim))
        line, column = node.position or (0, 0)
        raise UndeclaredIdentifierError(f"割り当てのない識別子 '{name}'", line, column)

    def _where(self, node: Node) -> str:
        position = f" ({node.position[0]}:{node.position[1]})" if node.position else ""
        return f"{self.context}{position} {to_source(node)}"


def affine_residual(rel: Relation, asg: Assignment) -> AffineForm:
    """lhs - rhs をアフィン形で返す"""
    return Evaluator(asg, context=rel.label).visit(rel)


def evaluate(rel: Relation, asg: Assignment) -> RatMatrix:
    """
    関係式の残差 lhs - rhs を計算（零行列 ⇔ 関係式が成立）

    Args:
        rel: 関係式
        asg: 未知スカラーを含まない割り当て

    Returns:
        残差行列
    """
    unknowns = [name for name in asg.unknowns
                if any(isinstance(n, Name) and n.ident == name for n in rel.walk())]
    if unknowns:
        raise UnknownScalarError(f"{rel.label}: 値が未定のスカラー {', '.join(unknowns)}")
    return affine_residual(rel, asg).constant_part()


def evaluate_expression(expr: Node, asg: Assignment) -> RatMatrix:
    """単独の式を行列として評価"""
    form = Evaluator(asg).visit(expr)
    if form.unknown_names:
        raise UnknownScalarError(f"値が未定のスカラー {', '.join(form.unknown_names)}")
    return form.constant_part()


def evaluate_presentation(pres: Presentation, asg: Assignment) -> Dict[str, RatMatrix]:
    """全関係式の残差（ラベル -> 行列）"""
    asg.check_against(pres)
    return {rel.label: evaluate(rel, asg) for rel in pres.relations}
