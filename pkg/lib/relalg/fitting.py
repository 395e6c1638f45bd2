"""
構造定数の当てはめと中心性判定
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from checks import FAIL, ORACLE, PASS, CheckEntry
from exact import (NoSolution, RatMatrix, Solution, UnderdeterminedWitness,
                   commutator, format_rational, solve_exact)

from .evaluator import UNKNOWN, Assignment, affine_residual, evaluate
from .presentation import Presentation

# ロガー設定
logger = logging.getLogger(__name__)

SOLVED = "solved"
NO_SOLUTION = "no_solution"
UNDERDETERMINED = "underdetermined"


@dataclass
class FitResult:
    """当てはめ結果"""
    status: str
    unknowns: Tuple[str, ...]
    values: Dict[str, Fraction] = field(default_factory=dict)
    free_directions: List[Dict[str, Fraction]] = field(default_factory=list)
    witness: Optional[Dict[str, object]] = None
    residuals_zero: Dict[str, bool] = field(default_factory=dict)

    @property
    def solvable(self) -> bool:
        return self.status in (SOLVED, UNDERDETERMINED)

    @property
    def unique(self) -> bool:
        return self.status == SOLVED

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "status": self.status,
            "values": {k: format_rational(v) for k, v in self.values.items()},
        }
        if self.free_directions:
            data["free_directions"] = [{k: format_rational(v) for k, v in d.items() if v != 0}
                                       for d in self.free_directions]
        if self.witness is not None:
            data["witness"] = self.witness
        if self.residuals_zero:
            data["residuals_zero"] = dict(self.residuals_zero)
        return data


def fit_constants(pres: Presentation, asg: Assignment) -> FitResult:
    """
    UNKNOWN のスカラーを厳密な連立一次方程式として求める

    Args:
        pres: 未知スカラーについてアフィンな関係式の表示
        asg: 生成元の行列と、既知/未知のスカラー

    Returns:
        FitResult（一意解・不整合の証拠・自由方向のいずれか）
    """
    asg.check_against(pres)
    unknowns = tuple(name for name in pres.scalar_names if asg.scalars.get(name) is UNKNOWN)
    dim = asg.dim

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    origin: List[Tuple[str, int, int]] = []
    for rel in pres.relations:
        form = affine_residual(rel, asg)
        constant = form.constant_part()
        coefficients = [form.coefficient(u) for u in unknowns]
        for i in range(dim):
            for j in range(dim):
                row = [c[i, j] for c in coefficients]
                if not any(row) and constant[i, j] == 0:
                    continue
                rows.append(row)
                rhs.append(-constant[i, j])
                origin.append((rel.label, i, j))
    logger.debug(f"当てはめ: 未知数 {len(unknowns)}, 方程式 {len(rows)}")

    if not rows:
        return _finish(pres, asg, FitResult(UNDERDETERMINED if unknowns else SOLVED, unknowns,
                                            values={u: Fraction(0) for u in unknowns},
                                            free_directions=[_unit(unknowns, u) for u in unknowns]))
    if not unknowns:
        label, i, j = origin[0]
        return FitResult(NO_SOLUTION, unknowns,
                         witness={"relation": label, "row": i, "col": j,
                                  "residual": format_rational(-rhs[0])})

    result = solve_exact(rows, rhs)
    if isinstance(result, NoSolution):
        support = [k for k, c in enumerate(result.combination) if c != 0]
        label, i, j = origin[support[0]]
        witness = {"relation": label, "row": i, "col": j,
                   "residual": format_rational(result.residual),
                   "equations": len(support)}
        logger.info(f"当てはめ不能: {label} ({i},{j})")
        return FitResult(NO_SOLUTION, unknowns, witness=witness)
    if isinstance(result, Solution):
        fit = FitResult(SOLVED, unknowns, values=dict(zip(unknowns, result.values)))
    else:
        fit = FitResult(UNDERDETERMINED, unknowns,
                        values=dict(zip(unknowns, result.particular)),
                        free_directions=[dict(zip(unknowns, d)) for d in result.free_directions])
    return _finish(pres, asg, fit)


def _unit(unknowns: Sequence[str], name: str) -> Dict[str, Fraction]:
    return {u: Fraction(int(u == name)) for u in unknowns}


def _finish(pres: Presentation, asg: Assignment, fit: FitResult) -> FitResult:
    """当てはめ値を代入して残差が零になることを確かめる"""
    substituted = asg.with_scalars(fit.values)
    fit.residuals_zero = {rel.label: evaluate(rel, substituted).is_zero() for rel in pres.relations}
    return fit


def check_central(candidate: RatMatrix,
                  generators: Union[Mapping[str, RatMatrix], Sequence[RatMatrix]],
                  suite: str = "relalg", check: str = "central", anchor: str = "",
                  category: str = ORACLE) -> CheckEntry:
    """
    候補がすべての生成元と可換か判定

    Returns:
        合格、または非可換な生成元と非零成分を反例とする CheckEntry
    """
    if isinstance(generators, Mapping):
        named = list(generators.items())
    else:
        named = [(f"g{k + 1}", g) for k, g in enumerate(generators)]
    for name, generator in named:
        found = commutator(candidate, generator).first_nonzero()
        if found is not None:
            row, col, value = found
            return CheckEntry(suite, check, anchor, category, FAIL,
                              witness={"generator": name, "row": row, "col": col,
                                       "value": format_rational(value)})
    return CheckEntry(suite, check, anchor, category, PASS)
