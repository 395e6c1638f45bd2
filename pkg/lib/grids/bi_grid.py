"""
Bannai-Ito 格子と反射写像
x_s の並びは切断条件（ケース）ごとに異なる
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import pandas as pd

from exact import RationalLike, format_rational, to_rational

from .errors import GridConstructionError

# ロガー設定
logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class OddRho:
    """N 奇数, 2(ρ1+ρ2) = -N-1"""
    name = "odd_rho"

    def label(self) -> str:
        return self.name

    def identity_holds(self, N: int, rho1, rho2, r1, r2) -> bool:
        return 2 * (rho1 + rho2) == -N - 1

    def identity_text(self) -> str:
        return "2(ρ1+ρ2) = -N-1"

    def coordinate(self, s: int, rho1, rho2, r1, r2) -> Fraction:
        return (-1) ** s * (Fraction(s, 2) + rho2 + QUARTER) - QUARTER

    def complete(self, N: int, rho1, rho2, r1, r2) -> Tuple[Fraction, ...]:
        """切断条件で決まるパラメータ (ρ1) を埋める"""
        return (-Fraction(N + 1, 2) - rho2, rho2, r1, r2)


@dataclass(frozen=True)
class OddR:
    """N 奇数, 2(r1+r2) = N+1"""
    name = "odd_r"

    def label(self) -> str:
        return self.name

    def identity_holds(self, N: int, rho1, rho2, r1, r2) -> bool:
        return 2 * (r1 + r2) == N + 1

    def identity_text(self) -> str:
        return "2(r1+r2) = N+1"

    def coordinate(self, s: int, rho1, rho2, r1, r2) -> Fraction:
        return (-1) ** s * (r1 - Fraction(s, 2) - QUARTER) - QUARTER

    def complete(self, N: int, rho1, rho2, r1, r2) -> Tuple[Fraction, ...]:
        return (rho1, rho2, r1, Fraction(N + 1, 2) - r1)


@dataclass(frozen=True)
class EvenRhoR:
    """
    N 偶数。relation='sum' は 2(r_i+ρ_j) = N+1、'difference' は 2(r_i-ρ_j) = N+1。
    格子は ρ_anchor を起点に x_s = (-1)^s (s/2 + ρ_anchor + 1/4) - 1/4
    """
    i: int = 1
    j: int = 1
    anchor: int = 1
    relation: str = "sum"
    name = "even"

    def __post_init__(self):
        if self.i not in (1, 2) or self.j not in (1, 2) or self.anchor not in (1, 2):
            raise GridConstructionError(f"i, j, anchor は 1 か 2: {self}")
        if self.relation not in ("sum", "difference"):
            raise GridConstructionError(f"relation は 'sum' か 'difference': {self.relation}")

    def label(self) -> str:
        return f"even(i={self.i},j={self.j},anchor={self.anchor},{self.relation})"

    def _r(self, r1, r2):
        return r1 if self.i == 1 else r2

    def _rho(self, index: int, rho1, rho2):
        return rho1 if index == 1 else rho2

    def identity_holds(self, N: int, rho1, rho2, r1, r2) -> bool:
        sign = 1 if self.relation == "sum" else -1
        return 2 * (self._r(r1, r2) + sign * self._rho(self.j, rho1, rho2)) == N + 1

    def identity_text(self) -> str:
        op = "+" if self.relation == "sum" else "-"
        return f"2(r{self.i}{op}ρ{self.j}) = N+1"

    def coordinate(self, s: int, rho1, rho2, r1, r2) -> Fraction:
        rho = self._rho(self.anchor, rho1, rho2)
        return (-1) ** s * (Fraction(s, 2) + rho + QUARTER) - QUARTER

    def complete(self, N: int, rho1, rho2, r1, r2) -> Tuple[Fraction, ...]:
        rho_j = self._rho(self.j, rho1, rho2)
        value = Fraction(N + 1, 2) - rho_j if self.relation == "sum" else Fraction(N + 1, 2) + rho_j
        return (rho1, rho2, value, r2) if self.i == 1 else (rho1, rho2, r1, value)


BICase = Union[OddRho, OddR, EvenRhoR]


def parse_case(name: str, i: int = 1, j: int = 1, anchor: int = 1, relation: str = "sum") -> BICase:
    """設定値からケースを生成"""
    if name == OddRho.name:
        return OddRho()
    if name == OddR.name:
        return OddR()
    if name == EvenRhoR.name:
        return EvenRhoR(i, j, anchor, relation)
    raise GridConstructionError(f"不明なケース: {name} (odd_rho / odd_r / even)")


def rho_factor(x: Fraction, rho1: Fraction, rho2: Fraction) -> Fraction:
    """(x-ρ1)(x-ρ2)"""
    return (x - rho1) * (x - rho2)


def r_factor(x: Fraction, r1: Fraction, r2: Fraction) -> Fraction:
    """(x-r1+1/2)(x-r2+1/2)"""
    return (x - r1 + HALF) * (x - r2 + HALF)


@dataclass(frozen=True)
class BIGrid:
    """Bannai-Ito 格子と R1, R2 の添字写像（格子外は None）"""
    N: int
    rho1: Fraction
    rho2: Fraction
    r1: Fraction
    r2: Fraction
    case: BICase
    x_values: Tuple[Fraction, ...]
    r1_map: Tuple[Optional[int], ...]
    r2_map: Tuple[Optional[int], ...]

    @property
    def size(self) -> int:
        return self.N + 1

    @property
    def coordinates(self) -> Tuple[Fraction, ...]:
        return self.x_values

    @property
    def params(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.rho1, self.rho2, self.r1, self.r2)

    def unpaired(self, reflection: int) -> Tuple[int, ...]:
        mapping = self.r1_map if reflection == 1 else self.r2_map
        return tuple(s for s, t in enumerate(mapping) if t is None)

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame({
            "index": list(range(self.size)),
            "coordinate": [format_rational(v) for v in self.x_values],
            "R1": [t if t is not None else "" for t in self.r1_map],
            "R2": [t if t is not None else "" for t in self.r2_map],
        })

    def to_csv(self) -> str:
        return self.to_dataframe()[["index", "coordinate"]].to_csv(index=False)


def _reflection_map(values: Tuple[Fraction, ...], image) -> Tuple[Optional[int], ...]:
    position: Dict[Fraction, int] = {v: s for s, v in enumerate(values)}
    return tuple(position.get(image(v)) for v in values)


def bi_grid(rho1: RationalLike, rho2: RationalLike, r1: RationalLike, r2: RationalLike,
            N: int, case: BICase) -> BIGrid:
    """
    Bannai-Ito 格子を構成

    Args:
        rho1, rho2, r1, r2: Bannai-Ito パラメータ
        N: 格子サイズ（N+1 点）
        case: 切断条件 (OddRho / OddR / EvenRhoR)

    Returns:
        反射写像つきの BIGrid

    Raises:
        GridConstructionError: 切断条件違反、点の重複、禁止点 0, -1/2
    """
    rho1, rho2, r1, r2 = (to_rational(v) for v in (rho1, rho2, r1, r2))
    if not isinstance(N, int) or N < 0:
        raise GridConstructionError(f"N は非負整数である必要があります: {N!r}")
    expected_parity = 0 if isinstance(case, EvenRhoR) else 1
    if N % 2 != expected_parity:
        raise GridConstructionError(f"ケース {case.label()} に対して N={N} の偶奇が合いません")
    if not case.identity_holds(N, rho1, rho2, r1, r2):
        raise GridConstructionError(f"切断条件 {case.identity_text()} が成り立ちません (N={N})")

    values = tuple(case.coordinate(s, rho1, rho2, r1, r2) for s in range(N + 1))
    if len(set(values)) != len(values):
        raise GridConstructionError(f"格子点が重複しています: {[format_rational(v) for v in values]}")
    for s, x in enumerate(values):
        if x == 0 or x == -HALF:
            raise GridConstructionError(f"禁止点 {format_rational(x)} が格子に含まれます (s={s})")

    r1_map = _reflection_map(values, lambda x: -x)
    r2_map = _reflection_map(values, lambda x: -x - 1)
    for name, mapping in (("R1", r1_map), ("R2", r2_map)):
        for s, t in enumerate(mapping):
            if t is not None and mapping[t] != s:
                raise GridConstructionError(f"{name} の写像が対合になっていません (s={s})")

    grid = BIGrid(N, rho1, rho2, r1, r2, case, values, r1_map, r2_map)
    if isinstance(case, OddRho):
        for s in grid.unpaired(1):
            if rho_factor(values[s], rho1, rho2) != 0:
                raise GridConstructionError(f"R1 の端点 s={s} で (x-ρ1)(x-ρ2) が零になりません")
    if isinstance(case, OddR):
        for s in grid.unpaired(2):
            if r_factor(values[s], r1, r2) != 0:
                raise GridConstructionError(f"R2 の端点 s={s} で (x-r1+1/2)(x-r2+1/2) が零になりません")
    logger.debug(f"Bannai-Ito格子構成: {case.label()}, N={N}")
    return grid
