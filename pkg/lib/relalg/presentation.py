"""
代数の表示（生成元・スカラー記号・関係式）
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from .nodes import Relation, to_source

# 恒等元として予約された名前
IDENTITY_NAME = "I"


@dataclass(frozen=True)
class ScalarSymbol:
    """スカラー記号。central=True は単位元の定数倍として現れる中心元"""
    name: str
    central: bool = False


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    scalar_symbols: Tuple[ScalarSymbol, ...]
    relations: Tuple[Relation, ...]

    @property
    def scalar_names(self) -> Tuple[str, ...]:
        return tuple(s.name for s in self.scalar_symbols)

    def relation(self, label: str) -> Relation:
        for rel in self.relations:
            if rel.label == label:
                return rel
        raise KeyError(f"関係式が見つかりません: {label}")

    def relation_labels(self) -> Tuple[str, ...]:
        return tuple(rel.label for rel in self.relations)

    def identifiers(self) -> Dict[str, str]:
        """名前 -> 'generator' / 'scalar' / 'central'"""
        table = {g: "generator" for g in self.generators}
        for s in self.scalar_symbols:
            table[s.name] = "central" if s.central else "scalar"
        return table

    def to_source(self) -> str:
        """表示全体をDSLテキストに戻す"""
        free = [s.name for s in self.scalar_symbols if not s.central]
        central = [s.name for s in self.scalar_symbols if s.central]
        lines = [f"gens {' '.join(self.generators)};", f"scalars {' '.join(free)};"]
        if central:
            lines.append(f"central {' '.join(central)};")
        for rel in self.relations:
            lines.append(f"{rel.label}: {to_source(rel)}")
        return "\n".join(lines) + "\n"
