"""
検証結果レポート
各検証項目を (スイート, 項目名, 出典, 区分, 判定, 反例) として記録する
"""

import json
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional

from exact import RatMatrix, format_rational

# ロガー設定
logger = logging.getLogger(__name__)

# 区分
STRUCTURAL = "structural"
ORACLE = "oracle"
PAPER_CLAIM = "paper-claim"
CATEGORIES = (STRUCTURAL, ORACLE, PAPER_CLAIM)

# 判定
PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
VERDICTS = (PASS, FAIL, SKIPPED)


@dataclass(frozen=True)
class CheckEntry:
    """検証1項目"""
    suite: str
    check: str
    anchor: str
    category: str
    verdict: str
    trial: int = 0
    witness: Optional[Dict[str, Any]] = None
    note: str = ""

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise ValueError(f"不明な区分: {self.category}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"不明な判定: {self.verdict}")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def sort_key(self):
        return (self.suite, self.check, self.trial)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "suite": self.suite,
            "check": self.check,
            "anchor": self.anchor,
            "category": self.category,
            "verdict": self.verdict,
            "trial": self.trial,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class CheckReport:
    """検証項目の集合と当てはめ定数"""
    entries: List[CheckEntry] = field(default_factory=list)
    fitted_constants: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def add(self, entry: CheckEntry) -> CheckEntry:
        self.entries.append(entry)
        if entry.verdict == FAIL:
            if entry.category == PAPER_CLAIM:
                logger.warning(f"記載式との不一致: {entry.suite}/{entry.check} (trial {entry.trial})")
            else:
                logger.error(f"検証失敗: {entry.suite}/{entry.check} (trial {entry.trial})")
        return entry

    def extend(self, entries: Iterable[CheckEntry]) -> None:
        for entry in entries:
            self.add(entry)

    def merge(self, other: "CheckReport", trial: int = 0, key_prefix: str = "") -> None:
        """他レポートの項目を trial 番号付きで取り込む"""
        for entry in other.entries:
            self.entries.append(replace(entry, trial=trial))
        for key, values in other.fitted_constants.items():
            self.fitted_constants[f"{key_prefix}{key}"] = values

    def record_constants(self, key: str, values: Mapping[str, Any]) -> None:
        self.fitted_constants[key] = {
            name: (format_rational(v) if isinstance(v, (Fraction, int)) else v)
            for name, v in values.items()
        }

    def find(self, check: str, suite: Optional[str] = None) -> List[CheckEntry]:
        return [e for e in self.entries if e.check == check and (suite is None or e.suite == suite)]

    def sorted_entries(self) -> List[CheckEntry]:
        return sorted(self.entries, key=CheckEntry.sort_key)

    def summary(self) -> Dict[str, int]:
        counts = {verdict: 0 for verdict in VERDICTS}
        for category in CATEGORIES:
            counts[f"{category}_fail"] = 0
        for entry in self.entries:
            counts[entry.verdict] += 1
            if entry.verdict == FAIL:
                counts[f"{entry.category}_fail"] += 1
        counts["total"] = len(self.entries)
        return counts

    def exit_status(self) -> int:
        """0: 全合格 / 1: 構造・オラクル失敗あり / 2: 記載式の不一致のみ"""
        summary = self.summary()
        if summary[f"{STRUCTURAL}_fail"] or summary[f"{ORACLE}_fail"]:
            return 1
        if summary[f"{PAPER_CLAIM}_fail"]:
            return 2
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "summary": self.summary(),
            "entries": [e.to_dict() for e in self.sorted_entries()],
            "fitted_constants": self.fitted_constants,
        }

    def to_json(self, extra: Optional[Dict[str, Any]] = None) -> str:
        data = self.to_dict()
        if extra:
            data.update(extra)
        return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True)


def matrix_witness(matrix: RatMatrix) -> Optional[Dict[str, Any]]:
    """最初の非零成分を反例として返す（零行列なら None）"""
    found = matrix.first_nonzero()
    if found is None:
        return None
    row, col, value = found
    return {"row": row, "col": col, "value": format_rational(value)}


def residual_entry(suite: str, check: str, anchor: str, category: str,
                   residual: RatMatrix) -> CheckEntry:
    """残差行列が零なら合格、非零なら最初の非零成分を反例とする"""
    witness = matrix_witness(residual)
    return CheckEntry(suite, check, anchor, category, PASS if witness is None else FAIL,
                      witness=witness)


def equality_entry(suite: str, check: str, anchor: str, category: str,
                   expected: RatMatrix, actual: RatMatrix) -> CheckEntry:
    return residual_entry(suite, check, anchor, category, actual - expected)


def value_entry(suite: str, check: str, anchor: str, category: str,
                claimed: Any, observed: Any) -> CheckEntry:
    """スカラー値（または値の辞書）の比較。不一致時は両方の値を残す"""
    verdict = PASS if claimed == observed else FAIL
    witness = None
    if verdict == FAIL:
        witness = {"claimed": _to_text(claimed), "observed": _to_text(observed)}
    return CheckEntry(suite, check, anchor, category, verdict, witness=witness)


def skipped_entry(suite: str, check: str, anchor: str, category: str, note: str) -> CheckEntry:
    logger.warning(f"検証スキップ: {suite}/{check} - {note}")
    return CheckEntry(suite, check, anchor, category, SKIPPED, note=note)


def _to_text(value: Any) -> Any:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, Mapping):
        return {k: _to_text(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_text(v) for v in value]
    if value is None:
        return None
    return str(value)
