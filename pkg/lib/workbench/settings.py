"""
ワークベンチ設定ファイルの読み込み
`[section]` 見出しと `key = value` 行、`#` 以降はコメント
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

from algebras import (FREE_NAMES, TRUNCATIONS, BIParams, HeunRacahParams, PreconditionError,
                      RacahParams, TauParams, complete_bi_parameters, complete_racah_params)
from exact import WorkbenchError, parse_rational
from grids import GridConstructionError, bi_grid, parse_case, racah_grid

from .errors import ConfigError

# ロガー設定
logger = logging.getLogger(__name__)

SUITE_KEYS = ("racah", "heun_racah", "bannai_ito", "heun_bi", "upsilon")

TAU_KEYS = tuple(f"tau{k}" for k in range(5))
TAU_HR_KEYS = tuple(f"tau_hr_{k}" for k in range(5))
TAU_HB_KEYS = tuple(f"tau_hb_{k}" for k in range(5))

RACAH_KEYS = ("alpha", "beta", "gamma", "delta")
BI_KEYS = ("rho1", "rho2", "r1", "r2")


def _rational(text: str) -> Fraction:
    return parse_rational(text)


def _natural(text: str) -> int:
    value = int(text.strip())
    if value < 0:
        raise ValueError(f"非負整数ではありません: {text}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise ValueError("1 以上である必要があります")
    return value


def _choice(*options: str) -> Callable[[str], str]:
    def parse(text: str) -> str:
        value = text.strip()
        if value not in options:
            raise ValueError(f"'{value}' は {' / '.join(options)} のいずれでもありません")
        return value
    return parse


def _index(text: str) -> int:
    value = int(text.strip())
    if value not in (1, 2):
        raise ValueError("1 か 2 を指定してください")
    return value


def _flag(text: str) -> bool:
    value = text.strip().lower()
    if value in ("yes", "true", "on", "1"):
        return True
    if value in ("no", "false", "off", "0"):
        return False
    raise ValueError(f"yes / no を指定してください: {text}")


SECTIONS: Dict[str, Dict[str, Callable[[str], Any]]] = {
    "racah": {
        **{key: _rational for key in RACAH_KEYS},
        "N": _natural,
        "truncation": _choice(*TRUNCATIONS),
    },
    "bannai_ito": {
        **{key: _rational for key in BI_KEYS},
        "N": _natural,
        "case": _choice("odd_rho", "odd_r", "even"),
        "i": _index,
        "j": _index,
        "anchor": _index,
        "relation": _choice("sum", "difference"),
    },
    "heun_racah": {key: _rational for key in FREE_NAMES},
    "tau": {key: _rational for key in TAU_KEYS},
    "upsilon": {
        **{key: _rational for key in TAU_HR_KEYS + TAU_HB_KEYS},
        "a1": _rational,
        "a2": _rational,
        "c1": _rational,
        "c2": _rational,
    },
    "sampling": {
        "seed": _natural,
        "trials": _natural,
        "numerator_bound": _positive,
        "denominator_bound": _positive,
        "n_min": _natural,
        "n_max": _natural,
        "max_attempts": _positive,
    },
    "suites": {key: _flag for key in SUITE_KEYS},
}


@dataclass(frozen=True)
class SamplingSettings:
    """乱数試行の設定"""
    seed: int = 0
    trials: int = 0
    numerator_bound: int = 12
    denominator_bound: int = 6
    n_min: int = 2
    n_max: int = 6
    max_attempts: int = 200


@dataclass(frozen=True)
class UpsilonSettings:
    tau_hr: TauParams
    tau_hb: TauParams
    a1: Fraction = Fraction(-2)
    a2: Fraction = Fraction(-2)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)


@dataclass
class WorkbenchSettings:
    """
    解析済みの設定

    values は節 -> キー -> 型変換済みの値、lines は (節, キー) -> 行番号
    """
    values: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    lines: Dict[Tuple[str, str], int] = field(default_factory=dict)
    source: str = ""

    def has_section(self, section: str) -> bool:
        return bool(self.values.get(section))

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.values.get(section, {}).get(key, default)

    def _error(self, message: str, section: str, key: Optional[str] = None) -> ConfigError:
        line = self.lines.get((section, key)) if key else None
        if line is None:
            line = self.lines.get((section, ""))
        return ConfigError(f"[{section}] {message}", line, self.source)

    def _require(self, section: str, key: str) -> Any:
        value = self.get(section, key)
        if value is None:
            raise self._error(f"{key} が指定されていません", section)
        return value

    def racah_params(self) -> Optional[RacahParams]:
        """
        Racah パラメータ（[racah] がなければ None）

        4つ全部を指定するか、切断条件で決まる1つを省略する

        Raises:
            ConfigError: 欠落・切断条件違反・格子の不変条件違反
        """
        if not self.has_section("racah"):
            return None
        N = self._require("racah", "N")
        truncation = self.get("racah", "truncation", TRUNCATIONS[0])
        given = {key: self.get("racah", key) for key in RACAH_KEYS if self.get("racah", key) is not None}
        try:
            if len(given) == 4:
                params = RacahParams(given["alpha"], given["beta"], given["gamma"], given["delta"], N, truncation)
            elif len(given) == 3:
                params = complete_racah_params(given, N, truncation)
            else:
                missing = [key for key in RACAH_KEYS if key not in given]
                raise self._error(f"パラメータが不足しています: {', '.join(missing)}", "racah")
            racah_grid(params.gamma, params.delta, params.N)
        except (PreconditionError, GridConstructionError, KeyError) as e:
            raise self._error(f"Racah パラメータが前提条件を満たしません: {e}", "racah") from e
        return params

    def bi_case(self):
        try:
            return parse_case(self.get("bannai_ito", "case", "odd_rho"),
                              self.get("bannai_ito", "i", 1), self.get("bannai_ito", "j", 1),
                              self.get("bannai_ito", "anchor", 1), self.get("bannai_ito", "relation", "sum"))
        except GridConstructionError as e:
            raise self._error(str(e), "bannai_ito", "case") from e

    def bi_params(self) -> Optional[BIParams]:
        """
        Bannai-Ito パラメータ（[bannai_ito] がなければ None）

        切断条件で決まる値は上書きされる

        Raises:
            ConfigError: 欠落・格子の構成条件違反
        """
        if not self.has_section("bannai_ito"):
            return None
        values = [self._require("bannai_ito", key) for key in BI_KEYS]
        N = self._require("bannai_ito", "N")
        case = self.bi_case()
        try:
            params = complete_bi_parameters(*values, N=N, case=case)
            bi_grid(params.rho1, params.rho2, params.r1, params.r2, params.N, params.case)
        except GridConstructionError as e:
            raise self._error(f"Bannai-Ito パラメータが前提条件を満たしません: {e}", "bannai_ito") from e
        return params

    def heun_racah_free(self) -> Optional[HeunRacahParams]:
        if not self.has_section("heun_racah"):
            return None
        return HeunRacahParams(**{key: self.get("heun_racah", key, Fraction(0)) for key in FREE_NAMES})

    def tau(self) -> TauParams:
        """[tau] 未指定なら τ4 = 1（W = Y）"""
        if not self.has_section("tau"):
            return TauParams(tau4=Fraction(1))
        return TauParams.from_sequence([self.get("tau", key, Fraction(0)) for key in TAU_KEYS])

    def upsilon(self) -> UpsilonSettings:
        def vector(keys: Tuple[str, ...]) -> TauParams:
            if not any(self.get("upsilon", key) is not None for key in keys):
                return self.tau()
            return TauParams.from_sequence([self.get("upsilon", key, Fraction(0)) for key in keys])

        settings = UpsilonSettings(
            tau_hr=vector(TAU_HR_KEYS),
            tau_hb=vector(TAU_HB_KEYS),
            a1=self.get("upsilon", "a1", Fraction(-2)),
            a2=self.get("upsilon", "a2", Fraction(-2)),
            c1=self.get("upsilon", "c1", Fraction(0)),
            c2=self.get("upsilon", "c2", Fraction(0)),
        )
        for key in ("a1", "a2"):
            if getattr(settings, key) == 0:
                raise self._error(f"{key} は 0 以外である必要があります", "upsilon", key)
        return settings

    def sampling(self) -> SamplingSettings:
        defaults = SamplingSettings()
        values = {key: self.get("sampling", key, getattr(defaults, key)) for key in SECTIONS["sampling"]}
        settings = SamplingSettings(**values)
        if settings.n_min > settings.n_max:
            raise self._error(f"n_min ({settings.n_min}) が n_max ({settings.n_max}) を超えています",
                              "sampling", "n_min")
        return settings

    def suites(self) -> Dict[str, bool]:
        """[suites] 未指定の節は、パラメータ節があるかどうかで決める"""
        selected = {}
        for key in SUITE_KEYS:
            flag = self.get("suites", key)
            if flag is None:
                needs = "racah" if key in ("racah", "heun_racah") else "bannai_ito"
                flag = self.has_section(needs)
            selected[key] = flag
        return selected

    def with_sampling(self, trials: Optional[int] = None, seed: Optional[int] = None) -> "WorkbenchSettings":
        """コマンドライン指定で試行回数・シードを上書きした写し"""
        values = {section: dict(entries) for section, entries in self.values.items()}
        sampling = values.setdefault("sampling", {})
        if trials is not None:
            sampling["trials"] = trials
        if seed is not None:
            sampling["seed"] = seed
        return WorkbenchSettings(values, dict(self.lines), self.source)


def parse_settings(text: str, source: str = "") -> WorkbenchSettings:
    """
    設定テキストを解析

    Args:
        text: 設定ファイルの内容
        source: エラーメッセージ用のファイル名

    Returns:
        WorkbenchSettings

    Raises:
        ConfigError: 不明な節・キー、重複キー、値の形式誤り（行番号つき）
    """
    settings = WorkbenchSettings(source=source)
    section: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"節見出しが閉じていません: {raw.strip()}", number, source)
            section = line[1:-1].strip()
            if section not in SECTIONS:
                raise ConfigError(f"不明な節です: [{section}] (有効: {', '.join(SECTIONS)})", number, source)
            settings.values.setdefault(section, {})
            settings.lines.setdefault((section, ""), number)
            continue
        if section is None:
            raise ConfigError(f"節見出しより前に設定行があります: {raw.strip()}", number, source)
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"'key = value' の形式ではありません: {raw.strip()}", number, source)
        parser = SECTIONS[section].get(key)
        if parser is None:
            raise ConfigError(f"[{section}] に不明なキー '{key}' があります", number, source)
        if key in settings.values[section]:
            first = settings.lines[(section, key)]
            raise ConfigError(f"[{section}] のキー '{key}' が重複しています（最初は {first}行目）", number, source)
        try:
            settings.values[section][key] = parser(value)
        except (ValueError, WorkbenchError) as e:
            raise ConfigError(f"[{section}] {key} の値が不正です: {e}", number, source) from e
        settings.lines[(section, key)] = number
    logger.debug(f"設定解析完了: {source or '<text>'} ({len(settings.values)} 節)")
    return settings


def load_settings(path: Union[str, Path]) -> WorkbenchSettings:
    """
    設定ファイルを読み込む

    Raises:
        ConfigError: ファイルが読めない、または内容が不正
    """
    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"設定ファイルを読み込めません: {config_path} ({e})") from e
    logger.info(f"設定ファイル読み込み: {config_path}")
    return parse_settings(text, source=str(config_path))
