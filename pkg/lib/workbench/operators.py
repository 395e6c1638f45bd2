"""
設定ファイルのパラメータから作用素行列を組み立てる（export / fit 用）
"""

import logging
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple, Union

from algebras import algebraic_heun_bi, algebraic_heun_racah, bi_realization, racah_realization
from checks import FAIL, ORACLE, PASS, CheckEntry, CheckReport
from exact import RatMatrix, WorkbenchError, anticommutator, commutator, parse_rational, write_matrix_csv
from relalg import UNKNOWN, Assignment, FitResult, Presentation, fit_constants, load_presentation

from .errors import ConfigError
from .settings import WorkbenchSettings

# ロガー設定
logger = logging.getLogger(__name__)

RACAH_OPERATORS = ("X", "Y", "K3")
BI_OPERATORS = ("B1", "B2", "B3", "Btilde1", "Btilde2")
OPERATOR_NAMES = RACAH_OPERATORS + BI_OPERATORS + ("W_HR", "W_HB")

# fit で生成元を割り当てる実現（この順に照合）
REALIZATIONS = ("racah", "bannai_ito", "heun_racah", "heun_bi")


def _racah(settings: WorkbenchSettings):
    params = settings.racah_params()
    if params is None:
        raise ConfigError("[racah] 節がありません")
    return racah_realization(params)


def _bannai_ito(settings: WorkbenchSettings):
    params = settings.bi_params()
    if params is None:
        raise ConfigError("[bannai_ito] 節がありません")
    return bi_realization(params)


def build_operator(settings: WorkbenchSettings, name: str) -> RatMatrix:
    """
    名前で指定した作用素の行列

    Args:
        settings: 実現のパラメータを含む設定
        name: X, Y, K3, B1, B2, B3, Btilde1, Btilde2, W_HR, W_HB

    Raises:
        ConfigError: 不明な名前、または必要な節がない
    """
    if name not in OPERATOR_NAMES:
        raise ConfigError(f"不明な作用素: {name} (有効: {', '.join(OPERATOR_NAMES)})")
    if name in RACAH_OPERATORS:
        real = _racah(settings)
        return {"X": real.X, "Y": real.Y, "K3": real.K3}[name]
    if name == "W_HR":
        return algebraic_heun_racah(_racah(settings), settings.tau()).matrix
    real = _bannai_ito(settings)
    if name == "W_HB":
        return algebraic_heun_bi(real, settings.tau()).matrix
    return {"B1": real.B1, "B2": real.B2, "B3": real.B3,
            "Btilde1": real.Btilde1, "Btilde2": real.Btilde2}[name]


def export_operator(settings: WorkbenchSettings, name: str, path: Union[str, Path]) -> Path:
    """作用素行列を CSV として書き出す"""
    matrix = build_operator(settings, name)
    logger.info(f"作用素出力: {name}")
    return write_matrix_csv(matrix, path)


def realization_generators(settings: WorkbenchSettings, kind: str) -> Dict[str, RatMatrix]:
    """
    実現の生成元の名前と行列

    racah は K1, K2, K3 と X, Y、bannai_ito は B1..B3 と B̃1, B̃2、
    heun_racah は X, W, Z = [W, X]、heun_bi は X, W, Z = {X, W}
    """
    if kind == "racah":
        real = _racah(settings)
        return {**real.generators, "X": real.X, "Y": real.Y}
    if kind == "heun_racah":
        real = _racah(settings)
        W = algebraic_heun_racah(real, settings.tau()).matrix
        return {"X": real.X, "W": W, "Z": commutator(W, real.X)}
    real = _bannai_ito(settings)
    if kind == "bannai_ito":
        return {**real.generators, "Btilde1": real.Btilde1, "Btilde2": real.Btilde2}
    if kind == "heun_bi":
        W = algebraic_heun_bi(real, settings.tau()).matrix
        return {"X": real.B1, "W": W, "Z": anticommutator(real.B1, W)}
    raise ConfigError(f"不明な実現: {kind} (有効: {', '.join(REALIZATIONS)})")


def parse_known(items: Optional[Mapping[str, str]]) -> Dict[str, object]:
    try:
        return {name: parse_rational(value) for name, value in (items or {}).items()}
    except WorkbenchError as e:
        raise ConfigError(f"既知スカラーの値が不正です: {e}") from e


def fit_relations(settings: WorkbenchSettings, path: Union[str, Path], kind: Optional[str] = None,
                  known: Optional[Mapping[str, str]] = None) -> Tuple[FitResult, CheckReport, str]:
    """
    任意の .rel ファイルの未知スカラーを実現に当てはめる

    Args:
        settings: 実現のパラメータを含む設定
        path: .rel ファイル
        kind: 生成元を割り当てる実現（省略時は生成元名が揃う最初の実現）
        known: 値を固定するスカラー（名前 -> 'p/q'）

    Returns:
        (当てはめ結果, レポート, 使った実現)

    Raises:
        ParseError: .rel の構文誤り（行・列つき）
        ConfigError: 生成元を割り当てられる実現がない
        NonlinearFitError: 未知数どうしの積が現れる
    """
    pres = load_presentation(path)
    kind, generators = _match_realization(settings, pres, kind)
    fixed = parse_known(known)
    unknown_names = [name for name in fixed if name not in pres.scalar_names]
    if unknown_names:
        raise ConfigError(f"表示にないスカラーです: {', '.join(unknown_names)}")
    scalars = {name: fixed.get(name, UNKNOWN) for name in pres.scalar_names}
    asg = Assignment({g: generators[g] for g in pres.generators}, scalars)
    fit = fit_constants(pres, asg)

    report = CheckReport()
    passed = fit.solvable and all(fit.residuals_zero.values())
    report.add(CheckEntry("fit", f"fit_{Path(path).stem}", "relations file", ORACLE,
                          PASS if passed else FAIL, witness=fit.to_dict()))
    report.record_constants(f"fit.{Path(path).stem}", {**fit.values, "status": fit.status,
                                                      "realization": kind})
    logger.info(f"当てはめ結果: {Path(path).name} on {kind} -> {fit.status}")
    return fit, report, kind


def _match_realization(settings: WorkbenchSettings, pres: Presentation,
                       kind: Optional[str]) -> Tuple[str, Dict[str, RatMatrix]]:
    candidates = (kind,) if kind else REALIZATIONS
    for candidate in candidates:
        needs = "racah" if candidate in ("racah", "heun_racah") else "bannai_ito"
        if not kind and not settings.has_section(needs):
            continue
        generators = realization_generators(settings, candidate)
        if all(g in generators for g in pres.generators):
            return candidate, generators
    raise ConfigError(f"生成元 {', '.join(pres.generators)} を割り当てられる実現がありません "
                      f"(候補: {', '.join(candidates)})")
