"""
検証スイートの統合実行管理
固定パラメータ（trial 0）とシード付き乱数試行（trial 1..K）を順に実行する
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from algebras import (TRUNCATIONS, run_bannai_ito_suite, run_heun_bi_suite, run_heun_racah_suite,
                      run_racah_suite, run_upsilon_suite)
from checks import FAIL, SKIPPED, STRUCTURAL, CheckEntry, CheckReport
from exact import WorkbenchError
from grids import EvenRhoR, OddR, OddRho

from .errors import ConfigError
from .sampling import TAU_LINES, ParameterSampler
from .settings import WorkbenchSettings

# ロガー設定
logger = logging.getLogger(__name__)

SUITE_NAMES = ("racah", "heun_racah", "bannai_ito", "heun_bi", "upsilon")

# 乱数試行で巡回する Bannai-Ito の切断条件
SAMPLED_BI_CASES = (OddRho(), OddR(), EvenRhoR(1, 1, 1, "difference"))

Runner = Callable[[], CheckReport]


def normalize_suite_name(name: str) -> str:
    """'heun-racah' のようなコマンドライン表記を内部名に揃える"""
    return name.strip().lower().replace("-", "_")


class SuiteManager:
    """検証スイート統合管理クラス"""

    def __init__(self, settings: WorkbenchSettings):
        """
        初期化

        Args:
            settings: 解析済みの設定（固定パラメータ・乱数試行・スイート選択）
        """
        self.settings = settings
        self.sampling = settings.sampling()

        # 処理統計
        self.stats = {
            "processed_count": 0,
            "success_count": 0,
            "error_count": 0,
            "errors": []
        }

    def selected_suites(self) -> List[str]:
        """[suites] 節で有効なスイート"""
        flags = self.settings.suites()
        return [name for name in SUITE_NAMES if flags.get(name)]

    def run(self, suites: Optional[Sequence[str]] = None) -> CheckReport:
        """
        スイートを実行して1つのレポートにまとめる

        Args:
            suites: 実行するスイート名（省略時は設定の選択に従う）

        Returns:
            全スイート・全試行の CheckReport

        Raises:
            ConfigError: 固定パラメータが前提条件を満たさない
        """
        names = [normalize_suite_name(s) for s in suites] if suites is not None else self.selected_suites()
        unknown = [name for name in names if name not in SUITE_NAMES]
        if unknown:
            raise ConfigError(f"不明なスイート: {', '.join(unknown)} (有効: {', '.join(SUITE_NAMES)})")

        # 固定パラメータの検査は試行より先に済ませる
        fixed = {name: self._fixed_runner(name) for name in names}

        report = CheckReport()
        for index, name in enumerate(SUITE_NAMES):
            if name not in names:
                continue
            logger.info(f"スイート開始: {name} (乱数試行 {self.sampling.trials} 回)")
            self._run_suite(name, index, fixed[name], report)

        summary = report.summary()
        logger.info(f"検証完了 - 合格: {summary['pass']}, 失敗: {summary['fail']}, "
                    f"スキップ: {summary['skipped']} / 全 {summary['total']} 項目")
        return report

    def _run_suite(self, name: str, index: int, fixed: Optional[Runner], report: CheckReport) -> None:
        # スイートごとに独立した乱数列
        rng = np.random.default_rng([self.sampling.seed, index])
        sampler = ParameterSampler(self.sampling, rng)

        if fixed is not None:
            self._run_trial(name, 0, fixed, report)
        elif self.sampling.trials == 0:
            report.add(CheckEntry(name, "fixed_parameters", "workbench configuration", STRUCTURAL, SKIPPED,
                                  note="固定パラメータの節がなく、乱数試行も 0 回です"))

        for trial in range(1, self.sampling.trials + 1):
            self._run_trial(name, trial, self._sampled_runner(name, trial, sampler), report)
        logger.debug(f"{name} サンプリング統計: {sampler.stats}")

    def _run_trial(self, name: str, trial: int, runner: Runner, report: CheckReport) -> bool:
        """
        1試行を実行してレポートに取り込む

        Returns:
            例外なく完了したか
        """
        self.stats["processed_count"] += 1
        try:
            result = runner()
            report.merge(result, trial=trial, key_prefix=f"{name}[{trial}].")
            self.stats["success_count"] += 1
            logger.debug(f"試行完了: {name} trial {trial} ({len(result.entries)} 項目)")
            return True
        except WorkbenchError as e:
            error_msg = f"試行実行エラー ({name} trial {trial}): {e}"
            logger.error(error_msg)
            self.stats["error_count"] += 1
            self.stats["errors"].append(error_msg)
            report.add(CheckEntry(name, "trial_error", "trial execution", STRUCTURAL, FAIL, trial=trial,
                                  witness={"error": type(e).__name__}, note=str(e)))
            return False

    def _fixed_runner(self, name: str) -> Optional[Runner]:
        """設定ファイルの固定パラメータによる試行（パラメータ節がなければ None）"""
        s = self.settings
        if name == "racah":
            params = s.racah_params()
            return (lambda: run_racah_suite(params)) if params is not None else None
        if name == "heun_racah":
            params, tau, free = s.racah_params(), s.tau(), s.heun_racah_free()
            return (lambda: run_heun_racah_suite(params, tau, free)) if params is not None else None
        if name == "bannai_ito":
            params = s.bi_params()
            return (lambda: run_bannai_ito_suite(params)) if params is not None else None
        if name == "heun_bi":
            params, tau = s.bi_params(), s.tau()
            return (lambda: run_heun_bi_suite(params, tau)) if params is not None else None
        params, ups = s.bi_params(), s.upsilon()
        if params is None:
            return None
        return lambda: run_upsilon_suite(params, ups.tau_hr, ups.tau_hb, ups.a1, ups.a2, ups.c1, ups.c2)

    def _sampled_runner(self, name: str, trial: int, sampler: ParameterSampler) -> Runner:
        """乱数パラメータによる試行（サンプリング自体も試行の中で行う）"""
        truncation = TRUNCATIONS[(trial - 1) % len(TRUNCATIONS)]
        case = SAMPLED_BI_CASES[(trial - 1) % len(SAMPLED_BI_CASES)]
        line = TAU_LINES[(trial - 1) % len(TAU_LINES)]

        if name == "racah":
            return lambda: run_racah_suite(sampler.racah_params(truncation))
        if name == "heun_racah":
            return lambda: run_heun_racah_suite(sampler.racah_params(truncation), sampler.tau(line),
                                                sampler.heun_racah_free())
        if name == "bannai_ito":
            return lambda: run_bannai_ito_suite(sampler.bi_params(case))
        if name == "heun_bi":
            return lambda: run_heun_bi_suite(sampler.bi_params(case), sampler.tau(line), sampler.hbi_free())

        def upsilon() -> CheckReport:
            ups = self.settings.upsilon()
            return run_upsilon_suite(sampler.bi_params(case), sampler.tau(), sampler.tau(),
                                     ups.a1, ups.a2, ups.c1, ups.c2)
        return upsilon

    def get_processing_statistics(self) -> Dict:
        """試行の統計"""
        stats = dict(self.stats)
        total = stats["processed_count"]
        stats["success_rate_percent"] = (stats["success_count"] / total * 100) if total > 0 else 0
        return stats
