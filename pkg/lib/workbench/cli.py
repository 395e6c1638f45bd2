"""
ワークベンチのコマンドライン
verify / export / fit / upsilon-fit の各サブコマンド

終了コード: 0 全合格 / 1 構造・オラクル失敗 / 2 記載式の不一致のみ / 3 設定・入力の誤り
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Dict, List, Optional

from algebras import run_upsilon_suite
from checks import CheckReport
from exact import WorkbenchError, matrix_to_csv

from .errors import ConfigError
from .operators import OPERATOR_NAMES, REALIZATIONS, build_operator, export_operator, fit_relations
from .settings import WorkbenchSettings, load_settings
from .suite_manager import SuiteManager, normalize_suite_name

# ロガー設定
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PAPER_CLAIM = 2
EXIT_USAGE = 3

SUITE_CHOICES = ("racah", "heun-racah", "bannai-ito", "heun-bi", "upsilon", "all")

LOG_LEVEL_ENV = "WORKBENCH_LOG_LEVEL"
CONFIG_ENV = "WORKBENCH_CONFIG"


class WorkbenchArgumentParser(argparse.ArgumentParser):
    """使い方の誤りを終了コード 3 で報告する"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: エラー: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = WorkbenchArgumentParser(prog="workbench", description="厳密有理数による代数関係式の検証")
    parser.add_argument("--log-level", default=None,
                        help=f"ログレベル（省略時は環境変数 {LOG_LEVEL_ENV}、なければ WARNING）")
    sub = parser.add_subparsers(dest="command", parser_class=WorkbenchArgumentParser)
    sub.required = True

    verify = sub.add_parser("verify", help="検証スイートを実行")
    verify.add_argument("suite", choices=SUITE_CHOICES)
    verify.add_argument("--config", default=None, help="設定ファイル")
    verify.add_argument("--trials", type=int, default=None, help="乱数試行の回数（設定を上書き）")
    verify.add_argument("--seed", type=int, default=None, help="乱数シード（設定を上書き）")
    verify.add_argument("--out", default=None, help="レポートJSONの出力先（省略時は標準出力）")

    export = sub.add_parser("export", help="作用素行列を CSV に出力")
    export.add_argument("--operator", required=True, help=f"作用素名 ({', '.join(OPERATOR_NAMES)})")
    export.add_argument("--config", default=None)
    export.add_argument("--out", default=None, help="CSV の出力先（省略時は標準出力）")

    fit = sub.add_parser("fit", help=".rel ファイルの未知スカラーを当てはめ")
    fit.add_argument("--relations", required=True, help=".rel ファイル")
    fit.add_argument("--config", default=None)
    fit.add_argument("--realization", choices=REALIZATIONS, default=None,
                     help="生成元を割り当てる実現（省略時は自動選択）")
    fit.add_argument("--known", action="append", default=[], metavar="NAME=VALUE",
                     help="値を固定するスカラー（繰り返し指定可）")
    fit.add_argument("--out", default=None)

    upsilon = sub.add_parser("upsilon-fit", help="Υ(W) の展開を当てはめ")
    upsilon.add_argument("--config", default=None)
    upsilon.add_argument("--out", default=None)
    return parser


def configure_logging(level: Optional[str]) -> None:
    """ログは標準エラーへ（標準出力はレポート専用）"""
    name = (level or os.getenv(LOG_LEVEL_ENV) or "WARNING").upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise ConfigError(f"不明なログレベル: {name}")
    logging.basicConfig(level=numeric, stream=sys.stderr,
                        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def resolve_config(path: Optional[str], default_config: Optional[Path]) -> WorkbenchSettings:
    """--config、環境変数 WORKBENCH_CONFIG、既定パスの順に探す"""
    candidate = path or os.getenv(CONFIG_ENV) or (str(default_config) if default_config else None)
    if not candidate:
        raise ConfigError("設定ファイルが指定されていません (--config)")
    return load_settings(candidate)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        output = Path(out)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")
        logger.info(f"出力: {output}")
    else:
        sys.stdout.write(text)


def _report_text(report: CheckReport, command: str, extra: Optional[Dict] = None) -> str:
    return report.to_json(extra={"command": command, **(extra or {})}) + "\n"


def cmd_verify(args, settings: WorkbenchSettings) -> int:
    settings = settings.with_sampling(trials=args.trials, seed=args.seed)
    manager = SuiteManager(settings)
    suites = None if args.suite == "all" else [normalize_suite_name(args.suite)]
    report = manager.run(suites)
    sampling = manager.sampling
    _emit(_report_text(report, "verify", {"seed": sampling.seed, "trials": sampling.trials}), args.out)
    stats = manager.get_processing_statistics()
    if stats["error_count"]:
        logger.warning(f"試行エラー {stats['error_count']} 件: {stats['errors'][:3]}")
    return report.exit_status()


def cmd_export(args, settings: WorkbenchSettings) -> int:
    if args.out:
        export_operator(settings, args.operator, args.out)
    else:
        sys.stdout.write(matrix_to_csv(build_operator(settings, args.operator)))
    return EXIT_OK


def _parse_known(items: List[str]) -> Dict[str, str]:
    known = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ConfigError(f"--known は NAME=VALUE の形式で指定してください: {item}")
        known[name.strip()] = value.strip()
    return known


def cmd_fit(args, settings: WorkbenchSettings) -> int:
    if not Path(args.relations).is_file():
        raise ConfigError(f".rel ファイルが見つかりません: {args.relations}")
    fit, report, kind = fit_relations(settings, args.relations, args.realization, _parse_known(args.known))
    _emit(_report_text(report, "fit", {"realization": kind, "fit": fit.to_dict()}), args.out)
    return report.exit_status()


def cmd_upsilon_fit(args, settings: WorkbenchSettings) -> int:
    params = settings.bi_params()
    if params is None:
        raise ConfigError("[bannai_ito] 節がありません")
    ups = settings.upsilon()
    report = run_upsilon_suite(params, ups.tau_hr, ups.tau_hb, ups.a1, ups.a2, ups.c1, ups.c2)
    _emit(_report_text(report, "upsilon-fit"), args.out)
    return report.exit_status()


COMMANDS = {
    "verify": cmd_verify,
    "export": cmd_export,
    "fit": cmd_fit,
    "upsilon-fit": cmd_upsilon_fit,
}


def main(argv: Optional[List[str]] = None, default_config: Optional[Path] = None,
         default_log_level: Optional[str] = None) -> int:
    """
    コマンドラインのエントリポイント

    Args:
        argv: 引数（省略時は sys.argv）
        default_config: --config も環境変数もないときの設定ファイル
        default_log_level: --log-level がないときのログレベル

    Returns:
        終了コード
    """
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.log_level or default_log_level)
        settings = resolve_config(args.config, default_config)
        return COMMANDS[args.command](args, settings)
    except ConfigError as e:
        logger.error(f"設定エラー: {e}")
        print(f"設定エラー: {e}", file=sys.stderr)
        return EXIT_USAGE
    except WorkbenchError as e:
        logger.error(f"入力エラー: {e}")
        print(f"入力エラー: {e}", file=sys.stderr)
        return EXIT_USAGE
