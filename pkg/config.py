"""
代数ワークベンチ 設定ファイル
パス設定・ログ設定・乱数試行の既定値・ビューワー設定を管理
"""

import os
from pathlib import Path
from typing import Any, Dict

from dotenv import load_dotenv

# .env があれば環境変数として読み込む
load_dotenv(Path(__file__).resolve().parent / ".env")


def get_project_root() -> Path:
    """プロジェクトルートディレクトリを取得"""
    return Path(__file__).resolve().parent


def get_lib_path() -> Path:
    """libディレクトリのパスを取得"""
    return get_project_root() / "lib"


# パス設定
class PathConfig:
    """設定ファイル・レポート出力先のパス"""

    DEFAULT_CONFIG_NAME = "workbench.conf"
    REPORT_DIR_NAME = "reports"

    @staticmethod
    def get_workbench_config_path() -> Path:
        """ワークベンチ設定ファイル（環境変数 WORKBENCH_CONFIG を優先）"""
        configured = os.getenv("WORKBENCH_CONFIG")
        if configured:
            return Path(configured)
        return get_project_root() / PathConfig.DEFAULT_CONFIG_NAME

    @staticmethod
    def get_report_dir() -> Path:
        """レポートJSONの既定の置き場所"""
        configured = os.getenv("WORKBENCH_REPORT_DIR")
        if configured:
            return Path(configured)
        return get_project_root() / PathConfig.REPORT_DIR_NAME


# ログ設定
class LoggingConfig:
    """ログ関連の設定"""

    DEFAULT_LEVEL = "WARNING"
    LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]

    @staticmethod
    def get_level() -> str:
        level = os.getenv("WORKBENCH_LOG_LEVEL", LoggingConfig.DEFAULT_LEVEL).upper()
        return level if level in LoggingConfig.LEVELS else LoggingConfig.DEFAULT_LEVEL


# アプリケーション設定
class AppConfig:
    """レポートビューワーの設定"""

    # ページ設定
    PAGE_TITLE = "代数ワークベンチ レポートビューワー"
    PAGE_ICON = "🧮"
    LAYOUT = "wide"

    # 表示
    VERDICT_LABELS = {
        "pass": "✅ 合格",
        "fail": "❌ 失敗",
        "skipped": "⏭️ スキップ",
    }
    CATEGORY_LABELS = {
        "structural": "構造",
        "oracle": "オラクル",
        "paper-claim": "記載式",
    }
    MAX_MATRIX_DIM = 40

    @staticmethod
    def get_custom_css() -> str:
        """カスタムCSSを取得"""
        return """
        <style>
        .main .block-container {
            padding-top: 2rem;
            padding-bottom: 2rem;
        }

        .summary-card {
            background: white;
            padding: 1rem;
            border-radius: 8px;
            box-shadow: 0 2px 4px rgba(0,0,0,0.1);
            margin: 0.5rem 0;
            border-left: 4px solid #667eea;
        }

        .status-ok { color: #28a745; }
        .status-error { color: #dc3545; }
        .status-warning { color: #ffc107; }
        </style>
        """


def validate_configuration() -> bool:
    """設定が正しいかチェック"""
    try:
        if not get_lib_path().exists():
            print(f"libディレクトリが見つかりません: {get_lib_path()}")
            return False

        config_path = PathConfig.get_workbench_config_path()
        if os.getenv("WORKBENCH_CONFIG") and not config_path.exists():
            print(f"WORKBENCH_CONFIG の設定ファイルが見つかりません: {config_path}")
            return False

        report_dir = PathConfig.get_report_dir()
        if report_dir.exists() and not report_dir.is_dir():
            print(f"レポート出力先がディレクトリではありません: {report_dir}")
            return False

        return True
    except Exception as e:
        print(f"設定検証エラー: {e}")
        return False


# 全設定をまとめる
def get_all_config() -> Dict[str, Any]:
    """全設定を辞書形式で取得"""
    return {
        'paths': PathConfig,
        'logging': LoggingConfig,
        'app': AppConfig,
        'project_root': get_project_root()
    }
