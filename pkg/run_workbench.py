#!/usr/bin/env python3
"""
代数ワークベンチ - コマンドライン起動
使い方: python run_workbench.py verify racah --config workbench.conf
"""

import sys
from pathlib import Path

# libパスを追加
project_root = Path(__file__).resolve().parent
sys.path.insert(0, str(project_root / "lib"))
sys.path.insert(0, str(project_root))

# 設定読み込み（.env もここで読まれる）
from config import LoggingConfig, PathConfig

from workbench.cli import main

if __name__ == "__main__":
    sys.exit(main(default_config=PathConfig.get_workbench_config_path(),
                  default_log_level=LoggingConfig.get_level()))
