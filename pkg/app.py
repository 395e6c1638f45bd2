#!/usr/bin/env python3
"""
代数ワークベンチ レポートビューワー
エントリーポイント
"""

import sys
from pathlib import Path

# 必要なパスを追加
current_file = Path(__file__).resolve()
project_root = current_file.parent

lib_path = project_root / "lib"
sys.path.insert(0, str(lib_path))
sys.path.insert(0, str(project_root))

# 設定読み込み
from config import validate_configuration, PathConfig
import streamlit as st


def main():
    """メインアプリケーション"""

    # 設定検証
    if not validate_configuration():
        st.error("❌ 設定エラー: ワークベンチの設定が正しくありません")

        st.markdown("### 🔧 設定方法")
        st.markdown("#### 1. 環境変数による設定")
        st.code("WORKBENCH_CONFIG=/path/to/workbench.conf\nWORKBENCH_REPORT_DIR=/path/to/reports")

        st.markdown("#### 2. 設定ファイルの作成")
        st.markdown("setup_config.py を実行して設定ファイルを作成してください：")
        st.code("python setup_config.py")

        st.markdown(f"#### 3. 既定の場所: `{PathConfig.get_workbench_config_path()}`")
        st.stop()

    # 設定が正常な場合、ビューワーを起動
    try:
        viewer_path = project_root / "streamlit_viewer" / "report_viewer.py"

        if not viewer_path.exists():
            st.error("❌ streamlit_viewer/report_viewer.py が見つかりません。")
            st.stop()

        with open(viewer_path, 'r', encoding='utf-8') as f:
            viewer_code = f.read()

        # グローバル名前空間で実行
        exec(viewer_code, globals())

    except Exception as e:
        st.error(f"❌ アプリケーション起動エラー: {e}")
        st.stop()


if __name__ == "__main__":
    main()
