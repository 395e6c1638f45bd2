#!/usr/bin/env python3
"""
代数ワークベンチ レポートビューワー
検証レポートJSONの一覧・フィルタ表示と、作用素行列の表示・CSV出力
"""

import json
import sys
from pathlib import Path

import pandas as pd
import streamlit as st

# 親ディレクトリのlibとconfigをパスに追加
current_file = Path(__file__).resolve()
project_root = current_file.parent.parent
lib_path = project_root / "lib"
sys.path.insert(0, str(lib_path))
sys.path.insert(0, str(project_root))

from config import AppConfig, PathConfig

try:
    from exact import WorkbenchError, matrix_to_csv, matrix_to_dataframe
    from workbench import OPERATOR_NAMES, build_operator, parse_settings
except ImportError as e:
    st.error(f"必要なモジュールの読み込みに失敗: {e}")
    st.stop()

# ページ設定
st.set_page_config(
    page_title=AppConfig.PAGE_TITLE,
    page_icon=AppConfig.PAGE_ICON,
    layout=AppConfig.LAYOUT,
    initial_sidebar_state="expanded"
)

st.markdown(AppConfig.get_custom_css(), unsafe_allow_html=True)

ALL = "すべて"


@st.cache_data
def list_report_files(report_dir: str):
    """レポートフォルダ内の JSON ファイル"""
    folder = Path(report_dir)
    if not folder.is_dir():
        return []
    return sorted(str(p) for p in folder.glob("*.json"))


@st.cache_data
def load_report(text: str):
    """レポートJSONを (概要, 項目 DataFrame, 当てはめ定数) に分解"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        st.error(f"レポート読み込みエラー: {e}")
        return {}, pd.DataFrame(), {}
    entries = pd.DataFrame(data.get("entries", []))
    for column in ("suite", "check", "anchor", "category", "verdict", "trial", "note"):
        if column not in entries.columns:
            entries[column] = ""
    return data.get("summary", {}), entries, data.get("fitted_constants", {})


def filter_entries(entries: pd.DataFrame, suite: str, category: str, verdict: str) -> pd.DataFrame:
    """サイドバーの条件で項目を絞り込む"""
    filtered = entries
    if suite != ALL:
        filtered = filtered[filtered["suite"] == suite]
    if category != ALL:
        filtered = filtered[filtered["category"] == category]
    if verdict != ALL:
        filtered = filtered[filtered["verdict"] == verdict]
    return filtered


def show_summary(summary: dict):
    col1, col2, col3, col4 = st.columns(4)
    col1.metric("項目数", summary.get("total", 0))
    col2.metric(AppConfig.VERDICT_LABELS["pass"], summary.get("pass", 0))
    col3.metric(AppConfig.VERDICT_LABELS["fail"], summary.get("fail", 0))
    col4.metric(AppConfig.VERDICT_LABELS["skipped"], summary.get("skipped", 0))
    fails = {AppConfig.CATEGORY_LABELS[c]: summary.get(f"{c}_fail", 0) for c in AppConfig.CATEGORY_LABELS}
    st.caption("区分別の失敗: " + ", ".join(f"{k} {v}" for k, v in fails.items()))


def report_tab():
    """レポート表示タブ"""
    st.sidebar.header("📄 レポート")
    files = list_report_files(str(PathConfig.get_report_dir()))
    uploaded = st.sidebar.file_uploader("レポートJSONをアップロード", type=["json"])
    selected = st.sidebar.selectbox("レポートフォルダから選択", ["（なし）"] + files)

    if uploaded is not None:
        text = uploaded.getvalue().decode("utf-8")
    elif selected != "（なし）":
        text = Path(selected).read_text(encoding="utf-8")
    else:
        st.info("サイドバーからレポートを選択してください")
        return

    summary, entries, constants = load_report(text)
    if entries.empty:
        st.warning("項目がありません")
        return

    suite = st.sidebar.selectbox("スイート", [ALL] + sorted(entries["suite"].unique()))
    category = st.sidebar.selectbox("区分", [ALL] + list(AppConfig.CATEGORY_LABELS))
    verdict = st.sidebar.selectbox("判定", [ALL] + list(AppConfig.VERDICT_LABELS))

    show_summary(summary)
    filtered = filter_entries(entries, suite, category, verdict)
    display = filtered.copy()
    display["verdict"] = display["verdict"].map(lambda v: AppConfig.VERDICT_LABELS.get(v, v))
    display["category"] = display["category"].map(lambda c: AppConfig.CATEGORY_LABELS.get(c, c))
    columns = ["suite", "check", "trial", "category", "verdict", "anchor", "note"]
    st.dataframe(display[columns], use_container_width=True, hide_index=True)

    st.download_button(
        "📥 表示中の項目をCSVでダウンロード",
        filtered.drop(columns=[c for c in ("witness",) if c in filtered.columns]).to_csv(index=False),
        file_name="report_entries.csv",
        mime="text/csv",
    )

    if "witness" in filtered.columns:
        with_witness = filtered[filtered["witness"].notna()]
        for _, row in with_witness.iterrows():
            with st.expander(f"🔎 {row['suite']} / {row['check']} (trial {row['trial']})"):
                st.json(row["witness"])

    with st.expander("📐 当てはめ定数"):
        st.json(constants)


def operator_tab():
    """作用素行列タブ"""
    st.subheader("🧮 作用素行列")
    default_path = PathConfig.get_workbench_config_path()
    default_text = default_path.read_text(encoding="utf-8") if default_path.exists() else ""
    config_text = st.text_area("ワークベンチ設定", default_text, height=240)
    name = st.selectbox("作用素", OPERATOR_NAMES)

    if not st.button("行列を構成"):
        return
    try:
        settings = parse_settings(config_text, source="viewer")
        matrix = build_operator(settings, name)
    except WorkbenchError as e:
        st.error(f"作用素構成エラー: {e}")
        return

    if matrix.dim > AppConfig.MAX_MATRIX_DIM:
        st.warning(f"{matrix.dim}x{matrix.dim} 行列は表示を省略します（CSV はダウンロード可）")
    else:
        st.dataframe(matrix_to_dataframe(matrix), use_container_width=True)
    st.download_button(
        "📥 CSVでダウンロード",
        matrix_to_csv(matrix),
        file_name=f"{name}.csv",
        mime="text/csv",
    )


st.title(f"{AppConfig.PAGE_ICON} {AppConfig.PAGE_TITLE}")
tab_report, tab_operator = st.tabs(["📊 検証レポート", "🧮 作用素行列"])
with tab_report:
    report_tab()
with tab_operator:
    operator_tab()
