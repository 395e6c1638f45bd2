#!/usr/bin/env python3
"""
代数ワークベンチ 初期設定セットアップスクリプト
Racah / Bannai-Ito のパラメータと乱数試行の設定を入力して workbench.conf を作成します
"""

import sys
from dataclasses import asdict
from pathlib import Path

project_root = Path(__file__).resolve().parent
sys.path.insert(0, str(project_root / "lib"))
sys.path.insert(0, str(project_root))

from config import PathConfig, get_all_config
from workbench import ConfigError, SamplingSettings, load_settings, parse_settings

# 標準パラメータ（γ=1/2, δ=1/3, N=2 の Racah と N=3 の Bannai-Ito）
DEFAULT_RACAH = {"alpha": "-3", "beta": "1/2", "gamma": "1/2", "delta": "1/3", "N": "2", "truncation": "alpha"}
DEFAULT_BANNAI_ITO = {"rho1": "-7/3", "rho2": "1/3", "r1": "1/5", "r2": "2/7", "N": "3", "case": "odd_rho"}


def ask(prompt: str, default: str) -> str:
    value = input(f"{prompt} (デフォルト: {default}): ").strip()
    return value or default


def ask_section(title: str, defaults: dict) -> dict:
    print()
    print(f"📐 {title}")
    return {key: ask(f"   {key}", value) for key, value in defaults.items()}


def render_config(racah: dict, bannai_ito: dict, sampling: dict) -> str:
    """設定テキストを組み立てる"""
    lines = ["# 代数ワークベンチ設定（setup_config.py で作成）", ""]
    for section, values in (("racah", racah), ("bannai_ito", bannai_ito), ("sampling", sampling)):
        lines.append(f"[{section}]")
        lines.extend(f"{key} = {value}" for key, value in values.items())
        lines.append("")
    lines.append("[tau]")
    lines.append("tau4 = 1")
    lines.append("")
    return "\n".join(lines)


def setup_configuration():
    """設定ファイルのセットアップ"""
    print("=" * 60)
    print("🧮 代数ワークベンチ 初期設定")
    print("=" * 60)

    config_file = PathConfig.get_workbench_config_path()
    if config_file.exists():
        print(f"⚠️  既存の設定ファイルが見つかりました: {config_file}")
        overwrite = input("上書きしますか？ (y/N): ").lower().strip()
        if overwrite != 'y':
            print("設定をキャンセルしました")
            return

    while True:
        racah = ask_section("Racah パラメータ（有理数は p/q 形式）", DEFAULT_RACAH)
        bannai_ito = ask_section("Bannai-Ito パラメータ", DEFAULT_BANNAI_ITO)
        sampling = ask_section("乱数試行", {k: str(v) for k, v in asdict(SamplingSettings()).items()})
        text = render_config(racah, bannai_ito, sampling)

        print(f"🔍 設定を検証中...")
        try:
            settings = parse_settings(text, source=str(config_file))
            settings.racah_params()
            settings.bi_params()
            settings.sampling()
            break
        except ConfigError as e:
            print(f"❌ 設定エラー: {e}")
            retry = input("入力し直しますか？ (Y/n): ").lower().strip()
            if retry == 'n':
                print("設定をキャンセルしました")
                return

    try:
        config_file.write_text(text, encoding="utf-8")
        print()
        print(f"✅ 設定ファイル {config_file} を作成しました")
        print()
        print("🚀 検証を実行するには:")
        print("   python run_workbench.py verify all")
        print("🖥️  レポートビューワーを起動するには:")
        print("   streamlit run app.py")
    except Exception as e:
        print(f"❌ 設定ファイル作成エラー: {e}")
        return

    print()
    print("=" * 60)
    print("設定完了！")
    print("=" * 60)


def show_current_config():
    """現在の設定を表示"""
    config_file = PathConfig.get_workbench_config_path()
    if not config_file.exists():
        print(f"❌ 設定ファイルが見つかりません: {config_file}")
        return

    try:
        settings = load_settings(config_file)
        print(f"📄 現在の設定: {config_file}")
        config = get_all_config()
        print(f"   レポート出力先: {config['paths'].get_report_dir()}")
        print(f"   ログレベル: {config['logging'].get_level()}")
        for section, values in settings.values.items():
            print(f"   [{section}]")
            for key, value in values.items():
                print(f"      {key} = {value}")
        racah = settings.racah_params()
        if racah is not None:
            print(f"   Racah: {racah.to_dict()}")
        bi = settings.bi_params()
        if bi is not None:
            print(f"   Bannai-Ito: {bi.to_dict()}")
    except ConfigError as e:
        print(f"❌ 設定ファイル読み込みエラー: {e}")


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "--show":
        show_current_config()
    else:
        setup_configuration()
