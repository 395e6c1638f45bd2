"""
同梱の .rel 表示ファイルの読み込み
"""

from functools import lru_cache
from pathlib import Path
from typing import Union

from .parser import parse
from .presentation import Presentation

FIXTURE_DIR = Path(__file__).resolve().parent / "presentations"

FIXTURE_NAMES = (
    "racah",
    "reduced_racah",
    "equitable",
    "equitable_central",
    "heun_racah",
    "bannai_ito",
    "bi_graded_jacobi",
    "racah_in_bi",
    "heun_bi",
    "upsilon",
    "upsilon_restricted",
)


def load_presentation(path: Union[str, Path]) -> Presentation:
    """任意の .rel ファイルを解析"""
    return parse(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Presentation:
    """同梱表示を名前で取得（例: 'racah'）"""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"不明な表示: {name} (有効: {', '.join(FIXTURE_NAMES)})")
    return load_presentation(FIXTURE_DIR / f"{name}.rel")
