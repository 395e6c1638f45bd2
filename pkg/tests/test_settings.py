"""
設定ファイル解析のテスト
"""

from fractions import Fraction

import pytest

from algebras import TauParams
from grids import EvenRhoR, OddRho
from workbench import ConfigError, SamplingSettings, load_settings, parse_settings

F = Fraction

CANONICAL = """
# 標準の Racah パラメータ
[racah]
beta = 1/2
gamma = 1/2
delta = 1/3
N = 2
"""


class TestParseSettings:
    def test_values_are_converted(self):
        settings = parse_settings(CANONICAL)
        assert settings.get("racah", "beta") == F(1, 2)
        assert settings.get("racah", "N") == 2
        assert settings.lines[("racah", "gamma")] == 5

    def test_inline_comment(self):
        settings = parse_settings("[tau]\ntau4 = 2  # W = 2Y\n")
        assert settings.tau() == TauParams(tau4=F(2))

    @pytest.mark.parametrize("text, line, fragment", [
        ("[racah\nN = 2\n", 1, "閉じていません"),
        ("[unknown]\n", 1, "不明な節"),
        ("N = 2\n[racah]\n", 1, "節見出しより前"),
        ("[racah]\nN 2\n", 2, "key = value"),
        ("[racah]\nepsilon = 1\n", 2, "不明なキー"),
        ("[racah]\nN = 2\n\nN = 3\n", 4, "最初は 2行目"),
        ("[racah]\nN = -1\n", 2, "値が不正"),
        ("[racah]\nbeta = 1/0\n", 2, "値が不正"),
        ("[racah]\ntruncation = delta\n", 2, "値が不正"),
        ("[suites]\nracah = maybe\n", 2, "値が不正"),
        ("[bannai_ito]\ni = 3\n", 2, "値が不正"),
    ])
    def test_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(ConfigError, match=fragment) as info:
            parse_settings(text, source="bad.cfg")
        assert info.value.line == line
        assert str(info.value).startswith(f"bad.cfg:{line}: ")

    def test_error_without_source(self):
        with pytest.raises(ConfigError) as info:
            parse_settings("[racah]\nN = x\n")
        assert str(info.value).startswith("2行目: ")


class TestRacahSection:
    def test_missing_parameter_is_completed(self):
        params = parse_settings(CANONICAL).racah_params()
        assert params.alpha == -3
        assert params.truncation == "alpha"

    def test_all_four_given(self):
        text = CANONICAL.replace("[racah]", "[racah]\nalpha = -3")
        assert parse_settings(text).racah_params().alpha == -3

    def test_absent_section(self):
        assert parse_settings("[tau]\ntau0 = 1\n").racah_params() is None

    def test_inconsistent_truncation(self):
        text = CANONICAL.replace("[racah]", "[racah]\nalpha = -2")
        with pytest.raises(ConfigError, match="前提条件"):
            parse_settings(text).racah_params()

    def test_degenerate_grid_names_guard(self):
        text = "[racah]\nbeta = 1/2\ngamma = 0\ndelta = 0\nN = 2\n"
        with pytest.raises(ConfigError, match="θ\\+0=0") as info:
            parse_settings(text, source="degenerate.cfg").racah_params()
        assert info.value.line == 1

    def test_too_few_parameters(self):
        with pytest.raises(ConfigError, match="不足"):
            parse_settings("[racah]\ngamma = 1/2\nN = 2\n").racah_params()

    def test_missing_size(self):
        with pytest.raises(ConfigError, match="N が指定されていません"):
            parse_settings("[racah]\nbeta = 1\n").racah_params()


class TestBannaiItoSection:
    def test_odd_rho_completion(self):
        text = "[bannai_ito]\nrho1 = 0\nrho2 = 1/3\nr1 = 1/5\nr2 = 2/7\nN = 3\n"
        params = parse_settings(text).bi_params()
        assert params.rho1 == F(-7, 3)
        assert isinstance(params.case, OddRho)

    def test_even_difference_case(self):
        text = ("[bannai_ito]\nrho1 = 1/4\nrho2 = 1/2\nr1 = 0\nr2 = 1/2\nN = 2\n"
                "case = even\nrelation = difference\n")
        params = parse_settings(text).bi_params()
        assert params.case == EvenRhoR(1, 1, 1, "difference")
        assert params.r1 == F(7, 4)

    def test_parity_mismatch(self):
        text = "[bannai_ito]\nrho1 = 0\nrho2 = 0\nr1 = 1/5\nr2 = 2/7\nN = 2\n"
        with pytest.raises(ConfigError, match="前提条件"):
            parse_settings(text).bi_params()


class TestDefaults:
    def test_tau_default_is_y(self):
        assert parse_settings("").tau() == TauParams(tau4=F(1))

    def test_sampling_defaults(self):
        assert parse_settings("").sampling() == SamplingSettings()
        defaults = SamplingSettings()
        assert (defaults.numerator_bound, defaults.denominator_bound) == (12, 6)
        assert (defaults.n_min, defaults.n_max) == (2, 6)

    def test_sampling_range(self):
        with pytest.raises(ConfigError, match="n_min") as info:
            parse_settings("[sampling]\nn_min = 4\nn_max = 3\n").sampling()
        assert info.value.line == 2

    def test_suites_follow_sections(self):
        flags = parse_settings(CANONICAL).suites()
        assert flags["racah"] and flags["heun_racah"]
        assert not flags["bannai_ito"] and not flags["upsilon"]

    def test_suites_explicit(self):
        flags = parse_settings(CANONICAL + "[suites]\nheun_racah = no\n").suites()
        assert flags["racah"] and not flags["heun_racah"]

    def test_upsilon_defaults_to_tau(self):
        ups = parse_settings("[tau]\ntau0 = 1\n[upsilon]\ntau_hb_3 = 2\n").upsilon()
        assert ups.tau_hr == TauParams(tau0=F(1))
        assert ups.tau_hb == TauParams(tau3=F(2))
        assert (ups.a1, ups.a2) == (-2, -2)

    def test_upsilon_zero_quadratic_coefficient(self):
        with pytest.raises(ConfigError, match="a1") as info:
            parse_settings("[upsilon]\na1 = 0\n").upsilon()
        assert info.value.line == 2

    def test_with_sampling_leaves_original(self):
        settings = parse_settings("[sampling]\nseed = 3\n")
        copied = settings.with_sampling(trials=4)
        assert copied.sampling().trials == 4
        assert copied.sampling().seed == 3
        assert settings.sampling().trials == 0


def test_load_settings(tmp_path):
    path = tmp_path / "canonical.cfg"
    path.write_text(CANONICAL, encoding="utf-8")
    assert load_settings(path).racah_params().alpha == -3
    with pytest.raises(ConfigError, match="読み込めません"):
        load_settings(tmp_path / "missing.cfg")
