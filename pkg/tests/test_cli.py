"""
コマンドライン（サブコマンドと終了コード）のテスト
"""

import json

import pytest

from checks import FAIL, PAPER_CLAIM, CheckEntry, CheckReport
from workbench import main
from workbench.cli import EXIT_FAILURE, EXIT_OK, EXIT_PAPER_CLAIM, EXIT_USAGE

CONFIG = """
[racah]
alpha = -3
beta = 1/2
gamma = 1/2
delta = 1/3
N = 2

[bannai_ito]
rho1 = -7/3
rho2 = 1/3
r1 = 1/5
r2 = 2/7
N = 3
case = odd_rho
"""


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv("WORKBENCH_CONFIG", raising=False)
    monkeypatch.delenv("WORKBENCH_LOG_LEVEL", raising=False)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "workbench.conf"
    path.write_text(CONFIG, encoding="utf-8")
    return str(path)


@pytest.fixture
def relations_file(tmp_path):
    def write(text: str) -> str:
        path = tmp_path / "custom.rel"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


class TestVerify:
    def test_racah_report(self, config_file, capsys):
        status = main(["verify", "racah", "--config", config_file])
        data = json.loads(capsys.readouterr().out)
        assert status in (EXIT_OK, EXIT_PAPER_CLAIM)
        assert data["command"] == "verify"
        assert data["summary"]["structural_fail"] == 0
        assert data["summary"]["oracle_fail"] == 0

    def test_reports_are_reproducible(self, config_file, tmp_path):
        outputs = []
        for name in ("first.json", "second.json"):
            out = tmp_path / "reports" / name
            main(["verify", "bannai-ito", "--config", config_file, "--trials", "2", "--seed", "17",
                  "--out", str(out)])
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["seed"] == 17

    def test_stated_formula_mismatch_exit_status(self, config_file, monkeypatch, capsys):
        def claim_only(params):
            report = CheckReport()
            report.add(CheckEntry("racah", "claimed", "stated formula", PAPER_CLAIM, FAIL))
            return report

        monkeypatch.setattr("workbench.suite_manager.run_racah_suite", claim_only)
        assert main(["verify", "racah", "--config", config_file]) == EXIT_PAPER_CLAIM

    def test_unknown_suite_is_usage_error(self, config_file):
        with pytest.raises(SystemExit) as info:
            main(["verify", "askey", "--config", config_file])
        assert info.value.code == EXIT_USAGE

    def test_missing_config(self, capsys):
        assert main(["verify", "racah"]) == EXIT_USAGE
        assert "--config" in capsys.readouterr().err


class TestExport:
    def test_multiplication_operator(self, config_file, capsys):
        assert main(["export", "--operator", "X", "--config", config_file]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["0,0,0", "0,17/6,0", "0,0,23/3"]

    def test_write_to_file(self, config_file, tmp_path):
        out = tmp_path / "B1.csv"
        assert main(["export", "--operator", "B1", "--config", config_file, "--out", str(out)]) == EXIT_OK
        assert len(out.read_text(encoding="utf-8").splitlines()) == 4

    def test_unknown_operator(self, config_file, capsys):
        assert main(["export", "--operator", "K9", "--config", config_file]) == EXIT_USAGE
        assert "K9" in capsys.readouterr().err

    def test_degenerate_grid(self, tmp_path, capsys):
        path = tmp_path / "degenerate.conf"
        path.write_text("[racah]\nbeta = 1/2\ngamma = 0\ndelta = 0\nN = 2\n", encoding="utf-8")
        assert main(["export", "--operator", "Y", "--config", str(path)]) == EXIT_USAGE
        assert "θ+0=0" in capsys.readouterr().err


class TestFit:
    def test_solved(self, config_file, relations_file, capsys):
        rel = relations_file("gens X Y\nscalars c\nr: [Y, X] = c [Y, X]\n")
        assert main(["fit", "--relations", rel, "--config", config_file]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["realization"] == "racah"
        assert data["fit"]["status"] == "solved"
        assert data["fit"]["values"]["c"] == "1"

    def test_inconsistent_relation(self, config_file, relations_file, capsys):
        rel = relations_file("gens X Y\nscalars c\nr: X Y = Y X + c\n")
        status = main(["fit", "--relations", rel, "--config", config_file, "--known", "c=0"])
        assert status == EXIT_FAILURE
        data = json.loads(capsys.readouterr().out)
        assert data["fit"]["status"] == "no_solution"
        assert data["fit"]["witness"]["relation"] == "r"

    def test_chosen_realization(self, config_file, relations_file, capsys):
        rel = relations_file("gens X W Z\nr: Z = {X, W}\n")
        status = main(["fit", "--relations", rel, "--config", config_file, "--realization", "heun_bi"])
        assert status == EXIT_OK
        assert json.loads(capsys.readouterr().out)["realization"] == "heun_bi"

    def test_parse_error_is_usage_error(self, config_file, relations_file, capsys):
        rel = relations_file("gens X Y\nr: X Y = = Y\n")
        assert main(["fit", "--relations", rel, "--config", config_file]) == EXIT_USAGE
        assert "2:" in capsys.readouterr().err

    def test_missing_relations_file(self, config_file, tmp_path):
        missing = str(tmp_path / "missing.rel")
        assert main(["fit", "--relations", missing, "--config", config_file]) == EXIT_USAGE

    def test_bad_known_value(self, config_file, relations_file):
        rel = relations_file("gens X Y\nscalars c\nr: X Y = Y X + c\n")
        assert main(["fit", "--relations", rel, "--config", config_file, "--known", "c"]) == EXIT_USAGE
        assert main(["fit", "--relations", rel, "--config", config_file, "--known", "d=1"]) == EXIT_USAGE


def test_upsilon_fit(config_file, capsys):
    status = main(["upsilon-fit", "--config", config_file])
    data = json.loads(capsys.readouterr().out)
    assert status != EXIT_USAGE
    assert data["command"] == "upsilon-fit"
    assert "upsilon.restricted" in data["fitted_constants"]


def test_unknown_log_level(config_file):
    assert main(["--log-level", "chatty", "verify", "racah", "--config", config_file]) == EXIT_USAGE
