"""
検証スイート統合実行のテスト
"""

import pytest

from algebras import PreconditionError
from checks import FAIL, ORACLE, PASS, SKIPPED, STRUCTURAL, CheckEntry, CheckReport
from workbench import ConfigError, SuiteManager, normalize_suite_name, parse_settings

RACAH_CONFIG = """
[racah]
alpha = -3
beta = 1/2
gamma = 1/2
delta = 1/3
N = 2
"""

BI_CONFIG = """
[bannai_ito]
rho1 = -7/3
rho2 = 1/3
r1 = 1/5
r2 = 2/7
N = 3
case = odd_rho
"""


def structural_failures(report):
    return [e for e in report.entries if e.verdict == FAIL and e.category in (STRUCTURAL, ORACLE)]


def test_normalize_suite_name():
    assert normalize_suite_name("Heun-Racah") == "heun_racah"


class TestSelection:
    def test_sections_select_suites(self):
        manager = SuiteManager(parse_settings(RACAH_CONFIG))
        assert manager.selected_suites() == ["racah", "heun_racah"]

    def test_unknown_suite(self):
        with pytest.raises(ConfigError, match="不明なスイート"):
            SuiteManager(parse_settings(RACAH_CONFIG)).run(["racah", "askey"])

    def test_bad_fixed_parameters_fail_before_running(self):
        manager = SuiteManager(parse_settings(RACAH_CONFIG.replace("alpha = -3", "alpha = -2")))
        with pytest.raises(ConfigError):
            manager.run(["racah"])
        assert manager.stats["processed_count"] == 0


class TestFixedTrial:
    def test_racah_fixed_parameters(self):
        report = SuiteManager(parse_settings(RACAH_CONFIG)).run(["racah"])
        assert structural_failures(report) == []
        assert {e.trial for e in report.entries} == {0}
        assert report.fitted_constants["racah[0].racah.params"]["alpha"] == "-3"

    def test_bannai_ito_fixed_parameters(self):
        report = SuiteManager(parse_settings(BI_CONFIG)).run(["bannai_ito"])
        assert structural_failures(report) == []
        assert report.find("realization_closure")[0].verdict == PASS

    def test_missing_parameters_without_trials(self):
        report = SuiteManager(parse_settings("")).run(["heun_bi"])
        (entry,) = report.entries
        assert entry.check == "fixed_parameters"
        assert entry.verdict == SKIPPED
        assert report.exit_status() == 0

    def test_trial_error_is_recorded(self, monkeypatch):
        def broken(params):
            raise PreconditionError("壊れた試行")

        monkeypatch.setattr("workbench.suite_manager.run_racah_suite", broken)
        manager = SuiteManager(parse_settings(RACAH_CONFIG))
        report = manager.run(["racah"])
        (entry,) = report.find("trial_error")
        assert entry.verdict == FAIL and entry.category == STRUCTURAL
        assert entry.witness == {"error": "PreconditionError"}
        assert report.exit_status() == 1
        stats = manager.get_processing_statistics()
        assert stats["error_count"] == 1
        assert stats["success_rate_percent"] == 0


class TestSampledTrials:
    def test_trials_are_numbered(self):
        settings = parse_settings(RACAH_CONFIG + "[sampling]\nseed = 4\ntrials = 2\nn_max = 3\n")
        manager = SuiteManager(settings)
        report = manager.run(["racah"])
        assert {e.trial for e in report.entries} == {0, 1, 2}
        assert "racah[2].racah.params" in report.fitted_constants
        assert manager.stats["processed_count"] == 3

    def test_same_seed_same_report(self):
        text = "[sampling]\nseed = 9\ntrials = 2\nn_max = 3\n"
        first = SuiteManager(parse_settings(text)).run(["racah", "bannai_ito"])
        second = SuiteManager(parse_settings(text)).run(["racah", "bannai_ito"])
        assert first.to_json() == second.to_json()

    def test_stated_formula_failures_only(self, monkeypatch):
        def claim_only(params):
            report = CheckReport()
            report.add(CheckEntry("racah", "claimed", "stated formula", "paper-claim", FAIL))
            return report

        monkeypatch.setattr("workbench.suite_manager.run_racah_suite", claim_only)
        report = SuiteManager(parse_settings(RACAH_CONFIG)).run(["racah"])
        assert report.exit_status() == 2

    def test_sampled_tau_covers_degenerate_lines(self, monkeypatch):
        seen = []

        def capture(params, tau, free):
            seen.append(tau)
            return CheckReport()

        monkeypatch.setattr("workbench.suite_manager.run_heun_racah_suite", capture)
        SuiteManager(parse_settings("[sampling]\nseed = 2\ntrials = 3\nn_max = 3\n")).run(["heun_racah"])
        assert len(seen) == 3
        assert any(t.tau1 != 0 and t.tau1 + t.tau2 == 0 for t in seen)
        assert any(t.tau1 != 0 and t.tau1 == t.tau2 for t in seen)
