"""
検証レポートのテスト
"""

import json
from fractions import Fraction

import pytest

from checks import (FAIL, ORACLE, PAPER_CLAIM, PASS, SKIPPED, STRUCTURAL, CheckEntry, CheckReport,
                    equality_entry, matrix_witness, residual_entry, skipped_entry, value_entry)
from exact import RatMatrix


def entry(category=STRUCTURAL, verdict=PASS, check="c"):
    return CheckEntry("s", check, "", category, verdict)


class TestCheckEntry:
    def test_rejects_unknown_category(self):
        with pytest.raises(ValueError):
            CheckEntry("s", "c", "", "other", PASS)

    def test_rejects_unknown_verdict(self):
        with pytest.raises(ValueError):
            CheckEntry("s", "c", "", ORACLE, "maybe")

    def test_to_dict_omits_empty_fields(self):
        data = entry().to_dict()
        assert "witness" not in data and "note" not in data


class TestEntryBuilders:
    def test_residual_zero_passes(self):
        assert residual_entry("s", "c", "", STRUCTURAL, RatMatrix.zeros(2)).verdict == PASS

    def test_residual_witness_is_first_nonzero(self):
        residual = RatMatrix([[0, 0], [Fraction(-1, 2), 3]])
        result = residual_entry("s", "c", "", STRUCTURAL, residual)
        assert result.verdict == FAIL
        assert result.witness == {"row": 1, "col": 0, "value": "-1/2"}

    def test_equality_entry(self):
        same = RatMatrix.identity(2)
        assert equality_entry("s", "c", "", ORACLE, same, same).passed
        assert matrix_witness(RatMatrix.zeros(3)) is None

    def test_value_entry_keeps_both_values(self):
        result = value_entry("s", "c", "", PAPER_CLAIM, Fraction(41, 6), Fraction(23, 3))
        assert result.verdict == FAIL
        assert result.witness == {"claimed": "41/6", "observed": "23/3"}

    def test_value_entry_dicts(self):
        claimed = {"a1": Fraction(-2), "a2": Fraction(-2)}
        assert value_entry("s", "c", "", ORACLE, claimed, dict(claimed)).passed

    def test_skipped_entry(self):
        result = skipped_entry("s", "c", "", STRUCTURAL, "パラメータなし")
        assert result.verdict == SKIPPED
        assert result.note == "パラメータなし"


class TestCheckReport:
    def test_exit_status_all_pass(self):
        report = CheckReport([entry(), entry(ORACLE)])
        assert report.exit_status() == 0

    def test_exit_status_structural_failure(self):
        report = CheckReport([entry(PAPER_CLAIM, FAIL), entry(STRUCTURAL, FAIL)])
        assert report.exit_status() == 1

    def test_exit_status_oracle_failure(self):
        assert CheckReport([entry(ORACLE, FAIL)]).exit_status() == 1

    def test_exit_status_stated_formula_only(self):
        report = CheckReport([entry(), entry(PAPER_CLAIM, FAIL)])
        assert report.exit_status() == 2

    def test_skipped_does_not_fail(self):
        assert CheckReport([entry(verdict=SKIPPED)]).exit_status() == 0

    def test_summary_counts(self):
        report = CheckReport()
        report.extend([entry(), entry(ORACLE, FAIL), entry(verdict=SKIPPED)])
        summary = report.summary()
        assert summary["total"] == 3
        assert (summary["pass"], summary["fail"], summary["skipped"]) == (1, 1, 1)
        assert summary["oracle_fail"] == 1
        assert summary["structural_fail"] == 0

    def test_merge_sets_trial_and_prefixes_constants(self):
        inner = CheckReport([entry(check="x")])
        inner.record_constants("racah", {"a1": Fraction(-2)})
        outer = CheckReport()
        outer.merge(inner, trial=3, key_prefix="racah[3].")
        assert outer.entries[0].trial == 3
        assert outer.fitted_constants == {"racah[3].racah": {"a1": "-2"}}

    def test_find(self):
        report = CheckReport([entry(check="a"), entry(check="b")])
        assert len(report.find("a")) == 1
        assert report.find("a", suite="other") == []

    def test_json_is_sorted_and_stable(self):
        report = CheckReport([entry(check="b"), entry(check="a")])
        first = report.to_json(extra={"command": "verify"})
        data = json.loads(first)
        assert [e["check"] for e in data["entries"]] == ["a", "b"]
        assert data["command"] == "verify"
        assert first == report.to_json(extra={"command": "verify"})
