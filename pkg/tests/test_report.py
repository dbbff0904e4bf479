# -*- coding: utf-8 -*-

import json

from osp_rops.core.report import (
    REPORT_VERSION,
    IdentityCheck,
    SuiteReport,
    VerificationReport,
    combine_status,
)


def test_combine_status_precedence():
    assert combine_status(["pass", "skipped"]) == "pass"
    assert combine_status(["pass", "inconclusive"]) == "inconclusive"
    assert combine_status(["inconclusive", "fail", "pass"]) == "fail"
    assert combine_status([]) == "skipped"


def test_failed_check_always_carries_a_witness():
    check = IdentityCheck.failed("K12K12=omega*K12", indices=[[0, 1], [1, 0]], expected="-1", actual="1")
    assert check.witness is not None
    assert check.witness.to_dict() == {
        "identity": "K12K12=omega*K12",
        "indices": [[0, 1], [1, 0]],
        "expected": "-1",
        "actual": "1",
    }
    assert IdentityCheck.from_witness("x", None).status == "pass"
    assert IdentityCheck.from_witness("x", {"indices": [1]}).witness.identity == "x"


def test_suite_report_counts_and_witnesses():
    report = SuiteReport.from_checks(
        "demo",
        [
            IdentityCheck.passed("a"),
            IdentityCheck.skipped("b", "omega = 0"),
            IdentityCheck.inconclusive("c", "not settled", indices=["1/3"]),
        ],
    )
    assert report.status == "inconclusive"
    assert report.ok
    assert report.identity_count == 2
    assert [w.identity for w in report.witnesses] == ["c"]
    assert report.check("b").note == "omega = 0"


def test_skipped_suite_keeps_its_note():
    report = SuiteReport.skipped("hermiticity", "no conjugation rule")
    assert report.status == "skipped"
    assert report.to_dict()["notes"] == ["no conjugation rule"]


def test_verification_report_json_shape():
    report = VerificationReport(config={"preset": "osp:1:2"})
    report.suites.append(SuiteReport.from_checks("brauer", [IdentityCheck.passed("s1^2=1")]))
    payload = json.loads(report.to_json())
    assert payload["version"] == REPORT_VERSION
    assert payload["overall"] == "pass"
    assert payload["suites"][0]["name"] == "brauer"
    assert "wall_time" in payload["suites"][0]
    assert "wall_time" not in json.loads(report.to_json(include_timing=False))["suites"][0]


def test_stability_hash_ignores_timing():
    first = VerificationReport(config={"cutoff": 4})
    second = VerificationReport(config={"cutoff": 4})
    first.suites.append(SuiteReport("pk", [IdentityCheck.passed("P12=P21")], wall_time=0.5))
    second.suites.append(SuiteReport("pk", [IdentityCheck.passed("P12=P21")], wall_time=9.0))
    assert first.stability_hash() == second.stability_hash()
    second.suites.append(SuiteReport("extra", [IdentityCheck.failed("x")]))
    assert first.stability_hash() != second.stability_hash()
    assert second.overall == "fail"
