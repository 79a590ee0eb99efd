"""test verify"""

import pytest

from checks.check_all import check_dic, suites
from eulerian_report import VerificationReport, make_report, reports_to_json
from eulerian_settings import EulerianSettings
from exactpoly import ST, CapExceededError, Polynomial
from verify import (
    check_crs,
    check_crs_tau,
    check_crs_tau_all,
    check_cyclic,
    check_dumont,
    check_gamma_recurrence,
    check_invseq,
    check_klein,
    check_normalization,
    check_oracle_two_sided,
    check_oracle_typeB,
    check_reversal,
    check_rotation_lemma,
    check_symmetry,
    check_tau_independence,
    check_typeB_series,
    check_typeB_series_all,
    run_suite,
    summarize,
)


def test_series_identities():
    """test the series identities for A_n, A_n^(k) and B_n^(k)"""

    for n in range(1, 6):
        report = check_crs(n)
        assert report.passed, report.witness
        assert report.params == {"n": n, "I": n + 4, "J": n + 4}
    assert check_crs(3, 12, 5).params["I"] == 12

    report = check_crs_tau(3, (3, 2, 1))
    assert report.passed
    assert report.params["k"] == 3
    for n in range(1, 5):
        assert check_crs_tau_all(n).passed

    report = check_typeB_series(2, (-2, 1))
    assert report.passed
    assert report.params["tau"] == "-2,1"
    assert check_typeB_series(3).params["k"] == 1
    for n in range(1, 4):
        assert check_typeB_series_all(n).passed


def test_cyclic_and_rotation():
    """test (n+1) A_n = cyclic descent polynomial and the rotation lemma"""

    for n in range(1, 6):
        assert check_cyclic(n).passed
    for n in range(2, 7):
        assert check_rotation_lemma(n).passed
    with pytest.raises(ValueError):
        check_rotation_lemma(1)


def test_conjecture_checks():
    """test tau independence and the inversion sequence conjecture"""

    report = check_tau_independence(3)
    assert report.passed
    assert report.kind == "conjecture"
    assert report.details["group_sizes"] == {"0": 1, "1": 4, "2": 1}
    assert check_tau_independence(4).passed

    for n in range(1, 7):
        report = check_invseq(n)
        assert report.passed, report.witness
        assert report.details["symmetric"]


def test_klein_and_reversal(settings):
    """test the Klein four-group symmetry and the reversal identity"""

    for n in range(1, 10):
        report = check_klein(n)
        assert report.passed, report.witness
        if n >= 4:
            assert not report.details["fully_symmetric"]
    assert check_klein(1).details["fully_symmetric"]

    for n in range(1, 7):
        report = check_reversal(n)
        assert report.passed, report.witness
        assert report.details["oracle_checked"]
    assert not check_reversal(10, settings).details["oracle_checked"]


def test_oracles_and_symmetry():
    """test recurrence vs brute force, Dumont and the s,t symmetries"""

    for n in range(1, 7):
        assert check_oracle_two_sided(n).passed
        assert check_dumont(n).passed
    for n in range(1, 9):
        assert check_symmetry(n).passed
    for n in range(1, 5):
        assert check_oracle_typeB(n).passed
    for n in range(1, 9):
        assert check_gamma_recurrence(n).passed


@pytest.mark.slow
def test_checks_at_full_bounds():
    """test the exhaustive checks at the top of their enumeration range"""

    for n in (7, 8):
        report = check_oracle_two_sided(n)
        assert report.passed, report.witness
    for n in (6, 7):
        assert check_rotation_lemma(n).passed
    assert check_cyclic(6).passed
    for n in (5, 6):
        report = check_tau_independence(n)
        assert report.passed, report.witness
    for n in (7, 8, 9):
        report = check_invseq(n)
        assert report.passed, report.witness
        if n <= 8:
            assert report.details["symmetric"]


def test_normalization():
    """test every family sums to its cardinality"""

    report = check_normalization(5)
    assert report.passed, report.witness
    assert report.details["skipped"] == []
    assert "two-sided" in report.details["checked"]

    report = check_normalization(1)
    assert report.details["skipped"] == ["cyclic"]

    report = check_normalization(5, EulerianSettings(max_n=4))
    assert report.passed
    assert report.details["checked"] == []
    assert "type-B-tau" in report.details["skipped"]


def test_failure_carries_witness(mocker):
    """test a broken generator turns into a fail with a witness"""

    mocker.patch("verify.rec_two_sided", return_value=Polynomial(ST, {(1, 2): 1}))
    report = check_symmetry(2)
    assert report.outcome == "fail"
    assert report.witness.startswith("coefficient of")

    report = check_crs(2)
    assert not report.passed
    assert report.witness.startswith("coefficient of s^")


def test_report_model():
    """test the pass/fail witness rule and the JSON contract"""

    with pytest.raises(ValueError):
        VerificationReport(check="check_crs", outcome="fail")
    with pytest.raises(ValueError):
        VerificationReport(check="check_crs", outcome="pass", witness="x")

    reports = [
        make_report("b", {"n": 10}, None),
        make_report("b", {"n": 2}, "w"),
        make_report("a", {"n": 3}, None, kind="conjecture"),
    ]
    data = reports_to_json(reports)
    assert [(r["check"], r["params"]["n"]) for r in data] == [("a", 3), ("b", 2), ("b", 10)]
    assert set(data[0]) == {"check", "params", "outcome", "witness", "ms", "kind", "details"}


def test_registry():
    """test the check registry and suites"""

    assert set(suites["all"]) == set(suites["theorems"]) | set(suites["conjectures"])
    assert not set(suites["theorems"]) & set(suites["conjectures"])
    assert all(check_dic[name].kind == "conjecture" for name in suites["conjectures"])
    assert check_dic["check_cyclic"].cap(EulerianSettings()) == 10
    assert check_dic["check_cyclic"].cap(EulerianSettings(max_n=6)) == 5
    assert check_dic["check_gessel"].cap(EulerianSettings()) == 40
    assert check_dic["check_typeB_series"].cap(EulerianSettings()) == 4
    assert check_dic["check_crs_tau"].cap(EulerianSettings()) == 6
    assert check_dic["check_crs_tau"].cap(EulerianSettings(max_n=5)) == 5


def test_run_suite_order_and_skips():
    """test ordering by check then n, and skipped reports beyond the cap"""

    reports = run_suite(["check_symmetry", "check_dumont"], max_n=3)
    assert [(r.check, r.params["n"]) for r in reports] == [
        ("check_dumont", 1),
        ("check_dumont", 2),
        ("check_dumont", 3),
        ("check_symmetry", 1),
        ("check_symmetry", 2),
        ("check_symmetry", 3),
    ]
    assert all(r.passed for r in reports)

    reports = run_suite(["check_oracle_typeB"], max_n=6, settings=EulerianSettings(max_n=4))
    assert [r.outcome for r in reports] == ["pass"] * 4 + ["skipped"] * 2
    assert "outside valid region" in reports[-1].details["reason"]

    reports = run_suite(["check_typeB_series"], max_n=6)
    assert [r.outcome for r in reports] == ["pass"] * 4 + ["skipped"] * 2
    assert reports[-1].details["reason"] == "n = 6 outside valid region 1..4"

    reports = run_suite(["check_rotation_lemma"], max_n=3)
    assert [r.params["n"] for r in reports] == [2, 3]

    with pytest.raises(KeyError):
        run_suite(["check_nothing"])


def test_run_suite_hooks(mocker):
    """test before/after hooks bracket the check they name"""

    events = []
    settings = EulerianSettings(
        before_check=lambda name, params: events.append(("before", params["n"])),
        after_check=lambda name, outcome, duration: events.append(("after", outcome)),
    )
    run_suite(["check_symmetry"], max_n=3, workers=1, settings=settings)
    assert events == [
        ("before", 1),
        ("after", "pass"),
        ("before", 2),
        ("after", "pass"),
        ("before", 3),
        ("after", "pass"),
    ]

    events.clear()
    run_suite(["check_symmetry"], max_n=3, workers=2, settings=settings)
    assert events == [
        ("before", 1),
        ("before", 2),
        ("after", "pass"),
        ("after", "pass"),
        ("before", 3),
        ("after", "pass"),
    ]

    before_check = mocker.Mock()
    after_check = mocker.Mock()
    settings = EulerianSettings(before_check=before_check, after_check=after_check)

    run_suite(["check_symmetry"], max_n=2, settings=settings)

    assert before_check.call_count == 2
    before_check.assert_any_call("check_symmetry", {"n": 1})
    before_check.assert_any_call("check_symmetry", {"n": 2})
    assert after_check.call_count == 2
    name, outcome, duration = after_check.call_args.args
    assert (name, outcome) == ("check_symmetry", "pass")
    assert isinstance(duration, int)


def test_run_suite_workers():
    """test the suite result does not depend on the worker count"""

    names = ["check_klein", "check_invseq", "check_cyclic"]
    single = run_suite(names, max_n=4, workers=1)
    multi = run_suite(names, max_n=4, workers=2)
    assert [(r.check, r.params, r.outcome, r.details) for r in single] == [
        (r.check, r.params, r.outcome, r.details) for r in multi
    ]


def test_summarize():
    """test counts and theorem-class failures"""

    reports = [
        make_report("check_crs", {"n": 1}, None),
        make_report("check_crs", {"n": 2}, "bad"),
        make_report("check_gessel", {"n": 3}, "negative", kind="conjecture"),
        VerificationReport(check="check_crs", params={"n": 50}, outcome="skipped"),
    ]
    summary = summarize(reports)
    assert summary["counts"] == {"pass": 1, "fail": 2, "skipped": 1}
    assert summary["theorem_failures"] == ["check_crs"]


def test_caps():
    """test checks refuse n beyond their enumeration cap"""

    with pytest.raises(CapExceededError):
        check_crs_tau_all(12)
    with pytest.raises(CapExceededError):
        check_typeB_series_all(3, EulerianSettings(max_n=2))
    with pytest.raises(CapExceededError):
        check_cyclic(11)
