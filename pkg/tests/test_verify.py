"""The check harness itself: reports, determinism, failure detection."""

import re

import pytest

from bhfix.limits import Tower
from bhfix.standard_dilators import (
    ConstantDilator,
    IdentityDilator,
    OmegaPowerDilator,
    SuccessorDilator,
)
from bhfix.systems import System
from bhfix.verify import (
    Budgets,
    check_commuting_square,
    check_dilator_laws,
    check_goodness,
    check_theta_linear,
    erase_supports,
    run_suite,
)

_HEAD = re.compile(r"^CHECK \S+ (pass|fail) instances=\d+ exhaustive=(true|false)$")


def test_report_line_format():
    report = check_dilator_laws(SuccessorDilator(), 3, 20)
    head = report.format().splitlines()[0]
    assert _HEAD.match(head), head


def test_successor_suites_all_pass():
    reports = run_suite(SuccessorDilator(), "all", Budgets(terms=20, sample_cap=20))
    assert reports == sorted(reports, key=lambda r: r.name)
    for report in reports:
        assert report.passed, report.format()


def test_omega_suites_all_pass():
    reports = run_suite(
        OmegaPowerDilator(), "all", Budgets(tokens=20, terms=15, sample_cap=15)
    )
    for report in reports:
        assert report.passed, report.format()


def test_broken_dilator_fails_with_counterexample():
    # erasing supports on the identity dilator leaves tokens that cannot
    # factor through the empty inclusion
    broken = erase_supports(IdentityDilator())
    report = check_dilator_laws(broken, 3, 10)
    assert not report.passed
    assert any("factorization" in line for line in report.failures)


def test_corrupted_length_fails_goodness():
    succ = SuccessorDilator()
    tower = Tower(succ)
    sys1 = tower.stage(1)
    bad = System(succ, sys1.carrier, length_of=lambda t: t.length + 1, label="bad")
    bad._embed_of = lambda x: bad.collapse(x.body)
    report = check_goodness(bad, 10)
    assert not report.passed
    assert any("length equation" in line for line in report.failures)


def test_reports_are_deterministic():
    om = OmegaPowerDilator()
    a = check_theta_linear(Tower(om).stage(1), 25)
    b = check_theta_linear(Tower(om).stage(1), 25)
    assert a == b


def test_exhaustive_flag_reflects_enumeration():
    succ_report = check_theta_linear(Tower(SuccessorDilator()).stage(1), 10)
    om_report = check_theta_linear(Tower(OmegaPowerDilator()).stage(1), 10)
    assert succ_report.exhaustive
    assert not om_report.exhaustive


def test_empty_token_order_passes_vacuously():
    tower = Tower(ConstantDilator(0))
    report = check_commuting_square(tower.stage(0), 10)
    assert report.passed and report.instances == 0 and report.exhaustive


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite(SuccessorDilator(), "bogus")


def test_failure_lines_use_term_grammar():
    # a corrupted stage system reports counterexamples as serialized terms
    succ = SuccessorDilator()
    tower = Tower(succ)
    sys1 = tower.stage(1)
    bad = System(succ, sys1.carrier, length_of=lambda t: 0, label="bad")
    bad._embed_of = lambda x: bad.collapse(x.body)
    report = check_goodness(bad, 10)
    assert not report.passed
    assert any("th(" in line or "length" in line for line in report.failures)


def test_failure_overflow_is_capped():
    broken = erase_supports(OmegaPowerDilator())
    report = check_dilator_laws(broken, 3, 30)
    assert not report.passed
    assert len(report.failures) <= 13  # recorded failures plus the summary line
