import pytest

from alphaharm.errors import DomainError
from alphaharm.jsonio import canonical_json
from alphaharm.verify import SUITES, RunReport, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_is_green(suite):
    rep = run_suite(suite, seed=7)
    assert rep.failures == 0, rep.details
    assert rep.cases > 0
    assert rep.suite == suite and rep.seed == 7


def test_reports_are_byte_stable():
    a = canonical_json(run_suite("zeros", seed=3))
    b = canonical_json(run_suite("zeros", seed=3))
    assert a == b
    # a different seed draws different cases, hence different residual bytes
    c = canonical_json(run_suite("zeros", seed=4))
    assert a != c


def test_aggregate_suite():
    total = run_suite("all", seed=7)
    parts = [run_suite(s, seed=7) for s in SUITES]
    assert total.cases == sum(p.cases for p in parts)
    assert total.failures == 0
    assert total.max_residual == max(p.max_residual for p in parts)


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        run_suite("nope")


def test_tightened_tolerance_reports_failures():
    # an absurd tolerance must surface failures rather than being clamped
    rep = run_suite("hypergeom", seed=7, tol=0.0)
    assert rep.failures > 0
    assert rep.details and len(rep.details) <= 25


def test_report_bookkeeping():
    rep = RunReport(suite="demo", seed=1)
    rep.check("ok", 1e-12, 1e-10)
    rep.check("bad", 1.0, 1e-10)
    rep.expect("seen", True)
    rep.expect("missed", False)
    assert (rep.cases, rep.failures) == (4, 2)
    assert rep.max_residual == 1.0
    assert rep.details == ["bad: residual 1.000e+00 > 1.0e-10", "missed"]
    obj = rep.to_json_obj()
    assert obj["cases"] == 4 and obj["failures"] == 2
