from dataclasses import replace

import pytest

from secatbounds.config import Settings
from secatbounds.core import SuiteResult, Verifier, verify_report
from secatbounds.errors import CapExceededError, VerificationError
from secatbounds.groups import by_name, normal_subgroups, small_groups


def test_golden_bounds_pass():
    (result,) = Verifier(Settings()).run(["golden_bounds"])
    assert result.status == "pass"
    assert result.checks >= 40
    assert not result.failures


def test_suites_on_one_group():
    results = Verifier(Settings(), by_name("Z3")).run(
        ["resolution_exactness", "bar_oracle", "crossed_hom", "canonical_class", "shapiro_e0"])
    assert all(r.status == "pass" for r in results), [r.to_dict() for r in results if r.failures]


def test_budget_skips_instead_of_failing():
    settings = Settings()
    settings = replace(settings, verify=replace(settings.verify, max_cochain_rank=1))
    (result,) = Verifier(settings, by_name("S3")).run(["bar_oracle"])
    assert result.ok
    assert result.skipped


def test_failures_and_skips_are_recorded():
    verifier = Verifier(Settings())
    result = SuiteResult("demo")

    def broken():
        raise VerificationError("no", {"g": "x"})

    def huge():
        raise CapExceededError("max_rank", 10, 5)

    verifier._attempt(result, "broken", broken)
    verifier._attempt(result, "huge", huge)
    verifier._attempt(result, "false", lambda: (False, {"why": 1}))
    verifier._attempt(result, "true", lambda: True)
    result.finish()
    assert result.status == "fail"
    assert result.checks == 3
    assert [f["instance"] for f in result.failures] == ["broken", "false"]
    assert result.failures[0]["counterexample"] == {"g": "x"}
    assert len(result.skipped) == 1
    report = verify_report([result, SuiteResult("empty").finish()])
    assert report["status"] == "fail"
    assert report["summary"][1]["status"] == "skipped"


GRID_SUITES = ["resolution_exactness", "bar_oracle", "diagonal_family", "shapiro_e0", "exact_couple"]


@pytest.mark.parametrize("G", [G for G in small_groups(4) if G.order > 1], ids=lambda G: G.name)
def test_default_budget_covers_small_groups(G):
    results = Verifier(Settings(), G).run(GRID_SUITES)
    assert [r.status for r in results] == ["pass"] * len(GRID_SUITES), [r.to_dict() for r in results]
    assert verify_report(results)["skipped"] == 0


def test_default_budget_reaches_degree_three():
    (result,) = Verifier(Settings(), by_name("Z4")).run(["bar_oracle"])
    # Z, ZG and I for the two proper subgroups, each in degrees 0..3
    assert result.checks == 4 * 4
    assert not result.skipped


def test_pullback_suite_on_one_group():
    D4 = by_name("D4")
    (result,) = Verifier(Settings(), D4).run(["pullback"])
    assert result.status == "pass", result.to_dict()
    assert result.checks == len(normal_subgroups(D4)) == 6


def test_pullback_suite_over_catalog():
    (result,) = Verifier(Settings()).run(["pullback"])
    assert result.status == "pass", result.to_dict()
    assert not result.skipped
    assert result.checks >= len(small_groups(12))
