import pytest

from sylowcover import CriterionOutcome, DecisionReport, DomainError


def sample_report():
    return DecisionReport(
        group="S_4",
        order=24,
        p=2,
        verdict="not-redundant",
        method="brute-force",
        witness="(1,2)",
        nu_p=3,
        criteria=[
            CriterionOutcome("ti-sylow", True, "inconclusive", {"largest_pairwise_intersection": 4}),
            CriterionOutcome("small-nu", False, "inconclusive", {"reason": "nu too large"}),
        ],
        elapsed_ms=1.25,
    )


def test_json_round_trip():
    report = sample_report()
    assert DecisionReport.from_json(report.to_json()) == report


def test_round_trip_without_witness():
    report = DecisionReport(
        group="g108", order=108, p=2, verdict="redundant", method="brute-force",
        witness=None, nu_p=27, criteria=[], elapsed_ms=0.5,
    )
    assert DecisionReport.from_json(report.to_json()) == report


def test_witness_requires_not_redundant():
    with pytest.raises(DomainError):
        DecisionReport(
            group="X", order=1, p=2, verdict="redundant", method="brute-force",
            witness="(1,2)", nu_p=1, criteria=[], elapsed_ms=0.0,
        )


def test_bruteforce_requires_nu():
    with pytest.raises(DomainError):
        DecisionReport(
            group="X", order=1, p=2, verdict="redundant", method="brute-force",
            witness=None, nu_p=None, criteria=[], elapsed_ms=0.0,
        )


def test_bad_verdict_rejected():
    with pytest.raises(DomainError):
        DecisionReport(
            group="X", order=1, p=2, verdict="maybe", method="theorem-B",
            witness=None, nu_p=None, criteria=[], elapsed_ms=0.0,
        )


def test_inapplicable_criterion_must_be_inconclusive():
    with pytest.raises(DomainError):
        CriterionOutcome("ti-sylow", False, "implies-redundant", {})


def test_text_rendering_mentions_the_essentials():
    text = sample_report().to_text()
    assert "S_4" in text and "not-redundant" in text and "(1,2)" in text and "nu_p" in text
