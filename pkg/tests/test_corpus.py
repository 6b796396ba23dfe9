"""Integration suite: every expected fact of every corpus entry holds."""

import pytest

from cmcsurf import (
    classify_quadric,
    cmc_obstruction_audit,
    compactness_bound,
    is_cmc,
    leading_form_verdict,
    quadric_regularity,
)
from cmcsurf.corpus import CORPUS, get_entry


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_quadric_kind(entry):
    p = entry.polynomial()
    expected = entry.expected["quadric_kind"]
    if expected is None:
        assert p.degree > 2
        return
    cls = classify_quadric(p)
    assert cls.kind == expected
    if "radius_sq" in entry.expected:
        assert cls.radius_sq == entry.expected["radius_sq"]
    if "k" in entry.expected:
        assert cls.k == entry.expected["k"]


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_cmc_verdict_and_constant(entry):
    p = entry.polynomial()
    report = is_cmc(p, seed=0)
    assert report.verdict == entry.expected["cmc_verdict"]
    if "c" in entry.expected:
        assert report.c_exact == entry.expected["c"]
    if report.certificate is not None:
        from cmcsurf import cmc_defect

        assert report.certificate * p == cmc_defect(p, report.c_exact)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_regularity(entry):
    p = entry.polynomial()
    if p.degree <= 2:
        assert quadric_regularity(p).status == entry.expected["regularity"]
    else:
        report = is_cmc(p, seed=0)
        assert all(s.gradient_norm >= 1e-6 for s in report.samples)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_leading_form(entry):
    verdict = leading_form_verdict(entry.polynomial(), seed=0)
    assert verdict.kind == entry.expected["leading_form"]


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_compactness(entry):
    bound = compactness_bound(entry.polynomial(), seed=0)
    assert (bound is not None) == entry.expected["compact"]


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_audit_no_violations(entry):
    p = entry.polynomial()
    findings = cmc_obstruction_audit(p, is_cmc(p, seed=0))
    assert all(f.severity != "violation" for f in findings)


def test_get_entry_and_unknown():
    assert get_entry("unit-sphere-3d").dim == 3
    with pytest.raises(KeyError):
        get_entry("does-not-exist")
