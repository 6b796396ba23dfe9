import random
import zlib

import numpy as np
import pytest

from cmcsurf import (
    BallCertificate,
    BallSearchError,
    BoundedRegionLikely,
    Polynomial,
    VarConvention,
    cmc_obstruction_audit,
    compactness_bound,
    find_sign_ball,
    homogeneous_parts,
    is_cmc,
    leading_form_verdict,
    parse,
    tail_bound_t0,
)
from cmcsurf.asymptotics import validate_ball
from cmcsurf.corpus import CORPUS

C3 = VarConvention("named", 3)


def _sphere_dirs(dim, n, seed):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((n, dim))
    return v / np.linalg.norm(v, axis=1)[:, None]


# -- sign verdicts ---------------------------------------------------------------


def test_identity_form_psd_exact():
    v = leading_form_verdict(parse("x^2 + y^2 + z^2 - 1", C3))
    assert v.kind == "positive_semidefinite"
    assert v.evidence == "exact_quadratic"


def test_hyperbolic_indefinite_with_witnesses():
    v = leading_form_verdict(parse("x^2 - y^2", VarConvention("named", 2)))
    assert v.kind == "indefinite"
    assert v.evidence == "exact_quadratic"
    p2 = parse("x^2 - y^2", VarConvention("named", 2))
    wp = p2.evaluate_many(np.array(v.witness_pos)[None, :])[0]
    wn = p2.evaluate_many(np.array(v.witness_neg)[None, :])[0]
    margin = 1e-12 * float(p2.coeff_l1_norm())
    assert wp > margin and wn < -margin


def test_odd_degree_antipodal_witnesses():
    v = leading_form_verdict(parse("x^3 - 3*x", VarConvention("named", 1)))
    assert v.kind == "indefinite"
    assert v.evidence == "odd_parity"
    assert np.allclose(np.array(v.witness_neg), -np.array(v.witness_pos))


def test_quartic_even_monomial_shortcut():
    p = parse("(x^2 + y^2 + z^2)^2 - 1", C3)
    v = leading_form_verdict(p)
    assert v.kind == "positive_semidefinite"
    assert v.evidence == "even_monomials"


def test_quartic_sampled_indefinite():
    # x^4 - 3 x^2 y^2 + z^4 takes both signs but has even degree and mixed
    # coefficient signs, so only the sampled path can prove indefiniteness
    p = parse("x^4 - 3*x^2*y^2 + z^4", C3)
    v = leading_form_verdict(p)
    assert v.kind == "indefinite"
    assert v.evidence == "sampled"
    form = homogeneous_parts(p).leading
    assert form.evaluate_many(np.array(v.witness_pos)[None, :])[0] > 0
    assert form.evaluate_many(np.array(v.witness_neg)[None, :])[0] < 0


def test_quartic_sampled_inconclusive_never_claims_definite():
    # (x^2+y^2-z^2)^2 is PSD but not an even-monomial sum; sampling cannot
    # prove semidefiniteness, so the verdict must stay inconclusive
    p = parse("(x^2 + y^2 - z^2)^2 + x - 1", C3)
    assert p.degree == 4
    v = leading_form_verdict(p)
    assert v.kind == "inconclusive"
    assert v.evidence == "sampled"
    assert v.n_samples == 10**4 and v.n_descents == 100


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        leading_form_verdict(Polynomial.zero(3))


def test_verdict_deterministic():
    p = parse("x^4 - 3*x^2*y^2 + z^4", C3)
    assert leading_form_verdict(p, seed=4) == leading_form_verdict(p, seed=4)


# -- tail bound -------------------------------------------------------------------


def test_tail_bound_examples():
    assert tail_bound_t0(parse("x^2 + y^2 - 1", VarConvention("named", 2)), 0.01) == 100.0
    assert tail_bound_t0(parse("x^3 + 5*x", VarConvention("named", 1)), 1.0) == 5.0
    assert tail_bound_t0(parse("x^2 + y^2", VarConvention("named", 2)), 0.5) == 1.0


def test_tail_bound_invalid_eps():
    with pytest.raises(ValueError):
        tail_bound_t0(parse("x^2 - 1", VarConvention("named", 1)), 0.0)


def test_tail_bound_soundness_on_corpus():
    for entry in CORPUS:
        p = entry.polynomial()
        decomp = homogeneous_parts(p)
        m = decomp.total_degree
        form = decomp.leading
        if m == 0:
            continue
        for eps in (1.0, 0.1, 0.01):
            t0 = tail_bound_t0(p, eps)
            dirs = _sphere_dirs(p.dim, 1000, seed=zlib.crc32(entry.name.encode()))
            for t in (1.01 * t0, 10.0 * t0):
                lhs = p.evaluate_many(t * dirs) / t**m
                rhs = form.evaluate_many(dirs)
                assert np.max(np.abs(lhs - rhs)) < eps


# -- ball finder ------------------------------------------------------------------


def test_half_space_ball():
    result = find_sign_ball(parse("x", C3), 5.0, seed=0)
    assert isinstance(result, BallCertificate)
    assert result.ball.center[0] >= 6.0
    assert result.ball.sign == "positive"
    ok, _, _ = validate_ball(parse("x", C3), result.ball)
    assert ok


def test_paraboloid_exterior_ball():
    p = parse("x^2 + y^2 - z", C3)
    result = find_sign_ball(p, 10.0, seed=0)
    assert isinstance(result, BallCertificate)
    assert result.ball.sign == "positive"
    ok, _, _ = validate_ball(p, result.ball)
    assert ok


def test_bounded_region_likely_inside_sphere():
    result = find_sign_ball(parse("1 - x^2 - y^2 - z^2", C3), 3.0, sign="positive")
    assert isinstance(result, BoundedRegionLikely)
    assert result.leading_verdict.kind == "negative_semidefinite"


def test_saddle_both_signs():
    p = parse("x^2 - y^2 - 1", C3)
    for sign in ("positive", "negative"):
        result = find_sign_ball(p, 10.0, seed=0, sign=sign)
        assert isinstance(result, BallCertificate)
        assert result.ball.sign == sign
        ok, _, _ = validate_ball(p, result.ball)
        assert ok


def test_ball_geometry_margins():
    p = parse("x^2 + y^2 - z", C3)
    result = find_sign_ball(p, 10.0, seed=0)
    center = np.array(result.ball.center)
    w = np.array(result.cone.w)
    # center clears the tail threshold and every ball point stays in the cone
    assert np.linalg.norm(center) - result.ball.radius > result.cone.t0
    rng = np.random.default_rng(1)
    offsets = rng.standard_normal((1000, 3))
    offsets /= np.linalg.norm(offsets, axis=1)[:, None]
    pts = center[None, :] + offsets * rng.uniform(0, result.ball.radius, size=(1000, 1))
    units = pts / np.linalg.norm(pts, axis=1)[:, None]
    assert np.min(units @ w) >= result.cone.cos_theta - 1e-12
    assert np.min(np.linalg.norm(pts, axis=1)) > result.cone.t0


def test_cone_certificate_cap_condition():
    p = parse("x^2 - y^2 - 1", C3)
    result = find_sign_ball(p, 10.0, seed=0)
    form = homogeneous_parts(p).leading
    w = np.array(result.cone.w)
    sigma = 1.0 if result.ball.sign == "positive" else -1.0
    apex = sigma * float(form.evaluate_many(w[None, :])[0])
    rng = np.random.default_rng(7)
    tangent = rng.standard_normal((1000, 3))
    tangent -= (tangent @ w)[:, None] * w
    tangent /= np.linalg.norm(tangent, axis=1)[:, None]
    theta = np.arccos(result.cone.cos_theta)
    angles = rng.uniform(0, theta, size=1000)
    cap = np.cos(angles)[:, None] * w + np.sin(angles)[:, None] * tangent
    assert np.min(sigma * form.evaluate_many(cap)) > apex / 2


def test_cone_certificate_scaled_closeness():
    # beyond t0 the scaled polynomial stays within the cone margin of its
    # leading form, uniformly over the whole sphere
    for text in ("x", "x^2 + y^2 - z", "x^2 - y^2 - 1"):
        p = parse(text, C3)
        result = find_sign_ball(p, 10.0, seed=0)
        decomp = homogeneous_parts(p)
        m = decomp.total_degree
        dirs = _sphere_dirs(3, 1000, seed=11)
        for t in (2 * result.cone.t0, 10 * result.cone.t0):
            gap = np.abs(
                p.evaluate_many(t * dirs) / t**m - decomp.leading.evaluate_many(dirs)
            )
            assert np.max(gap) < result.cone.margin


def test_heuristic_recursion_flagged():
    # leading form (x-y)^4 is PSD but vanishes on a whole plane and is not
    # recognized exactly; the negative side is anchored at the linear part
    p = parse("(x - y)^4 - z", C3)
    result = find_sign_ball(p, 2.0, seed=0, sign="negative")
    assert isinstance(result, BallCertificate)
    assert result.cone.heuristic
    assert result.cone.homogeneous_degree == 1
    ok, _, _ = validate_ball(p, result.ball)
    assert ok


def test_unreachable_sign_region_fails_honestly():
    # the negative set of (x^2+y^2-z^2)^2 - z is a thin shell around the
    # cone; no radius-2 ball fits, and the search must say so
    p = parse("(x^2 + y^2 - z^2)^2 - z", C3)
    with pytest.raises(BallSearchError):
        find_sign_ball(p, 2.0, seed=0, sign="negative")


def test_ball_radius_guard():
    with pytest.raises(ValueError):
        find_sign_ball(parse("x", C3), -1.0)


def test_ball_deterministic():
    a = find_sign_ball(parse("x^2 + y^2 - z", C3), 10.0, seed=5)
    b = find_sign_ball(parse("x^2 + y^2 - z", C3), 10.0, seed=5)
    assert a == b


# -- compactness -------------------------------------------------------------------


def test_sphere_compactness_bound():
    bound = compactness_bound(parse("x^2 + y^2 + z^2 - 1", C3))
    assert bound is not None
    assert abs(bound.radius - 2.0) < 1e-9
    assert bound.alpha_is_sampled_minimum


def test_indefinite_no_bound():
    assert compactness_bound(parse("x^2 - y^2 - 1", C3)) is None


def test_semidefinite_but_not_definite_no_bound():
    assert compactness_bound(parse("z - x^2 - y^2", C3)) is None
    assert compactness_bound(parse("x^2 + 1", C3)) is None


def test_two_spheres_bound_contains_centers():
    p = parse("(x^2 + y^2 + z^2 - 1)*((x - 3)^2 + y^2 + z^2 - 1)", C3)
    bound = compactness_bound(p)
    assert bound is not None
    assert bound.radius > 3.0 + 1.0  # both unit spheres inside
    assert bound.leading_verdict.evidence == "even_monomials"


# -- obstruction audit ---------------------------------------------------------------


def test_audit_consistent_sphere():
    p = parse("1 - x^2 - y^2 - z^2", C3)
    findings = cmc_obstruction_audit(p, is_cmc(p))
    assert [f.severity for f in findings] == ["consistent"]


def test_audit_out_of_scope_plane():
    p = parse("z", C3)
    findings = cmc_obstruction_audit(p, is_cmc(p))
    assert [f.severity for f in findings] == ["not_applicable"]


def test_audit_catches_fabricated_odd_claim():
    from cmcsurf.curvature import CurvatureReport

    p = parse("x^3 - z", C3)
    fake = CurvatureReport(
        verdict="CMC_numeric",
        c_estimate=1.0,
        tolerance=1e-6,
        max_deviation=0.0,
        certificate=None,
        c_exact=None,
        samples=(),
        n_requested=0,
        n_filtered=0,
        source=p,
    )
    findings = cmc_obstruction_audit(p, fake)
    severities = {f.severity for f in findings}
    checks = {f.check for f in findings}
    assert "violation" in severities
    assert "odd-degree-obstruction" in checks
    assert "indefinite-leading-form-obstruction" in checks


def test_audit_mismatched_report_rejected():
    p = parse("z", C3)
    q = parse("x", C3)
    report = is_cmc(p)
    with pytest.raises(ValueError):
        cmc_obstruction_audit(q, report)
