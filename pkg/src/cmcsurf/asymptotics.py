"""Analysis of the highest-degree homogeneous part of a polynomial.

The leading homogeneous part controls the far-field sign behavior of P:
scaled along rays, t^{-m} P(tv) converges to the leading form uniformly on
the unit sphere.  This module turns that into computable objects: exact or
sampled sign verdicts for the leading form, an explicit threshold t0 for
the uniform tail bound, a constructive finder for arbitrarily large balls
on which P has strict constant sign (with a cone certificate), a bounding
radius for varieties with definite leading form, and an audit that checks
CMC reports against the two known obstructions (odd degree, indefinite
leading form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from . import linalg
from .calculus import homogeneous_parts
from .curvature import CMC_CERTIFIED, CMC_NUMERIC, CurvatureReport
from .polynomial import Polynomial

POSITIVE_SEMIDEFINITE = "positive_semidefinite"
NEGATIVE_SEMIDEFINITE = "negative_semidefinite"
INDEFINITE = "indefinite"
INCONCLUSIVE = "inconclusive"

EVIDENCE_EXACT_QUADRATIC = "exact_quadratic"
EVIDENCE_ODD_PARITY = "odd_parity"
EVIDENCE_EVEN_MONOMIALS = "even_monomials"
EVIDENCE_SAMPLED = "sampled"

N_SPHERE_SAMPLES = 10**4
N_DESCENTS = 100


class BallSearchError(RuntimeError):
    """The cone construction could not produce a validated ball."""


@dataclass(frozen=True)
class SignVerdict:
    """Semi-definiteness verdict for a homogeneous form.

    Exact evidence ('exact_quadratic' for degree 2, 'even_monomials' for
    forms that are visibly sums of even-power monomials with same-sign
    coefficients, 'odd_parity' for odd degree) is a proof.  Sampled
    evidence can only prove 'indefinite'; a sampled search that finds no
    sign change reports 'inconclusive'.
    """

    kind: str
    evidence: str
    witness_pos: tuple[float, ...] | None = None
    witness_neg: tuple[float, ...] | None = None
    n_samples: int = 0
    n_descents: int = 0

    @property
    def sign(self) -> int:
        if self.kind == POSITIVE_SEMIDEFINITE:
            return 1
        if self.kind == NEGATIVE_SEMIDEFINITE:
            return -1
        return 0

    @property
    def is_exact(self) -> bool:
        return self.evidence in (
            EVIDENCE_EXACT_QUADRATIC,
            EVIDENCE_ODD_PARITY,
            EVIDENCE_EVEN_MONOMIALS,
        )


@dataclass(frozen=True)
class ConeCertificate:
    """Data proving {t*v : t > t0, <v,w> >= cos_theta} keeps one sign of P.

    ``margin`` is a quarter of the form value at the apex direction; the
    tail bound guarantees |t^{-m} P(tv) - P_m(v)| < margin beyond t0, while
    the cap keeps the form above twice the margin.
    """

    w: tuple[float, ...]
    cos_theta: float
    t0: float
    margin: float
    homogeneous_degree: int
    heuristic: bool = False


@dataclass(frozen=True)
class Ball:
    center: tuple[float, ...]
    radius: float
    sign: str  # "positive" | "negative"


@dataclass(frozen=True)
class BallCertificate:
    ball: Ball
    cone: ConeCertificate
    n_validation_samples: int
    min_abs_value: float


@dataclass(frozen=True)
class BoundedRegionLikely:
    """Requested sign region is opposite an exactly semi-definite leading form."""

    requested_sign: str
    leading_verdict: SignVerdict


@dataclass(frozen=True)
class CompactnessBound:
    """Radius beyond which P provably keeps the sign of its leading form.

    ``alpha_sampled`` is a sampled (not certified) minimum of |P_m| on the
    unit sphere, so the bound is heuristic even when the definiteness
    verdict itself is exact.
    """

    radius: float
    alpha_sampled: float
    leading_verdict: SignVerdict
    alpha_is_sampled_minimum: bool = True


@dataclass(frozen=True)
class AuditFinding:
    severity: str  # "violation" | "consistent" | "not_applicable"
    check: str
    detail: str
    witness_pos: tuple[float, ...] | None = None
    witness_neg: tuple[float, ...] | None = None


def _sphere_samples(dim: int, n: int, rng: np.random.Generator) -> np.ndarray:
    pts = rng.standard_normal((n, dim))
    norms = np.linalg.norm(pts, axis=1)
    norms[norms < 1e-12] = 1.0
    return pts / norms[:, None]


def _sphere_ascend(form: Polynomial, starts: np.ndarray, steps: int = 200) -> np.ndarray:
    """Projected gradient ascent of the form on the unit sphere."""
    from .calculus import gradient

    grads = gradient(form)
    pts = np.array(starts, dtype=float)
    lr = 0.1
    for _ in range(steps):
        g = np.stack([gp.evaluate_many(pts) for gp in grads], axis=1)
        radial = (g * pts).sum(axis=1)[:, None] * pts
        tangential = g - radial
        pts = pts + lr * tangential
        pts = pts / np.linalg.norm(pts, axis=1)[:, None]
    return pts


def _find_nonzero_rational_point(form: Polynomial, seed: int = 0) -> list[int]:
    """Integer point where the form is (exactly) nonzero."""
    dim = form.dim
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        if form.evaluate(e) != 0:
            return e
    rng = np.random.default_rng(seed)
    bound = (form.degree or 1) + 1
    for _ in range(10_000):
        v = [int(x) for x in rng.integers(-bound, bound + 1, size=dim)]
        if any(v) and form.evaluate(v) != 0:
            return v
    raise RuntimeError("could not locate a nonzero point of a nonzero form")


def _is_even_monomial_form(form: Polynomial) -> int:
    """+1/-1 when all exponents are even and coefficients share that sign, else 0."""
    signs = set()
    for exps, c in form.terms.items():
        if any(e % 2 for e in exps):
            return 0
        signs.add(1 if c > 0 else -1)
    if len(signs) == 1:
        return signs.pop()
    return 0


def leading_form_verdict(p: Polynomial, seed: int = 0) -> SignVerdict:
    """Sign analysis of the highest-degree homogeneous part of p.

    Odd degree is indefinite by antipodal symmetry; degree 2 is decided
    exactly by rational congruence diagonalization; even-power monomial
    sums with one coefficient sign are exactly semi-definite; everything
    else falls back to seeded sampling plus sphere ascent/descent, which
    can prove only indefiniteness.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no leading form")
    form = homogeneous_parts(p).leading
    m = p.degree
    margin_scale = 1e-12 * float(form.coeff_l1_norm())

    if m % 2 == 1:
        # antipodal witnesses; pick the candidate with the largest |form|
        # so the strict-sign margin holds comfortably in floats
        rng = np.random.default_rng(seed)
        candidates = np.vstack(
            [
                np.eye(p.dim),
                _sphere_samples(p.dim, 512, rng),
                np.array(_find_nonzero_rational_point(form, seed), dtype=float)[None, :],
            ]
        )
        candidates /= np.linalg.norm(candidates, axis=1)[:, None]
        values = form.evaluate_many(candidates)
        v = candidates[int(np.argmax(np.abs(values)))]
        if float(form.evaluate_many(v[None, :])[0]) < 0:
            v = -v  # odd parity: flipping the point flips the sign
        return SignVerdict(
            kind=INDEFINITE,
            evidence=EVIDENCE_ODD_PARITY,
            witness_pos=tuple(v.tolist()),
            witness_neg=tuple((-v).tolist()),
        )

    if m == 2:
        from .quadrics import quadratic_data

        a, _, _ = quadratic_data(form)
        cmat, diag = linalg.congruence_diagonalize(a)
        pos, neg, _ = linalg.inertia(diag)
        if pos and neg:
            i_pos = next(i for i, d in enumerate(diag) if d > 0)
            i_neg = next(i for i, d in enumerate(diag) if d < 0)
            wp = np.array([float(cmat[r][i_pos]) for r in range(p.dim)])
            wn = np.array([float(cmat[r][i_neg]) for r in range(p.dim)])
            wp /= np.linalg.norm(wp)
            wn /= np.linalg.norm(wn)
            return SignVerdict(
                kind=INDEFINITE,
                evidence=EVIDENCE_EXACT_QUADRATIC,
                witness_pos=tuple(wp.tolist()),
                witness_neg=tuple(wn.tolist()),
            )
        kind = POSITIVE_SEMIDEFINITE if pos else NEGATIVE_SEMIDEFINITE
        witness = _find_nonzero_rational_point(form, seed)
        w = np.array(witness, dtype=float)
        w /= np.linalg.norm(w)
        return SignVerdict(
            kind=kind,
            evidence=EVIDENCE_EXACT_QUADRATIC,
            witness_pos=tuple(w.tolist()) if pos else None,
            witness_neg=tuple(w.tolist()) if neg else None,
        )

    even_sign = _is_even_monomial_form(form)
    if even_sign:
        witness = _find_nonzero_rational_point(form, seed)
        w = np.array(witness, dtype=float)
        w /= np.linalg.norm(w)
        return SignVerdict(
            kind=POSITIVE_SEMIDEFINITE if even_sign > 0 else NEGATIVE_SEMIDEFINITE,
            evidence=EVIDENCE_EVEN_MONOMIALS,
            witness_pos=tuple(w.tolist()) if even_sign > 0 else None,
            witness_neg=tuple(w.tolist()) if even_sign < 0 else None,
        )

    rng = np.random.default_rng(seed)
    dirs = _sphere_samples(p.dim, N_SPHERE_SAMPLES, rng)
    values = form.evaluate_many(dirs)
    order_max = np.argsort(values)[-(N_DESCENTS // 2):]
    order_min = np.argsort(values)[: N_DESCENTS // 2]
    asc = _sphere_ascend(form, dirs[order_max])
    desc = _sphere_ascend(-form, dirs[order_min])
    best_pos_val = float(np.max(form.evaluate_many(asc)))
    best_neg_val = float(np.min(form.evaluate_many(desc)))
    wp = asc[np.argmax(form.evaluate_many(asc))]
    wn = desc[np.argmin(form.evaluate_many(desc))]
    if best_pos_val > margin_scale and best_neg_val < -margin_scale:
        return SignVerdict(
            kind=INDEFINITE,
            evidence=EVIDENCE_SAMPLED,
            witness_pos=tuple(wp.tolist()),
            witness_neg=tuple(wn.tolist()),
            n_samples=N_SPHERE_SAMPLES,
            n_descents=N_DESCENTS,
        )
    return SignVerdict(
        kind=INCONCLUSIVE,
        evidence=EVIDENCE_SAMPLED,
        n_samples=N_SPHERE_SAMPLES,
        n_descents=N_DESCENTS,
    )


def tail_bound_t0(p: Polynomial, eps: float) -> float:
    """Threshold t0 with sup_{|v|=1} |t^{-m} P(tv) - P_m(v)| < eps for t > t0.

    Uses the L1 coefficient norms of the lower homogeneous parts: each
    |P_i(v)| is at most its L1 norm on the unit sphere, so the scaled tail
    is at most sum_i ||P_i||_1 / t for t >= 1.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if p.is_constant:
        raise ValueError("constant polynomial has no leading-form asymptotics")
    decomp = homogeneous_parts(p)
    tail_l1 = sum(
        (part.coeff_l1_norm() for part in decomp.parts[:-1]), Fraction(0)
    )
    return max(1.0, float(tail_l1) / eps)


def _cap_samples(w: np.ndarray, cos_theta: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Unit vectors v with <v, w> >= cos_theta (boundary included)."""
    dim = w.shape[0]
    tangent = rng.standard_normal((n, dim))
    tangent -= (tangent @ w)[:, None] * w
    norms = np.linalg.norm(tangent, axis=1)
    norms[norms < 1e-12] = 1.0
    tangent /= norms[:, None]
    theta = np.arccos(np.clip(cos_theta, -1.0, 1.0))
    angles = rng.uniform(0.0, theta, size=n)
    angles[0] = theta  # always include the worst-case boundary angle
    return np.cos(angles)[:, None] * w + np.sin(angles)[:, None] * tangent


def _ball_samples(center: np.ndarray, radius: float, n: int) -> np.ndarray:
    """Low-discrepancy (Halton) sample of the solid ball."""
    dim = center.shape[0]
    sampler = qmc.Halton(d=dim + 1, scramble=False)
    sampler.fast_forward(1)  # skip the all-zero first point
    u = sampler.random(n)
    dirs = ndtri(np.clip(u[:, :dim], 1e-12, 1 - 1e-12))
    norms = np.linalg.norm(dirs, axis=1)
    norms[norms < 1e-12] = 1.0
    dirs /= norms[:, None]
    radii = radius * u[:, dim] ** (1.0 / dim)
    return center + radii[:, None] * dirs


def validate_ball(p: Polynomial, ball: Ball, n: int = 10**4) -> tuple[bool, np.ndarray | None, float]:
    """Strict-sign check of P on a low-discrepancy sample of the ball."""
    pts = _ball_samples(np.array(ball.center), ball.radius, n)
    vals = p.evaluate_many(pts)
    want = 1.0 if ball.sign == "positive" else -1.0
    signed = want * vals
    worst = int(np.argmin(signed))
    ok = bool(signed[worst] > 0.0)
    return ok, (None if ok else pts[worst]), float(np.min(np.abs(vals)))


def _best_direction(
    form: Polynomial, sigma: int, rng: np.random.Generator
) -> tuple[np.ndarray, float]:
    """Direction w maximizing sigma * form on the unit sphere (sampled + ascent)."""
    dirs = _sphere_samples(form.dim, 4096, rng)
    values = sigma * form.evaluate_many(dirs)
    top = np.argsort(values)[-16:]
    refined = _sphere_ascend(sigma * form, dirs[top])
    # keep the raw top samples in the pool in case the ascent oscillated
    pool = np.vstack([refined, dirs[top]])
    pool_values = sigma * form.evaluate_many(pool)
    best = int(np.argmax(pool_values))
    return pool[best], float(pool_values[best])


def find_sign_ball(
    p: Polynomial,
    radius: float,
    seed: int = 0,
    sign: str | None = None,
) -> BallCertificate | BoundedRegionLikely:
    """Ball of the requested radius on which P has strict constant sign.

    Construction: pick an apex direction w where the leading form is large
    (of the requested sign, or the sign with the larger magnitude when no
    sign is requested), shrink a spherical cap until the form stays above
    half its apex value, push past the tail-bound threshold t0, and place
    the ball inside the resulting cone.  The ball is validated by strict
    sign on 1e4 low-discrepancy samples.

    When a sign is requested but the leading form is exactly semi-definite
    of the opposite sign, the sign region cannot reach far out and
    BoundedRegionLikely is returned.  If the leading form merely lacks
    sampled directions of the requested sign, lower homogeneous parts are
    tried as cone anchors; such certificates are flagged heuristic.
    """
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if p.is_zero:
        raise ValueError("zero polynomial has no sign region")
    rng = np.random.default_rng(seed)
    decomp = homogeneous_parts(p)
    m = decomp.total_degree
    form = decomp.leading
    margin_floor = 1e-9 * max(1.0, float(form.coeff_l1_norm()))

    requested = {"positive": 1, "negative": -1, None: 0}[sign]
    if requested:
        w, value = _best_direction(form, requested, rng)
        sigma = requested
    else:
        w_pos, val_pos = _best_direction(form, 1, rng)
        w_neg, val_neg = _best_direction(form, -1, rng)
        if val_pos >= val_neg:
            w, value, sigma = w_pos, val_pos, 1
        else:
            w, value, sigma = w_neg, val_neg, -1

    if value > margin_floor:
        return _build_cone_ball(p, form, m, w, sigma, value, radius, rng,
                                anchor_degree=m, heuristic=False)

    # No usable direction in the leading form for this sign.
    verdict = leading_form_verdict(p, seed=seed)
    if requested and verdict.is_exact and verdict.sign == -requested:
        return BoundedRegionLikely(requested_sign=sign, leading_verdict=verdict)

    # Artifact extension (flagged heuristic): anchor the cone at the next
    # lower homogeneous part that offers a direction of the wanted sign.
    sigma = requested if requested else 1
    for j in range(m - 1, -1, -1):
        part = decomp.parts[j]
        if part.is_zero or part.is_constant:
            continue
        wj, vj = _best_direction(part, sigma, rng)
        if vj > 1e-9 * max(1.0, float(part.coeff_l1_norm())):
            return _build_cone_ball(p, part, m, wj, sigma, vj, radius, rng,
                                    anchor_degree=j, heuristic=True)
    raise BallSearchError(
        f"no direction with {sign or 'either'} sign found in any homogeneous part"
    )


def _build_cone_ball(
    p: Polynomial,
    anchor_form: Polynomial,
    m: int,
    w: np.ndarray,
    sigma: int,
    value: float,
    radius: float,
    rng: np.random.Generator,
    anchor_degree: int,
    heuristic: bool,
) -> BallCertificate:
    decomp = homogeneous_parts(p)
    abs_value = abs(value)
    margin = abs_value / 4.0

    theta = np.pi / 3.0  # 60 degrees, halved until the cap condition holds
    cos_theta = None
    for _ in range(20):
        cap = _cap_samples(w, float(np.cos(theta)), 1000, rng)
        if float(np.min(sigma * anchor_form.evaluate_many(cap))) > abs_value / 2.0:
            cos_theta = float(np.cos(theta))
            break
        theta /= 2.0
    if cos_theta is None:
        raise BallSearchError("cap shrinking did not reach the half-value condition")

    if heuristic:
        other_l1 = sum(
            (
                part.coeff_l1_norm()
                for j, part in enumerate(decomp.parts)
                if j != anchor_degree
            ),
            Fraction(0),
        )
        t0 = max(1.0, float(other_l1) / margin)
    else:
        t0 = tail_bound_t0(p, margin)

    attempts = 0
    while True:
        t_c = max(t0 + radius + 1.0, (radius + 1.0) / float(np.sin(theta)))
        ball = Ball(
            center=tuple((t_c * w).tolist()),
            radius=radius,
            sign="positive" if sigma > 0 else "negative",
        )
        ok, bad_point, min_abs = validate_ball(p, ball)
        if ok:
            cone = ConeCertificate(
                w=tuple(w.tolist()),
                cos_theta=cos_theta,
                t0=t0,
                margin=margin,
                homogeneous_degree=anchor_degree,
                heuristic=heuristic,
            )
            return BallCertificate(
                ball=ball,
                cone=cone,
                n_validation_samples=10**4,
                min_abs_value=min_abs,
            )
        attempts += 1
        if not heuristic or attempts > 6:
            raise BallSearchError(
                f"ball validation failed at sample point {bad_point}"
            )
        theta /= 2.0
        t0 *= 4.0
        cos_theta = float(np.cos(theta))


def _exactly_definite(form: Polynomial, verdict: SignVerdict) -> bool:
    """True when the verdict proves the form nonzero away from the origin.

    Quadratic path: semi-definite plus full rank.  Even-monomial path:
    every variable contributes a pure even power, so the form dominates
    |c_i| * v_i^{2d} at the largest coordinate.
    """
    if verdict.kind not in (POSITIVE_SEMIDEFINITE, NEGATIVE_SEMIDEFINITE):
        return False
    if verdict.evidence == EVIDENCE_EXACT_QUADRATIC:
        from .quadrics import quadratic_data

        a, _, _ = quadratic_data(form)
        return linalg.rank(a) == form.dim
    if verdict.evidence == EVIDENCE_EVEN_MONOMIALS:
        covered = set()
        for exps in form.terms:
            support = [i for i, e in enumerate(exps) if e > 0]
            if len(support) == 1:
                covered.add(support[0])
        return len(covered) == form.dim
    return False


def compactness_bound(p: Polynomial, seed: int = 0) -> CompactnessBound | None:
    """Bounding radius for M when the leading form is exactly definite.

    Definiteness must be established exactly (see _exactly_definite);
    beyond the returned radius P keeps the sign of its leading form, so
    the variety lies inside the ball.  The sphere minimum of |P_m| feeding
    the radius is sampled (1e4 directions), so the radius itself is
    heuristic.  Returns None when definiteness is not established.
    """
    if p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    verdict = leading_form_verdict(p, seed=seed)
    form = homogeneous_parts(p).leading
    if not verdict.is_exact or not _exactly_definite(form, verdict):
        return None
    rng = np.random.default_rng(seed)
    dirs = _sphere_samples(p.dim, N_SPHERE_SAMPLES, rng)
    alpha = float(np.min(np.abs(form.evaluate_many(dirs))))
    if alpha <= 0.0:
        return None
    return CompactnessBound(
        radius=tail_bound_t0(p, alpha / 2.0),
        alpha_sampled=alpha,
        leading_verdict=verdict,
    )


def cmc_obstruction_audit(p: Polynomial, report: CurvatureReport) -> list[AuditFinding]:
    """Check a CMC report against the two structural obstructions.

    A hypersurface with nonzero constant mean curvature cannot come from a
    polynomial of odd degree, nor from one whose leading form changes
    sign.  Reports claiming nonzero CMC are tested against both; anything
    else is out of scope for the obstructions.
    """
    if report.source != p:
        raise ValueError("report was not produced from this polynomial")
    m = p.degree
    findings: list[AuditFinding] = []
    claims_cmc = report.verdict in (CMC_CERTIFIED, CMC_NUMERIC) and abs(
        report.c_estimate
    ) > report.tolerance
    if not claims_cmc:
        findings.append(
            AuditFinding(
                severity="not_applicable",
                check="scope",
                detail=(
                    f"verdict {report.verdict} with c={report.c_estimate:.6g} is outside "
                    "the nonzero-CMC obstruction scope"
                ),
            )
        )
        return findings

    verdict = leading_form_verdict(p)
    if m % 2 == 1:
        findings.append(
            AuditFinding(
                severity="violation",
                check="odd-degree-obstruction",
                detail=f"degree {m} is odd but the report claims nonzero constant mean curvature",
                witness_pos=verdict.witness_pos,
                witness_neg=verdict.witness_neg,
            )
        )
    if verdict.kind == INDEFINITE:
        findings.append(
            AuditFinding(
                severity="violation",
                check="indefinite-leading-form-obstruction",
                detail=(
                    "leading form takes both signs but the report claims nonzero "
                    "constant mean curvature"
                ),
                witness_pos=verdict.witness_pos,
                witness_neg=verdict.witness_neg,
            )
        )
    if not findings:
        findings.append(
            AuditFinding(
                severity="consistent",
                check="obstructions",
                detail=(
                    f"degree {m} is even and the leading-form verdict is "
                    f"{verdict.kind} ({verdict.evidence}); no obstruction violated"
                ),
            )
        )
    return findings
