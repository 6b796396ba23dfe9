"""Implicit mean curvature of M = P^{-1}(0) and CMC testing.

Orientation and sign convention, fixed once for the whole package: M is
oriented by the unit normal N = grad(P)/|grad(P)|, the shape operator is
A = -dN, and H is the averaged trace of A.  For a polynomial P in d
variables (hypersurface dimension n = d - 1) this gives the closed form

    H = G / (n * |grad P|^3),
    G = -( |grad P|^2 * lap(P) - grad(P)^T Hess(P) grad(P) ),

where G is again a polynomial, computed exactly here.  Writing a sphere of
radius r as P = r^2 - |x|^2 yields H = +1/r, and flipping P to -P flips
the sign of H.  The convention is validated numerically by finite
differences of the normal field in the test suite.

Squaring the identity clears the radical: F = G^2 - n^2 c^2 |grad P|^6
vanishes on M exactly when H^2 = c^2 on M, and an exact polynomial
factorization F = G2 * P certifies the CMC property.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .calculus import gradient, hessian, laplacian
from .polynomial import Polynomial, RationalLike, _as_fraction, exact_divide

EPS_REG = 1e-6  # gradient-norm floor below which samples are filtered
NEWTON_MAX_ITER = 100
SNAP_MAX_DENOMINATOR = 10**6

CMC_CERTIFIED = "CMC_certified"
CMC_NUMERIC = "CMC_numeric"
NOT_CMC = "NotCMC"
MINIMAL = "Minimal"
INCONCLUSIVE = "Inconclusive"


class VarietyNotFoundError(RuntimeError):
    """No Newton start converged to the zero set."""


class NoConvergenceError(RuntimeError):
    """Nearest-point search failed to produce a valid minimizer."""


def grad_norm_sq(p: Polynomial) -> Polynomial:
    out = Polynomial.zero(p.dim)
    for g in gradient(p):
        out = out + g * g
    return out


@functools.lru_cache(maxsize=128)
def cmc_numerator(p: Polynomial) -> Polynomial:
    """Exact numerator G with H = G/(n*|grad P|^3) on M (see module docs)."""
    if p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    grads = gradient(p)
    hess = hessian(p)
    gsq = grad_norm_sq(p)
    quad = Polynomial.zero(p.dim)
    for i in range(p.dim):
        for j in range(p.dim):
            quad = quad + grads[i] * hess[i][j] * grads[j]
    return -(gsq * laplacian(p) - quad)


def cmc_defect(p: Polynomial, c: RationalLike) -> Polynomial:
    """F = G^2 - n^2 c^2 |grad P|^6; vanishes on M iff H^2 = c^2 on M."""
    if p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    c = _as_fraction(c)
    n = p.dim - 1
    g = cmc_numerator(p)
    gsq = grad_norm_sq(p)
    return g * g - (n * n * c * c) * (gsq * gsq * gsq)


def mean_curvature_at(p: Polynomial, point) -> float:
    """H at a single float point (gradient must clear the EPS_REG floor)."""
    x = np.asarray(point, dtype=float).reshape(1, -1)
    h = mean_curvature_many(p, x, check=True)
    return float(h[0])


def mean_curvature_many(p: Polynomial, points: np.ndarray, check: bool = False) -> np.ndarray:
    """Vectorized H at an (N, dim) array of points."""
    pts = np.asarray(points, dtype=float)
    g_poly = cmc_numerator(p)
    grads = np.stack([g.evaluate_many(pts) for g in gradient(p)], axis=1)
    norms = np.sqrt((grads**2).sum(axis=1))
    if check and np.any(norms < EPS_REG):
        raise ValueError("degenerate gradient at evaluation point")
    n = p.dim - 1
    return g_poly.evaluate_many(pts) / (n * norms**3)


@dataclass(frozen=True)
class VarietySample:
    """Points found on M with the Newton projector, plus bookkeeping."""

    points: list[np.ndarray]
    requested: int
    n_converged: int
    n_filtered: int  # converged but below the gradient-norm floor

    def as_array(self) -> np.ndarray:
        return np.array(self.points)


def _newton_project(p: Polynomial, starts: np.ndarray, box: float) -> np.ndarray:
    """Batch Newton iteration x <- x - P(x) grad/|grad|^2; returns converged points."""
    pts = np.array(starts, dtype=float)
    grads_polys = gradient(p)
    abs_poly = p.abs_coefficients()
    alive = np.ones(len(pts), dtype=bool)
    diverge = 1e6 * max(box, 1.0)
    for _ in range(NEWTON_MAX_ITER):
        if not alive.any():
            break
        vals = p.evaluate_many(pts[alive])
        scale = 1.0 + abs_poly.evaluate_many(np.abs(pts[alive]))
        grads = np.stack([g.evaluate_many(pts[alive]) for g in grads_polys], axis=1)
        gsq = (grads**2).sum(axis=1)
        done = np.abs(vals) <= 1e-14 * scale
        bad = (gsq < 1e-24) | (np.linalg.norm(pts[alive], axis=1) > diverge)
        step = np.where((done | bad)[:, None], 0.0, (vals / np.where(gsq == 0, 1.0, gsq))[:, None] * grads)
        pts[alive] = pts[alive] - step
        idx = np.flatnonzero(alive)
        alive[idx[bad]] = False
        alive[idx[done]] = False
    return pts


def _diverse_subset(pts: np.ndarray, count: int) -> list[int]:
    """Greedy farthest-point selection; keeps small components represented."""
    n = len(pts)
    if n <= count:
        return list(range(n))
    chosen = [0]
    dist = np.linalg.norm(pts - pts[0], axis=1)
    for _ in range(count - 1):
        nxt = int(np.argmax(dist))
        chosen.append(nxt)
        dist = np.minimum(dist, np.linalg.norm(pts - pts[nxt], axis=1))
    return chosen


def sample_variety(
    p: Polynomial,
    count: int,
    box: float = 5.0,
    seed: int = 0,
) -> VarietySample:
    """Sample points on M = P^{-1}(0) by seeded Newton projection.

    Starts are drawn at several scales (uniform in the box plus Gaussian
    clouds below and above it) so that small or distant components of the
    variety attract some of them; of the converged points, a greedy
    farthest-point subset of the requested size is returned, which keeps
    every discovered component represented instead of letting the largest
    Newton basin crowd the sample.

    Accepts a point when |P| <= 1e-10 * scale (scale = 1 + the L1 monomial
    magnitude at the point) and |grad P| >= EPS_REG.  Deterministic for a
    fixed seed; raises VarietyNotFoundError when nothing converges.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    rng = np.random.default_rng(seed)
    n_starts = max(8 * count, 128)
    quarter = n_starts // 4
    starts = np.vstack(
        [
            rng.uniform(-box, box, size=(n_starts - 3 * quarter, p.dim)),
            rng.normal(0.0, box / 8.0, size=(quarter, p.dim)),
            rng.normal(0.0, box / 2.0, size=(quarter, p.dim)),
            rng.normal(0.0, 2.0 * box, size=(quarter, p.dim)),
        ]
    )
    pts = _newton_project(p, starts, box)

    vals = p.evaluate_many(pts)
    scale = 1.0 + p.abs_coefficients().evaluate_many(np.abs(pts))
    grads = np.stack([g.evaluate_many(pts) for g in gradient(p)], axis=1)
    norms = np.sqrt((grads**2).sum(axis=1))
    on_variety = np.abs(vals) <= 1e-10 * scale
    regular = norms >= EPS_REG
    keep = np.flatnonzero(on_variety & regular)

    n_converged = int(on_variety.sum())
    n_filtered = int((on_variety & ~regular).sum())
    if keep.size == 0:
        raise VarietyNotFoundError(
            f"no Newton start converged to a regular point (box {box}, seed {seed})"
        )
    subset = _diverse_subset(pts[keep], count)
    points = [pts[keep[i]] for i in subset]
    return VarietySample(
        points=points,
        requested=count,
        n_converged=n_converged,
        n_filtered=n_filtered,
    )


@dataclass(frozen=True)
class NearestPointResult:
    point: np.ndarray
    distance: float
    gradient_alignment: float


def _kkt_polish(p: Polynomial, x0: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Newton on the stationarity system x - x0 = t*grad, P = 0."""
    grads_polys = gradient(p)
    hess_polys = hessian(p)
    dim = p.dim
    grad = np.array([float(g.evaluate_many(x[None, :])[0]) for g in grads_polys])
    gsq = float(grad @ grad)
    if gsq == 0.0:
        return x
    lam = float((x - x0) @ grad) / gsq
    z = np.concatenate([x, [lam]])
    for _ in range(25):
        xx = z[:dim]
        lam = z[dim]
        grad = np.array([float(g.evaluate_many(xx[None, :])[0]) for g in grads_polys])
        hess = np.array(
            [[float(h.evaluate_many(xx[None, :])[0]) for h in row] for row in hess_polys]
        )
        val = float(p.evaluate_many(xx[None, :])[0])
        res = np.concatenate([xx - x0 - lam * grad, [val]])
        if np.max(np.abs(res)) < 1e-14 * (1.0 + np.linalg.norm(xx - x0)):
            break
        jac = np.zeros((dim + 1, dim + 1))
        jac[:dim, :dim] = np.eye(dim) - lam * hess
        jac[:dim, dim] = -grad
        jac[dim, :dim] = grad
        try:
            delta = np.linalg.solve(jac, -res)
        except np.linalg.LinAlgError:
            break
        z = z + delta
    return z[:dim]


def nearest_point(p: Polynomial, x0, seed: int = 0) -> NearestPointResult:
    """Local minimizer of |x - x0| on M via multi-start projected descent.

    16 starts derived from the seed are Newton-projected onto M, driven by
    projected gradient steps, then polished with a stationarity Newton
    solve.  Candidates are ranked by (distance, coordinates) so the result
    is deterministic for a fixed seed.
    """
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (p.dim,):
        raise ValueError(f"x0 must have shape ({p.dim},)")
    rng = np.random.default_rng(seed)
    spread = 2.0 * max(1.0, float(np.linalg.norm(x0)))
    starts = x0 + rng.normal(size=(16, p.dim)) * spread
    box = spread + float(np.linalg.norm(x0))
    projected = _newton_project(p, starts, box)

    grads_polys = gradient(p)
    candidates = []
    for x in projected:
        val = float(p.evaluate_many(x[None, :])[0])
        scale = 1.0 + float(p.abs_coefficients().evaluate_many(np.abs(x[None, :]))[0])
        if abs(val) > 1e-9 * scale:
            continue
        # projected gradient descent on f = |x-x0|^2 along M
        for _ in range(300):
            grad = np.array([float(g.evaluate_many(x[None, :])[0]) for g in grads_polys])
            gn = np.linalg.norm(grad)
            if gn < EPS_REG:
                break
            nhat = grad / gn
            diff = x - x0
            tangential = diff - (diff @ nhat) * nhat
            if np.linalg.norm(tangential) < 1e-13 * (1.0 + np.linalg.norm(diff)):
                break
            stepped = _newton_project(p, (x - 0.5 * tangential)[None, :], box)[0]
            if np.linalg.norm(stepped - x0) >= np.linalg.norm(diff):
                stepped = _newton_project(p, (x - 0.1 * tangential)[None, :], box)[0]
                if np.linalg.norm(stepped - x0) >= np.linalg.norm(diff):
                    break
            x = stepped
        x = _kkt_polish(p, x0, x)
        val = float(p.evaluate_many(x[None, :])[0])
        grad = np.array([float(g.evaluate_many(x[None, :])[0]) for g in grads_polys])
        gn = np.linalg.norm(grad)
        if gn < EPS_REG:
            continue
        scale = 1.0 + float(p.abs_coefficients().evaluate_many(np.abs(x[None, :]))[0])
        if abs(val) > 1e-9 * scale:
            continue
        diff = x - x0
        dist = float(np.linalg.norm(diff))
        if dist < 1e-12:
            align = 1.0
        else:
            align = abs(float(diff @ grad)) / (dist * gn)
        candidates.append((dist, tuple(x.tolist()), align, x))

    valid = [c for c in candidates if c[2] >= 1.0 - 1e-6]
    if not valid:
        raise NoConvergenceError("no start reached a first-order optimal point on M")
    dist, _, align, x = min(valid, key=lambda c: (c[0], c[1]))
    return NearestPointResult(point=x, distance=dist, gradient_alignment=align)


@dataclass(frozen=True)
class SamplePoint:
    point: tuple[float, ...]
    h: float
    residual: float
    gradient_norm: float


@dataclass(frozen=True)
class CurvatureReport:
    """Outcome of the CMC test (see is_cmc)."""

    verdict: str
    c_estimate: float
    tolerance: float
    max_deviation: float
    certificate: Polynomial | None
    c_exact: Fraction | None
    samples: tuple[SamplePoint, ...]
    n_requested: int
    n_filtered: int
    source: Polynomial
    note: str | None = None


def _try_certificate(p: Polynomial, c: Fraction) -> Polynomial | None:
    """Exact cofactor G2 with cmc_defect(p, c) = G2 * p, if one is found.

    Division is attempted in every variable whose leading coefficient in p
    is a nonzero constant; divisibility is sufficient for H^2 = c^2 on M
    but not necessary, so failure here never refutes the CMC property.
    """
    defect = cmc_defect(p, c)
    if defect.is_zero:
        return Polynomial.zero(p.dim)
    for var in range(p.dim):
        d = p.degree_in(var)
        if d == 0:
            continue
        lead = p.coefficient_in(var, d)
        if not lead.is_constant:
            continue
        quotient, remainder = exact_divide(defect, p, var)
        if remainder.is_zero:
            return quotient
    return None


def is_cmc(
    p: Polynomial,
    sample_count: int = 200,
    tolerance: float = 1e-6,
    seed: int = 0,
    box: float = 5.0,
    c_target: RationalLike | None = None,
) -> CurvatureReport:
    """Test whether M = P^{-1}(0) has constant mean curvature.

    Pipeline: sample the variety; estimate c as the median of H over the
    samples (or use ``c_target`` when given); when max|H - c| <= tolerance,
    snap c to a small rational (continued fractions, denominator <= 1e6)
    and attempt the exact divisibility certificate; CMC_certified on
    success with verdict Minimal when the certified constant is zero, and
    CMC_numeric when no certificate is found.  NotCMC requires two samples
    with |H1 - H2| > 10*tolerance; sampling failure yields Inconclusive.
    """
    if p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    try:
        sample = sample_variety(p, sample_count, box=box, seed=seed)
    except VarietyNotFoundError as exc:
        return CurvatureReport(
            verdict=INCONCLUSIVE,
            c_estimate=float("nan"),
            tolerance=tolerance,
            max_deviation=float("nan"),
            certificate=None,
            c_exact=None,
            samples=(),
            n_requested=sample_count,
            n_filtered=0,
            source=p,
            note=str(exc),
        )

    pts = sample.as_array()
    h_vals = mean_curvature_many(p, pts)
    residuals = np.abs(p.evaluate_many(pts))
    grads = np.stack([g.evaluate_many(pts) for g in gradient(p)], axis=1)
    norms = np.sqrt((grads**2).sum(axis=1))
    samples = tuple(
        SamplePoint(
            point=tuple(float(v) for v in pt),
            h=float(h),
            residual=float(r),
            gradient_norm=float(g),
        )
        for pt, h, r, g in zip(pts, h_vals, residuals, norms)
    )

    c_est = float(_as_fraction(c_target)) if c_target is not None else float(np.median(h_vals))
    max_dev = float(np.max(np.abs(h_vals - c_est)))
    spread = float(np.max(h_vals) - np.min(h_vals))

    base = dict(
        c_estimate=c_est,
        tolerance=tolerance,
        max_deviation=max_dev,
        samples=samples,
        n_requested=sample_count,
        n_filtered=sample.n_filtered,
        source=p,
    )

    if max_dev <= tolerance:
        if c_target is not None:
            c_snap = _as_fraction(c_target)
        else:
            c_snap = Fraction(c_est).limit_denominator(SNAP_MAX_DENOMINATOR)
        if abs(float(c_snap) - c_est) <= 10 * tolerance:
            certificate = _try_certificate(p, c_snap)
            if certificate is not None:
                verdict = MINIMAL if c_snap == 0 else CMC_CERTIFIED
                return CurvatureReport(
                    verdict=verdict,
                    certificate=certificate,
                    c_exact=c_snap,
                    **base,
                )
        return CurvatureReport(verdict=CMC_NUMERIC, certificate=None, c_exact=None, **base)

    if spread > 10 * tolerance:
        return CurvatureReport(verdict=NOT_CMC, certificate=None, c_exact=None, **base)
    return CurvatureReport(
        verdict=INCONCLUSIVE,
        certificate=None,
        c_exact=None,
        note="H deviation above tolerance but below the NotCMC threshold",
        **base,
    )
