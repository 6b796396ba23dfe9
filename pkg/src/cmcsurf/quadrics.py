"""Exact classification of degree <= 2 hypersurfaces.

Round shapes are recognized without eigenvector computations: a symmetric
rational A describes a sphere or round cylinder exactly when A^2 = t*A for
the rational t = trace(A)/rank(A), i.e. A/t is an orthogonal projector.
Everything here is rational arithmetic; no float tolerance enters any
decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .polynomial import Polynomial

SPHERE = "sphere"
ROUND_CYLINDER = "round_cylinder"
HYPERPLANE = "hyperplane"
EMPTY_VARIETY = "empty_variety"
OTHER = "other"


@dataclass(frozen=True)
class QuadricClass:
    """Classification result.

    For spheres and round cylinders the defining data is exact: the input
    equals scale * ((x-center)^T proj (x-center) - radius_sq) with proj an
    orthogonal projector of rank k+1 (identity for spheres).
    ``mean_curvature_sq`` is the exact square of the unsigned mean
    curvature predicted by the shape (1/r for a sphere, k/(n*r) for a
    k-sphere cylinder), stored squared to stay rational.
    """

    kind: str
    center: tuple[Fraction, ...] | None = None
    radius_sq: Fraction | None = None
    k: int | None = None
    projector: tuple[tuple[Fraction, ...], ...] | None = None
    scale: Fraction | None = None
    description: str | None = None
    mean_curvature_sq: Fraction | None = None

    def predicted_mean_curvature(self) -> float | None:
        if self.mean_curvature_sq is None:
            return None
        return float(self.mean_curvature_sq) ** 0.5


@dataclass(frozen=True)
class RegularityResult:
    status: str  # "regular" | "singular" | "empty_variety"
    witness: tuple[Fraction, ...] | None = None


def quadratic_data(p: Polynomial) -> tuple[linalg.Matrix, linalg.Vector, Fraction]:
    """Exact split p = x^T A x + b^T x + c with A symmetric rational."""
    if p.degree is not None and p.degree > 2:
        raise ValueError(f"degree {p.degree} > 2")
    dim = p.dim
    a = linalg.zeros(dim, dim)
    b = [Fraction(0)] * dim
    c = Fraction(0)
    for exps, coeff in p.terms.items():
        support = [i for i, e in enumerate(exps) if e > 0]
        total = sum(exps)
        if total == 0:
            c = coeff
        elif total == 1:
            b[support[0]] = coeff
        elif len(support) == 1:
            a[support[0]][support[0]] = coeff
        else:
            i, j = support
            a[i][j] = coeff / 2
            a[j][i] = coeff / 2
    return a, b, c


def _variety_is_empty(a: linalg.Matrix, b: linalg.Vector, c: Fraction) -> bool:
    """Exact emptiness test for {x : x^T A x + b^T x + c = 0}."""
    cmat, diag = linalg.congruence_diagonalize(a)
    beta = linalg.matvec(linalg.transpose(cmat), b)
    const = c
    for d, bi in zip(diag, beta):
        if d == 0:
            if bi != 0:
                return False  # a free affine direction makes p surjective
        else:
            const -= bi * bi / (4 * d)
    pos, neg, _ = linalg.inertia(diag)
    if pos and neg:
        return False
    if pos:
        return const > 0
    if neg:
        return const < 0
    return const != 0  # purely constant after reduction


def classify_quadric(p: Polynomial) -> QuadricClass:
    """Classify a nonzero polynomial of degree <= 2.

    Outcomes: sphere, round_cylinder (k-sphere times a Euclidean factor),
    hyperplane, empty_variety, or other (non-round or degenerate loci).
    """
    if p.is_zero or p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    if p.degree > 2:
        raise ValueError(f"degree {p.degree} > 2")
    dim = p.dim
    a, b, c0 = quadratic_data(p)

    if all(x == 0 for row in a for x in row):
        return QuadricClass(kind=HYPERPLANE, mean_curvature_sq=Fraction(0))

    r = linalg.rank(a)
    trace = sum(a[i][i] for i in range(dim))
    if trace == 0:
        return QuadricClass(kind=OTHER, description="non-round quadric")
    lam = trace / Fraction(r)
    a_sq = linalg.matmul(a, a)
    lam_a = [[lam * x for x in row] for row in a]
    if a_sq != lam_a:
        return QuadricClass(kind=OTHER, description="non-round quadric")

    center = linalg.solve(a, [-bi / 2 for bi in b])
    if center is None:
        return QuadricClass(kind=OTHER, description="non-round quadric")

    rho = c0 - sum(
        center[i] * a[i][j] * center[j] for i in range(dim) for j in range(dim)
    )
    sigma = -rho / lam
    if sigma < 0:
        return QuadricClass(kind=EMPTY_VARIETY, description="imaginary locus")
    if sigma == 0:
        return QuadricClass(kind=OTHER, description="point/degenerate cone")

    projector = tuple(tuple(x / lam for x in row) for row in a)
    n = dim - 1
    if r == dim:
        return QuadricClass(
            kind=SPHERE,
            center=tuple(center),
            radius_sq=sigma,
            k=n,
            projector=projector,
            scale=lam,
            mean_curvature_sq=1 / sigma,
        )
    k = r - 1
    if k < 1:
        # rank-1 case: a pair of parallel hyperplanes (reducible, not round)
        return QuadricClass(kind=OTHER, description="non-round quadric")
    return QuadricClass(
        kind=ROUND_CYLINDER,
        center=tuple(center),
        radius_sq=sigma,
        k=k,
        projector=projector,
        scale=lam,
        mean_curvature_sq=Fraction(k * k, n * n) / sigma,
    )


def quadric_regularity(p: Polynomial) -> RegularityResult:
    """Exact critical-point analysis for degree <= 2.

    The critical set of a quadric is the affine solution set of a linear
    system; p is constant on it, so regularity reduces to one exact value
    test.  Emptiness of the real variety is decided exactly as well.
    """
    if p.is_zero or p.is_constant:
        raise ValueError("constant polynomial does not define a hypersurface")
    if p.degree > 2:
        raise ValueError(f"degree {p.degree} > 2")
    a, b, c0 = quadratic_data(p)

    if _variety_is_empty(a, b, c0):
        return RegularityResult(status="empty_variety")

    # gradient = 2 A x + b
    two_a = [[2 * x for x in row] for row in a]
    crit = linalg.solve(two_a, [-bi for bi in b])
    if crit is None:
        return RegularityResult(status="regular")
    value = p.evaluate(crit)
    # p is constant on the whole critical set, so one witness decides.
    if value == 0:
        return RegularityResult(status="singular", witness=tuple(crit))
    return RegularityResult(status="regular")


def lineality_split(p: Polynomial) -> tuple[list[tuple[Fraction, ...]], Polynomial]:
    """Translation-invariant directions and the reduced polynomial.

    Returns (basis, reduced) where basis spans {w : A w = 0, b.w = 0} and
    ``reduced`` is p rewritten, by an exact rational change of basis, in
    coordinates on a complement of that subspace.
    """
    if p.is_zero or p.is_constant:
        raise ValueError("constant polynomial has no splitting")
    if p.degree > 2:
        raise ValueError(f"degree {p.degree} > 2")
    dim = p.dim
    a, b, _ = quadratic_data(p)
    stacked = [list(row) for row in a] + [list(b)]
    basis = linalg.kernel_basis(stacked)
    if not basis:
        return [], p

    # Complement: standard basis vectors kept greedily while independent
    # of the lineality space, preserving variable order.
    chosen: list[linalg.Vector] = []
    span = [list(v) for v in basis]
    for i in range(dim):
        e = [Fraction(int(j == i)) for j in range(dim)]
        if linalg.rank(span + chosen + [e]) > len(span) + len(chosen):
            chosen.append(e)
    cols = chosen + [list(v) for v in basis]
    change = linalg.transpose(cols)  # columns are the new basis vectors
    from .calculus import affine_substitute

    rotated = affine_substitute(p, change, [Fraction(0)] * dim)
    reduced = rotated.remove_variables(range(len(chosen), dim))
    return [tuple(v) for v in basis], reduced


@dataclass(frozen=True)
class CurvatureConsistency:
    predicted: float
    max_relative_deviation: float
    n_points: int


def predicted_vs_numeric(
    p: Polynomial,
    cls: QuadricClass,
    sample_count: int = 50,
    seed: int = 0,
) -> CurvatureConsistency:
    """Compare |H| at sampled variety points against the shape prediction."""
    if cls.kind not in (SPHERE, ROUND_CYLINDER):
        raise ValueError(f"no curvature prediction for kind {cls.kind!r}")
    from .curvature import mean_curvature_many, sample_variety

    predicted = cls.predicted_mean_curvature()
    sample = sample_variety(p, sample_count, box=4.0, seed=seed)
    import numpy as np

    pts = np.array(sample.points)
    values = np.abs(mean_curvature_many(p, pts))
    max_rel = float(np.max(np.abs(values - predicted)) / predicted)
    return CurvatureConsistency(
        predicted=predicted,
        max_relative_deviation=max_rel,
        n_points=len(sample.points),
    )
