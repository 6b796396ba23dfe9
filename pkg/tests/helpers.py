"""Shared generators and independent numerical oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from cmcsurf import Polynomial, SphereQuadric, gradient


def random_polynomial(
    rng: random.Random,
    dim: int,
    max_degree: int,
    n_terms: int = 8,
    coeff_span: int = 6,
    ensure_degree: int | None = None,
) -> Polynomial:
    terms: dict = {}
    for _ in range(n_terms):
        total = rng.randint(0, max_degree)
        exps = [0] * dim
        for _ in range(total):
            exps[rng.randrange(dim)] += 1
        coeff = Fraction(rng.randint(-coeff_span, coeff_span), rng.randint(1, 3))
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    p = Polynomial(dim, terms)
    if ensure_degree is not None:
        exps = [0] * dim
        for _ in range(ensure_degree):
            exps[rng.randrange(dim)] += 1
        while p.degree != ensure_degree:
            p = p + Polynomial.monomial(dim, exps, rng.randint(1, coeff_span))
    return p


def random_nonzero_polynomial(rng: random.Random, dim: int, max_degree: int, **kw) -> Polynomial:
    while True:
        p = random_polynomial(rng, dim, max_degree, **kw)
        if not p.is_zero:
            return p


def random_rational_point(rng: random.Random, dim: int, span: int = 5) -> list[Fraction]:
    return [Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(dim)]


def random_sphere_quadric(rng: random.Random, dim: int) -> SphereQuadric:
    k = rng.randint(1, dim - 1)
    center = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(k + 1)]
    radius_sq = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    return SphereQuadric(k, center, radius_sq)


# ---------------------------------------------------------------------------
# Independent finite-difference oracles (no shared code with the symbolic path)


def fd_partial(p: Polynomial, x: np.ndarray, i: int, h: float = 1e-4) -> float:
    xp = x.copy()
    xm = x.copy()
    xp[i] += h
    xm[i] -= h
    return (float(p.evaluate_many(xp[None, :])[0]) - float(p.evaluate_many(xm[None, :])[0])) / (2 * h)


def fd_hessian_entry(p: Polynomial, x: np.ndarray, i: int, j: int, h: float = 1e-4) -> float:
    xp = x.copy()
    xm = x.copy()
    xp[j] += h
    xm[j] -= h

    def d_i(pt):
        a = pt.copy()
        b = pt.copy()
        a[i] += h
        b[i] -= h
        return (float(p.evaluate_many(a[None, :])[0]) - float(p.evaluate_many(b[None, :])[0])) / (2 * h)

    return (d_i(xp) - d_i(xm)) / (2 * h)


def unit_normal(p: Polynomial, x: np.ndarray) -> np.ndarray:
    g = np.array([float(gp.evaluate_many(x[None, :])[0]) for gp in gradient(p)])
    return g / np.linalg.norm(g)


def tangent_basis(normal: np.ndarray) -> list[np.ndarray]:
    dim = normal.shape[0]
    basis = []
    for i in range(dim):
        v = np.zeros(dim)
        v[i] = 1.0
        v -= (v @ normal) * normal
        for b in basis:
            v -= (v @ b) * b
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            basis.append(v / norm)
    return basis[: dim - 1]


def fd_shape_trace(p: Polynomial, x: np.ndarray, h: float = 1e-5, directions=None) -> float:
    """Sum of <A v, v> over tangent directions via finite differences of N.

    A is minus the derivative of the unit normal field; summing over a full
    orthonormal tangent basis gives n*H, independently of the closed-form
    curvature polynomial.
    """
    n0 = unit_normal(p, x)
    if directions is None:
        directions = tangent_basis(n0)
    total = 0.0
    for v in directions:
        dn = (unit_normal(p, x + h * v) - unit_normal(p, x - h * v)) / (2 * h)
        total += -(dn @ v)
    return total


def fd_mean_curvature(p: Polynomial, x: np.ndarray, h: float = 1e-5) -> float:
    return fd_shape_trace(p, x, h) / (p.dim - 1)
