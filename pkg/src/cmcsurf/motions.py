"""Exact rational orthogonal matrices (signed permutations, Pythagorean rotations).

Exact-arithmetic paths in this package never touch irrational rotations;
invariance checks use compositions of the generators below, which satisfy
M^T M = I exactly over the rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg

PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def signed_permutation(dim: int, perm, signs) -> linalg.Matrix:
    m = linalg.zeros(dim, dim)
    for i, (j, s) in enumerate(zip(perm, signs)):
        m[j][i] = Fraction(s)
    return m


def plane_rotation(dim: int, i: int, j: int, triple=(3, 4, 5)) -> linalg.Matrix:
    """Rotation by the rational angle of a Pythagorean triple in plane (i, j)."""
    a, b, c = triple
    m = linalg.identity(dim)
    m[i][i] = Fraction(a, c)
    m[j][j] = Fraction(a, c)
    m[i][j] = Fraction(-b, c)
    m[j][i] = Fraction(b, c)
    return m


def random_rational_orthogonal(dim: int, rng: random.Random, n_rotations: int = 3) -> linalg.Matrix:
    perm = list(range(dim))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(dim)]
    m = signed_permutation(dim, perm, signs)
    for _ in range(n_rotations):
        i, j = rng.sample(range(dim), 2)
        triple = rng.choice(PYTHAGOREAN_TRIPLES)
        m = linalg.matmul(m, plane_rotation(dim, i, j, triple))
    return m


def random_rational_vector(dim: int, rng: random.Random, span: int = 4) -> list[Fraction]:
    return [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(dim)]
