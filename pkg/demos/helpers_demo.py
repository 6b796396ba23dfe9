"""Small shared generator for the demo scripts."""

import random
from fractions import Fraction

from cmcsurf import Polynomial


def random_cubic(rng: random.Random, dim: int) -> Polynomial:
    terms: dict = {}
    for _ in range(7):
        total = rng.randint(0, 3)
        exps = [0] * dim
        for _ in range(total):
            exps[rng.randrange(dim)] += 1
        key = tuple(exps)
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 2))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    p = Polynomial(dim, terms)
    cube = (3,) + (0,) * (dim - 1)
    while p.degree != 3:
        p = p + Polynomial.monomial(dim, cube, rng.randint(1, 4))
    return p
