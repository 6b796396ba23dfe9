"""Exact quadric classification without eigenvectors.

A symmetric rational matrix A describes a sphere or round cylinder exactly
when A^2 = t*A for t = trace/rank, i.e. A/t is an orthogonal projector.
Everything stays rational, so the classification is invariant under exact
rational rigid motions, demonstrated below.
"""

import random
from fractions import Fraction

from cmcsurf import (
    VarConvention,
    affine_substitute,
    classify_quadric,
    format_poly,
    lineality_split,
    parse,
    quadric_regularity,
)
from cmcsurf.motions import random_rational_orthogonal, random_rational_vector

conv = VarConvention("named", 3)

for text in (
    "x^2 + y^2 + z^2 - 2*x - 3",
    "1 - x^2 - y^2",
    "z - x^2 - y^2",
    "x^2 - y^2 - 1",
    "x^2 + y^2 - z^2",
    "x^2 + 1",
):
    p = parse(text, conv)
    cls = classify_quadric(p)
    reg = quadric_regularity(p)
    print(f"P = {text}")
    print(f"  kind: {cls.kind}" + (f" ({cls.description})" if cls.description else ""))
    if cls.center is not None:
        print(f"  center {tuple(map(str, cls.center))}, radius^2 = {cls.radius_sq}, "
              f"k = {cls.k}, predicted |H| = {cls.predicted_mean_curvature():.6f}")
    print(f"  regularity: {reg.status}"
          + (f" at {tuple(map(str, reg.witness))}" if reg.witness else ""))
    basis, reduced = lineality_split(p)
    if basis:
        print(f"  translation-invariant directions: {[tuple(map(str, w)) for w in basis]}")
        print(f"  reduced to dim {reduced.dim}: "
              f"{format_poly(reduced, VarConvention('named', reduced.dim))}")
    print()

print("Classification is exactly invariant under rational rigid motions:")
rng = random.Random(12)
p = parse("1 - x^2 - y^2", conv)
base = classify_quadric(p)
for i in range(3):
    m = random_rational_orthogonal(3, rng)
    b = random_rational_vector(3, rng)
    lam = Fraction(rng.choice([2, -1, 3]), rng.choice([1, 2]))
    moved = lam * affine_substitute(p, m, b)
    cls = classify_quadric(moved)
    assert (cls.kind, cls.k, cls.radius_sq) == (base.kind, base.k, base.radius_sq)
    print(f"  motion {i}: kind={cls.kind}, k={cls.k}, radius^2={cls.radius_sq}  (exact match)")
