"""Symbolic differential operators and structural decompositions."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial, RationalLike, _as_fraction


@dataclass(frozen=True)
class HomogeneousDecomposition:
    """Unique split of a nonzero polynomial into homogeneous pieces.

    ``parts[i]`` is the degree-i piece (possibly zero); the last entry is
    nonzero and ``sum(parts)`` reconstructs the input exactly.
    """

    parts: tuple[Polynomial, ...]
    total_degree: int

    @property
    def leading(self) -> Polynomial:
        return self.parts[-1]

    def reconstruct(self) -> Polynomial:
        out = Polynomial.zero(self.parts[0].dim)
        for part in self.parts:
            out = out + part
        return out


def homogeneous_parts(p: Polynomial) -> HomogeneousDecomposition:
    """Group terms by total degree."""
    if p.is_zero:
        raise ValueError("zero polynomial has no homogeneous decomposition")
    m = p.degree
    buckets: list[dict] = [dict() for _ in range(m + 1)]
    for exps, c in p.terms.items():
        buckets[sum(exps)][exps] = c
    parts = tuple(Polynomial(p.dim, b) for b in buckets)
    return HomogeneousDecomposition(parts=parts, total_degree=m)


def partial(p: Polynomial, var: int) -> Polynomial:
    """Partial derivative with respect to x_var."""
    out = {}
    for exps, c in p.terms.items():
        e = exps[var]
        if e > 0:
            reduced = list(exps)
            reduced[var] = e - 1
            out[tuple(reduced)] = c * e
    return Polynomial(p.dim, out)


@functools.lru_cache(maxsize=256)
def gradient(p: Polynomial) -> tuple[Polynomial, ...]:
    """All first partials, in variable order."""
    return tuple(partial(p, i) for i in range(p.dim))


@functools.lru_cache(maxsize=256)
def hessian(p: Polynomial) -> tuple[tuple[Polynomial, ...], ...]:
    """Symmetric matrix of second partials."""
    grads = gradient(p)
    return tuple(
        tuple(partial(grads[i], j) for j in range(p.dim)) for i in range(p.dim)
    )


def laplacian(p: Polynomial) -> Polynomial:
    out = Polynomial.zero(p.dim)
    for i in range(p.dim):
        out = out + partial(partial(p, i), i)
    return out


def affine_substitute(
    p: Polynomial,
    matrix: Sequence[Sequence[RationalLike]],
    shift: Sequence[RationalLike],
) -> Polynomial:
    """Exact composition p(M x + b).

    ``matrix`` is dim x dim and ``shift`` has length dim, both rational.
    Degree is preserved whenever ``matrix`` is invertible.
    """
    dim = p.dim
    rows = [list(r) for r in matrix]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError(f"matrix must be {dim}x{dim}")
    if len(shift) != dim:
        raise ValueError(f"shift must have length {dim}")

    # Image of each variable is an affine-linear polynomial.
    images = []
    for i in range(dim):
        terms = {(0,) * dim: _as_fraction(shift[i])}
        for j in range(dim):
            exps = [0] * dim
            exps[j] = 1
            terms[tuple(exps)] = _as_fraction(rows[i][j])
        images.append(Polynomial(dim, terms))

    max_exp = [0] * dim
    for exps in p.terms:
        for i, e in enumerate(exps):
            if e > max_exp[i]:
                max_exp[i] = e
    powers: list[list[Polynomial]] = []
    for i in range(dim):
        col = [Polynomial.constant(dim, 1)]
        for _ in range(max_exp[i]):
            col.append(col[-1] * images[i])
        powers.append(col)

    out = Polynomial.zero(dim)
    for exps, c in p.sorted_terms():
        term = Polynomial.constant(dim, c)
        for i, e in enumerate(exps):
            if e:
                term = term * powers[i][e]
        out = out + term
    return out


def scale_argument(p: Polynomial, factor: RationalLike) -> Polynomial:
    """p(t*x) for a rational scalar t."""
    t = _as_fraction(factor)
    return Polynomial(p.dim, {e: c * t ** sum(e) for e, c in p.terms.items()})


def is_homogeneous(p: Polynomial) -> bool:
    degrees = {sum(e) for e in p.terms}
    return len(degrees) <= 1
