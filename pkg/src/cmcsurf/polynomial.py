"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in ``dim`` variables is stored as a mapping from exponent
tuples (one non-negative integer per variable) to nonzero ``Fraction``
coefficients.  The empty mapping is the zero polynomial.  All arithmetic
is exact; floats appear only at evaluation boundaries.

Canonical term order is graded lexicographic with variable 1 most
significant: higher total degree first, ties broken by comparing the
exponent vector left to right.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

Exponent = tuple[int, ...]

RationalLike = int | Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def grlex_key(exponent: Exponent) -> tuple:
    """Sort key for graded-lex order (variable 1 most significant)."""
    return (sum(exponent), exponent)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, RationalLike] | None = None):
        if dim < 1:
            raise ValueError(f"dim must be a positive integer, got {dim}")
        self.dim = dim
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != dim:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {dim}"
                    )
                if any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"exponents must be non-negative integers: {exps}")
                c = _as_fraction(coeff)
                if c != 0:
                    acc = clean.get(exps)
                    clean[exps] = c if acc is None else acc + c
                    if clean[exps] == 0:
                        del clean[exps]
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Polynomial":
        return Polynomial(dim)

    @staticmethod
    def constant(dim: int, value: RationalLike) -> "Polynomial":
        return Polynomial(dim, {(0,) * dim: _as_fraction(value)})

    @staticmethod
    def variable(dim: int, index: int) -> "Polynomial":
        """The polynomial x_index (0-based index)."""
        if not 0 <= index < dim:
            raise ValueError(f"variable index {index} out of range for dim {dim}")
        exps = [0] * dim
        exps[index] = 1
        return Polynomial(dim, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(dim: int, exps: Sequence[int], coeff: RationalLike = 1) -> "Polynomial":
        return Polynomial(dim, {tuple(exps): _as_fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the term map (canonical: no zero coefficients)."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (raises if non-constant)."""
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.dim, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def coeff_l1_norm(self) -> Fraction:
        """Sum of absolute coefficient values."""
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order (deterministic)."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degree_in(self, var: int) -> int:
        """Largest exponent of variable ``var``; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(e[var] for e in self._terms)

    def coefficient_in(self, var: int, power: int) -> "Polynomial":
        """Coefficient of x_var^power, as a polynomial with x_var struck out."""
        out: dict[Exponent, Fraction] = {}
        for exps, c in self._terms.items():
            if exps[var] == power:
                reduced = list(exps)
                reduced[var] = 0
                out[tuple(reduced)] = c
        return Polynomial(self.dim, out)

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return f"Polynomial({self.dim}, 0)"
        frags = []
        for exps, c in self.sorted_terms()[:8]:
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exps)
                if e > 0
            )
            frags.append(f"{c}*{mono}" if mono else str(c))
        tail = " + ..." if len(self._terms) > 8 else ""
        return f"Polynomial({self.dim}, {' + '.join(frags)}{tail})"

    # -- ring operations ---------------------------------------------------

    def _check_dim(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_dim(other)
            return other
        return Polynomial.constant(self.dim, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            acc = out.get(exps, Fraction(0)) + c
            if acc == 0:
                out.pop(exps, None)
            else:
                out[exps] = acc
        return Polynomial(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(exps, Fraction(0)) + c1 * c2
                if acc == 0:
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return Polynomial(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {n!r}")
        result = Polynomial.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction | float:
        """Evaluate at a point.

        Exact (returns ``Fraction``) when every coordinate is an int or
        ``Fraction``; floating otherwise.  Terms are summed in descending
        graded-lex order, so float results are deterministic.
        """
        if len(point) != self.dim:
            raise ValueError(f"point has length {len(point)}, expected {self.dim}")
        exact = all(isinstance(v, (int, Fraction)) for v in point)
        if exact:
            total = Fraction(0)
            for exps, c in self.sorted_terms():
                term = c
                for v, e in zip(point, exps):
                    if e:
                        term *= Fraction(v) ** e
                total += term
            return total
        total_f = 0.0
        for exps, c in self.sorted_terms():
            term_f = float(c)
            for v, e in zip(point, exps):
                if e:
                    term_f *= float(v) ** e
            total_f += term_f
        return total_f

    __call__ = evaluate

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorized float evaluation at an (N, dim) array of points."""
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise ValueError(f"expected (N, {self.dim}) array, got {pts.shape}")
        n = pts.shape[0]
        out = np.zeros(n)
        if not self._terms:
            return out
        # Power tables per variable up to its max exponent.
        max_exp = [0] * self.dim
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e > max_exp[i]:
                    max_exp[i] = e
        pows: list[list[np.ndarray]] = []
        for i in range(self.dim):
            col = [np.ones(n)]
            for _ in range(max_exp[i]):
                col.append(col[-1] * pts[:, i])
            pows.append(col)
        for exps, c in self.sorted_terms():
            term = np.full(n, float(c))
            for i, e in enumerate(exps):
                if e:
                    term = term * pows[i][e]
            out += term
        return out

    # -- structure helpers ---------------------------------------------------

    def remove_variables(self, indices: Iterable[int]) -> "Polynomial":
        """Drop variables that do not occur; error if any of them does."""
        drop = sorted(set(indices))
        for i in drop:
            if self.degree_in(i) > 0:
                raise ValueError(f"variable {i} occurs in the polynomial")
        keep = [i for i in range(self.dim) if i not in set(drop)]
        if not keep:
            raise ValueError("cannot remove every variable")
        out = {
            tuple(exps[i] for i in keep): c for exps, c in self._terms.items()
        }
        return Polynomial(len(keep), out)

    def abs_coefficients(self) -> "Polynomial":
        """Same monomials with coefficients replaced by absolute values."""
        return Polynomial(self.dim, {e: abs(c) for e, c in self._terms.items()})


class SphereQuadric:
    """The quadric vanishing on a round k-sphere times a Euclidean factor.

    With center a (length k+1) and squared radius r2, the expansion over a
    block of k+1 consecutive variables is sum_i (x_i - a_i)^2 - r2.
    """

    __slots__ = ("k", "center", "radius_sq")

    def __init__(self, k: int, center: Sequence[RationalLike], radius_sq: RationalLike):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        center = tuple(_as_fraction(c) for c in center)
        if len(center) != k + 1:
            raise ValueError(f"center must have length k+1={k + 1}, got {len(center)}")
        radius_sq = _as_fraction(radius_sq)
        if radius_sq <= 0:
            raise ValueError(f"radius_sq must be positive, got {radius_sq}")
        self.k = k
        self.center = center
        self.radius_sq = radius_sq

    def __repr__(self) -> str:
        return f"SphereQuadric(k={self.k}, center={self.center}, radius_sq={self.radius_sq})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SphereQuadric):
            return NotImplemented
        return (
            self.k == other.k
            and self.center == other.center
            and self.radius_sq == other.radius_sq
        )

    def expand(self, dim: int, block_start: int = 0) -> Polynomial:
        """Expanded polynomial in ``dim`` variables, block at ``block_start``."""
        if block_start < 0 or block_start + self.k + 1 > dim:
            raise ValueError(
                f"block [{block_start}, {block_start + self.k}] does not fit in dim {dim}"
            )
        out = Polynomial.constant(dim, -self.radius_sq)
        for i, a in enumerate(self.center):
            xi = Polynomial.variable(dim, block_start + i)
            out = out + (xi - a) * (xi - a)
        return out


def exact_divide(p: Polynomial, q: Polynomial, main_var: int) -> tuple[Polynomial, Polynomial]:
    """Euclidean division of p by q viewed as univariate in ``main_var``.

    Requires the leading coefficient of q in ``main_var`` to be a nonzero
    constant, which makes quotient and remainder unique with
    deg_main(remainder) < deg_main(q).  Returns (quotient, remainder) with
    p = q*quotient + remainder exactly.
    """
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    if not 0 <= main_var < p.dim:
        raise ValueError(f"main_var {main_var} out of range for dim {p.dim}")
    if q.is_zero:
        raise ValueError("division by the zero polynomial")
    qd = q.degree_in(main_var)
    lead = q.coefficient_in(main_var, qd)
    if not lead.is_constant:
        raise ValueError(
            f"leading coefficient of divisor in variable {main_var} is not constant"
        )
    lead_c = lead.constant_value()
    quotient = Polynomial.zero(p.dim)
    remainder = p
    while not remainder.is_zero and remainder.degree_in(main_var) >= qd:
        d = remainder.degree_in(main_var)
        lc = remainder.coefficient_in(main_var, d)
        step_exps = [0] * p.dim
        step_exps[main_var] = d - qd
        step = lc * Polynomial.monomial(p.dim, step_exps, Fraction(1, 1) / lead_c)
        quotient = quotient + step
        remainder = remainder - step * q
    return quotient, remainder


def divide_by_sphere_quadric(
    p: Polynomial, quadric: SphereQuadric, block_start: int = 0
) -> Polynomial | None:
    """Exact cofactor R with p = Q*R for a sphere-quadric divisor Q.

    Returns ``None`` when p is not divisible.  Divisibility is decided by
    Euclidean division in the first block variable, whose coefficient in Q
    is the constant 1, so the cofactor is unique and exact.
    """
    if p.dim < block_start + quadric.k + 1:
        raise ValueError(
            f"polynomial dim {p.dim} too small for sphere block k={quadric.k} "
            f"at offset {block_start}"
        )
    expanded = quadric.expand(p.dim, block_start)
    quotient, remainder = exact_divide(p, expanded, main_var=block_start)
    if remainder.is_zero:
        return quotient
    return None
