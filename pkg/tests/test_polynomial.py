import random
from fractions import Fraction

import pytest

from cmcsurf import (
    Polynomial,
    SphereQuadric,
    VarConvention,
    divide_by_sphere_quadric,
    exact_divide,
    parse,
)
from helpers import (
    random_nonzero_polynomial,
    random_polynomial,
    random_rational_point,
    random_sphere_quadric,
)

C2 = VarConvention("named", 2)
C3 = VarConvention("named", 3)


def test_difference_of_squares():
    x = Polynomial.variable(2, 0)
    assert (x + 1) * (x - 1) == x * x - 1


def test_additive_inverse_cancels():
    p = parse("3*x^2 - y + 1/2", C2)
    assert (p + (-1) * p).is_zero


def test_binomial_expansion():
    p = parse("(x + y)^2", C2)
    assert p == parse("x^2 + 2*x*y + y^2", C2)


def test_degree_and_zero_marker():
    assert Polynomial.zero(3).degree is None
    assert Polynomial.constant(3, 5).degree == 0
    assert parse("x*y*z^2", C3).degree == 4


def test_mul_degree_additive():
    rng = random.Random(7)
    for _ in range(30):
        p = random_nonzero_polynomial(rng, 3, 3)
        q = random_nonzero_polynomial(rng, 3, 3)
        assert (p * q).degree == p.degree + q.degree


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError, match="dimension mismatch"):
        Polynomial.variable(2, 0) + Polynomial.variable(3, 0)


def test_pow_negative_rejected():
    with pytest.raises(ValueError):
        Polynomial.variable(2, 0) ** -1


def test_evaluate_on_unit_sphere_points():
    p = parse("x^2 + y^2 + z^2 - 1", C3)
    assert p.evaluate([1, 0, 0]) == 0
    assert p.evaluate([3, 4, 0]) == 24
    assert Polynomial.zero(3).evaluate([Fraction(1, 2), 1, 7]) == 0


def test_evaluate_exact_vs_float():
    p = parse("1/3*x^2*y - 7*z + 2", C3)
    exact = p.evaluate([Fraction(1, 2), Fraction(2, 3), Fraction(-1, 5)])
    approx = p.evaluate([0.5, 2 / 3, -0.2])
    assert isinstance(exact, Fraction)
    assert abs(float(exact) - approx) < 1e-12


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(40):
        p = random_polynomial(rng, 3, 3)
        q = random_polynomial(rng, 3, 3)
        x = random_rational_point(rng, 3)
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_ring_laws_exact():
    rng = random.Random(13)
    for _ in range(40):
        p = random_polynomial(rng, 3, 3, n_terms=5)
        q = random_polynomial(rng, 3, 3, n_terms=5)
        r = random_polynomial(rng, 3, 3, n_terms=5)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


# -- univariate-in-one-variable division -------------------------------------


def test_exact_divide_product():
    p = parse("x^2*y + 2*x^2 - y - 2", C2)
    q = parse("x^2 - 1", C2)
    quotient, remainder = exact_divide(p, q, main_var=0)
    assert quotient == parse("y + 2", C2)
    assert remainder.is_zero


def test_exact_divide_with_remainder():
    p = parse("x^2*y + 1", C2)
    q = parse("x^2 - 1", C2)
    quotient, remainder = exact_divide(p, q, main_var=0)
    assert quotient == parse("y", C2)
    assert remainder == parse("y + 1", C2)


def test_exact_divide_low_degree():
    quotient, remainder = exact_divide(parse("y", C2), parse("x^2 - 1", C2), main_var=0)
    assert quotient.is_zero
    assert remainder == parse("y", C2)


def test_exact_divide_requires_constant_lead():
    with pytest.raises(ValueError, match="leading coefficient"):
        exact_divide(parse("x^3", C2), parse("y*x^2 - 1", C2), main_var=0)


def test_exact_divide_identity_random():
    rng = random.Random(17)
    for _ in range(60):
        dim = rng.choice((2, 3))
        # divisor with constant leading coefficient in variable 0
        tail = {
            e: c for e, c in random_polynomial(rng, dim, 2).terms.items() if e[0] <= 1
        }
        q = Polynomial.monomial(dim, (2,) + (0,) * (dim - 1), 1) + Polynomial(dim, tail)
        p = random_polynomial(rng, dim, 4)
        quotient, remainder = exact_divide(p, q, 0)
        assert q * quotient + remainder == p
        assert remainder.is_zero or remainder.degree_in(0) < q.degree_in(0)


# -- sphere-quadric division --------------------------------------------------


def test_divide_two_sphere_product():
    text = "(x^2 + y^2 + z^2 - 1)*((x - 3)^2 + y^2 + z^2 - 1)"
    p = parse(text, C3)
    q = SphereQuadric(2, (0, 0, 0), 1)
    cofactor = divide_by_sphere_quadric(p, q)
    assert cofactor == parse("(x - 3)^2 + y^2 + z^2 - 1", C3)


def test_divide_self_gives_one():
    p = parse("x1^2 + x2^2 - 1", VarConvention("indexed", 3))
    q = SphereQuadric(1, (0, 0), 1)
    assert divide_by_sphere_quadric(p, q) == Polynomial.constant(3, 1)


def test_divide_degree_one_fails():
    p = parse("x1 + x2", VarConvention("indexed", 3))
    q = SphereQuadric(1, (0, 0), 1)
    assert divide_by_sphere_quadric(p, q) is None


def test_divide_requires_enough_variables():
    with pytest.raises(ValueError, match="too small"):
        divide_by_sphere_quadric(Polynomial.variable(2, 0), SphereQuadric(2, (0, 0, 0), 1))


def test_sphere_quadric_expand_block_offset():
    q = SphereQuadric(1, (Fraction(1), Fraction(0)), Fraction(4))
    expanded = q.expand(4, block_start=1)
    conv = VarConvention("indexed", 4)
    assert expanded == parse("(x2 - 1)^2 + x3^2 - 4", conv)


def test_divide_round_trip_random():
    rng = random.Random(23)
    for _ in range(60):
        dim = rng.choice((3, 4, 5))
        q = random_sphere_quadric(rng, dim)
        r = random_polynomial(rng, dim, 4, n_terms=6)
        product = q.expand(dim) * r
        if product.is_zero:
            assert divide_by_sphere_quadric(product, q) == Polynomial.zero(dim)
            continue
        assert divide_by_sphere_quadric(product, q) == r
        assert divide_by_sphere_quadric(product + 1, q) is None


def test_zero_polynomial_accepted_everywhere():
    z = Polynomial.zero(3)
    assert (z + z).is_zero and (z * parse("x + 1", C3)).is_zero
    assert z ** 3 == z * z * z


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Polynomial(2, {(1, 0): 0.5})


def test_divide_round_trip_with_block_offset():
    rng = random.Random(29)
    conv = VarConvention("indexed", 4)
    q = SphereQuadric(1, (Fraction(1, 2), Fraction(-1)), Fraction(9, 4))
    for _ in range(20):
        r = random_polynomial(rng, 4, 3, n_terms=5)
        product = q.expand(4, block_start=1) * r
        if product.is_zero:
            continue
        assert divide_by_sphere_quadric(product, q, block_start=1) == r
        assert divide_by_sphere_quadric(product + 1, q, block_start=1) is None


def test_remove_variables_guard():
    p = parse("x*y", C2)
    with pytest.raises(ValueError, match="occurs"):
        p.remove_variables([1])
