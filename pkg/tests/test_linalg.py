import random
from fractions import Fraction

from cmcsurf import linalg
from cmcsurf.motions import random_rational_orthogonal


def F(x):
    return Fraction(x)


def random_symmetric(rng, n, span=5):
    a = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-span, span), rng.randint(1, 3))
            a[i][j] = v
            a[j][i] = v
    return a


def test_rank_and_echelon():
    a = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert linalg.rank(a) == 2
    assert linalg.rank(linalg.identity(4)) == 4
    assert linalg.rank(linalg.zeros(3, 3)) == 0


def test_solve_unique_and_inconsistent():
    a = [[F(2), F(0)], [F(0), F(3)]]
    assert linalg.solve(a, [F(4), F(9)]) == [F(2), F(3)]
    singular = [[F(1), F(1)], [F(1), F(1)]]
    assert linalg.solve(singular, [F(1), F(2)]) is None
    # underdetermined: free variable pinned to zero
    sol = linalg.solve([[F(1), F(1)]], [F(5)])
    assert sol is not None and linalg.matvec([[F(1), F(1)]], sol) == [F(5)]


def test_kernel_basis():
    a = [[F(1), F(2), F(0)], [F(0), F(0), F(1)]]
    basis = linalg.kernel_basis(a)
    assert len(basis) == 1
    assert linalg.matvec(a, basis[0]) == [F(0), F(0)]


def test_solve_random_round_trip():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)]
        b = linalg.matvec(a, x)
        sol = linalg.solve(a, b)
        assert sol is not None
        assert linalg.matvec(a, sol) == b


def test_kernel_random_annihilates():
    rng = random.Random(9)
    for _ in range(30):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
        basis = linalg.kernel_basis(a)
        assert len(basis) == cols - linalg.rank(a)
        for v in basis:
            assert linalg.matvec(a, v) == [F(0)] * rows


def test_congruence_diagonalize_exact():
    rng = random.Random(15)
    for _ in range(50):
        n = rng.randint(1, 5)
        a = random_symmetric(rng, n)
        c, diag = linalg.congruence_diagonalize(a)
        product = linalg.matmul(linalg.matmul(linalg.transpose(c), a), c)
        for i in range(n):
            for j in range(n):
                expected = diag[i] if i == j else F(0)
                assert product[i][j] == expected
        # C invertible
        assert linalg.rank(c) == n


def test_congruence_zero_diagonal_case():
    # hyperbolic form x*y has zero diagonal; needs the addition trick
    a = [[F(0), F(1)], [F(1), F(0)]]
    c, diag = linalg.congruence_diagonalize(a)
    pos, neg, zero = linalg.inertia(diag)
    assert (pos, neg, zero) == (1, 1, 0)


def test_inertia_signature_known_forms():
    a = [[F(1), F(0), F(0)], [F(0), F(-1), F(0)], [F(0), F(0), F(0)]]
    _, diag = linalg.congruence_diagonalize(a)
    assert linalg.inertia(diag) == (1, 1, 1)


def test_rational_orthogonal_is_orthogonal():
    rng = random.Random(21)
    for _ in range(25):
        n = rng.randint(2, 5)
        m = random_rational_orthogonal(n, rng)
        assert linalg.matmul(linalg.transpose(m), m) == linalg.identity(n)
