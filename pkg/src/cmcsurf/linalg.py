"""Exact linear algebra over the rationals (lists of Fraction)."""

from __future__ import annotations

from fractions import Fraction

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def copy_matrix(m) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v) -> Vector:
    return [sum((x * Fraction(y) for x, y in zip(row, v)), Fraction(0)) for row in a]


def row_echelon(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (in place on a copy) and pivot columns."""
    a = copy_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        sel = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    return len(row_echelon(m)[1])


def solve(a: Matrix, b) -> Vector | None:
    """One exact solution of a x = b (free variables set to 0), or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(a, b)]
    ech, pivots = row_echelon(aug)
    if cols in pivots:
        return None  # pivot in the constant column: inconsistent
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = ech[r][cols]
    return x


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the nullspace {v : a v = 0}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    ech, pivots = row_echelon(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def congruence_diagonalize(a: Matrix) -> tuple[Matrix, list[Fraction]]:
    """Invertible rational C with C^T A C diagonal, for symmetric A.

    Returns (C, diag).  Column i of C is a vector on which the quadratic
    form takes the value diag[i], which makes the inertia (and explicit
    sign witnesses) exactly computable without eigenvectors.
    """
    n = len(a)
    work = copy_matrix(a)
    c = identity(n)

    def add_col(dst: int, src: int, f: Fraction) -> None:
        # congruence x_dst <- x_dst + f * x_src applied symmetrically
        for i in range(n):
            work[i][dst] += f * work[i][src]
        for j in range(n):
            work[dst][j] += f * work[src][j]
        for i in range(n):
            c[i][dst] += f * c[i][src]

    def swap(i: int, j: int) -> None:
        for r in range(n):
            work[r][i], work[r][j] = work[r][j], work[r][i]
        work[i], work[j] = work[j], work[i]
        for r in range(n):
            c[r][i], c[r][j] = c[r][j], c[r][i]

    for k in range(n):
        if work[k][k] == 0:
            sel = next((j for j in range(k + 1, n) if work[j][j] != 0), None)
            if sel is not None:
                swap(k, sel)
            else:
                pair = next(
                    (
                        (i, j)
                        for i in range(k, n)
                        for j in range(i + 1, n)
                        if work[i][j] != 0
                    ),
                    None,
                )
                if pair is None:
                    continue  # remaining block is zero
                i, j = pair
                add_col(i, j, Fraction(1))  # makes work[i][i] = 2*a_ij != 0
                if i != k:
                    swap(k, i)
        pivot = work[k][k]
        for i in range(k + 1, n):
            if work[k][i] != 0:
                add_col(i, k, -work[k][i] / pivot)
    return c, [work[i][i] for i in range(n)]


def inertia(diag: list[Fraction]) -> tuple[int, int, int]:
    """(#positive, #negative, #zero) entries."""
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
