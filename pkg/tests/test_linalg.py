import random
from fractions import Fraction

from apolar.linalg import QMatrix, matrix_rank, nullspace, rref

from conftest import naive_rank


def test_rank_examples():
    assert matrix_rank(QMatrix.identity(3)) == 3
    assert matrix_rank(QMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert matrix_rank(QMatrix(0, 5, ())) == 0
    assert matrix_rank(QMatrix.from_rows([[0, 0], [0, 0]])) == 0


def test_rank_with_fractions():
    m = QMatrix.from_rows([[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 3), Fraction(4, 7)]])
    assert matrix_rank(m) == 1


def _random_matrix(rng, rows, cols, box=4, rank_hint=None):
    if rank_hint is not None:
        a = [[rng.randint(-box, box) for _ in range(rank_hint)] for _ in range(rows)]
        b = [[rng.randint(-box, box) for _ in range(cols)] for _ in range(rank_hint)]
        return [[sum(a[i][t] * b[t][j] for t in range(rank_hint)) for j in range(cols)] for i in range(rows)]
    return [[rng.choice([0, 0, rng.randint(-box, box)]) for _ in range(cols)] for _ in range(rows)]


def test_rank_transpose_and_oracle():
    rng = random.Random(3)
    for _ in range(300):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        hint = rng.choice([None, rng.randint(0, min(r, c))])
        rows = _random_matrix(rng, r, c, rank_hint=hint)
        m = QMatrix.from_rows(rows)
        rank = matrix_rank(m)
        assert rank == matrix_rank(m.transpose())
        assert rank == naive_rank(rows)
        if hint is not None:
            assert rank <= hint


def test_bareiss_large_entries():
    rng = random.Random(4)
    rows = [[rng.randint(-10**30, 10**30) for _ in range(8)] for _ in range(8)]
    rows[7] = [a - 3 * b for a, b in zip(rows[1], rows[2])]
    assert matrix_rank(rows) == naive_rank(rows) == 7


def test_nullspace_and_rref():
    rows = [[1, 2, 3], [2, 4, 6]]
    reduced, pivots = rref(rows)
    assert pivots == [0] and reduced == [[1, 2, 3]]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert nullspace([], 2) == [[1, 0], [0, 1]]
