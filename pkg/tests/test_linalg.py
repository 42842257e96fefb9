import random
from fractions import Fraction

import pytest

from hyperdet import Matrix, rational_from_str, rational_to_str


def test_rational_strings():
    assert rational_to_str(Fraction(3, 4)) == "3/4"
    assert rational_to_str(Fraction(-6, 8)) == "-3/4"
    assert rational_to_str(Fraction(5)) == "5"
    assert rational_from_str("-3/4") == Fraction(-3, 4)
    assert rational_from_str("7") == 7
    with pytest.raises(ValueError):
        rational_from_str(0.5)


def test_rank_examples():
    assert Matrix.zeros(2, 2).rank() == 0
    assert Matrix.identity(3).rank() == 3
    assert Matrix.from_rows([[1, 0], [0, 1], [0, 0]]).rank() == 2


def test_kernel_examples():
    k = Matrix.from_rows([[1, 1]]).right_kernel()
    assert k == [(Fraction(1), Fraction(-1))]
    assert Matrix.identity(2).right_kernel() == []
    k = Matrix.from_rows([[1, 2], [2, 4]]).right_kernel()
    assert len(k) == 1
    v = k[0]
    # proportional to (2, -1)
    assert v[0] * (-1) == v[1] * 2
    assert v[0] == 1  # first nonzero coordinate normalized


def test_det_examples():
    assert Matrix.from_rows([[1, 2], [3, 4]]).det() == -2
    assert Matrix.from_rows([[2, 0], [0, 3]]).det() == 6
    assert Matrix.identity(3).det() == 1
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2, 3], [4, 5, 6]]).det()


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = rows[0][j] * _cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def test_det_matches_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(250):
        n = rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        assert Matrix.from_rows(rows).det() == _cofactor_det(rows)


def test_rank_nullity_and_det_rank_consistency():
    rng = random.Random(11)
    for _ in range(120):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        m = Matrix.from_rows(
            [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(c)] for _ in range(r)]
        )
        kernel = m.right_kernel()
        assert m.rank() + len(kernel) == c
        for v in kernel:
            assert m.mul_vector(v) == (Fraction(0),) * r
            first = next(x for x in v if x)
            assert first == 1
        if r == c:
            assert (m.det() != 0) == (m.rank() == c)


def test_matrix_ops():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert a.transpose() == Matrix.from_rows([[1, 3], [2, 4]])
    assert a * Matrix.identity(2) == a
    assert (a - a) == Matrix.zeros(2, 2)
    assert a.stack(a).rows == 4
    assert a.mul_vector([1, 1]) == (Fraction(3), Fraction(7))
    with pytest.raises(ValueError):
        Matrix(2, 2, [1, 2, 3])
