import random
from itertools import combinations
from math import gcd

import pytest
from sympy import Matrix

from exactlinalg import (
    FormSymmetryError, IntMatrix, MatrixShapeError, Parity, SymmetricForm, congruence, determinant,
    direct_sum, parity, signature_of, smith_normal_form,
)


def _random_matrix(rng, max_size=6, bound=5):
    rows, cols = rng.randint(1, max_size), rng.randint(1, max_size)
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def _minor_gcds(m: IntMatrix):
    """d_k = gcd of all k x k minors; invariant factors are d_k / d_(k-1)."""
    rows = m.to_rows()
    gcds = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for r in combinations(range(m.rows), k):
            for c in combinations(range(m.cols), k):
                g = gcd(g, determinant(IntMatrix.from_rows([[rows[i][j] for j in c] for i in r])))
        if g == 0:
            break
        gcds.append(g)
    return gcds


def test_smith_normal_form_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])).invariant_factors == (2, 6, 12)
    assert smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]])).invariant_factors == ()
    assert smith_normal_form(IntMatrix.from_rows([], cols=3)).rank == 0
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).invariant_factors == (1, 6)


def test_smith_normal_form_matches_minor_oracle_on_random_matrices():
    rng = random.Random(20240607)
    for _ in range(1000):
        m = _random_matrix(rng)
        snf = smith_normal_form(m)
        assert snf.rank == Matrix(m.to_rows()).rank()
        factors = snf.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        gcds = _minor_gcds(m)
        expected = [gcds[0]] + [gcds[i] // gcds[i - 1] for i in range(1, len(gcds))] if gcds else []
        assert list(factors) == expected


def test_smith_normal_form_is_idempotent():
    rng = random.Random(31)
    for _ in range(2000):
        factors = smith_normal_form(_random_matrix(rng, max_size=5)).invariant_factors
        if not factors:
            continue
        assert smith_normal_form(IntMatrix.diagonal(factors)).invariant_factors == factors


def test_determinant_agrees_with_sympy():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert determinant(IntMatrix.from_rows(rows)) == Matrix(rows).det()


def test_shape_errors():
    with pytest.raises(MatrixShapeError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(MatrixShapeError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(FormSymmetryError):
        SymmetricForm.from_rows([[1, 2], [3, 4]])


def test_signature_of_standard_forms():
    assert signature_of(SymmetricForm.hyperbolic()).signature == 0
    s = signature_of(SymmetricForm.hyperbolic())
    assert (s.b_plus, s.b_zero, s.b_minus) == (1, 0, 1)
    e8_like = SymmetricForm.from_rows([[2, -1], [-1, 2]])
    assert str(signature_of(e8_like)) == "(2, 0, 0)"
    assert signature_of(SymmetricForm.from_rows([[1, -3], [-3, 10]])).b_plus == 2
    assert signature_of(SymmetricForm.diagonal(1, 0, -1)).b_zero == 1
    assert signature_of(SymmetricForm.empty()).dimension == 0


def test_signature_is_congruence_invariant():
    rng = random.Random(31337)
    for _ in range(200):
        n = rng.randint(1, 5)
        upper = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        form = SymmetricForm.from_rows([[upper[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)])
        change = IntMatrix.identity(n).to_rows()
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                change[i] = [-v for v in change[i]]
            else:
                c = rng.randint(-2, 2)
                change[i] = [a + c * b for a, b in zip(change[i], change[j])]
        unimodular = IntMatrix.from_rows(change)
        assert determinant(unimodular) in (1, -1)
        assert signature_of(congruence(form, unimodular)) == signature_of(form)


def test_direct_sum_and_parity():
    both = direct_sum(SymmetricForm.hyperbolic(), SymmetricForm.diagonal(1, -1))
    assert both.dimension == 4
    assert signature_of(both).signature == 0
    assert parity(SymmetricForm.hyperbolic()) is Parity.EVEN
    assert parity(both) is Parity.ODD
