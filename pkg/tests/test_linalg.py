import random
from fractions import Fraction

import pytest

from divatlas.linalg import (
    RationalMatrix,
    exact_det,
    gauss_rank,
    image_basis,
    in_span,
    int_det,
    inverse,
    lin_indep,
    random_matrix,
    rank,
)


def test_rank_identity():
    assert rank(RationalMatrix.identity(3)) == 3


def test_rank_zero_matrix():
    assert rank(RationalMatrix.zero(4, 7)) == 0


def test_rank_rank_one_matrix_matches_gauss_oracle():
    M = RationalMatrix([[1, 2], [2, 4], [3, 6]])
    assert gauss_rank(M) == 1  # independent naive-elimination oracle
    assert rank(M) == 1


def test_rank_fractional_entries():
    M = RationalMatrix([["1/2", "1/3"], ["1/4", "1/6"]])
    assert rank(M) == 1
    M = RationalMatrix([["1/2", "1/3"], ["1/4", "1/5"]])
    assert rank(M) == 2


def test_image_basis_identity():
    assert image_basis(RationalMatrix.identity(2)) == [
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
    ]


def test_image_basis_zero():
    assert image_basis(RationalMatrix.zero(3, 2)) == []


def test_image_basis_spans_column_space():
    M = RationalMatrix([[1, 2], [2, 4]])
    basis = image_basis(M)
    assert len(basis) == 1
    assert in_span((1, 2), basis)


def test_in_span_trivial_cases():
    assert in_span((0, 0), [])
    assert not in_span((1, 0), [(0, 1)])
    assert in_span((3, 6), [(1, 2)])  # explicit scalar 3


def test_in_span_dimension_mismatch():
    with pytest.raises(ValueError):
        in_span((1, 0, 0), [(0, 1)])


def test_floats_rejected():
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])


def test_rank_transpose_random():
    rng = random.Random("transpose")
    for _ in range(60):
        M = random_matrix(rng.randint(1, 12), rng.randint(1, 12), rng)
        assert rank(M) == rank(M.transpose())


def test_bareiss_equals_gauss_random():
    rng = random.Random("oracle")
    for _ in range(100):
        M = random_matrix(rng.randint(1, 12), rng.randint(1, 12), rng)
        assert rank(M) == gauss_rank(M)


def test_random_full_rank_frequency():
    # generic matrices are full rank with overwhelming frequency
    hits = 0
    for seed in range(200):
        rng = random.Random(f"fullrank:{seed}")
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        M = random_matrix(r, c, rng)
        if rank(M) == min(r, c):
            hits += 1
    assert hits >= 190


def test_rank_bounded_by_shape():
    rng = random.Random("bound")
    for _ in range(40):
        r, c = rng.randint(1, 10), rng.randint(1, 10)
        assert rank(random_matrix(r, c, rng)) <= min(r, c)


def test_columns_lie_in_image_basis_span():
    rng = random.Random("span")
    for _ in range(30):
        M = random_matrix(rng.randint(1, 8), rng.randint(1, 8), rng)
        basis = image_basis(M)
        for j in range(M.cols):
            assert in_span(M.column(j), basis)


def test_inverse_round_trip():
    M = RationalMatrix([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
    inv = inverse(M)
    prod = [
        [sum(M[i, l] * inv[l, j] for l in range(3)) for j in range(3)]
        for i in range(3)
    ]
    assert RationalMatrix(prod) == RationalMatrix.identity(3)


def test_inverse_singular_raises():
    with pytest.raises(ValueError):
        inverse(RationalMatrix([[1, 2], [2, 4]]))


def test_exact_det_matches_int_det():
    rng = random.Random("det")
    for _ in range(50):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert exact_det(rows) == int_det(rows)


def test_det_fractional():
    assert exact_det([["1/2", 0], [0, "1/3"]]) == Fraction(1, 6)


def test_lin_indep():
    assert lin_indep([(1, 0), (0, 1)])
    assert not lin_indep([(1, 2), (2, 4)])
    assert lin_indep([])


def test_from_entries_sparse():
    M = RationalMatrix.from_entries(2, 3, {(0, 0): 1, (1, 2): "2/3"})
    assert M[0, 0] == 1
    assert M[1, 2] == Fraction(2, 3)
    assert M[0, 1] == 0
    with pytest.raises(ValueError):
        RationalMatrix.from_entries(2, 2, {(2, 0): 1})
