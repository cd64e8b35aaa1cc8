import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from soclekit.linalg import (
    Matrix,
    gen_binomial,
    kernel_basis,
    monomial_basis,
    rank,
    term_order_key,
)


def brute_force_monomials(n, e):
    """Independent stars-and-bars enumeration."""
    return {m for m in product(range(e + 1), repeat=n + 1) if sum(m) == e}


def test_basis_binary_cubics_exact_order():
    assert monomial_basis(1, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]


def test_basis_counts():
    assert len(monomial_basis(2, 2)) == 6
    assert len(monomial_basis(3, 3)) == 20
    assert monomial_basis(3, 3) == sorted(
        brute_force_monomials(3, 3), key=term_order_key
    )


def test_basis_matches_stars_and_bars():
    for n in range(5):
        for e in range(9):
            basis = monomial_basis(n, e)
            assert set(basis) == brute_force_monomials(n, e)
            assert len(basis) == len(set(basis))
            assert len(basis) == gen_binomial(n + e, n)


def test_basis_deterministic_and_strictly_ordered():
    a = monomial_basis(2, 4)
    b = monomial_basis(2, 4)
    assert a == b
    keys = [term_order_key(m) for m in a]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_rank_trivial_cases():
    assert rank(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(Matrix([[0, 0], [0, 0]])) == 0
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_kernel_trivial_cases():
    assert kernel_basis(Matrix([[1, 0], [0, 1]])) == []
    assert kernel_basis(Matrix([[1, 1]])) == [[1, -1]]
    assert kernel_basis(Matrix([[0, 0, 0], [0, 0, 0]])) == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]


def test_gen_binomial_values():
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(-2, 2) == 3  # (-2)(-3)/2
    # direct product oracle for the fractional case
    a = Fraction(-1, 2)
    assert gen_binomial(a, 2) == a * (a - 1) / 2 == Fraction(3, 8)
    assert gen_binomial(a, 0) == 1
    with pytest.raises(ValueError):
        gen_binomial(1, -1)


def _gauss_rank(rows, ncols):
    """Fraction-arithmetic elimination, independent of the Bareiss kernel."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def test_rank_against_fraction_gauss_oracle():
    rng = random.Random(2024)
    for _ in range(150):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        rows = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(nc)]
            for _ in range(nr)
        ]
        assert rank(Matrix(rows)) == _gauss_rank(rows, nc)


def test_rank_kernel_dimension_identity_and_exactness():
    rng = random.Random(77)
    for _ in range(120):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        m = Matrix([[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)])
        kb = kernel_basis(m)
        assert rank(m) + len(kb) == nc
        for vec in kb:
            assert all(v == 0 for v in m.matvec(vec))
            content = 0
            for v in vec:
                content = __import__("math").gcd(content, v)
            assert content == 1
            assert next(v for v in vec if v) > 0


def test_kernel_deterministic():
    rows = [[2, 4, 6], [1, 2, 3]]
    assert kernel_basis(Matrix(rows)) == kernel_basis(Matrix(rows))


small_ints = st.integers(min_value=-9, max_value=9)


@given(
    st.lists(
        st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=6
    )
)
def test_rank_transpose_invariance(rows):
    m = Matrix(rows)
    assert rank(m) == rank(m.transpose())
    assert rank(m) <= min(m.nrows, m.ncols)


def test_matrix_validation():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([], ncols=None)
    assert Matrix([], ncols=3).nrows == 0
