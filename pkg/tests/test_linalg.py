from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from subtopes.errors import SingularError
from subtopes.linalg import IntMatrix, det, identity, inverse, rank, solve_left, vec_mat


def square(n, lo=-3, hi=3):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 6).flatmap(square)


@settings(max_examples=150)
@given(matrices)
def test_det_and_rank_match_sympy(rows):
    S = sympy.Matrix(rows)
    assert det(rows) == S.det()
    assert rank(rows) == S.rank()


@settings(max_examples=100)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(square(n), st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
def test_solve_left_matches_sympy(case):
    rows, b = case
    S = sympy.Matrix(rows)
    if S.det() == 0:
        with pytest.raises(SingularError):
            solve_left(b, rows)
        return
    y = solve_left(b, rows)
    assert vec_mat(y, rows) == tuple(b)
    expected = sympy.Matrix([b]) * S.inv()
    assert [Fraction(int(v.p), int(v.q)) for v in expected] == list(y)


def test_rank_deficient_rectangular():
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert det([[1, 2], [2, 4]]) == 0


def test_inverse_and_matmul():
    A = IntMatrix(((2, 1), (1, 1)))
    inv = inverse(A)
    assert inv == ((1, -1), (-1, 2))
    assert A @ identity(2) == A
    assert A.transpose() == A
