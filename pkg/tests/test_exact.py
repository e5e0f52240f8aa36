from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactfem.errors import SingularMatrixError
from exactfem.exact import (
    identity_matrix,
    mat_det,
    mat_mul,
    mat_rank,
    mat_solve,
    rat,
    rat_parse,
    rat_str,
)

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=8
)


def test_rat_reduces_to_canonical_form():
    assert rat(2, 4) == Fraction(1, 2)
    x = rat(0, 5)
    assert (x.numerator, x.denominator) == (0, 1)
    y = rat(3, -6)
    assert y == Fraction(-1, 2) and y.denominator == 2


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_rat_str_roundtrip():
    assert rat_str(rat(1, 2)) == "1/2"
    assert rat_str(rat(-4, 8)) == "-1/2"
    assert rat_str(rat(7)) == "7"
    assert rat_parse("?/!".replace("?", "-3").replace("!", "9")) == Fraction(-1, 3)
    assert rat_parse("5") == 5


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


def test_det_examples():
    assert mat_det([[5]]) == 5
    assert mat_det(identity_matrix(3)) == 1
    assert mat_det([[1, 2], [2, 4]]) == 0


def test_det_row_swap_sign():
    assert mat_det([[0, 1], [1, 0]]) == -1


@given(st.integers(-5, 5), st.data())
@settings(max_examples=50, deadline=None)
def test_det_is_multiplicative(_, data):
    n = data.draw(st.integers(1, 3))
    draw_matrix = lambda: [
        [data.draw(rationals) for _ in range(n)] for _ in range(n)
    ]
    a, b = draw_matrix(), draw_matrix()
    assert mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b)


def test_solve_identity_returns_rhs():
    b = [[rat(1, 3)], [rat(-2)], [rat(5, 7)]]
    assert mat_solve(identity_matrix(3), b) == tuple(tuple(r) for r in b)


def test_solve_back_substitution_example():
    x = mat_solve([[1, 1], [0, 1]], [[1], [0]])
    assert x == ((Fraction(1),), (Fraction(0),))


def test_solve_singular_raises():
    with pytest.raises(SingularMatrixError):
        mat_solve([[1, 2], [2, 4]], [[1], [1]])


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_solve_then_multiply_back(data):
    n = data.draw(st.integers(1, 3))
    m = data.draw(st.integers(1, 2))
    a = [[data.draw(rationals) for _ in range(n)] for _ in range(n)]
    b = [[data.draw(rationals) for _ in range(m)] for _ in range(n)]
    if mat_det(a) == 0:
        with pytest.raises(SingularMatrixError):
            mat_solve(a, b)
        return
    x = mat_solve(a, b)
    assert mat_mul(a, x) == tuple(tuple(Fraction(v) for v in row) for row in b)


def test_rank_examples():
    assert mat_rank([[0, 0, 0], [0, 0, 0]]) == 0
    assert mat_rank(identity_matrix(3)) == 3
    assert mat_rank([[1, 2], [2, 4]]) == 1


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_full_rank_iff_nonzero_det(data):
    n = data.draw(st.integers(1, 3))
    a = [[data.draw(rationals) for _ in range(n)] for _ in range(n)]
    assert (mat_rank(a) == n) == (mat_det(a) != 0)


def test_non_square_det_rejected():
    with pytest.raises(ValueError):
        mat_det([[1, 2, 3], [4, 5, 6]])
