from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from liegeo.linalg import (
    LinAlgError,
    Matrix,
    adjoint,
    coordinates,
    frac,
    frac_str,
    kernel_basis,
    signature,
    solve,
)
from strategies import invertible, matrices, metrics, rationals


def to_sympy(m: Matrix):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.rows])


def from_sympy(m) -> Matrix:
    return Matrix([[Fraction(int(x.p), int(x.q)) for x in m.row(i)] for i in range(m.rows)])


def test_frac_accepts_strings_and_rejects_floats():
    assert frac("-3/4") == Fraction(-3, 4)
    assert frac(2) == 2
    assert frac_str(Fraction(5, 1)) == "5"
    with pytest.raises((TypeError, ValueError)):
        frac(0.5)


def test_constructors():
    assert Matrix.identity(2) == Matrix([[1, 0], [0, 1]])
    assert Matrix.diag(1, -1)[1, 1] == -1
    assert Matrix.from_columns([[1, 2], [3, 4]]) == Matrix([[1, 3], [2, 4]])
    B = Matrix.block([[Matrix.identity(1), Matrix.zeros(1)], [Matrix.zeros(1), Matrix.diag(2)]])
    assert B == Matrix.diag(1, 2)
    assert Matrix.direct_sum(Matrix.diag(1), Matrix.diag(3)) == Matrix.diag(1, 3)


def test_shape_errors():
    with pytest.raises(LinAlgError):
        Matrix([[1, 2], [3]])
    with pytest.raises(LinAlgError):
        Matrix.identity(2) + Matrix.identity(3)
    with pytest.raises(LinAlgError):
        Matrix([[1, 2]]).det()


def test_singular_inverse_raises():
    with pytest.raises(LinAlgError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_json_round_trip():
    m = Matrix([[Fraction(1, 2), -3], [0, Fraction(7, 5)]])
    assert m.to_json() == [["1/2", "-3"], ["0", "7/5"]]
    assert Matrix.from_json(m.to_json()) == m


@given(matrices(4, elements=rationals))
def test_det_rank_match_sympy(m):
    s = to_sympy(m)
    assert m.det() == Fraction(str(s.det()))
    assert m.rank() == s.rank()


@given(matrices(3, elements=rationals))
def test_inverse_matches_sympy(m):
    s = to_sympy(m)
    if s.det() == 0:
        assert not m.is_invertible()
        return
    assert m.inverse() == from_sympy(s.inv())
    assert m @ m.inverse() == Matrix.identity(3)


@given(matrices(3, 5))
def test_kernel_dimension_and_membership(m):
    ker = kernel_basis(m)
    assert len(ker) == 5 - m.rank()
    for v in ker:
        assert not any(m.apply(v))
    assert len(ker) == len(to_sympy(m).nullspace())


@given(invertible(3), st.lists(rationals, min_size=3, max_size=3))
def test_solve(m, b):
    x = solve(m, b)
    assert list(m.apply(x)) == list(b)


def test_coordinates():
    assert list(coordinates([[1, 1], [1, -1]], [3, 1])) == [2, 1]


@given(metrics(4), invertible(4))
def test_signature_is_congruence_invariant(g, P):
    assert signature(P.T @ g @ P) == signature(g)


def test_signature_examples():
    assert signature(Matrix.diag(1, -1, 1, -1)) == (2, 2, 0)
    assert signature(Matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(Matrix.diag(1, 0, -1)) == (1, 1, 1)


@given(metrics(3), matrices(3))
def test_adjoint_is_metric_transpose(g, f):
    fs = adjoint(f, g)
    assert g @ fs == f.T @ g
    assert adjoint(fs, g) == f
