from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from weakberger.exactlin import (
    BasisSolver,
    DimensionMismatchError,
    Field,
    FieldMismatchError,
    GaussRat,
    Matrix,
    Subspace,
    format_scalar,
    gauss,
    intersect,
    kernel_basis,
    nullspace,
    parse_scalar,
    rref,
    solve,
    unique_rows,
)

small = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
gaussians = st.builds(gauss, rationals, rationals)


def int_matrix(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rref_small_example():
    m, rank, piv = rref(Matrix.from_rows([[1, 2, 3], [2, 4, 6]]))
    assert rank == 1 and piv == [0]
    assert list(m.rows[0]) == [1, 2, 3]


def test_kernel_and_intersection():
    ker = kernel_basis(Matrix.from_rows([[1, 2, 3]]))
    assert ker.dim == 2
    plane = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert intersect(ker, plane) == Subspace(3, [[0, 3, -2]])


def test_solve_and_inconsistent():
    assert solve(Matrix.from_rows([[1, 1], [1, -1]]), [2, 0]) == (1, 1)
    assert solve(Matrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None


def test_empty_system_has_full_kernel():
    assert nullspace([], 4).dim == 4
    assert nullspace([{}], 0).dim == 0


@given(int_matrix())
def test_rank_matches_sympy(rows):
    _, rank, _ = rref(Matrix.from_rows(rows))
    assert rank == sympy.Matrix(rows).rank()


@given(int_matrix())
def test_kernel_vectors_are_solutions(rows):
    ncols = len(rows[0])
    ker = nullspace(rows, ncols)
    assert ker.dim == ncols - sympy.Matrix(rows).rank()
    m = Matrix.from_rows(rows)
    for v in ker.basis:
        assert not any(m.apply(v))


@settings(max_examples=1000)
@given(int_matrix(5, 5), st.data())
def test_solve_is_exact(rows, data):
    m = Matrix.from_rows(rows)
    x = data.draw(st.lists(rationals, min_size=m.ncols, max_size=m.ncols))
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None
    assert m.apply(sol) == b


@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=5), st.lists(st.lists(small, min_size=4, max_size=4), max_size=5))
def test_dimension_formula(a, b):
    A, B = Subspace(4, a), Subspace(4, b)
    assert (A + B).dim + intersect(A, B).dim == A.dim + B.dim
    assert intersect(A, B).is_subspace_of(A)


@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=4), st.randoms())
def test_canonical_form_is_basis_independent(vecs, rnd):
    A = Subspace(5, vecs)
    mixed = []
    for v in A.basis:
        c = Fraction(rnd.randint(1, 7))
        w = [c * x for x in v]
        if mixed:
            w = [x + y for x, y in zip(w, mixed[-1])]
        mixed.append(w)
    assert Subspace(5, mixed) == A
    for v in A.basis:
        assert A.combine(A.coordinates(v)) == tuple(v)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


def test_gaussrat_collapses_to_fraction():
    z = gauss(1, 2) * gauss(1, -2)
    assert isinstance(z, Fraction) and z == 5
    assert isinstance(gauss(3, 0), Fraction)


@given(gaussians)
def test_scalar_text_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_scalar_format_examples():
    assert format_scalar(gauss(-1, Fraction(1, 2))) == "-1+1/2i"
    assert format_scalar(gauss(0, -1)) == "-1i"
    assert parse_scalar("1/2i") == gauss(0, Fraction(1, 2))


def test_complex_kernel():
    i = gauss(0, 1)
    ker = nullspace([[1, i]], 2, Field.QI)
    assert ker.dim == 1
    (v,) = ker.basis
    assert v[0] + i * v[1] == 0


def test_field_mismatch_errors():
    with pytest.raises(FieldMismatchError):
        Subspace(2, [[1, 0]], Field.Q).contains([gauss(0, 1), 0])
    with pytest.raises(FieldMismatchError):
        Field.Q.join(Field.QI)


def test_dimension_errors():
    with pytest.raises(DimensionMismatchError):
        Matrix.from_rows([[1, 2]]) @ Matrix.from_rows([[1, 2]])
    with pytest.raises(DimensionMismatchError):
        Subspace(3, [[1, 2]])


@given(int_matrix(4, 4).filter(lambda r: len(r) == len(r[0])))
def test_determinant_and_inverse_match_sympy(rows):
    m = Matrix.from_rows(rows)
    det = m.determinant()
    assert det == sympy.Matrix(rows).det()
    if det:
        assert m @ m.inverse() == Matrix.identity(m.nrows)


def test_basis_solver_uses_given_basis():
    s = BasisSolver([[1, 1, 0], [0, 1, 1]])
    assert s.coordinates([2, 5, 3]) == (2, 3)
    with pytest.raises(ValueError):
        s.coordinates([1, 0, 0])


def test_unique_rows_drops_multiples():
    rows = unique_rows([{0: 2, 1: 4}, {0: -1, 1: -2}, {}, {1: Fraction(1, 3)}])
    assert len(rows) == 2


def test_matrix_text_roundtrip():
    m = Matrix.from_rows([[Fraction(1, 2), gauss(0, 1)], [0, -3]], Field.QI)
    assert Matrix.from_text(m.to_text(), Field.QI) == m
