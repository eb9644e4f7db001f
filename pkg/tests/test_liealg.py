from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakberger import catalog
from weakberger.exactlin import Field, Matrix
from weakberger.liealg import (
    LieAlgebra,
    PreconditionError,
    Representation,
    adjoint,
    check_jacobi,
    dual,
    ext_power,
    from_document,
    hom_space,
    invariant_bilinear_forms,
    invariants,
    is_irreducible,
    is_semisimple,
    killing_form,
    simple_ideal_count,
    sym_power,
    tensor,
    to_document,
)

coeffs = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


def sl2():
    return catalog.sl2("qi").rep


def test_sl2_brackets():
    L = sl2().algebra
    # F, H, E
    assert L.bracket_basis(1, 2) == {2: 2}
    assert L.bracket_basis(1, 0) == {0: -2}
    assert L.bracket_basis(2, 0) == {1: 1}


@given(coeffs, coeffs)
def test_bracket_is_antisymmetric(x, y):
    L = sl2().algebra
    assert L.bracket(x, y) == tuple(-c for c in L.bracket(y, x))


def test_jacobi_failure_is_detected():
    # [e0,e1] = e2, [e0,e2] = e0: violates Jacobi
    L = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})
    assert not check_jacobi(L)
    assert check_jacobi(LieAlgebra.heisenberg())


def test_semisimplicity_and_ideals():
    assert is_semisimple(sl2().algebra)
    assert not is_semisimple(LieAlgebra.heisenberg())
    so4 = catalog.so(4).algebra
    assert simple_ideal_count(so4) == 2
    assert simple_ideal_count(catalog.so(5).algebra) == 1
    assert simple_ideal_count(LieAlgebra.direct_sum(sl2().algebra, sl2().algebra)) == 2


def test_killing_form_of_sl2():
    K = killing_form(sl2().algebra)
    assert K.rows[1][1] == 8
    assert K.rows[0][2] == 4


def test_bad_representation_is_rejected():
    L = sl2().algebra
    mats = [Matrix.identity(2, Field.QI)] * 3
    with pytest.raises(ValueError):
        Representation(L, mats)


def test_degenerate_form_is_rejected():
    r = sl2()
    with pytest.raises(ValueError):
        Representation(r.algebra, r.matrices, Matrix.zeros(2, 2, Field.QI), "skew")


def test_irreducibility():
    assert is_irreducible(catalog.sl2_irrep(3).rep)
    r = sl2()
    assert not is_irreducible(tensor(r, r))
    with pytest.raises(PreconditionError):
        is_irreducible(catalog.sl2("q").rep)


def test_tensor_square_of_sl2_decomposes():
    r = sl2()
    rr = tensor(r, r)
    # C^2 (x) C^2 = S^2 + Lambda^2, one invariant
    assert invariants(rr).dim == 1
    assert hom_space(sym_power(r, 2), rr).dim == 1
    assert ext_power(r, 2).dim == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sl2_irrep_forms(k):
    r = catalog.sl2_irrep(k).rep
    forms = invariant_bilinear_forms(r)
    assert forms.dim == 1
    assert r.form_symmetry == ("skew" if k % 2 else "symmetric")
    assert hom_space(r, dual(r)).dim == 1


def test_adjoint_is_homomorphism():
    a = adjoint(catalog.so(4).algebra)
    assert a.homomorphism_holds()


def test_document_roundtrip():
    r = catalog.sp(4).rep
    L2, (r2,) = from_document(to_document(r.algebra, [r]))
    assert L2.structure_constants == r.algebra.structure_constants
    assert r2.matrices == r.matrices and r2.form == r.form


def test_document_rejects_bad_structure_constants():
    bad = to_document(LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}}))
    with pytest.raises(ValueError):
        from_document(bad)


def test_field_promotion_keeps_values():
    L = catalog.so(3, "q").algebra
    assert L.as_field("qi").bracket_basis(0, 1) == L.bracket_basis(0, 1)
    assert all(isinstance(x, Fraction) for x in L.bracket((1, 0, 0), (0, 1, 0)))
