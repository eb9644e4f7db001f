import pytest

from weakberger import catalog
from weakberger.catalog import CatalogError, resolve, wedge
from weakberger.exactlin import Field
from weakberger.liealg import check_jacobi, is_irreducible


@pytest.mark.parametrize(
    "spec,dim,adim,sym",
    [
        ("so(3)", 3, 3, "symmetric"),
        ("so(4)", 4, 6, "symmetric"),
        ("sp(4)", 4, 10, "skew"),
        ("sl2:sym3", 4, 3, "skew"),
        ("sl2xk(sl2:sym3)", 8, 6, "symmetric"),
        ("sl2xk(sp(4))", 8, 13, "symmetric"),
        ("tensor(so(3),so(3))", 9, 6, "symmetric"),
        ("tensor(sp(2),sp(4))", 8, 13, "symmetric"),
        ("sp6:lambda30", 14, 21, "skew"),
        ("sl2:sym5 in sp(6)", 6, 3, "skew"),
    ],
)
def test_catalog_shapes(spec, dim, adim, sym):
    e = resolve(spec)
    assert (e.rep.dim, e.rep.algebra.dim, e.rep.form_symmetry) == (dim, adim, sym)
    assert check_jacobi(e.algebra)
    e.rep.validate()


def test_sp2_basis_order():
    m = catalog.sp(2).rep.matrices
    # (F, H, E)
    assert m[0].rows == ((0, 0), (1, 0))
    assert m[1].rows == ((1, 0), (0, -1))
    assert m[2].rows == ((0, 1), (0, 0))


@pytest.mark.parametrize("spec", ["sp6:lambda30", "sl2:sym5", "so(5)", "sp(6)"])
def test_catalog_irreducible(spec):
    assert is_irreducible(resolve(spec).rep)


def test_ambient_check():
    with pytest.raises(CatalogError):
        resolve("sl2:sym5 in sp(4)")
    with pytest.raises(CatalogError):
        resolve("so(3) in sp(3)")


@pytest.mark.parametrize("spec", ["gl(3)", "tensor(so(3))", "sl2xk(so(3),so(3))", "so(x)", "sl2xk(sl2xk(sl2xk(sl2)))"])
def test_bad_specs(spec):
    with pytest.raises(CatalogError):
        resolve(spec)


def test_field_tag():
    assert resolve("so(3)", "q").rep.field is Field.Q
    assert resolve("so(3)").rep.field is Field.QI


def test_wedge_convention():
    form = catalog.so(3).rep.form
    e = [[1 if i == j else 0 for i in range(3)] for j in range(3)]
    w = wedge(form, e[0], e[1])
    # (X ^ Y) Z = (X, Z) Y - (Y, Z) X
    assert tuple(w.apply(e[0])) == (0, 1, 0)
    assert tuple(w.apply(e[1])) == (-1, 0, 0)
    assert not any(w.apply(e[2]))
