import itertools
from fractions import Fraction

import pytest
import sympy

from weakberger import catalog
from weakberger import curvature as c
from weakberger import tanaka as t
from weakberger.exactlin import Field
from weakberger.liealg import LieAlgebra, hom_space


def base(spec, field="qi"):
    return t.build_base_grading(catalog.resolve(spec, field).rep)


def _sym(x):
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator)


def oracle_g1_dim(g):
    """Degree-one derivations of the negative part that land in g_0 + g_-1, as one dense sympy system."""
    neg = [i for i, d in enumerate(g.degrees) if d < 0]
    targets = {i: g.component(g.degrees[i] + 1) for i in neg}
    slot = {}
    for i in neg:
        for k in targets[i]:
            slot[(i, k)] = len(slot)
    N = g.dim
    L = g.algebra

    def br(a, b):
        return L.bracket_basis(a, b)

    rows = []
    for i, j in itertools.combinations(neg, 2):
        # u([x_i, x_j]) - [u x_i, x_j] - [x_i, u x_j] = 0, coordinate by coordinate
        eqs = [[0] * len(slot) for _ in range(N)]
        for m, cf in br(i, j).items():
            for k in targets.get(m, ()):
                eqs[k][slot[(m, k)]] += _sym(cf) if m in targets else 0
        for k in targets[i]:
            for w, cf in br(k, j).items():
                eqs[w][slot[(i, k)]] -= _sym(cf)
        for k in targets[j]:
            for w, cf in br(i, k).items():
                eqs[w][slot[(j, k)]] -= _sym(cf)
        rows.extend(eqs)
    # compatibility with the g_0 action on the negative part is automatic in this shape;
    # degree-zero brackets of g_-2 with itself vanish for a one-dimensional g_-2
    return len(slot) - sympy.Matrix(rows).rank()


@pytest.mark.parametrize("spec,g1", [("sl2:sym3", 4), ("sp(2)", 6), ("sp(4)", 24), ("sl2:sym5 in sp(6)", 0)])
def test_g1_matches_oracle(spec, g1):
    g = base(spec)
    assert t.prolong_step(g, 1).dim == g1
    assert oracle_g1_dim(g) == g1


def test_base_grading_shape():
    g = base("sl2:sym3")
    assert g.dims == {-2: 1, -1: 4, 0: 4}
    assert g.is_fundamental() and g.grading_element_holds()


@pytest.mark.parametrize(
    "spec,dims,terminated,total",
    [("sl2:sym3", [4, 1, 0], True, 14), ("sl2:sym5 in sp(6)", [0], True, 11)],
)
def test_full_prolongation(spec, dims, terminated, total):
    res = t.full_prolongation(base(spec))
    assert res.dims == dims and res.terminated is terminated
    assert res.assembled.dim == total
    assert res.jacobi and res.grading_element_ok


def test_g2_is_simple_and_killing_graded():
    res = t.full_prolongation(base("sl2:sym3"))
    assert res.simple and res.killing_graded


def test_sp4_is_unbounded():
    res = t.full_prolongation(base("sp(4)"), max_degree=3)
    assert res.dims == [24, 46, 80]
    assert not res.terminated and res.assembled is None
    assert res.status.startswith("unbounded")


@pytest.mark.parametrize("spec", ["sl2:sym3", "sp(4)", "sl2:sym5 in sp(6)"])
def test_g1_alternative_agrees(spec):
    g = base(spec)
    assert t.g1_alternative(g) == t.prolong_step(g, 1)


@pytest.mark.parametrize("spec", ["sl2:sym3", "sp(4)"])
def test_g1_contains_one_copy_of_v(spec):
    k = catalog.resolve(spec, "qi").rep
    pro = t.Prolongation(t.build_base_grading(k))
    pro.step(1)
    assert hom_space(k, t.g1_module(pro, k)).dim == 1


@pytest.mark.parametrize("spec,p", [("sl2:sym3", 8), ("sp(4)", 48), ("sl2:sym5 in sp(6)", 0)])
def test_proposition_isomorphism(spec, p):
    k = catalog.resolve(spec, "qi")
    h = catalog.sl2_tensor_symplectic(k).rep
    ps = c.pspace(h)
    pro = t.Prolongation(t.build_base_grading(k.rep))
    assert ps.dim == p == 2 * t.prolong_step(pro, 1).dim
    for v in ps.basis:
        u1, u2 = t.pspace_to_g1_pair(h, k.rep, v, pro)
        assert t.g1_pair_to_pspace(h, k.rep, u1, u2) == tuple(v)


def test_grading_errors():
    with pytest.raises(t.GradingError):
        t.build_base_grading(catalog.so(3).rep)
    g = base("sl2:sym3")
    with pytest.raises(t.GradingError):
        t.GradedLieAlgebra(g.algebra, [0] * (g.dim - 1))
    with pytest.raises(t.GradingError):
        t.GradedLieAlgebra(g.algebra, [0] * (g.dim - 1) + [1])
    pro = t.Prolongation(g)
    with pytest.raises(t.GradingError):
        pro.step(2)
    with pytest.raises(t.GradingError):
        pro.step(0)


def test_heisenberg_is_not_fundamental_without_bracket():
    L = LieAlgebra.abelian(3, Field.Q)
    g = t.GradedLieAlgebra(L, [-2, -1, -1])
    assert not g.is_fundamental()


def test_report_shape():
    rep = t.prolongation_report(t.full_prolongation(base("sl2:sym3")))
    assert rep["prolongation"] == [4, 1, 0]
    assert rep["base"]["dims"] == {"-2": 1, "-1": 4, "0": 4}
