import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from weakberger import catalog
from weakberger import curvature as c
from weakberger.exactlin import Field, Matrix, gauss
from weakberger.liealg import LieAlgebra, PreconditionError, Representation
from weakberger.symspace import sphere_tensor

ints = st.integers(-5, 5)


def rep(spec, field="q"):
    return catalog.resolve(spec, field).rep


def _sym(x):
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator)


def _dense(r):
    B = sympy.Matrix([[_sym(x) for x in row] for row in r.form.rows]) if r.form is not None else None
    mats = [sympy.Matrix([[_sym(x) for x in row] for row in m.rows]) for m in r.matrices]
    return B, mats


def oracle_p_dim(r):
    """Dimension of P(h) from a dense sympy system built straight from the definition."""
    B, mats = _dense(r)
    n, d = r.dim, len(mats)
    # (P(e_x) e_y, e_z) = sum_a P[x,a] (rho_a^T B)[y, z]
    forms = [m.T * B for m in mats]
    rows = []
    for x, y, z in itertools.product(range(n), repeat=3):
        row = [0] * (n * d)
        for (p, q, s) in ((x, y, z), (y, z, x), (z, x, y)):
            for a in range(d):
                row[p * d + a] += forms[a][q, s]
        rows.append(row)
    return n * d - sympy.Matrix(rows).rank()


def oracle_r_dim(r):
    """Dimension of R(h): skew maps Lambda^2 V -> h with the first Bianchi identity."""
    _, mats = _dense(r)
    n, d = r.dim, len(mats)
    pairs = list(itertools.combinations(range(n), 2))
    idx = {p: k for k, p in enumerate(pairs)}

    def coef(i, j):
        return (idx[(i, j)], 1) if i < j else (idx[(j, i)], -1)

    rows = []
    for x, y, z in itertools.combinations(range(n), 3):
        for w in range(n):
            row = [0] * (len(pairs) * d)
            for (p, q, s) in ((x, y, z), (y, z, x), (z, x, y)):
                k, sign = coef(p, q)
                for a in range(d):
                    row[k * d + a] += sign * mats[a][w, s]
            rows.append(row)
    if not rows:
        return len(pairs) * d
    return len(pairs) * d - sympy.Matrix(rows).rank()


@pytest.mark.parametrize("spec", ["so(2)", "so(3)", "so(4)", "sp(2)", "sl2:sym3", "sp(4)", "tensor(so(2),so(3))"])
def test_pspace_matches_oracle(spec):
    r = rep(spec, "qi")
    assert c.pspace(r).dim == oracle_p_dim(r)


@pytest.mark.parametrize("spec", ["so(2)", "so(3)", "so(4)", "sp(2)", "sl2:sym3", "tensor(so(2),so(3))"])
def test_rspace_matches_oracle(spec):
    r = rep(spec, "qi")
    assert c.rspace(r).dim == oracle_r_dim(r)


@pytest.mark.parametrize(
    "spec,p,r_,rn",
    [("so(2)", 2, 1, 2), ("so(3)", 8, 6, 15), ("so(4)", 20, 20, 60), ("tensor(so(3),so(3))", 9, 1, 0)],
)
def test_known_dimensions(spec, p, r_, rn):
    r = rep(spec)
    cs = c.rspace(r)
    assert (c.pspace(r).dim, cs.dim, c.rnabla_space(r, cs).dim) == (p, r_, rn)


def test_splits():
    assert c.decompose_p(c.pspace(rep("so(4)"))).dims == (16, 4)
    assert c.decompose_r(c.rspace(rep("so(4)"))).dims == (10, 1, 9)
    assert c.decompose_p(c.pspace(rep("so(3)"))).dims == (5, 3)
    assert c.decompose_p(c.pspace(rep("tensor(so(3),so(3))"))).dims == (0, 9)


def test_zero_algebra_is_trivial():
    r = rep("zero(3)")
    assert c.pspace(r).dim == 0 and c.rspace(r).dim == 0
    assert c.spanned_by_images(c.pspace(r))


@pytest.mark.parametrize("spec", ["so(3)", "so(4)", "sl2:sym3", "tensor(so(2),so(3))"])
@given(data=st.data())
def test_random_elements_satisfy_identities(spec, data):
    r = rep(spec, "qi")
    ps, cs = c.pspace(r), c.rspace(r)
    P = ps.space.combine(data.draw(st.lists(ints, min_size=ps.dim, max_size=ps.dim)))
    R = cs.space.combine(data.draw(st.lists(ints, min_size=cs.dim, max_size=cs.dim)))
    assert ps.verify(P) and cs.verify(R)
    if r.form_symmetry != "symmetric":
        return
    for x in range(r.dim):
        assert ps.space.contains(c.tau(r, [int(i == x) for i in range(r.dim)], R, cs))


@pytest.mark.parametrize("spec", ["so(3)", "so(4)", "so(5)"])
def test_r1_is_at_most_one_and_p1_is_zero_or_n(spec):
    r = rep(spec, "qi")
    assert c.decompose_r(c.rspace(r)).dims[1] <= 1
    assert c.decompose_p(c.pspace(r)).dims[1] in (0, r.dim)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ricci_sign(n):
    r = rep(f"so({n})")
    cs = c.rspace(r)
    R = sphere_tensor(r)
    assert cs.space.contains(R)
    # R(X, Y) = X ^ Y gives Ric = (1 - n)(X, Y); the round sphere is -X ^ Y
    assert c.ricci(r, R) == Matrix.identity(n, Field.Q).scale(1 - n)
    assert c.ricci(r, [-x for x in R]) == Matrix.identity(n, Field.Q).scale(n - 1)


@pytest.mark.parametrize("n", [3, 4, 5])
@given(data=st.data())
def test_tric_of_candidate(n, data):
    r = rep(f"so({n})")
    X = data.draw(st.lists(ints, min_size=n, max_size=n))
    cand = c.canonical_p1_candidate(r, X)
    assert cand.member
    assert c.tric(r, cand.vector) == tuple(Fraction((1 - n) * x) for x in X)


def test_candidate_outside_p_for_nonsimple_h():
    # the trace form fixes the wrong relative scale on sl2 + k
    r = rep("sl2xk(sl2:sym3)", "qi")
    assert not c.canonical_p1_candidate(r, [1] + [0] * 7).member


@pytest.mark.parametrize("spec", ["so(3)", "so(4)", "tensor(so(3),so(3))"])
def test_star_lemma(spec):
    r = rep(spec)
    ps = c.pspace(r)
    rng = random.Random(7)
    for _ in range(100 if r.dim < 5 else 10):
        S = [ps.space.combine([rng.randint(-5, 5) for _ in range(ps.dim)]) for _ in range(r.dim)]
        assert c.star_lemma_check(r, S, ps)


def test_star_tensors_are_pair_skew():
    r = rep("so(3)")
    ps = c.pspace(r)
    S = [ps.basis[i % ps.dim] for i in range(3)]
    t, q = c.star_tensors(r, S, ps)
    for x, y, z, w in itertools.product(range(3), repeat=4):
        assert q[(x, y, z, w)] == -q[(y, x, z, w)] == -q[(x, y, w, z)]


@pytest.mark.parametrize("spec", ["so(2)", "so(3)", "so(4)", "tensor(so(3),so(3))", "sl2xk(sl2:sym3)"])
def test_rspace_via_pspace(spec):
    r = rep(spec, "qi")
    assert c.rspace_via_pspace(c.pspace(r)) == c.rspace(r).space


def test_first_prolongation():
    assert c.first_prolongation(rep("so(4)")).dim == 0
    assert c.first_prolongation(rep("sp(4)", "qi")).dim == 20


def test_module_actions_kill_invariants():
    r = rep("so(4)")
    R = sphere_tensor(r)
    assert all(not any(c.act_on_r(r, e, R)) for e in range(r.algebra.dim))
    P = c.tau(r, [1, 0, 0, 0], R)
    assert any(any(c.act_on_p(r, e, P)) for e in range(r.algebra.dim))


def test_p1_quotient_is_standard():
    from weakberger.liealg import hom_space

    r = rep("so(4)", "qi")
    Q = c.p1_quotient_module(c.pspace(r))
    assert Q.dim == 4
    assert hom_space(r, Q).dim == 1


def test_tau_image_and_berger_spans():
    r = rep("so(4)")
    ps, cs = c.pspace(r), c.rspace(r)
    split = c.decompose_p(ps)
    rsplit = c.decompose_r(cs)
    assert c.tau_image(r, rsplit.R1, ps) == split.P1
    assert c.tau_image(r, rsplit.R0, ps) == split.P0
    assert c.spanned_by_images(ps) and c.spanned_by_images(cs)


def test_standard_multiplicity():
    assert c.standard_multiplicity(rep("so(5)", "qi")) == 1
    assert c.standard_multiplicity(rep("so(4)", "qi")) == 2
    with pytest.raises(PreconditionError):
        c.standard_multiplicity(rep("so(4)", "q"))


def test_missing_form_error():
    r = rep("so(3)")
    bare = Representation(r.algebra, r.matrices)
    with pytest.raises(c.MissingFormError):
        c.tric(bare, [0] * 9)
    with pytest.raises(c.MissingFormError):
        c.pspace(bare)


def test_not_in_space_error():
    r = rep("so(3)")
    cs = c.rspace(r)
    bad = [0, 1] + [0] * 7
    assert not cs.space.contains(bad)
    with pytest.raises(c.NotInSpaceError):
        c.tau(r, [1, 0, 0], bad, cs)


def test_degenerate_projection_error():
    i = gauss(0, 1)
    # a nilpotent element of so(3, C): its trace form vanishes
    N = Matrix.from_rows([[0, 1, i], [-1, 0, 0], [-i, 0, 0]], Field.QI)
    L = LieAlgebra.abelian(1, Field.QI)
    r = Representation(L, [N], Matrix.identity(3, Field.QI), "symmetric")
    with pytest.raises(c.DegenerateProjectionError):
        c.canonical_p1_candidate(r, [1, 0, 0])


def test_space_report_shape():
    rep_ = c.space_report(c.pspace(rep("so(3)")), include_basis=True)
    assert rep_["dim"] == 8 and len(rep_["basis"]) == 8
