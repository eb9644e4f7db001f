import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakberger import catalog
from weakberger import curvature as c
from weakberger.liealg import PreconditionError, check_jacobi
from weakberger.symspace import build_symmetric_pair, jacobi_characterization, quaternionic_grading, sphere_tensor


@pytest.mark.parametrize("n,dim,ideals", [(3, 6, 2), (4, 10, 1), (5, 15, 1)])
def test_sphere_pairs(n, dim, ideals):
    r = catalog.so(n, "q").rep
    pair = build_symmetric_pair(r, sphere_tensor(r))
    rep = pair.report()
    assert rep["dim"] == dim and rep["jacobi"] and rep["semisimple"]
    assert rep["ideal_count"] == ideals


def test_weyl_tensor_breaks_invariance():
    r = catalog.so(4, "q").rep
    R0 = c.decompose_r(c.rspace(r)).R0
    assert jacobi_characterization(r, R0.basis[0]) == (True, False)


def test_raw_tensor_breaks_both():
    r = catalog.so(3, "q").rep
    R = [Fraction(0)] * 9
    R[1] = Fraction(1)
    assert jacobi_characterization(r, R) == (False, False)


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_jacobi_iff_bianchi_and_invariance(coeffs):
    r = catalog.so(3, "q").rep
    bianchi, invariant = jacobi_characterization(r, coeffs)
    pair = build_symmetric_pair(r, coeffs)
    assert pair.jacobi == (bianchi and invariant) == check_jacobi(pair.algebra)


def test_random_r_elements_on_so4():
    r = catalog.so(4, "q").rep
    cs = c.rspace(r)
    rng = random.Random(3)
    for _ in range(10):
        R = cs.space.combine([rng.randint(-3, 3) for _ in range(cs.dim)])
        bianchi, _ = jacobi_characterization(r, R)
        assert bianchi


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        build_symmetric_pair(catalog.so(3, "q").rep, [0] * 8)


def test_quaternionic_grading_g2():
    cmp = quaternionic_grading(catalog.resolve("sl2:sym3"))
    assert cmp.structure and cmp.dims_match
    assert cmp.tanaka_dims == cmp.symmetric_dims == (1, 4, 4, 4, 1)
    assert cmp.both_simple and cmp.both_killing_graded


def test_quaternionic_grading_without_structure():
    cmp = quaternionic_grading(catalog.resolve("sl2:sym5 in sp(6)"))
    assert not cmp.structure


def test_quaternionic_grading_rejects_m1():
    with pytest.raises(PreconditionError):
        quaternionic_grading(catalog.resolve("sp(2)"))


def test_flat_case_is_not_semisimple():
    r = catalog.so(3, "q").rep
    pair = build_symmetric_pair(r, [0] * 9)
    assert pair.jacobi and not pair.report()["semisimple"]
