"""Symmetric-space Lie algebras ``h + V`` rebuilt from an invariant curvature tensor.

Only the algebra-level data is produced.  Compact and noncompact duals have
the same structure constants over Q(i), so reports never say which one is meant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import CatalogEntry, sl2_tensor_symplectic
from .curvature import CurvatureSpace, act_on_r, decompose_r, rspace
from .exactlin import Field, Subspace, to_scalar
from .liealg import (
    LieAlgebra,
    PreconditionError,
    Representation,
    check_jacobi,
    is_semisimple,
    simple_ideal_count,
)
from .tanaka import GradedLieAlgebra, build_base_grading, full_prolongation, killing_grading_check

__all__ = [
    "SymmetricPair",
    "build_symmetric_pair",
    "jacobi_characterization",
    "quaternionic_grading",
    "QuaternionicComparison",
    "sphere_tensor",
]


@dataclass(frozen=True)
class SymmetricPair:
    rep: Representation
    R: tuple
    algebra: LieAlgebra
    jacobi: bool

    @property
    def h_indices(self) -> range:
        return range(self.rep.algebra.dim)

    @property
    def v_indices(self) -> range:
        d = self.rep.algebra.dim
        return range(d, d + self.rep.dim)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def report(self) -> dict:
        bianchi, invariant = jacobi_characterization(self.rep, self.R)
        semisimple = is_semisimple(self.algebra)
        ideals = simple_ideal_count(self.algebra.as_field(Field.QI)) if semisimple and self.jacobi else None
        return {
            "dim": self.dim,
            "jacobi": self.jacobi,
            "bianchi": bianchi,
            "invariant": invariant,
            "semisimple": semisimple,
            "ideal_count": ideals,
        }


def sphere_tensor(rep: Representation) -> tuple:
    """``R(e_i, e_j) = e_i ^ e_j`` for the full orthogonal algebra in its ``E_ij - E_ji`` basis."""
    n, d = rep.dim, rep.algebra.dim
    pairs = list(itertools.combinations(range(n), 2))
    if d != len(pairs):
        raise PreconditionError("sphere_tensor needs the full so(n) in its standard basis")
    out = []
    for p, (i, j) in enumerate(pairs):
        # e_i ^ e_j = E_ji - E_ij = -(E_ij - E_ji)
        out.extend(Fraction(-1) if a == p else Fraction(0) for a in range(d))
    return tuple(out)


def _lookup(rep: Representation, R: Sequence):
    n, d = rep.dim, rep.algebra.dim
    cs = CurvatureSpace(rep, Subspace.zero(len(R), rep.field))
    if len(R) != len(cs.pairs) * d:
        raise ValueError("R has the wrong length for Lambda^2 V* (x) h")
    return cs


def build_symmetric_pair(rep: Representation, R: Sequence) -> SymmetricPair:
    """``h + V`` with ``[A, B] = [A, B]_h``, ``[A, X] = AX``, ``[X, Y] = R(X, Y)``."""
    R = tuple(to_scalar(x) for x in R)
    cs = _lookup(rep, R)
    n, d = rep.dim, rep.algebra.dim
    br: dict[tuple[int, int], dict[int, object]] = {}
    for a, b in itertools.combinations(range(d), 2):
        val = rep.algebra.bracket_basis(a, b)
        if val:
            br[(a, b)] = dict(val)
    for a, sp in enumerate(rep.sparse_matrices()):
        for w, s, v in sp:
            dct = br.setdefault((a, d + s), {})
            dct[d + w] = dct.get(d + w, 0) + v
    for i, j in cs.pairs:
        val = {a: c for a, c in enumerate(cs.value(R, i, j)) if c}
        if val:
            br[(d + i, d + j)] = val
    labels = list(rep.algebra.labels) + [f"v{i}" for i in range(n)]
    L = LieAlgebra.from_brackets(d + n, {k: v for k, v in br.items() if v}, rep.field, labels)
    pair = SymmetricPair(rep, R, L, check_jacobi(L))
    jacobi_characterization(rep, R, _pair=pair)
    return pair


def jacobi_characterization(rep: Representation, R: Sequence, _pair: SymmetricPair | None = None) -> tuple[bool, bool]:
    """``(bianchi, invariant)`` for ``R``; asserts that Jacobi of ``h + V`` holds exactly when both do."""
    R = tuple(to_scalar(x) for x in R)
    cs = _lookup(rep, R)
    bianchi = cs.verify(R)
    invariant = all(not any(act_on_r(rep, e, R)) for e in range(rep.algebra.dim))
    pair = _pair if _pair is not None else build_symmetric_pair(rep, R)
    if pair.jacobi != (bianchi and invariant):
        raise AssertionError("Jacobi of h + V disagrees with Bianchi and invariance")
    return bianchi, invariant


@dataclass(frozen=True)
class QuaternionicComparison:
    structure: bool
    tanaka: GradedLieAlgebra | None
    symmetric: GradedLieAlgebra | None
    tanaka_dims: tuple
    symmetric_dims: tuple
    dims_match: bool
    both_simple: bool
    both_killing_graded: bool
    note: str

    def report(self) -> dict:
        return {
            "quaternionic_structure": self.structure,
            "tanaka_grading_dims": list(self.tanaka_dims),
            "symmetric_grading_dims": list(self.symmetric_dims),
            "dims_match": self.dims_match,
            "both_simple": self.both_simple,
            "both_killing_graded": self.both_killing_graded,
            "note": self.note,
        }


def _simple(L: LieAlgebra) -> bool:
    q = L.as_field(Field.QI)
    return is_semisimple(q) and simple_ideal_count(q) == 1


def quaternionic_grading(k_entry: CatalogEntry, max_degree: int = 6) -> QuaternionicComparison:
    """Compare the Tanaka prolongation of ``C F + V + (k + C H)`` with ``sl2 + k + C^2 (x) V`` graded by ``ad H``."""
    k_rep = k_entry.rep
    if k_rep.dim < 4:
        raise PreconditionError("the quaternionic grading needs m >= 2")
    result = full_prolongation(build_base_grading(k_rep), max_degree)
    if not result.terminated:
        raise PreconditionError("the Tanaka prolongation did not terminate; no finite grading to compare")
    tanaka = result.assembled
    tdims = tuple(tanaka.dims.values())
    if result.dims[0] == 0:
        return QuaternionicComparison(False, tanaka, None, tdims, (), False, False, False, "no quaternionic structure (g1 = 0)")

    h_rep = sl2_tensor_symplectic(k_entry).rep
    cs = rspace(h_rep)
    R1 = decompose_r(cs).R1
    if R1.dim != 1:
        return QuaternionicComparison(False, tanaka, None, tdims, (), False, False, False, f"dim R1 = {R1.dim}")
    pair = build_symmetric_pair(h_rep, R1.basis[0])
    L = pair.algebra
    # H of sl2 is basis vector 1; the basis is already an ad(H) eigenbasis
    H = tuple(Fraction(int(i == 1)) for i in range(L.dim))
    degrees = []
    for i in range(L.dim):
        e = [Fraction(0)] * L.dim
        e[i] = Fraction(1)
        img = L.bracket(H, e)
        if any(x for k, x in enumerate(img) if k != i):
            raise AssertionError("basis is not an ad(H) eigenbasis")
        ev = img[i]
        if ev != int(ev):
            raise AssertionError("non-integral ad(H) eigenvalue")
        degrees.append(int(ev))
    sym = GradedLieAlgebra(L, degrees, H)
    sdims = tuple(sym.dims.values())
    return QuaternionicComparison(
        True,
        tanaka,
        sym,
        tdims,
        sdims,
        tdims == sdims and tuple(tanaka.dims) == tuple(sym.dims),
        bool(result.simple) and _simple(L),
        bool(result.killing_graded) and killing_grading_check(sym),
        "structure constants determine the pair only up to duality",
    )
