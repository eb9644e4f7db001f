"""Curvature-type tensor spaces of a matrix Lie algebra, computed as exact kernels.

Coordinates used throughout (``n = dim V``, ``d = dim h``):

* ``P`` in ``V* (x) h``: entry ``x*d + a`` is the ``b_a`` coefficient of ``P(e_x)``.
* ``R`` in ``Lambda^2 V* (x) h``: entry ``p*d + a`` with ``p`` the index of the
  pair ``(i, j)``, ``i < j``, in lexicographic order.
* ``S`` in ``V* (x) R(h)``: entry ``x*r + t`` is the coefficient of the ``t``-th
  basis tensor of ``R(h)`` in ``S_{e_x}``.

The wedge is ``(X ^ Y) Z = (X, Z) Y - (Y, Z) X``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import BasisSolver, Field, Matrix, Subspace, nullspace, to_scalar, unique_rows
from .liealg import (
    SYMMETRIC,
    PreconditionError,
    Representation,
    adjoint,
    hom_space,
    is_irreducible,
    tensor,
)

__all__ = [
    "MissingFormError",
    "DegenerateProjectionError",
    "NotInSpaceError",
    "WeakCurvatureSpace",
    "CurvatureSpace",
    "CovDerivSpace",
    "RSplit",
    "PSplit",
    "pspace",
    "rspace",
    "rnabla_space",
    "ricci",
    "tric",
    "decompose_r",
    "decompose_p",
    "p1_quotient_module",
    "act_on_p",
    "act_on_r",
    "tau",
    "tau_image",
    "first_prolongation",
    "canonical_p1_candidate",
    "Candidate",
    "star_tensors",
    "star_lemma_check",
    "spanned_by_images",
    "standard_multiplicity",
    "rspace_via_pspace",
    "wedge_tensor",
    "space_report",
]

ZERO = Fraction(0)


class MissingFormError(ValueError):
    pass


class DegenerateProjectionError(ValueError):
    pass


class NotInSpaceError(ValueError):
    pass


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(_pairs(n))}


def _by_column(rep: Representation) -> list[list[tuple[int, int, object]]]:
    """``cols[s]`` lists ``(w, a, rho_a[w][s])`` over the nonzero entries."""
    cols = [[] for _ in range(rep.dim)]
    for a, sp in enumerate(rep.sparse_matrices()):
        for w, s, x in sp:
            cols[s].append((w, a, x))
    return cols


def _require_form(rep: Representation) -> Matrix:
    if rep.form is None:
        raise MissingFormError(f"{rep!r} carries no invariant form")
    return rep.form


def _add(row: dict, key: int, val) -> None:
    v = row.get(key, 0) + val
    if v:
        row[key] = v
    else:
        row.pop(key, None)


def _kernel_of_images(space: Subspace, images: Sequence[Sequence], field: Field) -> Subspace:
    """Members of ``space`` sent to zero by a linear map, given the images of its basis."""
    eqs: dict[int, dict[int, object]] = {}
    for t, img in enumerate(images):
        for w, x in enumerate(img):
            if x:
                eqs.setdefault(w, {})[t] = x
    ker = nullspace(list(eqs.values()), space.dim, field)
    return Subspace(space.ambient, [space.combine(c) for c in ker.basis], field)


# ---------------------------------------------------------------------------
# the three spaces
# ---------------------------------------------------------------------------


class _Space:
    rep: Representation
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple[tuple, ...]:
        return self.space.basis

    @property
    def field(self) -> Field:
        return self.rep.field


class WeakCurvatureSpace(_Space):
    """``P(h)``: maps ``P: V -> h`` with ``(P(X)Y,Z) + (P(Y)Z,X) + (P(Z)X,Y) = 0``."""

    kind = "P"

    def __init__(self, rep: Representation, space: Subspace):
        self.rep = rep
        self.space = space
        self._split: PSplit | None = None

    def value(self, vec: Sequence, x: int) -> tuple:
        d = self.rep.algebra.dim
        return tuple(vec[x * d : (x + 1) * d])

    def verify(self, vec: Sequence | None = None) -> bool:
        vecs = [vec] if vec is not None else self.basis
        return all(_weak_identity_holds(self.rep, v) for v in vecs)

    def __repr__(self):
        return f"WeakCurvatureSpace({self.rep.name or 'rep'}, dim={self.dim})"


class CurvatureSpace(_Space):
    """``R(h)``: skew maps ``Lambda^2 V -> h`` satisfying the first Bianchi identity."""

    kind = "R"

    def __init__(self, rep: Representation, space: Subspace):
        self.rep = rep
        self.space = space
        self.pairs = _pairs(rep.dim)
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self._split: RSplit | None = None

    def value(self, vec: Sequence, i: int, j: int) -> tuple:
        """``R(e_i, e_j)`` in algebra coordinates."""
        d = self.rep.algebra.dim
        if i == j:
            return (ZERO,) * d
        if i < j:
            k = self.pair_index[(i, j)]
            return tuple(vec[k * d : (k + 1) * d])
        k = self.pair_index[(j, i)]
        return tuple(-x for x in vec[k * d : (k + 1) * d])

    def verify(self, vec: Sequence | None = None) -> bool:
        vecs = [vec] if vec is not None else self.basis
        return all(_bianchi_holds(self, v) for v in vecs)

    def __repr__(self):
        return f"CurvatureSpace({self.rep.name or 'rep'}, dim={self.dim})"


class CovDerivSpace(_Space):
    """``R_nabla(h)``: maps ``S: V -> R(h)`` with ``S_X(Y,Z) + S_Y(Z,X) + S_Z(X,Y) = 0``."""

    kind = "Rnabla"

    def __init__(self, rep: Representation, rspace: CurvatureSpace, space: Subspace):
        self.rep = rep
        self.rspace = rspace
        self.space = space

    def tensor_at(self, vec: Sequence, x: int) -> tuple:
        """``S_{e_x}`` as a vector of ``Lambda^2 V* (x) h``."""
        r = self.rspace.dim
        return self.rspace.space.combine(vec[x * r : (x + 1) * r])

    def verify(self, vec: Sequence | None = None) -> bool:
        vecs = [vec] if vec is not None else self.basis
        return all(_second_bianchi_holds(self, v) for v in vecs)

    def __repr__(self):
        return f"CovDerivSpace({self.rep.name or 'rep'}, dim={self.dim})"


def _weak_identity_holds(rep: Representation, vec: Sequence) -> bool:
    # independent of the equation assembly: build P(e_x) as matrices, contract with the form
    B = rep.form
    n, d = rep.dim, rep.algebra.dim
    G = [(rep.element(vec[x * d : (x + 1) * d]).T @ B).rows for x in range(n)]
    for x, y, z in itertools.product(range(n), repeat=3):
        if G[x][y][z] + G[y][z][x] + G[z][x][y]:
            return False
    return True


def _bianchi_holds(cs: CurvatureSpace, vec: Sequence) -> bool:
    rep = cs.rep
    n = rep.dim
    mats = {}
    for i, j in cs.pairs:
        m = rep.element(cs.value(vec, i, j))
        mats[(i, j)] = m.rows
        mats[(j, i)] = (-m).rows
    for x, y, z in itertools.combinations(range(n), 3):
        for w in range(n):
            if mats[(x, y)][w][z] + mats[(y, z)][w][x] + mats[(z, x)][w][y]:
                return False
    return True


def _second_bianchi_holds(cd: CovDerivSpace, vec: Sequence) -> bool:
    rs = cd.rspace
    n = cd.rep.dim
    S = [cd.tensor_at(vec, x) for x in range(n)]
    for x, y, z in itertools.combinations(range(n), 3):
        a = rs.value(S[x], y, z)
        b = rs.value(S[y], z, x)
        c = rs.value(S[z], x, y)
        if any(p + q + r for p, q, r in zip(a, b, c)):
            return False
    return True


def pspace(rep: Representation, verify: bool = True) -> WeakCurvatureSpace:
    """The weak curvature space ``P(h)`` of a representation with an invariant form."""
    B = _require_form(rep)
    n, d = rep.dim, rep.algebra.dim
    # M_a = rho_a^T B, so that (P(X)Y, Z) = sum_a p[X, a] M_a[Y][Z]
    brows = [[(c, x) for c, x in enumerate(r) if x] for r in B.rows]
    M: dict[tuple[int, int], list[tuple[int, object]]] = {}
    for a, sp in enumerate(rep.sparse_matrices()):
        acc: dict[tuple[int, int], object] = {}
        for w, y, x in sp:
            for z, b in brows[w]:
                acc[(y, z)] = acc.get((y, z), 0) + x * b
        for key, v in acc.items():
            if v:
                M.setdefault(key, []).append((a, v))

    def rows():
        for x, y, z in itertools.product(range(n), repeat=3):
            row: dict[int, object] = {}
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                for a, v in M.get((q, r), ()):
                    _add(row, p * d + a, v)
            if row:
                yield row

    space = nullspace(unique_rows(rows()), n * d, rep.field)
    ws = WeakCurvatureSpace(rep, space)
    if verify and not ws.verify():
        raise AssertionError("a computed element of P(h) violates the cyclic identity")
    return ws


def rspace(rep: Representation, verify: bool = True) -> CurvatureSpace:
    """The space ``R(h)`` of algebraic curvature tensors with values in ``h``."""
    n, d = rep.dim, rep.algebra.dim
    pidx = _pair_index(n)
    cols = _by_column(rep)
    rows = []
    for x, y, z in itertools.combinations(range(n), 3):
        # R(x,y)z + R(y,z)x + R(z,x)y, with R(z,x) = -R(x,z)
        per_w: dict[int, dict[int, object]] = {}
        for (p, q), s, sign in (((x, y), z, 1), ((y, z), x, 1), ((x, z), y, -1)):
            base = pidx[(p, q)] * d
            for w, a, v in cols[s]:
                _add(per_w.setdefault(w, {}), base + a, sign * v)
        rows.extend(r for r in per_w.values() if r)
    space = nullspace(rows, len(pidx) * d, rep.field)
    cs = CurvatureSpace(rep, space)
    if verify and not cs.verify():
        raise AssertionError("a computed element of R(h) violates the Bianchi identity")
    return cs


def rnabla_space(rep: Representation, rs: CurvatureSpace | None = None, verify: bool = True) -> CovDerivSpace:
    """Algebraic covariant derivatives of curvature tensors, inside ``V* (x) R(h)``."""
    if rs is None:
        rs = rspace(rep)
    if rs.rep is not rep:
        raise ValueError("the curvature space belongs to a different representation")
    n, d, r = rep.dim, rep.algebra.dim, rs.dim
    basis = rs.basis
    # vals[(p, q)] lists (t, a, R_t(p, q)[a])
    vals: dict[tuple[int, int], list] = {}
    for p, q in itertools.permutations(range(n), 2):
        lst = []
        for t, vec in enumerate(basis):
            for a, c in enumerate(rs.value(vec, p, q)):
                if c:
                    lst.append((t, a, c))
        vals[(p, q)] = lst
    rows = []
    for x, y, z in itertools.combinations(range(n), 3):
        per_a: dict[int, dict[int, object]] = {}
        for s, (p, q) in ((x, (y, z)), (y, (z, x)), (z, (x, y))):
            for t, a, c in vals[(p, q)]:
                _add(per_a.setdefault(a, {}), s * r + t, c)
        rows.extend(row for row in per_a.values() if row)
    space = nullspace(rows, n * r, rep.field)
    cd = CovDerivSpace(rep, rs, space)
    if verify and not cd.verify():
        raise AssertionError("a computed element of R_nabla(h) violates the second Bianchi identity")
    return cd


# ---------------------------------------------------------------------------
# contractions and splits
# ---------------------------------------------------------------------------


def _r_lookup(rep: Representation, vec: Sequence):
    n, d = rep.dim, rep.algebra.dim
    pidx = _pair_index(n)

    def get(i, j, a):
        if i == j:
            return ZERO
        if i < j:
            return vec[pidx[(i, j)] * d + a]
        return -vec[pidx[(j, i)] * d + a]

    return get


def ricci(rep: Representation, R: Sequence) -> Matrix:
    """``Ric(X, Y) = tr(Z -> R(Z, X) Y)`` as an ``n x n`` matrix."""
    n = rep.dim
    get = _r_lookup(rep, R)
    out = [[ZERO] * n for _ in range(n)]
    for a, sp in enumerate(rep.sparse_matrices()):
        # contribution R(z, x)[a] * rho_a[z][y]
        for z, y, v in sp:
            for x in range(n):
                c = get(z, x, a)
                if c:
                    out[x][y] = out[x][y] + c * v
    return Matrix([[to_scalar(v) for v in r] for r in out], rep.field, n)


def tric(rep: Representation, P: Sequence) -> tuple:
    """``sum_i P(e_i) f_i`` over form-dual bases, ``(e_i, f_j) = delta_ij``."""
    B = _require_form(rep)
    n, d = rep.dim, rep.algebra.dim
    Binv = B.inverse().rows
    out = [ZERO] * n
    sp = rep.sparse_matrices()
    for i in range(n):
        for a in range(d):
            c = P[i * d + a]
            if not c:
                continue
            for w, s, v in sp[a]:
                f = Binv[s][i]
                if f:
                    out[w] = out[w] + c * v * f
    return tuple(to_scalar(x) for x in out)


def act_on_r(rep: Representation, e: int, R: Sequence) -> tuple:
    """``(b_e . R)(X, Y) = [b_e, R(X, Y)] - R(b_e X, Y) - R(X, b_e Y)``."""
    n, d = rep.dim, rep.algebra.dim
    L = rep.algebra
    get = _r_lookup(rep, R)
    cols = [[] for _ in range(n)]
    for w, s, v in rep.sparse_matrices()[e]:
        cols[s].append((w, v))
    out = [ZERO] * len(R)
    for k, (i, j) in enumerate(_pairs(n)):
        base = k * d
        for a in range(d):
            c = get(i, j, a)
            if c:
                for t, v in L.bracket_basis(e, a).items():
                    out[base + t] += c * v
        for w, v in cols[i]:
            for a in range(d):
                c = get(w, j, a)
                if c:
                    out[base + a] -= v * c
        for w, v in cols[j]:
            for a in range(d):
                c = get(i, w, a)
                if c:
                    out[base + a] -= v * c
    return tuple(to_scalar(x) for x in out)


def act_on_p(rep: Representation, e: int, P: Sequence) -> tuple:
    """``(b_e . P)(X) = [b_e, P(X)] - P(b_e X)``."""
    n, d = rep.dim, rep.algebra.dim
    L = rep.algebra
    out = [ZERO] * len(P)
    for x in range(n):
        for a in range(d):
            c = P[x * d + a]
            if c:
                for t, v in L.bracket_basis(e, a).items():
                    out[x * d + t] += c * v
    for w, s, v in rep.sparse_matrices()[e]:
        # P(b_e e_s) picks up rho_e[w][s] P(e_w)
        for a in range(d):
            c = P[w * d + a]
            if c:
                out[s * d + a] -= v * c
    return tuple(to_scalar(x) for x in out)


def _invariants_in(space: Subspace, act, d: int, field: Field) -> Subspace:
    eqs: dict[tuple[int, int], dict[int, object]] = {}
    for t, vec in enumerate(space.basis):
        for e in range(d):
            for w, x in enumerate(act(e, vec)):
                if x:
                    eqs.setdefault((e, w), {})[t] = x
    ker = nullspace(list(eqs.values()), space.dim, field)
    return Subspace(space.ambient, [space.combine(c) for c in ker.basis], field)


@dataclass(frozen=True)
class RSplit:
    R0: Subspace
    R1: Subspace
    r_prime_dim: int

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.R0.dim, self.R1.dim, self.r_prime_dim


@dataclass(frozen=True)
class PSplit:
    P0: Subspace
    p1_dim: int
    P1: Subspace | None

    @property
    def dims(self) -> tuple[int, int]:
        return self.P0.dim, self.p1_dim


def decompose_r(cs: CurvatureSpace) -> RSplit:
    """``R0`` (Ricci-flat part), ``R1`` (``h``-invariants) and ``dim R'``."""
    if cs._split is not None:
        return cs._split
    rep = cs.rep
    R0 = _kernel_of_images(cs.space, [ricci(rep, v).flatten() for v in cs.basis], rep.field)
    R1 = _invariants_in(cs.space, lambda e, v: act_on_r(rep, e, v), rep.algebra.dim, rep.field)
    rest = cs.dim - (R0 + R1).dim
    cs._split = RSplit(R0, R1, rest)
    return cs._split


def _is_identity(m: Matrix) -> bool:
    return m == Matrix.identity(m.nrows, m.field)


def decompose_p(ws: WeakCurvatureSpace) -> PSplit:
    """``P0 = ker tRic``; ``P1`` realized explicitly only over Q with an orthonormal basis."""
    if ws._split is not None:
        return ws._split
    rep = ws.rep
    P0 = _kernel_of_images(ws.space, [tric(rep, v) for v in ws.basis], rep.field)
    p1_dim = ws.dim - P0.dim
    P1 = None
    if rep.field is Field.Q and rep.form is not None and _is_identity(rep.form):
        n, d = rep.dim, rep.algebra.dim
        flat = [[x for i in range(n) for x in rep.element(v[i * d : (i + 1) * d]).flatten()] for v in ws.basis]
        zero_flat = [[x for i in range(n) for x in rep.element(v[i * d : (i + 1) * d]).flatten()] for v in P0.basis]
        eqs = [
            {t: sum((p * q for p, q in zip(f, g) if p and q), ZERO) for t, f in enumerate(flat)} for g in zero_flat
        ]
        ker = nullspace(eqs, ws.dim, rep.field)
        P1 = Subspace(ws.space.ambient, [ws.space.combine(c) for c in ker.basis], rep.field)
        if P1.dim != p1_dim:
            raise AssertionError("orthogonal complement of P0 has the wrong dimension")
    ws._split = PSplit(P0, p1_dim, P1)
    return ws._split


def p1_quotient_module(ws: WeakCurvatureSpace) -> Representation:
    """The ``h``-module ``P(h) / P0(h)``, on a complement spanned by basis vectors of ``P(h)``."""
    rep = ws.rep
    P0 = decompose_p(ws).P0
    span = P0
    chosen = []
    for v in ws.basis:
        if not span.contains(v):
            chosen.append(v)
            span = span + Subspace(span.ambient, [v], rep.field)
    solver = BasisSolver(list(P0.basis) + chosen, rep.field)
    k0, k = P0.dim, len(chosen)
    mats = []
    for e in range(rep.algebra.dim):
        cols = [solver.coordinates(act_on_p(rep, e, v))[k0:] for v in chosen]
        mats.append(Matrix([[cols[c][r] for c in range(k)] for r in range(k)], rep.field, k))
    return Representation(rep.algebra, mats, name=f"P1({rep.name})", dim=k)


# ---------------------------------------------------------------------------
# tau, prolongation, projections
# ---------------------------------------------------------------------------


def _vector(x, n: int) -> tuple:
    x = tuple(to_scalar(v) for v in x)
    if len(x) != n:
        raise ValueError(f"expected a vector of length {n}")
    return x


def tau(
    rep: Representation,
    X: Sequence,
    R: Sequence,
    rs: CurvatureSpace | None = None,
    ps: WeakCurvatureSpace | None = None,
) -> tuple:
    """``tau(X (x) R) = R(X, .)``; membership in ``R(h)`` / ``P(h)`` is checked when spaces are given."""
    n, d = rep.dim, rep.algebra.dim
    X = _vector(X, n)
    if rs is not None and not rs.space.contains(R):
        raise NotInSpaceError("R is not an algebraic curvature tensor of h")
    get = _r_lookup(rep, R)
    out = [ZERO] * (n * d)
    for j, xj in enumerate(X):
        if xj:
            for i in range(n):
                for a in range(d):
                    c = get(j, i, a)
                    if c:
                        out[i * d + a] += xj * c
    out = tuple(to_scalar(v) for v in out)
    if ps is not None and not ps.space.contains(out):
        raise AssertionError("tau(X (x) R) left P(h)")
    return out


def tau_image(rep: Representation, sub: Subspace, ps: WeakCurvatureSpace | None = None) -> Subspace:
    n, d = rep.dim, rep.algebra.dim
    images = []
    for R in sub.basis:
        for x in range(n):
            X = [ZERO] * n
            X[x] = Fraction(1)
            images.append(tau(rep, X, R, ps=ps))
    return Subspace(n * d, images, rep.field)


def first_prolongation(rep: Representation) -> Subspace:
    """``h^(1) = {u : V -> h | u(X)Y = u(Y)X}`` in the ``V* (x) h`` coordinates."""
    n, d = rep.dim, rep.algebra.dim
    cols = _by_column(rep)
    rows = []
    for x, y in itertools.combinations(range(n), 2):
        per_w: dict[int, dict[int, object]] = {}
        for w, a, v in cols[y]:
            _add(per_w.setdefault(w, {}), x * d + a, v)
        for w, a, v in cols[x]:
            _add(per_w.setdefault(w, {}), y * d + a, -v)
        rows.extend(r for r in per_w.values() if r)
    return nullspace(rows, n * d, rep.field)


def wedge_tensor(rep: Representation, X: Sequence, Y: Sequence) -> Matrix:
    from .catalog import wedge

    return wedge(_require_form(rep), _vector(X, rep.dim), _vector(Y, rep.dim))


@dataclass(frozen=True)
class Candidate:
    vector: tuple
    member: bool


def _trace_projector(rep: Representation):
    mats = rep.matrices
    d = len(mats)
    gram = Matrix([[(a @ b).trace() for b in mats] for a in mats], rep.field, d)
    if d and gram.determinant() == 0:
        raise DegenerateProjectionError("trace form is degenerate on h; the projection to h is not defined")
    inv = gram.inverse() if d else None

    def project(W: Matrix) -> tuple:
        rhs = [(a @ W).trace() for a in mats]
        return tuple(to_scalar(sum((inv.rows[a][b] * rhs[b] for b in range(d)), ZERO)) for a in range(d))

    return project


def canonical_p1_candidate(rep: Representation, X: Sequence, ps: WeakCurvatureSpace | None = None) -> Candidate:
    """``pr_h(X ^ .)``, with ``pr_h`` orthogonal for the trace form of ``so(V)``."""
    B = _require_form(rep)
    if rep.form_symmetry != SYMMETRIC:
        raise PreconditionError("the candidate needs a symmetric form")
    n = rep.dim
    X = _vector(X, n)
    project = _trace_projector(rep)
    out = []
    for i in range(n):
        e = [ZERO] * n
        e[i] = Fraction(1)
        out.extend(project(wedge_tensor(rep, X, e)))
    vec = tuple(out)
    if ps is None:
        ps = pspace(rep)
    return Candidate(vec, ps.space.contains(vec))


# ---------------------------------------------------------------------------
# the T + T* lemma
# ---------------------------------------------------------------------------


def star_tensors(rep: Representation, S: Sequence[Sequence], ps: WeakCurvatureSpace | None = None):
    """4-tensors ``t(x,y,z,w) = (T(x,y) e_z, e_w)`` and ``t + t*`` for ``T(X,Y) = S(X)(Y) - S(Y)(X)``."""
    B = _require_form(rep)
    n, d = rep.dim, rep.algebra.dim
    if len(S) != n:
        raise ValueError("S needs one image per basis vector")
    if ps is not None:
        for s in S:
            if not ps.space.contains(s):
                raise NotInSpaceError("S(X) is not in P(h)")
    T = {}
    for x in range(n):
        for y in range(n):
            coeffs = [S[x][y * d + a] - S[y][x * d + a] for a in range(d)]
            # (T e_z, e_w) = (T^T B)[z][w]
            T[(x, y)] = (rep.element(coeffs).T @ B).rows
    idx = list(itertools.product(range(n), repeat=4))
    t = {(x, y, z, w): T[(x, y)][z][w] for x, y, z, w in idx}
    q = {(x, y, z, w): t[(x, y, z, w)] + t[(z, w, x, y)] for x, y, z, w in idx}
    return t, q


def _four_tensor_bianchi(q: dict, n: int) -> bool:
    for x, y, z, w in itertools.product(range(n), repeat=4):
        if q[(x, y, z, w)] + q[(y, z, x, w)] + q[(z, x, y, w)]:
            return False
    return True


def star_lemma_check(rep: Representation, S: Sequence[Sequence], ps: WeakCurvatureSpace | None = None) -> bool:
    """Whether ``T + T*`` satisfies the Bianchi identity (it is skew in both pairs by construction)."""
    _, q = star_tensors(rep, S, ps)
    return _four_tensor_bianchi(q, rep.dim)


# ---------------------------------------------------------------------------
# Berger tests, multiplicity, second description of R(h)
# ---------------------------------------------------------------------------


def spanned_by_images(space: CurvatureSpace | WeakCurvatureSpace) -> bool:
    rep = space.rep
    d = rep.algebra.dim
    if d == 0:
        return True
    vals = []
    for vec in space.basis:
        if isinstance(space, CurvatureSpace):
            vals.extend(space.value(vec, i, j) for i, j in space.pairs)
        else:
            vals.extend(space.value(vec, x) for x in range(rep.dim))
    return Subspace(d, vals, rep.field).dim == d


def standard_multiplicity(rep: Representation) -> int:
    """Multiplicity of ``V`` in ``V (x) h``, i.e. ``dim Hom_h(V, V (x) h)``."""
    if rep.field is not Field.QI:
        raise PreconditionError("standard_multiplicity works over Q(i)")
    if not is_irreducible(rep):
        raise PreconditionError("standard_multiplicity needs an irreducible representation")
    return hom_space(rep, tensor(rep, adjoint(rep.algebra))).dim


def rspace_via_pspace(ws: WeakCurvatureSpace) -> Subspace:
    """``{S in V* (x) P(h) : S(X)(Y) = -S(Y)(X)}`` read back as tensors in ``Lambda^2 V* (x) h``."""
    rep = ws.rep
    n, d, p = rep.dim, rep.algebra.dim, ws.dim
    basis = ws.basis
    rows = []
    for x, y in itertools.combinations_with_replacement(range(n), 2):
        per_a: dict[int, dict[int, object]] = {}
        for s, other in ((x, y), (y, x)):
            for t, vec in enumerate(basis):
                for a in range(d):
                    c = vec[other * d + a]
                    if c:
                        _add(per_a.setdefault(a, {}), s * p + t, c)
        rows.extend(r for r in per_a.values() if r)
    ker = nullspace(rows, n * p, rep.field)
    pairs = _pairs(n)
    out = []
    for svec in ker.basis:
        R = [ZERO] * (len(pairs) * d)
        for k, (i, j) in enumerate(pairs):
            for t, vec in enumerate(basis):
                c = svec[i * p + t]
                if c:
                    for a in range(d):
                        R[k * d + a] += c * vec[j * d + a]
        out.append(tuple(to_scalar(v) for v in R))
    return Subspace(len(pairs) * d, out, rep.field)


def space_report(space: _Space, include_basis: bool = False) -> dict:
    from .exactlin import format_scalar

    rep = space.rep
    report = {
        "space": space.kind,
        "rep": rep.name,
        "n": rep.dim,
        "algebra_dim": rep.algebra.dim,
        "ambient_dim": space.space.ambient,
        "dim": space.dim,
    }
    if isinstance(space, CurvatureSpace) and rep.form is not None:
        split = decompose_r(space)
        report["split"] = {"R0": split.R0.dim, "R1": split.R1.dim, "Rprime": split.r_prime_dim}
    elif isinstance(space, WeakCurvatureSpace):
        split = decompose_p(space)
        report["split"] = {"P0": split.P0.dim, "P1": split.p1_dim}
    if include_basis:
        report["basis"] = [[format_scalar(x) for x in v] for v in space.basis]
    return report
