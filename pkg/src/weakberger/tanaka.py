"""Graded Lie algebras and their Tanaka prolongations.

Degree convention: a grading element ``H`` satisfies ``[H, x] = k x`` for
``x`` of degree ``k``, so ``[H, X] = -X`` on ``g_-1`` and ``[H, F] = -2F``.

An element ``u`` of ``g_k`` (``k >= 1``) is stored by its values on the
negative basis elements: one block per negative basis vector ``e_t``, holding
the coordinates of ``u(e_t)`` in ``g_{k + deg t}``.  Blocks follow the order of
the negative basis.  ``[u, X] = u(X)`` for negative ``X``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .exactlin import Field, Matrix, Subspace, nullspace, to_scalar
from .liealg import (
    SKEW,
    LieAlgebra,
    PreconditionError,
    Representation,
    check_jacobi,
    hom_space,
    is_semisimple,
    killing_form,
    simple_ideal_count,
)

__all__ = [
    "GradingError",
    "GradedLieAlgebra",
    "ProlongationResult",
    "Prolongation",
    "build_base_grading",
    "prolong_step",
    "g1_alternative",
    "g1_module",
    "full_prolongation",
    "killing_grading_check",
    "pspace_to_g1_pair",
    "g1_pair_to_pspace",
    "prolongation_report",
]

ZERO = Fraction(0)


class GradingError(ValueError):
    pass


@dataclass
class GradedLieAlgebra:
    """A Lie algebra with a degree attached to each basis vector."""

    algebra: LieAlgebra
    degrees: tuple[int, ...]
    grading_element: tuple | None = None

    def __post_init__(self):
        self.degrees = tuple(self.degrees)
        if len(self.degrees) != self.algebra.dim:
            raise GradingError("one degree per basis vector is required")
        if not self.respects_degrees():
            raise GradingError("brackets do not respect the grading")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    def component(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == k]

    @property
    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def respects_degrees(self) -> bool:
        deg = self.degrees
        for i, j in itertools.combinations(range(self.dim), 2):
            target = deg[i] + deg[j]
            if any(deg[k] != target for k in self.algebra.bracket_basis(i, j)):
                return False
        return True

    def grading_element_holds(self) -> bool:
        if self.grading_element is None:
            return False
        for i, d in enumerate(self.degrees):
            e = [ZERO] * self.dim
            e[i] = Fraction(1)
            want = tuple(Fraction(d) if k == i else ZERO for k in range(self.dim))
            if self.algebra.bracket(self.grading_element, e) != want:
                return False
        return True

    def is_fundamental(self) -> bool:
        """Whether ``g_-1`` generates the negative part (checked for depth at most 2)."""
        neg2 = self.component(-2)
        if not neg2:
            return True
        neg1 = self.component(-1)
        vecs = []
        for i, j in itertools.combinations(neg1, 2):
            br = self.algebra.bracket_basis(i, j)
            if br:
                vecs.append({neg2.index(k): c for k, c in br.items()})
        return Subspace(len(neg2), vecs, self.field).dim == len(neg2)


def build_base_grading(rep: Representation) -> GradedLieAlgebra:
    """``C F + C^2m + (k + C H)`` with ``[X, Y] = Omega(X, Y) F``, ``[A, X] = AX``, ``[H, X] = -X``, ``[H, F] = -2F``.

    Basis order: ``F``, the ``2m`` vectors of ``V``, the basis of ``k``, ``H``.
    """
    if rep.form is None or rep.form_symmetry != SKEW:
        raise GradingError("the base grading needs a representation preserving a skew form")
    n, dk = rep.dim, rep.algebra.dim
    Om = rep.form.rows
    F, X0, A0, H = 0, 1, 1 + n, 1 + n + dk
    dim = H + 1
    br: dict[tuple[int, int], dict[int, object]] = {}
    for i, j in itertools.combinations(range(n), 2):
        if Om[i][j]:
            br[(X0 + i, X0 + j)] = {F: Om[i][j]}
    for a, sp in enumerate(rep.sparse_matrices()):
        for w, s, v in sp:
            # [X_s, A_a] = -A X_s
            d = br.setdefault((X0 + s, A0 + a), {})
            d[X0 + w] = d.get(X0 + w, 0) - v
    for a, b in itertools.combinations(range(dk), 2):
        val = rep.algebra.bracket_basis(a, b)
        if val:
            br[(A0 + a, A0 + b)] = {A0 + k: c for k, c in val.items()}
    br[(F, H)] = {F: 2}
    for i in range(n):
        br[(X0 + i, H)] = {X0 + i: 1}
    labels = ["F"] + [f"X{i}" for i in range(n)] + [f"k:{lab}" for lab in rep.algebra.labels] + ["H"]
    L = LieAlgebra.from_brackets(dim, {k: v for k, v in br.items() if v}, rep.field, labels)
    if not check_jacobi(L):
        raise GradingError("the base grading fails the Jacobi identity; is the form k-invariant?")
    degrees = [-2] + [-1] * n + [0] * (dk + 1)
    Hvec = tuple(Fraction(int(i == H)) for i in range(dim))
    return GradedLieAlgebra(L, degrees, Hvec)


# ---------------------------------------------------------------------------
# prolongation machinery
# ---------------------------------------------------------------------------


class Prolongation:
    """Incremental Tanaka prolongation of a non-positively graded algebra."""

    def __init__(self, base: GradedLieAlgebra):
        if max(base.degrees, default=0) > 0:
            raise GradingError("the base algebra must be non-positively graded")
        self.base = base
        self.field = base.field
        self.neg = [i for i, d in enumerate(base.degrees) if d < 0]
        self.min_degree = min(base.degrees, default=0)
        self.base_comp = {d: base.component(d) for d in set(base.degrees)}
        self.base_pos = {g: lst.index(g) for d, lst in self.base_comp.items() for g in lst}
        self.positive: dict[int, Subspace] = {}
        self._maps: dict[tuple[int, int], list[dict[int, object]]] = {}

    def deg(self, g: int) -> int:
        return self.base.degrees[g]

    def dim(self, j: int) -> int:
        if j <= 0:
            return len(self.base_comp.get(j, ()))
        sub = self.positive.get(j)
        return sub.dim if sub is not None else 0

    def blocks(self, k: int) -> list[tuple[int, int, int]]:
        """``(t, start, stop)`` for the value blocks of an element of ``g_k``."""
        out, start = [], 0
        for t in self.neg:
            size = self.dim(k + self.deg(t))
            out.append((t, start, start + size))
            start += size
        return out

    def ambient(self, k: int) -> int:
        return sum(self.dim(k + self.deg(t)) for t in self.neg)

    def bracket_neg(self, j: int, t: int) -> list[dict[int, object]]:
        """``Z -> [Z, e_t]`` from ``g_j`` to ``g_{j + deg t}``, one sparse column per basis vector of ``g_j``."""
        key = (j, t)
        if key in self._maps:
            return self._maps[key]
        cols: list[dict[int, object]] = []
        target = j + self.deg(t)
        if j <= 0:
            for g in self.base_comp.get(j, ()):
                val = self.base.algebra.bracket_basis(g, t)
                cols.append({self.base_pos[k]: c for k, c in val.items()} if target >= self.min_degree else {})
        else:
            start, stop = next((s, e) for tt, s, e in self.blocks(j) if tt == t)
            for vec in self.positive[j].basis:
                cols.append({i: x for i, x in enumerate(vec[start:stop]) if x})
        self._maps[key] = cols
        return cols

    def step(self, k: int) -> Subspace:
        if k < 1:
            raise GradingError("prolongation degrees start at 1")
        for j in range(1, k):
            if j not in self.positive:
                raise GradingError(f"g_{j} must be computed before g_{k}")
        blocks = {t: (s, e) for t, s, e in self.blocks(k)}
        rows = []
        for s, t in itertools.combinations(self.neg, 2):
            D = k + self.deg(s) + self.deg(t)
            if D < self.min_degree or self.dim(D) == 0:
                continue
            eqs: dict[int, dict[int, object]] = {}

            def put(c, col, val):
                if val:
                    row = eqs.setdefault(c, {})
                    v = row.get(col, 0) + val
                    if v:
                        row[col] = v
                    else:
                        row.pop(col, None)

            # u([e_s, e_t]) - [u(e_s), e_t] + [u(e_t), e_s] = 0
            for r, coef in self.base.algebra.bracket_basis(s, t).items():
                start, _ = blocks[r]
                for c in range(self.dim(D)):
                    put(c, start + c, coef)
            start_s, _ = blocks[s]
            for i, col in enumerate(self.bracket_neg(k + self.deg(s), t)):
                for c, v in col.items():
                    put(c, start_s + i, -v)
            start_t, _ = blocks[t]
            for i, col in enumerate(self.bracket_neg(k + self.deg(t), s)):
                for c, v in col.items():
                    put(c, start_t + i, v)
            rows.extend(r for r in eqs.values() if r)
        sub = nullspace(rows, self.ambient(k), self.field)
        self.positive[k] = sub
        return sub

    # -- assembly ----------------------------------------------------------

    def assemble(self) -> GradedLieAlgebra:
        top = max(self.positive, default=0)
        base_dim = self.base.dim
        offsets, pos = {}, base_dim
        for j in range(1, top + 1):
            offsets[j] = pos
            pos += self.dim(j)
        total = pos
        degrees = list(self.base.degrees)
        for j in range(1, top + 1):
            degrees.extend([j] * self.dim(j))

        def glob(j: int, local: int) -> int:
            return self.base_comp[j][local] if j <= 0 else offsets[j] + local

        def local_of(g: int) -> tuple[int, int]:
            if g < base_dim:
                return self.base.degrees[g], self.base_pos[g]
            j = max(d for d, o in offsets.items() if o <= g)
            return j, g - offsets[j]

        memo: dict[tuple[int, int], dict[int, object]] = {}

        def br_vec(x: dict[int, object], y: dict[int, object]) -> dict[int, object]:
            acc: dict[int, object] = {}
            for a, ca in x.items():
                for b, cb in y.items():
                    for k, v in br(a, b).items():
                        acc[k] = acc.get(k, 0) + ca * cb * v
            return {k: to_scalar(v) for k, v in acc.items() if v}

        def value_at(g: int, t: int) -> dict[int, object]:
            """``[e_g, e_t]`` for ``g`` of positive degree and ``t`` negative: the stored block."""
            j, r = local_of(g)
            start, stop = next((s, e) for tt, s, e in self.blocks(j) if tt == t)
            vec = self.positive[j].basis[r][start:stop]
            D = j + self.deg(t)
            return {glob(D, i): x for i, x in enumerate(vec) if x}

        def extended(a: int, b: int) -> dict[int, object]:
            ja, jb = degrees[a], degrees[b]
            D = ja + jb
            w = [ZERO] * self.ambient(D) if D <= top else None
            nonzero = False
            for t, start, stop in (self.blocks(D) if D <= top else [(t, 0, 0) for t in self.neg]):
                # [[a, X], b] + [a, [b, X]]
                part = br_vec(value_at(a, t), {b: 1})
                bx = br(b, t)
                for k, v in br_vec({a: 1}, bx).items():
                    part[k] = part.get(k, 0) + v
                part = {k: v for k, v in part.items() if v}
                if not part:
                    continue
                nonzero = True
                if w is None:
                    break
                for g, v in part.items():
                    jg, i = local_of(g)
                    if jg != D + self.deg(t):
                        raise GradingError("extended bracket left its degree")
                    w[start + i] = to_scalar(v)
            if w is None:
                if nonzero:
                    raise GradingError(f"bracket of degree {D} is nonzero beyond the last computed component")
                return {}
            if D <= 0:
                raise GradingError("extended bracket requested in a non-positive degree")
            coords = self.positive[D].coordinates(w)
            return {glob(D, i): x for i, x in enumerate(coords) if x}

        def br(a: int, b: int) -> dict[int, object]:
            key = (a, b)
            if key in memo:
                return memo[key]
            ja, jb = degrees[a], degrees[b]
            if a == b:
                res = {}
            elif ja <= 0 and jb <= 0:
                res = dict(self.base.algebra.bracket_basis(a, b))
            elif ja < jb or (ja == jb and a > b):
                res = {k: -v for k, v in br(b, a).items()}
            elif jb < 0:
                res = value_at(a, b)
            else:
                res = extended(a, b)
                if ja == jb:
                    other = extended(b, a)
                    if any(res.get(k, 0) + other.get(k, 0) for k in set(res) | set(other)):
                        raise GradingError("extended bracket is not antisymmetric")
            memo[key] = res
            return res

        brackets = {}
        for a, b in itertools.combinations(range(total), 2):
            val = br(a, b)
            if val:
                brackets[(a, b)] = val
        labels = list(self.base.algebra.labels)
        for j in range(1, top + 1):
            labels.extend(f"g{j}:{i}" for i in range(self.dim(j)))
        L = LieAlgebra.from_brackets(total, brackets, self.field, labels)
        H = None
        if self.base.grading_element is not None:
            H = tuple(self.base.grading_element) + (ZERO,) * (total - base_dim)
        return GradedLieAlgebra(L, degrees, H)


def prolong_step(g: GradedLieAlgebra | Prolongation, k: int) -> Subspace:
    """``g_k`` as a subspace of the value-block coordinates; computes missing lower degrees first."""
    pro = g if isinstance(g, Prolongation) else Prolongation(g)
    for j in range(1, k + 1):
        if j not in pro.positive:
            pro.step(j)
    return pro.positive[k]


def g1_alternative(g: GradedLieAlgebra) -> Subspace:
    """``{(A, phi) : phi(X)Y - phi(Y)X = Omega(X, Y) A}`` in the same block coordinates as ``g_1``.

    The block of ``F`` holds ``A``, which is the value ``psi(F)``.
    """
    comp = {d: g.component(d) for d in (-2, -1, 0)}
    if len(comp[-2]) != 1:
        raise GradingError("g1_alternative needs the base-grading shape with dim g_-2 = 1")
    (F,) = comp[-2]
    neg1, zero = comp[-1], comp[0]
    n, d0 = len(neg1), len(zero)
    L = g.algebra
    pos1 = {x: i for i, x in enumerate(neg1)}
    # unknowns: A (n entries) then phi(X_i) (d0 entries each)
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        Xi, Xj = neg1[i], neg1[j]
        om = L.bracket_basis(Xi, Xj).get(F, 0)
        eqs: dict[int, dict[int, object]] = {}
        for a, Z in enumerate(zero):
            # phi(X_i) X_j = [phi(X_i), X_j]
            for k, v in L.bracket_basis(Z, Xj).items():
                r = eqs.setdefault(pos1[k], {})
                r[n + i * d0 + a] = r.get(n + i * d0 + a, 0) + v
            for k, v in L.bracket_basis(Z, Xi).items():
                r = eqs.setdefault(pos1[k], {})
                r[n + j * d0 + a] = r.get(n + j * d0 + a, 0) - v
        if om:
            for c in range(n):
                r = eqs.setdefault(c, {})
                r[c] = r.get(c, 0) - om
        rows.extend({k: v for k, v in r.items() if v} for r in eqs.values())
    return nullspace([r for r in rows if r], n + n * d0, g.field)


def g1_module(pro: Prolongation, k_rep: Representation) -> Representation:
    """Action of ``k`` (the degree-0 part without ``H``) on ``g_1`` for a base grading built from ``k_rep``."""
    g1 = prolong_step(pro, 1)
    base = pro.base.algebra
    n, dk = k_rep.dim, k_rep.algebra.dim
    A0 = 1 + n
    blocks = pro.blocks(1)
    mats = []
    for a in range(dk):
        A = A0 + a
        cols = []
        for vec in g1.basis:
            out = [ZERO] * len(vec)
            for t, start, stop in blocks:
                j = 1 + pro.deg(t)
                comp = pro.base_comp[j]
                # (A.u)(e_t) = [A, u(e_t)] - u([A, e_t])
                for i, x in enumerate(vec[start:stop]):
                    if x:
                        for k, v in base.bracket_basis(A, comp[i]).items():
                            out[start + pro.base_pos[k]] += x * v
                for r, v in base.bracket_basis(A, t).items():
                    rs, re_ = next((s, e) for tt, s, e in blocks if tt == r)
                    for i, x in enumerate(vec[rs:re_]):
                        if x:
                            out[start + i] -= v * x
            cols.append(g1.coordinates([to_scalar(x) for x in out]))
        m = g1.dim
        mats.append(Matrix([[cols[c][r] for c in range(m)] for r in range(m)], k_rep.field, m))
    return Representation(k_rep.algebra, mats, name="g1", dim=g1.dim)


@dataclass
class ProlongationResult:
    base: GradedLieAlgebra
    components: list[Subspace]
    terminated: bool
    max_degree: int
    assembled: GradedLieAlgebra | None = None
    jacobi: bool | None = None
    simple: bool | None = None
    killing_graded: bool | None = None
    grading_element_ok: bool | None = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def dims(self) -> list[int]:
        return [c.dim for c in self.components]

    @property
    def status(self) -> str:
        return "terminated" if self.terminated else "unbounded (possibly infinite-dimensional)"


def killing_grading_check(g: GradedLieAlgebra) -> bool:
    """Whether the Killing form pairs ``g_k`` with ``g_l`` only when ``k + l = 0``."""
    K = killing_form(g.algebra).rows
    deg = g.degrees
    return all(
        not K[i][j] for i in range(g.dim) for j in range(g.dim) if deg[i] + deg[j] != 0
    )


def full_prolongation(g: GradedLieAlgebra, max_degree: int = 6, assemble: bool = True) -> ProlongationResult:
    """Prolong until a component vanishes for good, or report an unbounded result at ``max_degree``."""
    pro = Prolongation(g)
    fundamental = g.is_fundamental()
    depth = -pro.min_degree
    comps: list[Subspace] = []
    zeros = 0
    terminated = False
    for k in range(1, max_degree + 1):
        sub = pro.step(k)
        comps.append(sub)
        zeros = zeros + 1 if sub.dim == 0 else 0
        if sub.dim == 0 and (fundamental or zeros >= depth):
            terminated = True
            break
    result = ProlongationResult(g, comps, terminated, max_degree)
    result.extra["prolongation"] = pro
    if terminated and assemble:
        # drop the trailing zero component before assembling
        pro.positive = {j: s for j, s in pro.positive.items() if s.dim}
        alg = pro.assemble()
        result.assembled = alg
        result.jacobi = check_jacobi(alg.algebra)
        if not result.jacobi:
            raise GradingError("assembled prolongation fails the Jacobi identity")
        qi = alg.algebra.as_field(Field.QI)
        result.simple = is_semisimple(qi) and simple_ideal_count(qi) == 1
        result.killing_graded = killing_grading_check(alg)
        result.grading_element_ok = alg.grading_element_holds() if alg.grading_element is not None else None
        pro.positive = {j + 1: s for j, s in enumerate(comps)}
    return result


def prolongation_report(result: ProlongationResult) -> dict:
    base = result.base.dims
    return {
        "base": {"dims": {str(k): v for k, v in base.items()}},
        "prolongation": result.dims,
        "terminated": result.terminated,
        "status": result.status,
        "max_degree": result.max_degree,
        "assembled_dim": result.assembled.dim if result.assembled is not None else None,
        "simple": result.simple,
        "killing_graded": result.killing_graded,
        "grading_element": result.grading_element_ok,
    }


# ---------------------------------------------------------------------------
# P(sl2 + k) versus g_1 (+) g_1
# ---------------------------------------------------------------------------
#
# For P in P(sl2 + k) on C^2 (x) V write P(e_i (x) X) = alpha E + beta F + gamma H + T.
# In the present sign conventions ([H, X] = -X in g_0, sl2 basis (F, H, E)
# acting on C^2 with omega(e1, e2) = 1) the two elements of g_1 are
#   phi_1(X) = -gamma(e1 (x) X) H + T(e1 (x) X),   psi_1(F) = A1,
#   phi_2(X) = -gamma(e2 (x) X) H - T(e2 (x) X),   psi_2(F) = -A2,
# where beta(e2 (x) Z) = Omega(A1, Z) and alpha(e1 (x) Z) = Omega(A2, Z).
# beta(e1 (x) .) and alpha(e2 (x) .) vanish identically.


def _check_sl2k(rep: Representation, k_dim: int) -> int:
    n = rep.dim
    if n % 2 or rep.algebra.dim != 3 + k_dim:
        raise PreconditionError("expected the sl2 (x) k representation on C^2 (x) V")
    return n // 2


def pspace_to_g1_pair(rep: Representation, k_rep: Representation, P: Sequence, pro: Prolongation | None = None):
    """Split ``P`` into two elements of ``g_1`` (block coordinates), checking membership and the forced vanishing."""
    m2 = _check_sl2k(rep, k_rep.algebra.dim)
    if pro is None:
        pro = Prolongation(build_base_grading(k_rep))
    g1 = prolong_step(pro, 1)
    d, dk = rep.algebra.dim, k_rep.algebra.dim
    Om = k_rep.form
    # Omega(A, Z) = (Om^T A)_Z, so A = Om^{-T} applied to the coefficient vector
    Om_inv_T = Om.T.inverse()

    def val(i, X, idx):
        return P[(i * m2 + X) * d + idx]

    for X in range(m2):
        if val(0, X, 0) or val(1, X, 2):
            raise AssertionError("beta(e1 (x) .) or alpha(e2 (x) .) does not vanish")
    beta2 = [val(1, Z, 0) for Z in range(m2)]
    alpha1 = [val(0, Z, 2) for Z in range(m2)]
    A1 = Om_inv_T.apply(beta2)
    A2 = Om_inv_T.apply(alpha1)
    out = []
    for i, (psi, tsign) in enumerate(((tuple(A1), 1), (tuple(-x for x in A2), -1))):
        vec = list(psi)
        for X in range(m2):
            block = [tsign * val(i, X, 3 + a) for a in range(dk)] + [-val(i, X, 1)]
            vec.extend(block)
        vec = tuple(to_scalar(x) for x in vec)
        if len(vec) != pro.ambient(1) or not g1.contains(vec):
            raise AssertionError("the element built from P is not in g_1")
        out.append(vec)
    return tuple(out)


def g1_pair_to_pspace(rep: Representation, k_rep: Representation, u1: Sequence, u2: Sequence) -> tuple:
    """Inverse of :func:`pspace_to_g1_pair`."""
    m2 = _check_sl2k(rep, k_rep.algebra.dim)
    d, dk = rep.algebra.dim, k_rep.algebra.dim
    d0 = dk + 1
    Om = k_rep.form
    A1 = list(u1[:m2])
    A2 = [-x for x in u2[:m2]]
    beta2 = Om.T.apply(A1)
    alpha1 = Om.T.apply(A2)
    P = [ZERO] * (2 * m2 * d)
    for i, (u, tsign) in enumerate(((u1, 1), (u2, -1))):
        for X in range(m2):
            block = u[m2 + X * d0 : m2 + (X + 1) * d0]
            base = (i * m2 + X) * d
            P[base + 1] = to_scalar(-block[dk])
            for a in range(dk):
                P[base + 3 + a] = to_scalar(tsign * block[a])
            if i == 0:
                P[base + 2] = alpha1[X]
            else:
                P[base + 0] = beta2[X]
    return tuple(P)
