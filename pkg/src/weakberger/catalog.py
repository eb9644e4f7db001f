"""Concrete representations with their invariant forms attached.

Conventions (fixed once, relied on everywhere downstream):

* ``so(n)``: basis ``E_ij - E_ji`` for ``i < j`` in lexicographic order,
  identity form.
* ``sp(2m)``: form ``Omega = [[0, I_m], [-I_m, 0]]``; basis ordered as the
  lower-left symmetric block, then the diagonal ``gl(m)`` block, then the
  upper-right symmetric block, so ``sp(2)`` comes out as ``(F, H, E)``.
* ``sl2``: basis ``F = [[0,0],[1,0]], H = diag(1,-1), E = [[0,1],[0,0]]``
  with ``omega(e1, e2) = 1``.
* ``sl2:sym(k)``: monomials ``x^k, x^(k-1) y, ..., y^k``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Field, Matrix, nullspace
from .liealg import (
    SKEW,
    SYMMETRIC,
    LieAlgebra,
    Representation,
    ext_power,
    outer_direct_sum,
    outer_tensor,
    subrepresentation,
    sym_power,
)

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "so",
    "sp",
    "sl2",
    "sl2_irrep",
    "sl2_tensor_symplectic",
    "so_pair_tensor",
    "sp_pair_tensor",
    "sp6_lambda30",
    "zero_rep",
    "wedge",
    "resolve",
]


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    rep: Representation
    note: str = ""

    @property
    def algebra(self) -> LieAlgebra:
        return self.rep.algebra

    @property
    def dim(self) -> int:
        return self.rep.dim


def _mat(n: int, entries: dict, field) -> Matrix:
    return Matrix.from_sparse(n, n, entries, field)


def so(n: int, field: Field | str = Field.QI) -> CatalogEntry:
    if n < 2:
        raise CatalogError("so(n) needs n >= 2")
    field = Field.coerce(field)
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_mat(n, {(i, j): 1, (j, i): -1}, field))
            labels.append(f"E{i}{j}")
    L = LieAlgebra.from_matrices(mats, field, labels)
    rep = Representation(L, mats, Matrix.identity(n, field), SYMMETRIC, name=f"so({n})")
    return CatalogEntry(f"so({n})", rep, "orthogonal algebra on its defining space")


def _omega(m: int, field) -> Matrix:
    entries = {}
    for i in range(m):
        entries[(i, m + i)] = 1
        entries[(m + i, i)] = -1
    return _mat(2 * m, entries, field)


def sp(dim: int, field: Field | str = Field.QI) -> CatalogEntry:
    """``sp(dim)`` acting on ``F^dim``; ``dim = 2m`` must be even."""
    if dim < 2 or dim % 2:
        raise CatalogError("sp(2m) needs an even dimension 2m >= 2")
    field = Field.coerce(field)
    m = dim // 2
    mats, labels = [], []
    for i in range(m):
        for j in range(i, m):
            e = {(m + i, j): 1, (m + j, i): 1} if i != j else {(m + i, i): 1}
            mats.append(_mat(dim, e, field))
            labels.append(f"C{i}{j}")
    for i in range(m):
        for j in range(m):
            e = {(i, j): 1}
            e[(m + j, m + i)] = e.get((m + j, m + i), 0) - 1
            mats.append(_mat(dim, {k: v for k, v in e.items() if v}, field))
            labels.append(f"A{i}{j}")
    for i in range(m):
        for j in range(i, m):
            e = {(i, m + j): 1, (j, m + i): 1} if i != j else {(i, m + i): 1}
            mats.append(_mat(dim, e, field))
            labels.append(f"B{i}{j}")
    if m == 1:
        labels = ["F", "H", "E"]
    L = LieAlgebra.from_matrices(mats, field, labels)
    rep = Representation(L, mats, _omega(m, field), SKEW, name=f"sp({dim})")
    return CatalogEntry(f"sp({dim})", rep, "symplectic algebra on its defining space")


def sl2(field: Field | str = Field.QI) -> CatalogEntry:
    field = Field.coerce(field)
    F = _mat(2, {(1, 0): 1}, field)
    H = _mat(2, {(0, 0): 1, (1, 1): -1}, field)
    E = _mat(2, {(0, 1): 1}, field)
    L = LieAlgebra.from_matrices([F, H, E], field, ["F", "H", "E"])
    rep = Representation(L, [F, H, E], _omega(1, field), SKEW, name="sl2")
    return CatalogEntry("sl2", rep, "sl(2) on C^2 with omega(e1, e2) = 1")


def sl2_irrep(k: int, field: Field | str = Field.QI) -> CatalogEntry:
    """Irreducible ``(k+1)``-dimensional representation of ``sl2``."""
    if k < 1:
        raise CatalogError("sl2:sym(k) needs k >= 1")
    base = sl2(field)
    if k == 1:
        return CatalogEntry("sl2:sym(1)", base.rep.with_name("sl2:sym(1)"), base.note)
    rep = sym_power(base.rep, k).with_name(f"sl2:sym({k})")
    kind = "skew" if k % 2 else "symmetric"
    return CatalogEntry(f"sl2:sym({k})", rep, f"binary forms of degree {k}; invariant form is {kind}")


def sl2_tensor_symplectic(k_entry: CatalogEntry) -> CatalogEntry:
    """``sl2 + k`` acting on ``C^2 (x) C^2m``; the product form is symmetric."""
    if k_entry.rep.form is None or k_entry.rep.form_symmetry != SKEW:
        raise CatalogError("sl2xk needs an entry that preserves a skew form")
    base = sl2(k_entry.rep.field)
    rep = outer_tensor(base.rep, k_entry.rep)
    name = f"sl2xk({k_entry.name})"
    return CatalogEntry(name, rep.with_name(name), "quaternionic-type tensor product")


def so_pair_tensor(n1: int, n2: int, field: Field | str = Field.QI) -> CatalogEntry:
    if n1 < 3 or n2 < 3:
        raise CatalogError("so_pair_tensor needs n1, n2 >= 3")
    rep = outer_tensor(so(n1, field).rep, so(n2, field).rep)
    name = f"tensor(so({n1}),so({n2}))"
    return CatalogEntry(name, rep.with_name(name), "so + so on the tensor product")


def sp_pair_tensor(d1: int, d2: int, field: Field | str = Field.QI) -> CatalogEntry:
    """``sp(d1) + sp(d2)`` on ``C^d1 (x) C^d2`` (``d1``, ``d2`` the even space dimensions)."""
    if d1 < 2 or d2 < 2 or d1 % 2 or d2 % 2:
        raise CatalogError("sp_pair_tensor needs even dimensions >= 2")
    rep = outer_tensor(sp(d1, field).rep, sp(d2, field).rep)
    name = f"tensor(sp({d1}),sp({d2}))"
    return CatalogEntry(name, rep.with_name(name), "sp + sp on the tensor product")


def sp6_lambda30(field: Field | str = Field.QI) -> CatalogEntry:
    """``sp(6)`` on the 14-dimensional kernel of the contraction ``Lambda^3 C^6 -> C^6``."""
    base = sp(6, field).rep
    cube = ext_power(base, 3)
    Om = base.form.rows
    triples = list(itertools.combinations(range(6), 3))
    # contraction u^v^w -> Om(u,v) w - Om(u,w) v + Om(v,w) u, one row per output coordinate
    rows = [dict() for _ in range(6)]
    for col, (i, j, k) in enumerate(triples):
        for coeff, a, b, out in ((1, i, j, k), (-1, i, k, j), (1, j, k, i)):
            v = Om[a][b]
            if v:
                rows[out][col] = rows[out].get(col, 0) + coeff * v
    ker = nullspace(rows, len(triples), base.field)
    rep = subrepresentation(cube, ker, name="sp6:lambda30")
    return CatalogEntry("sp6:lambda30", rep, "primitive 3-forms; the heaviest symplectic isotropy test")


def zero_rep(n: int, field: Field | str = Field.QI) -> CatalogEntry:
    field = Field.coerce(field)
    L = LieAlgebra([], field)
    rep = Representation(L, [], Matrix.identity(n, field), SYMMETRIC, name=f"zero({n})", dim=n)
    return CatalogEntry(f"zero({n})", rep, "zero subalgebra")


def wedge(form: Matrix, x, y) -> Matrix:
    """The endomorphism ``Z -> (X, Z) Y - (Y, Z) X`` of a space with bilinear form ``form``."""
    bx = [sum((x[r] * form.rows[r][c] for r in range(form.nrows)), Fraction(0)) for c in range(form.ncols)]
    by = [sum((y[r] * form.rows[r][c] for r in range(form.nrows)), Fraction(0)) for c in range(form.ncols)]
    n = form.nrows
    rows = [[y[i] * bx[j] - x[i] * by[j] for j in range(n)] for i in range(n)]
    return Matrix.from_rows(rows, form.field)


# ---------------------------------------------------------------------------
# rep-spec mini grammar
# ---------------------------------------------------------------------------

_ATOM_PATTERNS = [
    (re.compile(r"so\((\d+)\)"), lambda m, f: so(int(m.group(1)), f)),
    (re.compile(r"sp\((\d+)\)"), lambda m, f: sp(int(m.group(1)), f)),
    (re.compile(r"sl2:sym\(?(\d+)\)?"), lambda m, f: sl2_irrep(int(m.group(1)), f)),
    (re.compile(r"sl2"), lambda m, f: sl2_irrep(1, f)),
    (re.compile(r"sp6:lambda30"), lambda m, f: sp6_lambda30(f)),
    (re.compile(r"zero\((\d+)\)"), lambda m, f: zero_rep(int(m.group(1)), f)),
]

_COMBINATORS = ("tensor", "oplus", "sl2xk")


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _resolve(spec: str, field, depth: int) -> CatalogEntry:
    if depth > 2:
        raise CatalogError(f"rep-spec nested too deeply: {spec!r}")
    for comb in _COMBINATORS:
        if spec.startswith(comb + "(") and spec.endswith(")"):
            args = _split_args(spec[len(comb) + 1 : -1])
            entries = [_resolve(a, field, depth + 1) for a in args]
            if comb == "sl2xk":
                if len(entries) != 1:
                    raise CatalogError("sl2xk takes one argument")
                return sl2_tensor_symplectic(entries[0])
            if len(entries) != 2:
                raise CatalogError(f"{comb} takes two arguments")
            a, b = entries
            name = f"{comb}({a.name},{b.name})"
            rep = outer_tensor(a.rep, b.rep) if comb == "tensor" else outer_direct_sum(a.rep, b.rep)
            return CatalogEntry(name, rep.with_name(name))
    for pat, build in _ATOM_PATTERNS:
        m = pat.fullmatch(spec)
        if m:
            return build(m, field)
    raise CatalogError(f"unknown rep-spec {spec!r}")


def resolve(spec: str, field: Field | str = Field.QI) -> CatalogEntry:
    """Resolve a catalog name such as ``"sl2xk(sl2:sym3)"`` or ``"sl2:sym5 in sp(6)"``."""
    text = spec.replace(" ", "")
    ambient = None
    if "in" in text:
        m = re.fullmatch(r"(.+)in(sp|so)\((\d+)\)", text)
        if m:
            text, ambient = m.group(1), (m.group(2), int(m.group(3)))
    entry = _resolve(text, Field.coerce(field), 0)
    if ambient is not None:
        kind, n = ambient
        want = SKEW if kind == "sp" else SYMMETRIC
        if entry.rep.dim != n or entry.rep.form_symmetry != want:
            raise CatalogError(f"{entry.name} does not sit inside {kind}({n})")
    return entry
