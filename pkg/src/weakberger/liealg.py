"""Lie algebras from structure constants and their matrix representations."""

from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import (
    BasisSolver,
    Field,
    FieldMismatchError,
    Matrix,
    Scalar,
    Subspace,
    format_scalar,
    nullspace,
    parse_scalar,
    rref,
    to_scalar,
)

__all__ = [
    "LieAlgebra",
    "Representation",
    "PreconditionError",
    "check_jacobi",
    "killing_form",
    "is_semisimple",
    "simple_ideal_count",
    "commutant",
    "is_irreducible",
    "invariants",
    "hom_space",
    "invariant_bilinear_forms",
    "adjoint",
    "direct_sum",
    "tensor",
    "outer_tensor",
    "outer_direct_sum",
    "dual",
    "sym_power",
    "ext_power",
    "subrepresentation",
    "to_document",
    "from_document",
]

SYMMETRIC = "symmetric"
SKEW = "skew"


class PreconditionError(ValueError):
    pass


class LieAlgebra:
    """Finite-dimensional Lie algebra given by ``[b_i, b_j] = sum_k c[i][j][k] b_k``."""

    def __init__(self, structure_constants, field: Field | str = Field.Q, labels: Sequence[str] | None = None):
        self.field = Field.coerce(field)
        c = [[[to_scalar(x) for x in cij] for cij in ci] for ci in structure_constants]
        d = len(c)
        for ci in c:
            if len(ci) != d or any(len(cij) != d for cij in ci):
                raise ValueError("structure constants must have shape d x d x d")
        self.dim = d
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(d))
        if len(self.labels) != d:
            raise ValueError("wrong number of basis labels")
        self._br: list[list[dict[int, Scalar]]] = [
            [{k: x for k, x in enumerate(c[i][j]) if x} for j in range(d)] for i in range(d)
        ]
        for i in range(d):
            if self._br[i][i]:
                raise ValueError(f"[b{i}, b{i}] must vanish")
            for j in range(i):
                neg = {k: -x for k, x in self._br[j][i].items()}
                if self._br[i][j] != neg:
                    raise ValueError(f"structure constants are not antisymmetric at ({i}, {j})")
        if self.field is Field.Q:
            for row in self._br:
                for dct in row:
                    if any(not isinstance(x, Fraction) for x in dct.values()):
                        raise FieldMismatchError("complex structure constants for an algebra over Q")

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict[tuple[int, int], dict[int, Scalar]], field=Field.Q, labels=None):
        """Build from the nonzero brackets ``{(i, j): {k: c}}`` with ``i < j``."""
        zero = Fraction(0)
        c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in brackets.items():
            for k, x in val.items():
                x = to_scalar(x)
                c[i][j][k] += x
                c[j][i][k] -= x
        return cls(c, field, labels)

    @classmethod
    def from_matrices(cls, mats: Sequence[Matrix], field: Field | str | None = None, labels=None) -> "LieAlgebra":
        """Structure constants of the matrix Lie algebra spanned by ``mats`` (in that basis)."""
        if field is None:
            field = mats[0].field if mats else Field.Q
        field = Field.coerce(field)
        if not mats:
            return cls([], field, labels)
        solver = BasisSolver([m.flatten() for m in mats], field)
        d = len(mats)
        brackets = {}
        for i in range(d):
            for j in range(i + 1, d):
                comm = (mats[i] @ mats[j]) - (mats[j] @ mats[i])
                try:
                    coords = solver.coordinates(comm.flatten())
                except ValueError as exc:
                    raise ValueError(f"matrices are not closed under the commutator ({i}, {j})") from exc
                brackets[(i, j)] = {k: x for k, x in enumerate(coords) if x}
        return cls.from_brackets(d, brackets, field, labels)

    @classmethod
    def abelian(cls, dim: int, field=Field.Q) -> "LieAlgebra":
        zero = Fraction(0)
        return cls([[[zero] * dim for _ in range(dim)] for _ in range(dim)], field)

    @classmethod
    def heisenberg(cls, field=Field.Q) -> "LieAlgebra":
        return cls.from_brackets(3, {(0, 1): {2: 1}}, field, labels=("x", "y", "z"))

    @classmethod
    def direct_sum(cls, a: "LieAlgebra", b: "LieAlgebra") -> "LieAlgebra":
        f = a.field.join(b.field)
        da = a.dim
        brackets = {}
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                if a._br[i][j]:
                    brackets[(i, j)] = dict(a._br[i][j])
        for i in range(b.dim):
            for j in range(i + 1, b.dim):
                if b._br[i][j]:
                    brackets[(da + i, da + j)] = {da + k: x for k, x in b._br[i][j].items()}
        return cls.from_brackets(da + b.dim, brackets, f, a.labels + b.labels)

    def as_field(self, field: Field | str) -> "LieAlgebra":
        """Same structure constants viewed over another field (Q embeds in Q(i))."""
        return LieAlgebra(self.structure_constants, field, self.labels)

    @property
    def structure_constants(self) -> list[list[list[Scalar]]]:
        zero = Fraction(0)
        d = self.dim
        return [[[self._br[i][j].get(k, zero) for k in range(d)] for j in range(d)] for i in range(d)]

    def bracket_basis(self, i: int, j: int) -> dict[int, Scalar]:
        return self._br[i][j]

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        acc: dict[int, Scalar] = {}
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in self._br[i][j].items():
                    acc[k] = acc.get(k, 0) + ab * c
        zero = Fraction(0)
        return tuple(to_scalar(acc.get(k, zero)) for k in range(self.dim))

    def ad(self, i: int) -> Matrix:
        d = self.dim
        entries = {(k, j): c for j in range(d) for k, c in self._br[i][j].items()}
        return Matrix.from_sparse(d, d, entries, self.field)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field.name})"


def check_jacobi(L: LieAlgebra) -> bool:
    """True iff the cyclic sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]] vanishes on all basis triples."""
    br = L._br
    d = L.dim

    def nested(a, b, c):
        # [b_a, [b_b, b_c]]
        out: dict[int, Scalar] = {}
        for m, x in br[b][c].items():
            for k, y in br[a][m].items():
                out[k] = out.get(k, 0) + x * y
        return out

    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                acc: dict[int, Scalar] = {}
                for part in (nested(i, j, k), nested(j, k, i), nested(k, i, j)):
                    for key, val in part.items():
                        acc[key] = acc.get(key, 0) + val
                if any(acc.values()):
                    return False
    return True


def killing_form(L: LieAlgebra) -> Matrix:
    """Gram matrix of ``B(x, y) = trace(ad x ad y)`` in the given basis."""
    d = L.dim
    br = L._br
    # ad_i[k][l] = c[i][l][k]
    ad = [{(k, l): c for l in range(d) for k, c in br[i][l].items()} for i in range(d)]
    zero = Fraction(0)
    gram = [[zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            s = zero
            adj = ad[j]
            for (k, l), c in ad[i].items():
                v = adj.get((l, k))
                if v:
                    s += c * v
            gram[i][j] = gram[j][i] = to_scalar(s)
    return Matrix(gram, L.field, d)


def is_semisimple(L: LieAlgebra) -> bool:
    if L.dim == 0:
        return True
    _, rank, _ = rref(killing_form(L))
    return rank == L.dim


def simple_ideal_count(L: LieAlgebra) -> int:
    """Number of simple ideals of a split semisimple algebra over Q(i).

    Equal to the dimension of the commutant of the adjoint representation.
    """
    if L.field is not Field.QI:
        raise PreconditionError("simple_ideal_count needs an algebra over Q(i); use as_field('qi')")
    if not is_semisimple(L):
        raise PreconditionError("simple_ideal_count needs a semisimple algebra")
    return commutant(adjoint(L)).dim


class Representation:
    """Action of a Lie algebra on ``F^n`` by matrices, optionally with an invariant form."""

    def __init__(
        self,
        algebra: LieAlgebra,
        matrices: Sequence[Matrix],
        form: Matrix | None = None,
        form_symmetry: str | None = None,
        name: str | None = None,
        check: bool = True,
        dim: int | None = None,
    ):
        self.algebra = algebra
        self.field = algebra.field
        self.matrices = tuple(m if m.field is self.field else m.with_field(self.field) for m in matrices)
        if len(self.matrices) != algebra.dim:
            raise ValueError(f"{len(self.matrices)} matrices for an algebra of dimension {algebra.dim}")
        if self.matrices:
            n = self.matrices[0].nrows
        elif dim is not None:
            n = dim
        elif form is not None:
            n = form.nrows
        else:
            raise ValueError("cannot infer the module dimension of a representation of the zero algebra")
        self.dim = n
        for m in self.matrices:
            if m.shape != (n, n):
                raise ValueError("representation matrices must all be n x n")
        if form is not None and form.field is not self.field:
            form = form.with_field(self.field)
        self.form = form
        if form is not None and form_symmetry is None:
            form_symmetry = SYMMETRIC if form.is_symmetric() else SKEW if form.is_skew() else None
        self.form_symmetry = form_symmetry
        self.name = name
        self._sparse = [m.nonzeros() for m in self.matrices]
        if check:
            self.validate()

    def with_name(self, name: str) -> "Representation":
        rep = Representation.__new__(Representation)
        rep.__dict__.update(self.__dict__)
        rep.name = name
        return rep

    def as_field(self, field: Field | str) -> "Representation":
        return Representation(
            self.algebra.as_field(field),
            [m.with_field(field) for m in self.matrices],
            self.form.with_field(field) if self.form is not None else None,
            self.form_symmetry,
            self.name,
            check=False,
            dim=self.dim,
        )

    def validate(self) -> None:
        if not self.homomorphism_holds():
            raise ValueError("matrices do not define a representation (bracket not preserved)")
        if self.form is not None:
            B = self.form
            if B.shape != (self.dim, self.dim):
                raise ValueError("form has the wrong size")
            if self.form_symmetry == SYMMETRIC and not B.is_symmetric():
                raise ValueError("form declared symmetric is not symmetric")
            if self.form_symmetry == SKEW and not B.is_skew():
                raise ValueError("form declared skew is not skew")
            if self.form_symmetry not in (SYMMETRIC, SKEW):
                raise ValueError("form must be symmetric or skew")
            _, rank, _ = rref(B)
            if rank != self.dim:
                raise ValueError("attached form is degenerate")
            for m in self.matrices:
                if not (m.T @ B + B @ m).is_zero():
                    raise ValueError("attached form is not invariant")

    def homomorphism_holds(self) -> bool:
        L = self.algebra
        mats = self.matrices
        n = self.dim
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                comm = (mats[i] @ mats[j]) - (mats[j] @ mats[i])
                target = {}
                for k, c in L.bracket_basis(i, j).items():
                    for r, s, v in self._sparse[k]:
                        target[(r, s)] = target.get((r, s), 0) + c * v
                for r in range(n):
                    row = comm.rows[r]
                    for s in range(n):
                        if row[s] != target.get((r, s), 0):
                            return False
        return True

    def act(self, i: int, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out: dict[int, Scalar] = {}
        for r, s, x in self._sparse[i]:
            if v[s]:
                out[r] = out.get(r, 0) + x * v[s]
        zero = Fraction(0)
        return tuple(to_scalar(out.get(r, zero)) for r in range(self.dim))

    def element(self, coeffs: Sequence[Scalar]) -> Matrix:
        """Matrix of ``sum_a coeffs[a] * rho(b_a)``."""
        acc: dict[tuple[int, int], Scalar] = {}
        for a, c in enumerate(coeffs):
            if c:
                for r, s, x in self._sparse[a]:
                    acc[(r, s)] = acc.get((r, s), 0) + c * x
        return Matrix.from_sparse(self.dim, self.dim, acc, self.field)

    def sparse_matrices(self) -> list[list[tuple[int, int, Scalar]]]:
        return self._sparse

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"Representation({label}algebra dim {self.algebra.dim} on F^{self.dim}, form={self.form_symmetry})"


# ---------------------------------------------------------------------------
# linear-algebraic invariants of representations
# ---------------------------------------------------------------------------


def hom_space(rep1: Representation, rep2: Representation) -> Subspace:
    """Equivariant maps ``T: V1 -> V2`` as flattened ``n2 x n1`` matrices (row-major)."""
    if rep1.algebra is not rep2.algebra and rep1.algebra.structure_constants != rep2.algebra.structure_constants:
        raise ValueError("hom_space needs representations of the same algebra")
    field = rep1.field.join(rep2.field)
    n1, n2 = rep1.dim, rep2.dim
    rows = []
    for s1, s2 in zip(rep1.sparse_matrices(), rep2.sparse_matrices()):
        by_col1: dict[int, list] = {}
        for k, c, x in s1:
            by_col1.setdefault(c, []).append((k, x))
        by_row2: dict[int, list] = {}
        for r, k, x in s2:
            by_row2.setdefault(r, []).append((k, x))
        # (T rho1 - rho2 T)[r][c]
        for r in range(n2):
            for c in range(n1):
                row: dict[int, Scalar] = {}
                for k, x in by_col1.get(c, ()):
                    key = r * n1 + k
                    row[key] = row.get(key, 0) + x
                for k, x in by_row2.get(r, ()):
                    key = k * n1 + c
                    row[key] = row.get(key, 0) - x
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return nullspace(rows, n1 * n2, field)


def commutant(rep: Representation) -> Subspace:
    return hom_space(rep, rep)


def is_irreducible(rep: Representation) -> bool:
    """Absolute irreducibility: the commutant is one-dimensional (needs Q(i))."""
    if rep.field is not Field.QI:
        raise PreconditionError("is_irreducible is only meaningful over Q(i)")
    if rep.dim == 0:
        return False
    return commutant(rep).dim == 1


def invariants(rep: Representation) -> Subspace:
    rows = []
    for sp in rep.sparse_matrices():
        by_row: dict[int, dict[int, Scalar]] = {}
        for r, c, x in sp:
            by_row.setdefault(r, {})[c] = x
        rows.extend(by_row.values())
    return nullspace(rows, rep.dim, rep.field)


def invariant_bilinear_forms(rep: Representation) -> Subspace:
    """All ``B`` (flattened row-major) with ``rho(x)^T B + B rho(x) = 0``."""
    n = rep.dim
    rows = []
    for sp in rep.sparse_matrices():
        by_col: dict[int, list] = {}
        for k, c, x in sp:
            by_col.setdefault(c, []).append((k, x))
        for r in range(n):
            for c in range(n):
                row: dict[int, Scalar] = {}
                # sum_k rho[k][r] B[k][c] + sum_k B[r][k] rho[k][c]
                for k, x in by_col.get(r, ()):
                    key = k * n + c
                    row[key] = row.get(key, 0) + x
                for k, x in by_col.get(c, ()):
                    key = r * n + k
                    row[key] = row.get(key, 0) + x
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return nullspace(rows, n * n, rep.field)


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------


def adjoint(L: LieAlgebra) -> Representation:
    return Representation(L, [L.ad(i) for i in range(L.dim)], name="ad", check=False)


def _same_algebra(r1: Representation, r2: Representation) -> LieAlgebra:
    if r1.algebra is r2.algebra:
        return r1.algebra
    if r1.algebra.structure_constants == r2.algebra.structure_constants and r1.field is r2.field:
        return r1.algebra
    raise ValueError("representations of different algebras")


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.nrows, b.nrows
    zero = Fraction(0)
    rows = [list(r) + [zero] * m for r in a.rows] + [[zero] * n + list(r) for r in b.rows]
    return Matrix(rows, a.field.join(b.field), n + m)


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    L = _same_algebra(r1, r2)
    mats = [_block_diag(a, b) for a, b in zip(r1.matrices, r2.matrices)]
    form = sym = None
    if r1.form is not None and r2.form is not None and r1.form_symmetry == r2.form_symmetry:
        form, sym = _block_diag(r1.form, r2.form), r1.form_symmetry
    return Representation(L, mats, form, sym, name=f"{r1.name}+{r2.name}")


def _product_symmetry(s1: str | None, s2: str | None) -> str | None:
    if s1 is None or s2 is None:
        return None
    return SYMMETRIC if s1 == s2 else SKEW


def tensor(r1: Representation, r2: Representation) -> Representation:
    L = _same_algebra(r1, r2)
    I1 = Matrix.identity(r1.dim, L.field)
    I2 = Matrix.identity(r2.dim, L.field)
    mats = [a.kron(I2) + I1.kron(b) for a, b in zip(r1.matrices, r2.matrices)]
    form = sym = None
    if r1.form is not None and r2.form is not None:
        form, sym = r1.form.kron(r2.form), _product_symmetry(r1.form_symmetry, r2.form_symmetry)
    return Representation(L, mats, form, sym, name=f"{r1.name}(x){r2.name}")


def outer_tensor(r1: Representation, r2: Representation) -> Representation:
    """Representation of ``L1 + L2`` on ``V1 (x) V2`` (basis ``e_i (x) f_a`` at index ``i*n2 + a``)."""
    L = LieAlgebra.direct_sum(r1.algebra, r2.algebra)
    I1 = Matrix.identity(r1.dim, L.field)
    I2 = Matrix.identity(r2.dim, L.field)
    mats = [a.kron(I2) for a in r1.matrices] + [I1.kron(b) for b in r2.matrices]
    form = sym = None
    if r1.form is not None and r2.form is not None:
        form, sym = r1.form.kron(r2.form), _product_symmetry(r1.form_symmetry, r2.form_symmetry)
    return Representation(L, mats, form, sym, name=f"{r1.name}(x){r2.name}")


def outer_direct_sum(r1: Representation, r2: Representation) -> Representation:
    """Representation of ``L1 + L2`` on ``V1 + V2``, each summand acting on its own space."""
    L = LieAlgebra.direct_sum(r1.algebra, r2.algebra)
    Z1 = Matrix.zeros(r1.dim, r1.dim, L.field)
    Z2 = Matrix.zeros(r2.dim, r2.dim, L.field)
    mats = [_block_diag(a, Z2) for a in r1.matrices] + [_block_diag(Z1, b) for b in r2.matrices]
    form = sym = None
    if r1.form is not None and r2.form is not None and r1.form_symmetry == r2.form_symmetry:
        form, sym = _block_diag(r1.form, r2.form), r1.form_symmetry
    return Representation(L, mats, form, sym, name=f"{r1.name}+{r2.name}")


def dual(rep: Representation) -> Representation:
    mats = [-m.T for m in rep.matrices]
    form = rep.form.inverse() if rep.form is not None else None
    return Representation(rep.algebra, mats, form, rep.form_symmetry, name=f"{rep.name}*")


def _power_action(rep: Representation, basis: list[tuple[int, ...]], symmetric: bool) -> list[Matrix]:
    index = {b: i for i, b in enumerate(basis)}
    N = len(basis)
    mats = []
    for sp in rep.sparse_matrices():
        by_col: dict[int, list] = {}
        for r, c, x in sp:
            by_col.setdefault(c, []).append((r, x))
        entries: dict[tuple[int, int], Scalar] = {}
        for col, mono in enumerate(basis):
            if symmetric:
                counts = Counter(mono)
                for s, mult in counts.items():
                    for r, x in by_col.get(s, ()):
                        new = list(mono)
                        new.remove(s)
                        new.append(r)
                        key = (index[tuple(sorted(new))], col)
                        entries[key] = entries.get(key, 0) + mult * x
            else:
                for pos, s in enumerate(mono):
                    for r, x in by_col.get(s, ()):
                        if r in mono and r != s:
                            continue
                        new = list(mono)
                        new[pos] = r
                        # sign of the sorting permutation
                        sign = 1
                        for a in range(len(new)):
                            for b in range(a + 1, len(new)):
                                if new[a] > new[b]:
                                    sign = -sign
                        key = (index[tuple(sorted(new))], col)
                        entries[key] = entries.get(key, 0) + sign * x
        mats.append(Matrix.from_sparse(N, N, {k: v for k, v in entries.items() if v}, rep.field))
    return mats


def _permanent(m: list[list[Scalar]]) -> Scalar:
    k = len(m)
    total: Scalar = Fraction(0)
    for perm in itertools.permutations(range(k)):
        p: Scalar = Fraction(1)
        for a in range(k):
            p = p * m[a][perm[a]]
            if not p:
                break
        total = total + p
    return to_scalar(total)


def sym_power(rep: Representation, k: int) -> Representation:
    """``Sym^k V`` on the monomial basis (index multisets in lexicographic order).

    The attached form is the one induced on symmetric tensors (a permanent);
    it is skew exactly when the original form is skew and ``k`` is odd.
    """
    if k < 0:
        raise ValueError("negative symmetric power")
    basis = list(itertools.combinations_with_replacement(range(rep.dim), k))
    mats = _power_action(rep, basis, symmetric=True)
    form = sym = None
    if rep.form is not None:
        B = rep.form.rows
        grid = [[_permanent([[B[i][j] for j in J] for i in I]) for J in basis] for I in basis]
        form = Matrix(grid, rep.field, len(basis))
        sym = SKEW if rep.form_symmetry == SKEW and k % 2 else SYMMETRIC
    return Representation(rep.algebra, mats, form, sym, name=f"Sym{k}({rep.name})")


def ext_power(rep: Representation, k: int) -> Representation:
    """``Lambda^k V`` on the basis of increasing index tuples; form induced by determinants."""
    if k < 0:
        raise ValueError("negative exterior power")
    basis = list(itertools.combinations(range(rep.dim), k))
    mats = _power_action(rep, basis, symmetric=False)
    form = sym = None
    if rep.form is not None and basis:
        B = rep.form
        grid = [
            [Matrix([[B.rows[i][j] for j in J] for i in I], rep.field, k).determinant() if k else Fraction(1) for J in basis]
            for I in basis
        ]
        form = Matrix(grid, rep.field, len(basis))
        sym = SKEW if rep.form_symmetry == SKEW and k % 2 else SYMMETRIC
    return Representation(rep.algebra, mats, form, sym, name=f"Lambda{k}({rep.name})")


def subrepresentation(rep: Representation, sub: Subspace, name: str | None = None) -> Representation:
    """Restriction of ``rep`` to an invariant subspace, in the subspace's canonical basis."""
    basis = sub.basis
    mats = []
    for i in range(rep.algebra.dim):
        cols = [sub.coordinates(rep.act(i, v)) for v in basis]
        mats.append(Matrix([list(r) for r in zip(*cols)] if cols else [], rep.field, len(basis)))
    form = sym = None
    if rep.form is not None:
        B = rep.form
        Bv = [B.apply(v) for v in basis]
        grid = [[to_scalar(sum((a * b for a, b in zip(u, w)), Fraction(0))) for w in Bv] for u in basis]
        form, sym = Matrix(grid, rep.field, len(basis)), rep.form_symmetry
    return Representation(rep.algebra, mats, form, sym, name=name or f"sub({rep.name})")


# ---------------------------------------------------------------------------
# structured text documents
# ---------------------------------------------------------------------------


def to_document(algebra: LieAlgebra, reps: Iterable[Representation] = ()) -> dict:
    doc = {
        "field": algebra.field.value,
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "structure_constants": [[[format_scalar(x) for x in cij] for cij in ci] for ci in algebra.structure_constants],
        "reps": [],
    }
    for rep in reps:
        entry = {"dim": rep.dim, "matrices": [m.to_text() for m in rep.matrices]}
        if rep.name:
            entry["name"] = rep.name
        if rep.form is not None:
            entry["form"] = rep.form.to_text()
            entry["form_symmetry"] = rep.form_symmetry
        doc["reps"].append(entry)
    return doc


def from_document(doc: dict | str) -> tuple[LieAlgebra, list[Representation]]:
    if isinstance(doc, str):
        doc = json.loads(doc)
    field = Field.coerce(doc.get("field", "q"))
    sc = [[[parse_scalar(str(x)) for x in cij] for cij in ci] for ci in doc["structure_constants"]]
    if len(sc) != doc.get("dim", len(sc)):
        raise ValueError("dim does not match the structure constants")
    L = LieAlgebra(sc, field, doc.get("labels"))
    if not check_jacobi(L):
        raise ValueError("structure constants violate the Jacobi identity")
    reps = []
    for entry in doc.get("reps", []):
        n = entry["dim"]
        mats = [Matrix.from_text(m, field) if m else Matrix.zeros(n, n, field) for m in entry["matrices"]]
        form = Matrix.from_text(entry["form"], field) if entry.get("form") is not None else None
        rep = Representation(L, mats, form, entry.get("form_symmetry"), name=entry.get("name"))
        if rep.dim != n:
            raise ValueError("representation dim does not match its matrices")
        reps.append(rep)
    return L, reps
