"""Exact linear algebra over Q and Q(i).

Scalars are :class:`fractions.Fraction` for rational values and
:class:`GaussRat` for values with a nonzero imaginary part.  A Gaussian
rational whose imaginary part cancels collapses back to a ``Fraction``, so a
real element of Q(i) has exactly one representation.  The field a container
lives over (``Field.Q`` or ``Field.QI``) is carried by the container.

Elimination works on sparse rows.  Rational systems are cleared to integers
and reduced fraction-free (content is divided out after every update);
systems with genuinely complex entries fall back to field arithmetic.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Field",
    "GaussRat",
    "Scalar",
    "FieldMismatchError",
    "DimensionMismatchError",
    "to_scalar",
    "gauss",
    "is_real",
    "parse_scalar",
    "format_scalar",
    "Matrix",
    "rref",
    "kernel_basis",
    "nullspace",
    "solve",
    "Subspace",
    "subspace_sum",
    "intersect",
    "contains",
    "equals",
    "BasisSolver",
    "unique_rows",
]


class FieldMismatchError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class Field(str, enum.Enum):
    Q = "q"
    QI = "qi"

    @classmethod
    def coerce(cls, value: "Field | str | None") -> "Field":
        if value is None:
            return cls.Q
        if isinstance(value, Field):
            return value
        key = str(value).lower().replace("(", "").replace(")", "")
        if key in ("q", "rational"):
            return cls.Q
        if key in ("qi", "complex", "gaussian"):
            return cls.QI
        raise ValueError(f"unknown field {value!r}")

    def join(self, other: "Field") -> "Field":
        if self is other:
            return self
        raise FieldMismatchError(f"cannot combine data over {self.name} and {other.name}")


class GaussRat:
    """Element a + b*i of Q(i) with b != 0.

    Use :func:`gauss` to build values; it returns a ``Fraction`` when the
    imaginary part is zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction, im: Fraction):
        self.re = re
        self.im = im

    @staticmethod
    def _parts(x) -> tuple[Fraction, Fraction] | None:
        if isinstance(x, GaussRat):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return gauss((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        a, b = self.re, self.im
        den = a * a + b * b
        return gauss((c * a + d * b) / den, (d * a - c * b) / den)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return True  # im != 0 by construction

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __repr__(self):
        return f"GaussRat({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussRat]


def gauss(re, im=0) -> Scalar:
    re = Fraction(re)
    im = Fraction(im)
    if im == 0:
        return re
    return GaussRat(re, im)


def to_scalar(x) -> Scalar:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, GaussRat):
        return x if x.im else x.re
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; use gauss() or a string")
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def is_real(x) -> bool:
    return not isinstance(x, GaussRat)


def scalar_field(x) -> Field:
    return Field.QI if isinstance(x, GaussRat) else Field.Q


_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"([+-]?{_RAT})")
_IMAG_RE = re.compile(rf"([+-]?)({_RAT})?i")
_BOTH_RE = re.compile(rf"([+-]?{_RAT})([+-])({_RAT})?i")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"a/b"`` or ``"a/b+c/di"`` (either part may be omitted)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    m = _REAL_RE.fullmatch(s)
    if m:
        return Fraction(m.group(1))
    m = _IMAG_RE.fullmatch(s)
    if m:
        im = Fraction(m.group(2) or 1)
        return gauss(0, -im if m.group(1) == "-" else im)
    m = _BOTH_RE.fullmatch(s)
    if m:
        im = Fraction(m.group(3) or 1)
        return gauss(Fraction(m.group(1)), -im if m.group(2) == "-" else im)
    raise ValueError(f"malformed scalar {text!r}")


def format_scalar(x) -> str:
    x = to_scalar(x)
    if isinstance(x, Fraction):
        return str(x)
    im = str(abs(x.im)) + "i"
    if x.re == 0:
        return ("-" if x.im < 0 else "") + im
    return f"{x.re}{'-' if x.im < 0 else '+'}{im}"


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols", "field", "_hash")

    def __init__(self, rows: Sequence[Sequence[Scalar]], field: Field | str = Field.Q, ncols: int | None = None):
        field = Field.coerce(field)
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged matrix rows")
            for x in r:
                if isinstance(x, GaussRat):
                    if field is Field.Q:
                        raise FieldMismatchError(f"entry {x} is not in Q")
                    if not x.im:
                        raise ValueError("non-canonical Gaussian rational")
                elif not isinstance(x, Fraction):
                    raise TypeError(f"matrix entries must be exact scalars, got {type(x).__name__}")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field
        self._hash = None

    @classmethod
    def from_rows(cls, rows, field: Field | str | None = None, ncols: int | None = None) -> "Matrix":
        conv = [[to_scalar(x) for x in r] for r in rows]
        if field is None:
            field = Field.QI if any(isinstance(x, GaussRat) for r in conv for x in r) else Field.Q
        return cls(conv, field, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field | str = Field.Q) -> "Matrix":
        z = Fraction(0)
        return cls([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field | str = Field.Q) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def from_sparse(cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Scalar], field=Field.Q) -> "Matrix":
        grid = [[Fraction(0)] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            grid[i][j] = to_scalar(v)
        return cls(grid, field, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field is other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.ncols, self.field))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix[{self.field.name}]({self.nrows}x{self.ncols}: {body})"

    def with_field(self, field: Field | str) -> "Matrix":
        return Matrix(self.rows, field, self.ncols)

    def transpose(self) -> "Matrix":
        if self.ncols == 0 or self.nrows == 0:
            return Matrix([() for _ in range(self.ncols)], self.field, self.nrows)
        return Matrix(list(zip(*self.rows)), self.field, self.nrows)

    T = property(transpose)

    def nonzeros(self) -> list[tuple[int, int, Scalar]]:
        return [(i, j, x) for i, r in enumerate(self.rows) for j, x in enumerate(r) if x]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def trace(self) -> Scalar:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("trace of a non-square matrix")
        return to_scalar(sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0)))

    def _check(self, other: "Matrix") -> Field:
        return self.field.join(other.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], f, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} - {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], f, self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows], self.field, self.ncols)

    def scale(self, c) -> "Matrix":
        c = to_scalar(c)
        if not is_real(c) and self.field is Field.Q:
            raise FieldMismatchError("complex scalar times a matrix over Q")
        return Matrix([[to_scalar(c * a) for a in r] for r in self.rows], self.field, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
        cols = other.ncols
        sparse_other = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        out = []
        zero = Fraction(0)
        for r in self.rows:
            acc = [zero] * cols
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse_other[k]:
                        acc[j] = acc[j] + a * b
            out.append([to_scalar(x) for x in acc])
        return Matrix(out, f, cols)

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length does not match column count")
        return [to_scalar(sum((a * b for a, b in zip(r, vec) if a and b), Fraction(0))) for r in self.rows]

    def kron(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([to_scalar(a * b) for a in r for b in s])
        return Matrix(out, f, self.ncols * other.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatchError("hstack row mismatch")
        return Matrix([r + s for r, s in zip(self.rows, other.rows)], f, self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        f = self._check(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError("vstack column mismatch")
        return Matrix(self.rows + other.rows, f, self.ncols)

    def flatten(self) -> tuple[Scalar, ...]:
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def unflatten(cls, vec: Sequence[Scalar], nrows: int, ncols: int, field=Field.Q) -> "Matrix":
        vec = list(vec)
        if len(vec) != nrows * ncols:
            raise DimensionMismatchError("flat vector has the wrong length")
        return cls([vec[i * ncols : (i + 1) * ncols] for i in range(nrows)], field, ncols)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_skew(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == -self.rows[j][i] for i in range(self.nrows) for j in range(i + 1)
        )

    def determinant(self) -> Scalar:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        det: Scalar = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            piv = a[c][c]
            det = det * piv
            for r in range(c + 1, n):
                f = a[r][c]
                if f:
                    f = f / piv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return to_scalar(det)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatchError("inverse of a non-square matrix")
        aug = self.hstack(Matrix.identity(n, self.field))
        red, rank, piv = rref(aug)
        if piv[:n] != list(range(n)) or rank != n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in red.rows[:n]], self.field, n)

    def to_text(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.rows]

    @classmethod
    def from_text(cls, rows, field=None) -> "Matrix":
        return cls.from_rows([[parse_scalar(str(x)) for x in r] for r in rows], field)


# ---------------------------------------------------------------------------
# elimination core
# ---------------------------------------------------------------------------

Row = dict  # column -> scalar, zero entries omitted


def _as_sparse(row) -> Row:
    if isinstance(row, Mapping):
        return {int(k): v for k, v in row.items() if v}
    return {i: v for i, v in enumerate(row) if v}


def _integer_row(row: Row) -> dict[int, int]:
    dens = [v.denominator for v in row.values() if isinstance(v, Fraction) and v.denominator != 1]
    if not dens:
        return {k: int(v) for k, v in row.items()}
    l = math.lcm(*dens)
    return {k: (v.numerator * (l // v.denominator) if isinstance(v, Fraction) else v * l) for k, v in row.items()}


def _primitive(r: dict[int, int], lead: int) -> None:
    g = math.gcd(*r.values())
    if r[lead] < 0:
        g = -g
    if g != 1:
        for k in r:
            r[k] //= g


def _eliminate_int(r: dict[int, int], prow: dict[int, int], c: int) -> None:
    """r <- p*r - a*prow with common factors removed; clears column c of r."""
    a = r[c]
    p = prow[c]
    g = math.gcd(a, p)
    mp, ma = p // g, a // g
    if mp != 1:
        for k in r:
            r[k] *= mp
    get = r.get
    for k, v in prow.items():
        nv = get(k, 0) - ma * v
        if nv:
            r[k] = nv
        else:
            del r[k]


def _reduce_int(rows: Iterable[dict[int, int]], trailing: bool) -> dict[int, dict[int, int]]:
    lead = max if trailing else min
    piv: dict[int, dict[int, int]] = {}
    for row in rows:
        r = dict(row)
        if not r:
            continue
        for c in [c for c in r if c in piv]:
            if c in r:
                _eliminate_int(r, piv[c], c)
        if not r:
            continue
        c0 = lead(r)
        _primitive(r, c0)
        for pc, prow in piv.items():
            if c0 in prow:
                _eliminate_int(prow, r, c0)
                _primitive(prow, pc)
        piv[c0] = r
    return piv


def _reduce_field(rows: Iterable[Row], trailing: bool) -> dict[int, Row]:
    lead = max if trailing else min
    piv: dict[int, Row] = {}
    for row in rows:
        r = dict(row)
        for c in [c for c in r if c in piv]:
            a = r.get(c)
            if a:
                for k, v in piv[c].items():
                    nv = to_scalar(r.get(k, 0) - a * v)
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        if not r:
            continue
        c0 = lead(r)
        inv = 1 / r[c0] if isinstance(r[c0], GaussRat) else Fraction(1) / r[c0]
        r = {k: to_scalar(v * inv) for k, v in r.items()}
        for pc, prow in piv.items():
            a = prow.get(c0)
            if a:
                for k, v in r.items():
                    nv = to_scalar(prow.get(k, 0) - a * v)
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        piv[c0] = r
    return piv


def _reduce(rows: Iterable, field: Field, trailing: bool = False) -> dict[int, Row]:
    """Fully reduced echelon form of the row space.

    Returns ``{pivot_column: row}`` with each row scaled so its pivot is 1 and
    every pivot column cleared from all other rows.  With ``trailing`` the
    pivot of a row is its last nonzero column instead of its first.
    """
    sparse = [_as_sparse(r) for r in rows]
    complex_entries = False
    for r in sparse:
        for v in r.values():
            if isinstance(v, GaussRat):
                if field is Field.Q:
                    raise FieldMismatchError(f"entry {v} is not in Q")
                complex_entries = True
            elif not isinstance(v, (int, Fraction)):
                raise TypeError(f"non-exact entry {v!r}")
    if complex_entries:
        return _reduce_field(sparse, trailing)
    piv = _reduce_int((_integer_row(r) for r in sparse), trailing)
    out = {}
    for c, r in piv.items():
        p = r[c]
        out[c] = {k: Fraction(v, p) for k, v in r.items()}
    return out


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns of ``m``."""
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    piv = _reduce(m.rows, m.field)
    pivots = sorted(piv)
    zero = Fraction(0)
    out = []
    for c in pivots:
        row = [zero] * m.ncols
        for k, v in piv[c].items():
            row[k] = v
        out.append(row)
    out.extend([zero] * m.ncols for _ in range(m.nrows - len(pivots)))
    return Matrix(out, m.field, m.ncols), len(pivots), pivots


def nullspace(rows: Iterable, ncols: int, field: Field | str = Field.Q) -> "Subspace":
    """Kernel of the linear system whose equations are ``rows``.

    Rows may be dense sequences or sparse ``{column: coefficient}`` mappings.
    """
    field = Field.coerce(field)
    piv = _reduce(rows, field)
    fill: dict[int, dict[int, Scalar]] = {}
    for p, row in piv.items():
        for k, v in row.items():
            if k != p:
                fill.setdefault(k, {})[p] = -v
    vectors = []
    one = Fraction(1)
    for f in range(ncols):
        if f in piv:
            continue
        v = fill.get(f, {})
        v[f] = one
        vectors.append(v)
    # free-column vectors are already reduced with respect to trailing pivots
    return Subspace._from_canonical(ncols, field, vectors)


def kernel_basis(m: Matrix) -> "Subspace":
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    return nullspace(m.rows, m.ncols, m.field)


def solve(m: Matrix, b: Sequence) -> tuple[Scalar, ...] | None:
    """One exact solution of ``m x = b`` or ``None`` when inconsistent."""
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    b = [to_scalar(x) for x in b]
    if len(b) != m.nrows:
        raise DimensionMismatchError("right-hand side has the wrong length")
    field = m.field
    if any(isinstance(x, GaussRat) for x in b):
        field = Field.QI.join(field) if field is Field.QI else None
        if field is None:
            raise FieldMismatchError("complex right-hand side for a system over Q")
    n = m.ncols
    rows = []
    for r, bi in zip(m.rows, b):
        row = _as_sparse(r)
        if bi:
            row[n] = bi
        rows.append(row)
    piv = _reduce(rows, field)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for p, row in piv.items():
        x[p] = row.get(n, Fraction(0))
    return tuple(x)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """Linear subspace of a coordinate space, stored in canonical form.

    The basis is reduced with respect to *trailing* pivots: each basis vector
    has last nonzero entry 1 in a column where every other basis vector is
    zero.  Equal subspaces therefore store identical bases, and the
    coordinates of a member are just its entries in the pivot columns.
    """

    __slots__ = ("ambient", "field", "_rows", "_pivots", "_hash")

    def __init__(self, ambient: int, vectors: Iterable = (), field: Field | str = Field.Q):
        field = Field.coerce(field)
        vecs = []
        for v in vectors:
            sv = _as_sparse(v) if isinstance(v, Mapping) else _as_sparse([to_scalar(x) for x in v])
            if not isinstance(v, Mapping) and len(v) != ambient:
                raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {ambient}")
            if sv and max(sv) >= ambient:
                raise DimensionMismatchError("vector index outside the ambient space")
            vecs.append({k: to_scalar(x) for k, x in sv.items()})
        piv = _reduce(vecs, field, trailing=True)
        self._set(ambient, field, [piv[c] for c in sorted(piv)])

    def _set(self, ambient, field, rows):
        self.ambient = ambient
        self.field = field
        self._rows = tuple(rows)
        self._pivots = tuple(max(r) for r in rows)
        self._hash = None

    @classmethod
    def _from_canonical(cls, ambient: int, field: Field, rows: list[Row]) -> "Subspace":
        obj = cls.__new__(cls)
        rows = sorted(rows, key=max)
        obj._set(ambient, field, rows)
        return obj

    @classmethod
    def zero(cls, ambient: int, field: Field | str = Field.Q) -> "Subspace":
        return cls._from_canonical(ambient, Field.coerce(field), [])

    @classmethod
    def full(cls, ambient: int, field: Field | str = Field.Q) -> "Subspace":
        one = Fraction(1)
        return cls._from_canonical(ambient, Field.coerce(field), [{i: one} for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def sparse_basis(self) -> tuple[Row, ...]:
        return self._rows

    @property
    def basis(self) -> tuple[tuple[Scalar, ...], ...]:
        zero = Fraction(0)
        out = []
        for r in self._rows:
            v = [zero] * self.ambient
            for k, x in r.items():
                v[k] = x
            out.append(tuple(v))
        return tuple(out)

    @property
    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient x dim`` matrix."""
        b = self.basis
        if not b:
            return Matrix([() for _ in range(self.ambient)], self.field, 0)
        return Matrix(list(zip(*b)), self.field, len(b))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field.name})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.field is other.field
            and self._pivots == other._pivots
            and self._rows == other._rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, self.field, tuple(tuple(sorted(r.items())) for r in self._rows)))
        return self._hash

    def _compatible(self, other: "Subspace") -> Field:
        if self.ambient != other.ambient:
            raise DimensionMismatchError(f"ambient dimensions {self.ambient} and {other.ambient} differ")
        return self.field.join(other.field)

    def _vector(self, v) -> Row:
        if isinstance(v, Mapping):
            sv = {int(k): to_scalar(x) for k, x in v.items() if x}
        else:
            if len(v) != self.ambient:
                raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {self.ambient}")
            sv = {i: to_scalar(x) for i, x in enumerate(v) if x}
        if self.field is Field.Q and any(isinstance(x, GaussRat) for x in sv.values()):
            raise FieldMismatchError("complex vector tested against a subspace over Q")
        return sv

    def _residual(self, sv: Row) -> Row:
        r = dict(sv)
        for p, b in zip(self._pivots, self._rows):
            a = r.get(p)
            if a:
                for k, x in b.items():
                    nv = to_scalar(r.get(k, 0) - a * x)
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return r

    def contains(self, v) -> bool:
        return not self._residual(self._vector(v))

    __contains__ = contains

    def coordinates(self, v) -> tuple[Scalar, ...]:
        """Coefficients of ``v`` in the stored basis; raises if ``v`` is not a member."""
        sv = self._vector(v)
        if self._residual(sv):
            raise ValueError("vector is not in the subspace")
        zero = Fraction(0)
        return tuple(sv.get(p, zero) for p in self._pivots)

    def combine(self, coeffs: Sequence) -> tuple[Scalar, ...]:
        """Dense vector ``sum(c_t * basis_t)``."""
        if len(coeffs) != self.dim:
            raise DimensionMismatchError("wrong number of coefficients")
        acc: dict[int, Scalar] = {}
        for c, b in zip(coeffs, self._rows):
            if c:
                for k, x in b.items():
                    acc[k] = acc.get(k, 0) + c * x
        zero = Fraction(0)
        return tuple(to_scalar(acc.get(i, zero)) for i in range(self.ambient))

    def sum(self, other: "Subspace") -> "Subspace":
        f = self._compatible(other)
        return Subspace(self.ambient, list(self._rows) + list(other._rows), f)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        f = self._compatible(other)
        da, db = self.dim, other.dim
        eqs: dict[int, Row] = {}
        for i, b in enumerate(self._rows):
            for k, x in b.items():
                eqs.setdefault(k, {})[i] = x
        for j, b in enumerate(other._rows):
            for k, x in b.items():
                eqs.setdefault(k, {})[da + j] = -x
        ker = nullspace(list(eqs.values()), da + db, f)
        vecs = []
        for kv in ker._rows:
            coeffs = [kv.get(i, 0) for i in range(da)]
            vecs.append(self.combine(coeffs))
        return Subspace(self.ambient, vecs, f)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._compatible(other)
        return all(not other._residual(r) for r in self._rows)

    def map(self, fn, target_dim: int, field: Field | str | None = None) -> "Subspace":
        """Image of this subspace under a linear map given on dense vectors."""
        return Subspace(target_dim, [fn(v) for v in self.basis], field or self.field)

    def with_field(self, field: Field | str) -> "Subspace":
        field = Field.coerce(field)
        if field is Field.Q and any(isinstance(x, GaussRat) for r in self._rows for x in r.values()):
            raise FieldMismatchError("subspace has complex basis vectors")
        return Subspace._from_canonical(self.ambient, field, [dict(r) for r in self._rows])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(a: Subspace, v) -> bool:
    return a.contains(v)


def equals(a: Subspace, b: Subspace) -> bool:
    a._compatible(b)
    return a == b


class BasisSolver:
    """Coordinates with respect to a fixed, linearly independent list of vectors.

    Unlike :class:`Subspace`, the given vectors are kept as they are, so
    coordinates refer to the caller's own basis (used for structure constants
    of matrix algebras, for instance).
    """

    def __init__(self, vectors: Sequence[Sequence[Scalar]], field: Field | str = Field.Q):
        self.field = Field.coerce(field)
        self.vectors = [tuple(to_scalar(x) for x in v) for v in vectors]
        self.size = len(self.vectors)
        self.ambient = len(self.vectors[0]) if self.vectors else 0
        if self.size == 0:
            self._cols: list[int] = []
            self._inv = None
            return
        _, rank, pivots = rref(Matrix(self.vectors, self.field, self.ambient))
        if rank != self.size:
            raise ValueError("vectors are linearly dependent")
        self._cols = pivots
        sub = Matrix([[v[c] for c in pivots] for v in self.vectors], self.field, self.size)
        # row vector of coordinates c satisfies c @ sub = w[pivots]
        self._inv = sub.inverse()

    def coordinates(self, w: Sequence[Scalar], check: bool = True) -> tuple[Scalar, ...]:
        if self.size == 0:
            if check and any(w):
                raise ValueError("vector is not in the span")
            return ()
        rhs = [w[c] for c in self._cols]
        inv = self._inv.rows
        coords = tuple(
            to_scalar(sum((rhs[k] * inv[k][i] for k in range(self.size) if rhs[k] and inv[k][i]), Fraction(0)))
            for i in range(self.size)
        )
        if check:
            for j in range(self.ambient):
                val = sum((c * v[j] for c, v in zip(coords, self.vectors) if c and v[j]), Fraction(0))
                if val != w[j]:
                    raise ValueError("vector is not in the span")
        return coords


def unique_rows(rows: Iterable) -> list[Row]:
    """Drop zero rows and rows that are scalar multiples of earlier ones.

    Rational rows come back as primitive integer rows with a positive leading
    coefficient, which the elimination core accepts directly.
    """
    seen = set()
    out = []
    for row in rows:
        r = _as_sparse(row)
        if not r:
            continue
        if any(isinstance(v, GaussRat) for v in r.values()):
            lead = r[min(r)]
            r = {k: to_scalar(v / lead) for k, v in r.items()}
            key = tuple(sorted((k, (v.re, v.im) if isinstance(v, GaussRat) else (v, 0)) for k, v in r.items()))
        else:
            r = _integer_row(r)
            _primitive(r, min(r))
            key = tuple(sorted(r.items()))
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out
