"""Exact rational linear algebra over fixed coordinate spaces.

Vectors are tuples of :class:`fractions.Fraction`.  A :class:`Subspace` keeps
its basis in reduced row echelon form, so two subspaces are equal exactly when
their stored bases are equal.  Elimination runs on sparse rows internally
since almost every space built downstream is spanned by near-coordinate
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
SparseRow = dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def to_sparse(v: Sequence) -> SparseRow:
    return {i: as_fraction(x) for i, x in enumerate(v) if x != 0}


def to_dense(row: SparseRow, n: int) -> Vector:
    out = [ZERO] * n
    for i, x in row.items():
        out[i] = x
    return tuple(out)


class Echelon:
    """Incrementally maintained RREF over sparse rows.

    ``rows`` maps pivot column to a row normalised to 1 at its pivot and
    zero at every other pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, SparseRow] = {}

    def reduce(self, row: SparseRow) -> SparseRow:
        r = dict(row)
        for p in [c for c in r if c in self.rows]:
            f = r.get(p)
            if not f:
                continue
            for c, x in self.rows[p].items():
                y = r.get(c, ZERO) - f * x
                if y:
                    r[c] = y
                else:
                    r.pop(c, None)
        return r

    def add(self, row: SparseRow) -> bool:
        """Insert ``row``; return False if it was already in the span."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: x * inv for c, x in r.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for c, x in r.items():
                    y = other.get(c, ZERO) - f * x
                    if y:
                        other[c] = y
                    else:
                        other.pop(c, None)
        self.rows[p] = r
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def sorted_rows(self) -> list[SparseRow]:
        return [self.rows[p] for p in sorted(self.rows)]


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix; ``ncols`` is kept explicitly for 0-row matrices."""

    entries: tuple[Vector, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        data = tuple(vector(r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        return cls(data, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(tuple((ZERO,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self) -> "Matrix":
        return Matrix(tuple(tuple(r[j] for r in self.entries) for j in range(self.ncols)),
                      self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.entries
        return Matrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in cols)
                  for row in self.entries),
            other.ncols,
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(sum((a * as_fraction(b) for a, b in zip(row, v) if a and b), ZERO)
                     for row in self.entries)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.nrows) for j in range(i))

    def scaled(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix(tuple(tuple(c * x for x in r) for r in self.entries), self.ncols)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _echelon_of(rows: Iterable[Sequence], ncols: int) -> Echelon:
    e = Echelon(ncols)
    for r in rows:
        if len(r) != ncols:
            raise ValueError(f"vector of length {len(r)} in ambient of dimension {ncols}")
        e.add(to_sparse(r))
    return e


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form of ``m``, zero rows kept at the bottom."""
    e = _echelon_of(m.entries, m.ncols)
    rows = [to_dense(r, m.ncols) for r in e.sorted_rows()]
    rows += [(ZERO,) * m.ncols] * (m.nrows - len(rows))
    return Matrix(tuple(rows), m.ncols)


def rank(m: Matrix) -> int:
    return _echelon_of(m.entries, m.ncols).rank


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n with its canonical RREF basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        e = _echelon_of(vectors, ambient_dim)
        return cls._from_echelon(e)

    @classmethod
    def _from_echelon(cls, e: Echelon) -> "Subspace":
        return cls(e.ncols, tuple(to_dense(r, e.ncols) for r in e.sorted_rows()))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n).entries)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span([[ONE if j == i else ZERO for j in range(n)] for i in indices], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        for r in self.basis:
            s = to_sparse(r)
            e.rows[min(s)] = s
        return e

    @cached_property
    def sparse_basis(self) -> tuple[SparseRow, ...]:
        return tuple(to_sparse(r) for r in self.basis)

    def as_matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def issubset(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other._echelon.contains(r) for r in self.sparse_basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def contains(a: Subspace, v: Sequence) -> bool:
    if len(v) != a.ambient_dim:
        raise ValueError(f"vector of length {len(v)} in ambient of dimension {a.ambient_dim}")
    return a._echelon.contains(to_sparse(v))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    e = Echelon(a.ambient_dim)
    for r in a.sparse_basis + b.sparse_basis:
        e.add(r)
    return Subspace._from_echelon(e)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b by Zassenhaus elimination on [a|a] over [b|0]."""
    _check_ambient(a, b)
    n = a.ambient_dim
    e = Echelon(2 * n)
    for r in a.sparse_basis:
        row = dict(r)
        row.update({c + n: x for c, x in r.items()})
        e.add(row)
    for r in b.sparse_basis:
        e.add(dict(r))
    out = Echelon(n)
    for p, row in e.rows.items():
        if p >= n:
            out.add({c - n: x for c, x in row.items()})
    return Subspace._from_echelon(out)


def kernel(m: Matrix) -> Subspace:
    """Right null space {x : m x = 0}."""
    e = _echelon_of(m.entries, m.ncols)
    pivots = e.rows
    free = [c for c in range(m.ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = {f: ONE}
        for p, row in pivots.items():
            x = row.get(f)
            if x:
                v[p] = -x
        vecs.append(to_dense(v, m.ncols))
    return Subspace.span(vecs, m.ncols)


def image_of(m: Matrix, s: Subspace) -> Subspace:
    """Image of ``s`` under x ↦ m x."""
    if m.ncols != s.ambient_dim:
        raise ValueError("map domain does not match subspace ambient")
    return Subspace.span((m.apply(b) for b in s.basis), m.nrows)


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.T.entries, m.nrows)


def bilinear(form: Matrix, x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, form.apply(y)) if a and b), ZERO)


def perp(s: Subspace, form: Matrix) -> Subspace:
    """{w : form(w, x) = 0 for all x in s}."""
    if not form.is_square():
        raise ValueError("form must be square")
    if not form.is_symmetric():
        raise ValueError("form must be symmetric")
    if form.nrows != s.ambient_dim:
        raise ValueError("form does not match subspace ambient")
    rows = [form.apply(b) for b in s.basis]
    return kernel(Matrix(tuple(rows), s.ambient_dim))


def is_isotropic(s: Subspace, form: Matrix) -> bool:
    images = [to_sparse(form.apply(b)) for b in s.basis]
    for x in s.sparse_basis:
        for y in images:
            if sum((v * y[c] for c, v in x.items() if c in y), ZERO):
                return False
    return True


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("only square matrices are invertible")
    n = m.nrows
    e = Echelon(2 * n)
    for i, r in enumerate(m.entries):
        row = to_sparse(r)
        row[n + i] = ONE
        e.add(row)
    if any(p not in e.rows for p in range(n)):
        raise ValueError("matrix is singular")
    return Matrix(tuple(to_dense({c - n: x for c, x in e.rows[p].items() if c >= n}, n)
                        for p in range(n)), n)


def format_rational(x: Fraction) -> str:
    return str(as_fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def serialize_rows(rows: Iterable[Sequence]) -> list[list[str]]:
    return [[format_rational(x) for x in r] for r in rows]


def deserialize_rows(rows: Iterable[Iterable[str]]) -> list[Vector]:
    return [tuple(parse_rational(x) for x in r) for r in rows]
