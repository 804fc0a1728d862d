"""Chevalley bases of semisimple Lie algebras.

Basis order: H_1..H_r (simple coroots), then E_alpha for alpha in the global
root order.  Structure constants are fixed by choosing N_{a,b} = +(p+1) on
extraspecial pairs and propagating with the standard Chevalley relations:

    N_{a,b} = -N_{b,a}
    N_{-a,-b} = -N_{a,b}
    N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b)        when a + b + g = 0
    sum over the three pairings of a zero-sum quadruple    (four-root identity)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .linalg import Matrix, SparseRow, ZERO, as_fraction, to_dense, to_sparse
from .rootsys import RootError, RootSystem, height


class AlgebraMismatch(ValueError):
    pass


def _add_sparse(acc: SparseRow, row: SparseRow, c: Fraction) -> None:
    for k, x in row.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def extraspecial_pairs(rs: RootSystem) -> dict[int, tuple[int, int]]:
    """For each non-simple positive root xi, the pair (a, b) with a minimal in root order and a + b = xi."""
    out = {}
    for xi in range(rs.npos):
        x = rs.roots[xi]
        if height(x) == 1:
            continue
        for a in range(rs.npos):
            d = tuple(p - q for p, q in zip(x, rs.roots[a]))
            if rs.is_root(d) and rs.index(d) < rs.npos:
                out[xi] = (a, rs.index(d))
                break
    return out


def structure_constants(rs: RootSystem) -> dict[tuple[int, int], int]:
    """N[(i, j)] for root indices i, j with roots[i] + roots[j] a root."""
    roots, npos = rs.roots, rs.npos
    sq = [rs.form(r, r) for r in roots]
    extra = extraspecial_pairs(rs)
    memo: dict[tuple[int, int], Fraction] = {}

    def total(a: int, b: int) -> int | None:
        s = tuple(x + y for x, y in zip(roots[a], roots[b]))
        return rs.index(s) if rs.is_root(s) else None

    def n(a: int, b: int) -> Fraction:
        s = total(a, b)
        if s is None:
            return ZERO
        if (a, b) in memo:
            return memo[(a, b)]
        if a < npos and b < npos:
            a1, b1 = extra[s]
            if (a, b) == (a1, b1):
                p, _ = rs.root_string(roots[b], roots[a])
                val = Fraction(p + 1)
            elif (a, b) == (b1, a1):
                val = -n(b, a)
            else:
                na, nb = rs.neg_index(a), rs.neg_index(b)
                t = ZERO
                d = total(b1, na)
                if d is not None:
                    t += n(b1, na) * n(a1, nb) / sq[d]
                d = total(a1, na)
                if d is not None:
                    t += n(na, a1) * n(b1, nb) / sq[d]
                val = sq[s] * t / n(a1, b1)
        elif a >= npos and b >= npos:
            val = -n(rs.neg_index(a), rs.neg_index(b))
        elif a < npos:
            g = rs.neg_index(s)
            if s < npos:
                val = sq[g] / sq[a] * n(b, g)
            else:
                val = sq[g] / sq[b] * n(g, a)
        else:
            val = -n(b, a)
        memo[(a, b)] = val
        return val

    out = {}
    for a in range(len(roots)):
        for b in range(len(roots)):
            if total(a, b) is not None:
                v = n(a, b)
                if v.denominator != 1:
                    raise AssertionError(f"non-integral structure constant {v}")
                out[(a, b)] = int(v)
    return out


@dataclass(frozen=True, eq=False)
class LieElement:
    algebra: "ChevalleyAlgebra"
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError("coordinate length does not match algebra dimension")

    def _same(self, other: "LieElement") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._same(other)
        return LieElement(self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._same(other)
        return LieElement(self.algebra, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "LieElement":
        return LieElement(self.algebra, tuple(-x for x in self.coords))

    def __rmul__(self, c) -> "LieElement":
        c = as_fraction(c)
        return LieElement(self.algebra, tuple(c * x for x in self.coords))

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieElement) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self) -> int:
        return hash(self.coords)

    @property
    def sparse(self) -> SparseRow:
        return to_sparse(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


class ChevalleyAlgebra:
    """g = h + sum of root spaces, with its full bracket table and Killing form."""

    def __init__(self, rs: RootSystem):
        self.root_system = rs
        self.rank = rs.rank
        self.dim = rs.rank + len(rs.roots)
        self.N = structure_constants(rs)
        self.table = self._bracket_table()

    # basis indices
    def e_index(self, root) -> int:
        return self.rank + self.root_system.index(root)

    def h_index(self, i: int) -> int:
        return i

    def basis_labels(self) -> list[str]:
        rs = self.root_system
        return [f"H{i + 1}" for i in range(self.rank)] + \
            ["E(" + ",".join(str(c) for c in r) + ")" for r in rs.roots]

    def _bracket_table(self) -> dict[tuple[int, int], SparseRow]:
        rs, r = self.root_system, self.rank
        table: dict[tuple[int, int], SparseRow] = {}
        cartan = rs.cartan_matrix
        for k, root in enumerate(rs.roots):
            for i in range(r):
                c = sum(root[m] * cartan[m][i] for m in range(r))
                if c:
                    table[(i, r + k)] = {r + k: Fraction(c)}
                    table[(r + k, i)] = {r + k: Fraction(-c)}
        for (a, b), n in self.N.items():
            s = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
            table[(r + a, r + b)] = {r + rs.index(s): Fraction(n)}
        for k, root in enumerate(rs.roots):
            table[(r + k, r + rs.neg_index(k))] = {
                i: x for i, x in enumerate(rs.coroot(root)) if x}
        return table

    # elements
    def element(self, coords: Iterable) -> LieElement:
        return LieElement(self, tuple(as_fraction(x) for x in coords))

    def from_sparse(self, row: SparseRow) -> LieElement:
        return LieElement(self, to_dense(row, self.dim))

    def basis_element(self, i: int) -> LieElement:
        return self.from_sparse({i: Fraction(1)})

    def E(self, root) -> LieElement:
        return self.basis_element(self.e_index(root))

    def H(self, i: int) -> LieElement:
        return self.basis_element(i)

    def H_root(self, root) -> LieElement:
        """H_alpha: alpha(H_alpha) = 2 and H_alpha in [g_alpha, g_-alpha]."""
        h = self.root_system.coroot(root)
        return self.element(list(h) + [0] * (self.dim - self.rank))

    # bracket
    def bracket_sparse(self, x: SparseRow, y: SparseRow) -> SparseRow:
        out: SparseRow = {}
        table = self.table
        for i, a in x.items():
            for j, b in y.items():
                t = table.get((i, j))
                if t:
                    _add_sparse(out, t, a * b)
        return out

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("bracket of elements from another algebra")
        return self.from_sparse(self.bracket_sparse(x.sparse, y.sparse))

    def ad_matrix(self, x: LieElement) -> Matrix:
        cols = [to_dense(self.bracket_sparse(x.sparse, {k: Fraction(1)}), self.dim)
                for k in range(self.dim)]
        return Matrix.from_rows([[cols[k][i] for k in range(self.dim)] for i in range(self.dim)])

    # Killing form
    def _trace_ad_ad(self, x: SparseRow, y: SparseRow) -> Fraction:
        total = ZERO
        for k in range(self.dim):
            inner = self.bracket_sparse(y, {k: Fraction(1)})
            if inner:
                total += self.bracket_sparse(x, inner).get(k, ZERO)
        return total

    def killing_form(self, x: LieElement, y: LieElement) -> Fraction:
        """trace(ad x ad y), straight from the bracket table."""
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("Killing form of elements from another algebra")
        return self._trace_ad_ad(x.sparse, y.sparse)

    @cached_property
    def killing(self) -> Matrix:
        """Gram matrix of the Killing form on the basis.

        Only weight-zero pairs (H_i, H_j) and (E_a, E_-a) are traced; the
        rest vanish by the root grading.
        """
        rs, r, n = self.root_system, self.rank, self.dim
        k = [[ZERO] * n for _ in range(n)]
        for i in range(r):
            for j in range(i, r):
                k[i][j] = k[j][i] = self._trace_ad_ad({i: Fraction(1)}, {j: Fraction(1)})
        for a in range(rs.npos):
            i, j = r + a, r + rs.neg_index(a)
            k[i][j] = k[j][i] = self._trace_ad_ad({i: Fraction(1)}, {j: Fraction(1)})
        return Matrix.from_rows(k)

    @cached_property
    def killing_h(self) -> Matrix:
        return Matrix.from_rows([row[: self.rank] for row in self.killing.entries[: self.rank]])

    def lambda_(self, root) -> Fraction:
        """1 / K(E_alpha, E_-alpha)."""
        i = self.e_index(root)
        j = self.rank + self.root_system.neg_index(self.root_system.index(root))
        return 1 / self.killing[i, j]

    def structure_constant(self, alpha, beta) -> int:
        """c with [E_alpha, E_beta] = c E_{alpha+beta}; 0 when alpha + beta is not a root."""
        rs = self.root_system
        a, b = rs.index(alpha), rs.index(beta)
        if tuple(alpha) == tuple(beta) or a == rs.neg_index(b):
            raise RootError("structure constant needs alpha != ±beta")
        return self.N.get((a, b), 0)


def build_algebra(rs: RootSystem) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs)


def jacobi_failures(g: ChevalleyAlgebra) -> tuple[int, list[tuple[int, int, int]]]:
    """Check the Jacobi identity on all basis triples i < j < k."""
    n = g.dim
    one = Fraction(1)
    basis = [{i: one} for i in range(n)]
    bad, count = [], 0
    for i in range(n):
        for j in range(i + 1, n):
            bij = g.bracket_sparse(basis[i], basis[j])
            for k in range(j + 1, n):
                count += 1
                acc: SparseRow = {}
                _add_sparse(acc, g.bracket_sparse(bij, basis[k]), one)
                _add_sparse(acc, g.bracket_sparse(g.bracket_sparse(basis[j], basis[k]), basis[i]), one)
                _add_sparse(acc, g.bracket_sparse(g.bracket_sparse(basis[k], basis[i]), basis[j]), one)
                if acc:
                    bad.append((i, j, k))
    return count, bad
