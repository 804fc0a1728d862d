"""The double g + g, its Manin triple, and Lagrangian subalgebras l_{V,u,v}.

Vectors of the double are coordinate tuples of length 2n laid out as (x, y)
with x, y in the Chevalley basis of g.  The invariant form is
<(x1, y1), (x2, y2)> = s K(x1, x2) - s K(y1, y2) for a fixed scale s (1 by
default, K the Killing form).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .chevalley import ChevalleyAlgebra
from .linalg import (Matrix, SparseRow, Subspace, ZERO, image_of, intersect, inverse,
                     is_isotropic, kernel, perp)
from .weyl import WeylElement, WeylGroup, format_word


class NotLagrangian(ValueError):
    pass


class NotCoisotropic(ValueError):
    pass


class Double:
    """d = g + g with the split form, g_delta and g_star = h_{-delta} + (n, 0) + (0, n_-)."""

    def __init__(self, algebra: ChevalleyAlgebra, scale=1, check: bool = True):
        self.algebra = algebra
        self.n = algebra.dim
        self.dim = 2 * self.n
        self.scale = Fraction(scale)
        if not self.scale:
            raise ValueError("form scale must be non-zero")
        k = algebra.killing.scaled(self.scale).entries
        n = self.n
        rows = [list(r) + [ZERO] * n for r in k] + [[ZERO] * n + [-x for x in r] for r in k]
        self.form = Matrix.from_rows(rows)
        rs, r = algebra.root_system, algebra.rank
        self.g_delta = Subspace.span([self.diag(e) for e in _unit_rows(n)], self.dim)
        star = [self.antidiag(_unit(n, i)) for i in range(r)]
        star += [self.left(_unit(n, r + a)) for a in range(rs.npos)]
        star += [self.right(_unit(n, r + rs.neg_index(a))) for a in range(rs.npos)]
        self.g_star = Subspace.span(star, self.dim)
        if check:
            self.check_manin()

    # embeddings g -> d
    def diag(self, x: Sequence) -> tuple:
        return tuple(x) + tuple(x)

    def antidiag(self, x: Sequence) -> tuple:
        return tuple(x) + tuple(-c for c in x)

    def left(self, x: Sequence) -> tuple:
        return tuple(x) + (ZERO,) * self.n

    def right(self, x: Sequence) -> tuple:
        return (ZERO,) * self.n + tuple(x)

    def embed_h(self, x: Sequence) -> tuple:
        """An element of h given over the simple coroots, as a vector of g."""
        return tuple(Fraction(c) for c in x) + (ZERO,) * (self.n - self.algebra.rank)

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(x, self.form.apply(y)) if a and b), ZERO)

    def bracket_sparse(self, x: SparseRow, y: SparseRow) -> SparseRow:
        n, g = self.n, self.algebra
        x1 = {i: c for i, c in x.items() if i < n}
        x2 = {i - n: c for i, c in x.items() if i >= n}
        y1 = {i: c for i, c in y.items() if i < n}
        y2 = {i - n: c for i, c in y.items() if i >= n}
        out = g.bracket_sparse(x1, y1)
        out.update({i + n: c for i, c in g.bracket_sparse(x2, y2).items()})
        return out

    # predicates
    def _check(self, s: Subspace) -> None:
        if s.ambient_dim != self.dim:
            raise ValueError(f"expected a subspace of the {self.dim}-dimensional double")

    def is_subalgebra(self, s: Subspace) -> bool:
        self._check(s)
        return _closed(s, self.bracket_sparse)

    def is_isotropic(self, s: Subspace) -> bool:
        self._check(s)
        return is_isotropic(s, self.form)

    def is_lagrangian(self, s: Subspace) -> bool:
        self._check(s)
        return s.dim == self.n and self.is_isotropic(s) and self.is_subalgebra(s)

    def check_manin(self) -> None:
        for name, s in (("g_delta", self.g_delta), ("g_star", self.g_star)):
            if not self.is_lagrangian(s):
                raise AssertionError(f"{name} is not Lagrangian")
        if intersect(self.g_delta, self.g_star).dim or (self.g_delta + self.g_star).dim != self.dim:
            raise AssertionError("g_delta and g_star are not complementary")

    # projections along d = g_delta + g_star
    @cached_property
    def projections(self) -> tuple[Matrix, Matrix]:
        basis = list(self.g_delta.basis) + list(self.g_star.basis)
        cols = Matrix.from_rows(basis).T
        coeffs = inverse(cols)
        n, dim = self.n, self.dim
        out = []
        for lo, hi in ((0, n), (n, dim)):
            m = [[ZERO] * dim for _ in range(dim)]
            for k in range(dim):
                acc: SparseRow = {}
                for i in range(lo, hi):
                    c = coeffs[i, k]
                    if c:
                        for j, x in enumerate(basis[i]):
                            if x:
                                acc[j] = acc.get(j, ZERO) + c * x
                for j, x in acc.items():
                    m[j][k] = x
            out.append(Matrix.from_rows(m))
        return out[0], out[1]

    # subspaces of g and their images in d
    def subspace_delta(self, m: Subspace) -> Subspace:
        return Subspace.span([self.diag(b) for b in m.basis], self.dim)

    def annihilator(self, m: Subspace) -> Subspace:
        """m^perp inside g_star: elements of g_star orthogonal to m_delta."""
        return intersect(perp(self.subspace_delta(m), self.form), self.g_star)

    def h_perp(self, v: Subspace) -> Subspace:
        """Orthogonal complement of v inside h for the Killing form on h."""
        return perp(v, self.algebra.killing_h)


def _unit(n: int, i: int) -> tuple:
    return tuple(Fraction(int(j == i)) for j in range(n))


def _unit_rows(n: int):
    return [_unit(n, i) for i in range(n)]


def _closed(s: Subspace, bracket) -> bool:
    rows = s.sparse_basis
    ech = s._echelon
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            b = bracket(rows[i], rows[j])
            if b and not ech.contains(b):
                return False
    return True


def is_subalgebra_of_g(algebra: ChevalleyAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != algebra.dim:
        raise ValueError("subspace ambient does not match the algebra")
    return _closed(s, algebra.bracket_sparse)


def build_double(algebra: ChevalleyAlgebra, scale=1) -> Double:
    return Double(algebra, scale)


# -- Lagrangian candidates -------------------------------------------------

@dataclass(frozen=True)
class Recipe:
    kind: str  # "L", "S", "Z" or "raw"
    V: Subspace | None = None
    u: WeylElement | None = None
    v: WeylElement | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "V_basis": None if self.V is None else [[str(x) for x in r] for r in self.V.basis],
            "u_word": None if self.u is None else format_word(self.u.word),
            "v_word": None if self.v is None else format_word(self.v.word),
        }


@dataclass(frozen=True, eq=False)
class LagrangianCandidate:
    double: Double
    space: Subspace
    recipe: Recipe

    @cached_property
    def lagrangian(self) -> bool:
        return self.double.is_lagrangian(self.space)

    @cached_property
    def splitting_dims(self) -> tuple[int, int]:
        """(dim l ∩ g_delta, dim l ∩ g_star)."""
        d = self.double
        return intersect(self.space, d.g_delta).dim, intersect(self.space, d.g_star).dim

    @cached_property
    def projection_dims(self) -> tuple[int, int]:
        """(dim pr_{g_delta}(l), dim pr_{g_star}(l))."""
        pd, ps = self.double.projections
        return image_of(pd, self.space).dim, image_of(ps, self.space).dim

    @cached_property
    def coisotropic(self) -> bool:
        return is_coisotropic(self)


def _check_h(double: Double, V: Subspace) -> Subspace:
    r, n = double.algebra.rank, double.n
    if V.ambient_dim == r:
        return V
    if V.ambient_dim == n and all(not any(b[r:]) for b in V.basis):
        return Subspace.span([b[:r] for b in V.basis], r)
    raise ValueError("V must be a subspace of h")


def _root_vectors(double: Double, w: WeylElement, negative: bool) -> list[tuple]:
    """Basis of w·n (or w·n_- when ``negative``) as vectors of g."""
    rs, r, n = double.algebra.root_system, double.algebra.rank, double.n
    out = []
    for a in range(rs.npos):
        k = rs.neg_index(a) if negative else a
        out.append(_unit(n, r + w.perm[k]))
    return out


def build_l(double: Double, V: Subspace, u: WeylElement, v: WeylElement,
            recipe: Recipe | None = None) -> LagrangianCandidate:
    """l_{V,u,v} = V_delta + (V^perp)_{-delta} + (u·n, 0) + (0, v·n_-)."""
    V = _check_h(double, V)
    vecs = [double.diag(double.embed_h(x)) for x in V.basis]
    vecs += [double.antidiag(double.embed_h(y)) for y in double.h_perp(V).basis]
    vecs += [double.left(x) for x in _root_vectors(double, u, negative=False)]
    vecs += [double.right(x) for x in _root_vectors(double, v, negative=True)]
    space = Subspace.span(vecs, double.dim)
    return LagrangianCandidate(double, space, recipe or Recipe("L", V, u, v))


def build_s(double: Double, W: WeylGroup, V: Subspace, u: WeylElement,
            v: WeylElement) -> LagrangianCandidate:
    """s_{V,u,v} = l_{V,u,v w0}."""
    V = _check_h(double, V)
    c = build_l(double, V, u, W.multiply(v, W.long_element))
    return LagrangianCandidate(double, c.space, Recipe("S", V, u, v))


def build_z(double: Double, W: WeylGroup, u: WeylElement, v: WeylElement) -> LagrangianCandidate:
    """z_{u,v} = (u, v)·[h_delta + (n, 0) + (0, n_-)]."""
    mu, mv = W.matrix_on_h(u), W.matrix_on_h(v)
    r = double.algebra.rank
    vecs = []
    for i in range(r):
        e = _unit(r, i)
        vecs.append(double.embed_h(mu.apply(e)) + double.embed_h(mv.apply(e)))
    vecs += [double.left(x) for x in _root_vectors(double, u, negative=False)]
    vecs += [double.right(x) for x in _root_vectors(double, v, negative=True)]
    return LagrangianCandidate(double, Subspace.span(vecs, double.dim), Recipe("Z", None, u, v))


def raw_candidate(double: Double, space: Subspace) -> LagrangianCandidate:
    return LagrangianCandidate(double, space, Recipe("raw"))


def is_coisotropic(c: LagrangianCandidate) -> bool:
    """l = (l ∩ g_delta) + (l ∩ g_star), cross-checked against the projection criterion."""
    if not c.lagrangian:
        raise NotLagrangian("coisotropy is only defined for Lagrangian subalgebras")
    n = c.double.n
    split = sum(c.splitting_dims) == n
    proj = sum(c.projection_dims) == n
    if split != proj:
        raise AssertionError(
            f"splitting {c.splitting_dims} and projection {c.projection_dims} criteria disagree")
    return split


def extract_coisotropic(c: LagrangianCandidate) -> tuple[Subspace, Subspace]:
    """(m, m_perp) with m_delta = l ∩ g_delta and m_perp = l ∩ g_star."""
    if not is_coisotropic(c):
        raise NotCoisotropic("candidate does not split along g_delta + g_star")
    d = c.double
    diag = intersect(c.space, d.g_delta)
    m = Subspace.span([b[: d.n] for b in diag.basis], d.n)
    return m, intersect(c.space, d.g_star)


def closed_form_m(double: Double, W: WeylGroup, V: Subspace, u: WeylElement,
                  v: WeylElement) -> Subspace:
    """V + sum_{a in Phi_u} g_{-a} + sum_{a in Phi_v} g_a."""
    V = _check_h(double, V)
    rs, r, n = double.algebra.root_system, double.algebra.rank, double.n
    mu, mv = W.inversion_mask(u), W.inversion_mask(v)
    vecs = [double.embed_h(x) for x in V.basis]
    vecs += [_unit(n, r + rs.neg_index(a)) for a in range(rs.npos) if mu >> a & 1]
    vecs += [_unit(n, r + a) for a in range(rs.npos) if mv >> a & 1]
    return Subspace.span(vecs, n)


def closed_form_m_perp(double: Double, W: WeylGroup, V: Subspace, u: WeylElement,
                       v: WeylElement) -> Subspace:
    """(V^perp)_{-delta} + sum_{a in Phi_u^c} (g_a, 0) + sum_{a in Phi_v^c} (0, g_{-a})."""
    V = _check_h(double, V)
    rs, r, n = double.algebra.root_system, double.algebra.rank, double.n
    mu, mv = W.inversion_mask(u), W.inversion_mask(v)
    vecs = [double.antidiag(double.embed_h(y)) for y in double.h_perp(V).basis]
    vecs += [double.left(_unit(n, r + a)) for a in range(rs.npos) if not mu >> a & 1]
    vecs += [double.right(_unit(n, r + rs.neg_index(a))) for a in range(rs.npos)
             if not mv >> a & 1]
    return Subspace.span(vecs, double.dim)


def rank_pi(W: WeylGroup, u: WeylElement, v: WeylElement) -> int:
    """l(u) + l(v) - l(u^-1 v)."""
    return W.length(u) + W.length(v) - W.length(W.multiply(W.inverse(u), v))


def rank_pi_general(W: WeylGroup, w: WeylElement, w1: WeylElement, w2: WeylElement) -> int:
    """l(w1) + l(w2) - l(w) - dim h^{-w w2^-1 w1}."""
    x = W.multiply(W.multiply(w, W.inverse(w2)), w1)
    return W.length(w1) + W.length(w2) - W.length(w) - W.minus_fixed_dim(x)


# -- test battery of subspaces of h ----------------------------------------

def v_battery(double: Double, seed: int = 0) -> list[tuple[str, Subspace]]:
    """Labelled subspaces of h: 0, h, each coroot line, C·H_theta, a random line, a random hyperplane."""
    g = double.algebra
    rs, r = g.root_system, g.rank
    rng = random.Random(seed)
    out = [("0", Subspace.zero(r)), ("h", Subspace.full(r))]
    out += [(f"H{i + 1}", Subspace.coordinate(r, [i])) for i in range(r)]
    out.append(("Htheta", Subspace.span([rs.coroot(rs.highest_root)], r)))

    def draw():
        while True:
            v = [rng.randint(-5, 5) for _ in range(r)]
            if any(v):
                return v

    out.append(("rand1", Subspace.span([draw()], r)))
    out.append(("randcodim1", kernel(Matrix.from_rows([draw()]))))
    return out


def candidate_json(c: LagrangianCandidate, W: WeylGroup) -> dict:
    d = c.double
    out = {
        "type": str(d.algebra.root_system.cartan_type),
        "recipe": c.recipe.to_json(),
        "basis": [[str(x) for x in b] for b in c.space.basis],
        "lagrangian": c.lagrangian,
        "coisotropic": None,
        "m_basis": None,
        "m_perp_basis": None,
        "rank_pi": None,
    }
    if c.lagrangian:
        out["coisotropic"] = c.coisotropic
        if c.coisotropic:
            m, mp = extract_coisotropic(c)
            out["m_basis"] = [[str(x) for x in b] for b in m.basis]
            out["m_perp_basis"] = [[str(x) for x in b] for b in mp.basis]
    rec = c.recipe
    if rec.u is not None:
        v = rec.v if rec.kind != "S" else W.multiply(rec.v, W.long_element)
        out["rank_pi"] = rank_pi(W, rec.u, v)
    return out
