"""Coisotropic subalgebras u_{±beta} built from the standard r-matrix and a long root.

The r-matrix is pi = sum_{a > 0} lambda_a E_a ∧ E_{-a} with
lambda_a = 1 / K(E_a, E_{-a}).  For a long positive root beta,
u_beta is the image of the sharp map of [E_beta, pi].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bialgebra import Double, LagrangianCandidate, Recipe, build_l
from .chevalley import ChevalleyAlgebra, LieElement
from .linalg import Matrix, SparseRow, Subspace, ZERO, column_space, intersect, perp
from .rootsys import Root, RootError, negate
from .weyl import WeylGroup


class ShortRootError(ValueError):
    pass


@dataclass(frozen=True)
class Bivector:
    """sum of c_ij b_i ∧ b_j over keys (i, j) with i < j."""

    dim: int
    terms: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), c in self.terms.items():
            if not i < j or not c:
                raise ValueError("bivector keys must satisfy i < j with non-zero coefficients")

    def __add__(self, other: "Bivector") -> "Bivector":
        acc = dict(self.terms)
        _accumulate(acc, other.terms, Fraction(1))
        return Bivector(self.dim, acc)

    def __rmul__(self, c) -> "Bivector":
        c = Fraction(c)
        if not c:
            return Bivector(self.dim)
        return Bivector(self.dim, {k: c * v for k, v in self.terms.items()})

    def __sub__(self, other: "Bivector") -> "Bivector":
        return self + (-1) * other

    def is_zero(self) -> bool:
        return not self.terms


def _accumulate(acc: dict, terms: dict, c: Fraction) -> None:
    for k, v in terms.items():
        y = acc.get(k, ZERO) + c * v
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def wedge_sparse(x: SparseRow, y: SparseRow) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for i, a in x.items():
        for j, b in y.items():
            if i == j:
                continue
            key, s = ((i, j), a * b) if i < j else ((j, i), -a * b)
            _accumulate(out, {key: s}, Fraction(1))
    return out


def wedge(x: LieElement, y: LieElement) -> Bivector:
    return Bivector(x.algebra.dim, wedge_sparse(x.sparse, y.sparse))


def standard_pi(g: ChevalleyAlgebra) -> Bivector:
    rs = g.root_system
    acc: dict = {}
    for a in rs.positive_roots:
        _accumulate(acc, wedge_sparse({g.e_index(a): Fraction(1)},
                                      {g.e_index(negate(a)): Fraction(1)}), g.lambda_(a))
    return Bivector(g.dim, acc)


def ad_bivector(x: LieElement, b: Bivector) -> Bivector:
    """[x, b] with ad x acting as a derivation: [x, p∧q] = [x,p]∧q + p∧[x,q]."""
    g = x.algebra
    if b.dim != g.dim:
        raise ValueError("bivector and element live in different algebras")
    xs = x.sparse
    acc: dict = {}
    for (i, j), c in b.terms.items():
        bi, bj = {i: Fraction(1)}, {j: Fraction(1)}
        _accumulate(acc, wedge_sparse(g.bracket_sparse(xs, bi), bj), c)
        _accumulate(acc, wedge_sparse(bi, g.bracket_sparse(xs, bj)), c)
    return Bivector(g.dim, acc)


def reflection_inversions(g: ChevalleyAlgebra, beta: Root) -> list[Root]:
    """Phi_{s_beta}: positive roots sent negative by s_beta."""
    rs = g.root_system
    return [a for a in rs.positive_roots if not rs.is_positive(rs.reflect(beta, a))]


def _require_long_positive(g: ChevalleyAlgebra, beta) -> Root:
    rs = g.root_system
    beta = tuple(beta)
    rs.index(beta)
    if not rs.is_positive(beta):
        raise RootError(f"{beta} is not a positive root")
    if not rs.is_long(beta):
        raise ShortRootError(f"{beta} is not a long root")
    return beta


def ebeta_pi_closed_form(g: ChevalleyAlgebra, beta, leading: str = "lambda") -> Bivector:
    """lead E_b∧H_b + sum_{a in Phi_{s_b}, a != b} lambda_a c_{b,-a} E_a∧E_{b-a}.

    ``leading="lambda"`` uses lead = lambda_b, which is what the derivation
    action produces; ``leading="unit"`` uses lead = 1.  Both have the same
    sharp image.
    """
    beta = _require_long_positive(g, beta)
    if leading == "lambda":
        lead = g.lambda_(beta)
    elif leading == "unit":
        lead = Fraction(1)
    else:
        raise ValueError(f"unknown leading convention {leading!r}")
    acc: dict = {}
    _accumulate(acc, wedge_sparse(g.E(beta).sparse, g.H_root(beta).sparse), lead)
    for a in reflection_inversions(g, beta):
        if a == beta:
            continue
        c = g.structure_constant(beta, negate(a))
        d = tuple(x - y for x, y in zip(beta, a))
        _accumulate(acc, wedge_sparse({g.e_index(a): Fraction(1)}, {g.e_index(d): Fraction(1)}),
                    g.lambda_(a) * c)
    return Bivector(g.dim, acc)


def sharp(b: Bivector) -> Matrix:
    """Matrix of xi -> b(xi, .) in the coordinate dual basis; column k is b^sharp(e_k^*)."""
    n = b.dim
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), c in b.terms.items():
        # (b_i ∧ b_j)(xi, eta) = xi_i eta_j - xi_j eta_i
        m[j][i] += c
        m[i][j] -= c
    return Matrix.from_rows(m) if n else Matrix((), 0)


def image(s: Matrix) -> Subspace:
    return column_space(s)


def zambon_closed_form(g: ChevalleyAlgebra, beta, sign: int = 1) -> Subspace:
    """C H_b + sum over a in Phi_{s_b} of g_{sign·a}."""
    beta = _require_long_positive(g, beta)
    vecs = [g.H_root(beta).coords]
    for a in reflection_inversions(g, beta):
        vecs.append(g.E(a if sign > 0 else negate(a)).coords)
    return Subspace.span(vecs, g.dim)


def zambon_subalgebra(g: ChevalleyAlgebra, beta, sign: int = 1, pi: Bivector | None = None) -> Subspace:
    """[E_{sign·beta}, pi]^sharp g^*."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    beta = _require_long_positive(g, beta)
    pi = standard_pi(g) if pi is None else pi
    e = g.E(beta if sign > 0 else negate(beta))
    return image(sharp(ad_bivector(e, pi)))


def orbit_pairs(g: ChevalleyAlgebra, beta) -> list[tuple[Root, Root]]:
    """Orbits of -s_beta on Phi_{s_beta} minus beta."""
    rs = g.root_system
    beta = _require_long_positive(g, beta)
    rest = [a for a in reflection_inversions(g, beta) if a != beta]
    seen, out = set(), []
    for a in rest:
        if a in seen:
            continue
        b = negate(rs.reflect(beta, a))
        orbit = (a, b) if a != b else (a,)
        seen.update(orbit)
        out.append(orbit)
    return out


@dataclass(frozen=True, eq=False)
class ZambonResult:
    beta: Root
    sign: int
    u: Subspace
    closed_form_match: bool
    candidate: LagrangianCandidate
    as_l_match: bool
    leading_coefficient: Fraction


def zambon_as_l(double: Double, W: WeylGroup, beta, sign: int = 1) -> ZambonResult:
    """(u_b)_delta + u_b^perp, compared with l_{C H_b, e, s_b} (sign +1) or l_{C H_b, s_b, e}."""
    g = double.algebra
    beta = _require_long_positive(g, beta)
    u = zambon_subalgebra(g, beta, sign)
    closed = zambon_closed_form(g, beta, sign)
    delta = double.subspace_delta(u)
    uperp = intersect(perp(delta, double.form), double.g_star)
    space = delta + uperp
    V = Subspace.span([g.root_system.coroot(beta)], g.rank)
    s, e = W.reflection(beta), W.identity
    ref = build_l(double, V, e, s) if sign > 0 else build_l(double, V, s, e)
    cand = LagrangianCandidate(double, space, Recipe("L", V, ref.recipe.u, ref.recipe.v))
    return ZambonResult(beta, sign, u, u == closed, cand, space == ref.space, g.lambda_(beta))


def zambon_json(res: ZambonResult, g: ChevalleyAlgebra) -> dict:
    rec = res.candidate.recipe.to_json()
    return {
        "type": str(g.root_system.cartan_type),
        "beta": list(res.beta),
        "sign": res.sign,
        "dim": res.u.dim,
        "basis": [[str(x) for x in b] for b in res.u.basis],
        "closed_form_match": res.closed_form_match,
        "as_l": rec,
        "as_l_match": res.as_l_match,
        "coisotropic": res.candidate.coisotropic,
        "leading_coefficient": str(res.leading_coefficient),
    }
