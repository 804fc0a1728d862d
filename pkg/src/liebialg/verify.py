"""Exhaustive verification suites over one Cartan type.

Every suite returns a :class:`SuiteResult` with the number of individual
checks performed and how many failed.  Suites never raise on a failed
check; they count it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .bialgebra import (Double, build_l, build_s, build_z, closed_form_m, closed_form_m_perp,
                        extract_coisotropic, is_subalgebra_of_g, rank_pi, rank_pi_general,
                        v_battery)
from .chevalley import ChevalleyAlgebra, build_algebra, jacobi_failures
from .linalg import kernel
from .rootsys import RootSystem, build_root_system, negate
from .weyl import DEFAULT_CAP, WeylGroup
from .zambon import (ad_bivector, ebeta_pi_closed_form, orbit_pairs, sharp, image,
                     standard_pi, zambon_as_l)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    notes: dict = field(default_factory=dict)
    examples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, what=None) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if what is not None and len(self.examples) < 5:
                self.examples.append(str(what))

    def to_json(self) -> dict:
        return {"name": self.name, "checks": self.checks, "failures": self.failures,
                "passed": self.passed, "notes": self.notes, "examples": self.examples}


class Context:
    """Lazily built objects shared by the suites for one type."""

    def __init__(self, cartan_type: str, seed: int = 0, weyl_cap: int = DEFAULT_CAP):
        self.cartan_type = cartan_type
        self.seed = seed
        self.weyl_cap = weyl_cap

    @cached_property
    def rs(self) -> RootSystem:
        return build_root_system(self.cartan_type)

    @cached_property
    def g(self) -> ChevalleyAlgebra:
        return build_algebra(self.rs)

    @cached_property
    def W(self) -> WeylGroup:
        w = WeylGroup(self.rs, self.weyl_cap)
        w.elements
        return w

    @cached_property
    def double(self) -> Double:
        return Double(self.g, check=False)

    @cached_property
    def battery(self):
        return v_battery(self.double, self.seed)


def suite_jacobi(ctx: Context) -> SuiteResult:
    res = SuiteResult("jacobi")
    count, bad = jacobi_failures(ctx.g)
    res.checks, res.failures = count, len(bad)
    res.examples = [str(t) for t in bad[:5]]
    res.notes["dim"] = ctx.g.dim
    return res


def suite_structure_constants(ctx: Context) -> SuiteResult:
    res = SuiteResult("structure_constants")
    rs, g = ctx.rs, ctx.g
    values = set()
    for a in rs.roots:
        for b in rs.roots:
            if a == b or a == negate(b):
                continue
            c = g.structure_constant(a, b)
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s):
                p, _ = rs.root_string(b, a)
                values.add(abs(c))
                res.check(abs(c) == p + 1, ("|c| != p+1", a, b))
            else:
                res.check(c == 0, ("c != 0 off the root set", a, b))
            res.check(c == -g.structure_constant(b, a), ("antisymmetry", a, b))
            res.check(g.structure_constant(negate(a), negate(b)) == -c, ("chevalley sign", a, b))
    for beta in rs.roots:
        if not rs.is_long(beta):
            continue
        for a in rs.roots:
            if a == beta or a == negate(beta):
                continue
            s = tuple(x + y for x, y in zip(a, beta))
            if rs.is_root(s):
                c1 = g.structure_constant(beta, a)
                c2 = g.structure_constant(beta, negate(s))
                res.check(c1 == -c2, ("c_{b,a} = -c_{b,-a-b}", beta, a))
                res.check(c1 * c2 == -1, ("c_{b,a} c_{b,-a-b} = -1", beta, a))
            d = tuple(x - y for x, y in zip(a, beta))
            if rs.is_root(d):
                res.check(g.structure_constant(beta, negate(a)) == -g.structure_constant(beta, d),
                          ("c_{b,-a} = -c_{b,a-b}", beta, a))
    res.notes["abs_values"] = sorted(values)
    return res


def suite_lambda(ctx: Context) -> SuiteResult:
    res = SuiteResult("lambda")
    rs, g = ctx.rs, ctx.g
    for a in rs.roots:
        res.check(g.lambda_(a) == rs.form(a, a) / 2, ("lambda != (a,a)/2", a))
        res.check(g.lambda_(a) == g.lambda_(negate(a)), ("lambda_a != lambda_-a", a))
    for beta in rs.roots:
        if rs.is_long(beta):
            for a in rs.positive_roots:
                res.check(g.lambda_(a) == g.lambda_(rs.reflect(beta, a)),
                          ("lambda not s_beta invariant", beta, a))
    k = ctx.g.killing
    res.check(k.is_symmetric(), "killing asymmetric")
    res.check(kernel(k).dim == 0, "killing degenerate on g")
    res.check(kernel(g.killing_h).dim == 0, "killing degenerate on h")
    return res


def suite_long_roots(ctx: Context) -> SuiteResult:
    res = SuiteResult("long_roots")
    rs = ctx.rs
    for beta in rs.roots:
        res.check(rs.no_three_string(beta) == rs.is_long(beta), ("string criterion", beta))
    for a in rs.roots:
        for b in rs.roots:
            k = rs.pairing(a, b)
            res.check(k.denominator == 1 and abs(k) <= 3, ("pairing", a, b))
            res.check(rs.is_root(rs.reflect(a, b)), ("reflection closure", a, b))
    res.notes["long"] = sum(rs.is_long(r) for r in rs.roots)
    res.notes["short"] = sum(not rs.is_long(r) for r in rs.roots)
    return res


def suite_manin(ctx: Context) -> SuiteResult:
    res = SuiteResult("manin")
    d = ctx.double
    for name, s in (("g_delta", d.g_delta), ("g_star", d.g_star)):
        res.check(s.dim == d.n, (name, "dim"))
        res.check(d.is_isotropic(s), (name, "isotropic"))
        res.check(d.is_subalgebra(s), (name, "subalgebra"))
    res.check((d.g_delta & d.g_star).dim == 0, "g_delta ∩ g_star != 0")
    res.check((d.g_delta + d.g_star).dim == d.dim, "g_delta + g_star != d")
    res.check(kernel(d.form).dim == 0, "form degenerate")
    return res


def suite_weyl(ctx: Context) -> SuiteResult:
    res = SuiteResult("weyl_equivalences")
    W, rs = ctx.W, ctx.rs
    els = W.elements
    w0 = W.long_element
    full = (1 << rs.npos) - 1
    masks = [W.inversion_mask(w) for w in els]
    lengths = [len(w.word) for w in els]
    for w, m, ln in zip(els, masks, lengths):
        res.check(bin(m).count("1") == ln == len(W.from_perm(w.perm).word), ("length", w))
    res.check(W.is_involution(w0) and W.inversion_mask(w0) == full, "w0")
    res.check(sum(ln == rs.npos for ln in lengths) == 1, "unique longest element")
    inv = [W.inverse(w) for w in els]
    disjoint_count = 0
    for i, u in enumerate(els):
        mu = masks[i]
        for j, v in enumerate(els):
            mv = masks[j]
            c1 = not (mu & mv)
            c2 = (mu & ~mv & full) == mu
            c3 = (mv & ~mu & full) == mv
            uv = W.canonical(tuple(inv[i].perm[k] for k in v.perm))
            c4 = lengths[i] + lengths[j] == len(uv.word)
            res.check(c1 == c2 == c3 == c4, ("four conditions", u, v))
            vw0 = W.canonical(tuple(v.perm[k] for k in w0.perm))
            res.check(W.weak_leq(u, vw0) == c1, ("weak order criterion", u, v))
            disjoint_count += c1
    res.notes["order"] = len(els)
    res.notes["disjoint_pairs"] = disjoint_count
    res.notes["pairs"] = len(els) ** 2
    return res


def suite_rank_pi(ctx: Context) -> SuiteResult:
    res = SuiteResult("rank_pi")
    W = ctx.W
    for u in W.elements:
        for v in W.elements:
            r = rank_pi(W, u, v)
            res.check(r >= 0 and r % 2 == 0, ("rank parity", u, v))
            res.check((r == 0) == W.disjoint_inversions(u, v), ("zero iff disjoint", u, v))
            w = W.multiply(W.inverse(u), v)
            res.check(rank_pi_general(W, w, u, v) == r, ("general formula", u, v))
    return res


def suite_coisotropy(ctx: Context) -> SuiteResult:
    res = SuiteResult("coisotropy")
    W, d, g = ctx.W, ctx.double, ctx.g
    coiso = 0
    for u in W.elements:
        for v in W.elements:
            disjoint = W.disjoint_inversions(u, v)
            verdicts = set()
            for label, V in ctx.battery:
                c = build_l(d, V, u, v)
                res.check(c.lagrangian, ("not lagrangian", label, u, v))
                if not c.lagrangian:
                    continue
                verdicts.add(c.coisotropic)
                res.check(c.coisotropic == disjoint, ("verdict", label, u, v))
                if c.coisotropic and disjoint:
                    coiso += 1
                    m, mp = extract_coisotropic(c)
                    res.check(m == closed_form_m(d, W, V, u, v), ("m closed form", label, u, v))
                    res.check(mp == closed_form_m_perp(d, W, V, u, v),
                              ("m_perp closed form", label, u, v))
                    res.check(is_subalgebra_of_g(g, m), ("m not a subalgebra", label, u, v))
                    res.check(d.is_subalgebra(mp), ("m_perp not a subalgebra", label, u, v))
                    res.check(mp == d.annihilator(m), ("m_perp != annihilator", label, u, v))
            res.check(len(verdicts) <= 1, ("verdict depends on V", u, v))
    res.notes["battery"] = [label for label, _ in ctx.battery]
    res.notes["candidates"] = len(W.elements) ** 2 * len(ctx.battery)
    res.notes["coisotropic_candidates"] = coiso
    return res


def suite_z_criterion(ctx: Context) -> SuiteResult:
    res = SuiteResult("z_criterion")
    W, d = ctx.W, ctx.double
    example = None
    for u in W.elements:
        for v in W.elements:
            c = build_z(d, W, u, v)
            res.check(c.lagrangian, ("z not lagrangian", u, v))
            if not c.lagrangian:
                continue
            x = W.multiply(W.inverse(v), u)
            expected = W.disjoint_inversions(u, v) and W.is_involution(x)
            res.check(c.coisotropic == expected, ("z criterion", u, v))
        if example is None and not W.is_involution(u) and rank_pi(W, u, W.identity) == 0:
            if not build_z(d, W, u, W.identity).coisotropic:
                example = u.name
    res.notes["converse_counterexample"] = example
    return res


def suite_s_criterion(ctx: Context) -> SuiteResult:
    res = SuiteResult("s_criterion")
    W, d = ctx.W, ctx.double
    for u in W.elements:
        for v in W.elements:
            leq = W.weak_leq(u, v)
            for label, V in ctx.battery:
                c = build_s(d, W, V, u, v)
                res.check(c.lagrangian and c.coisotropic == leq, ("s criterion", label, u, v))
    return res


def suite_zambon(ctx: Context) -> SuiteResult:
    res = SuiteResult("zambon")
    g, d, rs = ctx.g, ctx.double, ctx.rs
    W = WeylGroup(rs, ctx.weyl_cap)
    pi = standard_pi(g)
    leads = {}
    for beta in rs.long_positive_roots:
        adj = ad_bivector(g.E(beta), pi)
        closed = ebeta_pi_closed_form(g, beta, leading="lambda")
        res.check(adj == closed, ("[E_b, pi] closed form", beta))
        unit = ebeta_pi_closed_form(g, beta, leading="unit")
        res.check(image(sharp(unit)) == image(sharp(adj)), ("unit-lead image", beta))
        leads[",".join(map(str, beta))] = str(g.lambda_(beta))
        pairs = orbit_pairs(g, beta)
        res.check(all(len(p) == 2 for p in pairs), ("orbit sizes", beta))
        for sign in (1, -1):
            z = zambon_as_l(d, W, beta, sign)
            res.check(z.closed_form_match, ("closed form", beta, sign))
            res.check(z.as_l_match, ("as l_{C H_b, ...}", beta, sign))
            res.check(z.candidate.lagrangian and z.candidate.coisotropic, ("coisotropic", beta, sign))
            res.check(z.u.dim % 2 == 0, ("odd dimension", beta, sign))
            res.check(is_subalgebra_of_g(g, z.u), ("not a subalgebra", beta, sign))
    res.notes["long_positive_roots"] = len(rs.long_positive_roots)
    res.notes["leading_coefficient"] = leads
    return res


SUITES = [
    suite_jacobi,
    suite_structure_constants,
    suite_lambda,
    suite_long_roots,
    suite_manin,
    suite_weyl,
    suite_rank_pi,
    suite_coisotropy,
    suite_z_criterion,
    suite_s_criterion,
    suite_zambon,
]


def run_all(cartan_type: str, seed: int = 0, weyl_cap: int = DEFAULT_CAP) -> list[SuiteResult]:
    ctx = Context(cartan_type, seed, weyl_cap)
    return [suite(ctx) for suite in SUITES]
