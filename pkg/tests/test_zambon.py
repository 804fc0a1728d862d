from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from liebialg.bialgebra import Double, is_subalgebra_of_g
from liebialg.chevalley import build_algebra
from liebialg.linalg import Subspace
from liebialg.rootsys import build_root_system, negate
from liebialg.weyl import WeylGroup
from liebialg.zambon import (Bivector, ShortRootError, ad_bivector, ebeta_pi_closed_form, image,
                             orbit_pairs, reflection_inversions, sharp, standard_pi, wedge,
                             zambon_as_l, zambon_closed_form, zambon_subalgebra)


@lru_cache(maxsize=None)
def alg(name):
    return build_algebra(build_root_system(name))


def test_bivector_canonical_keys():
    with pytest.raises(ValueError):
        Bivector(3, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        Bivector(3, {(0, 1): Fraction(0)})
    g = alg("A1")
    x, y = g.E((1,)), g.E((-1,))
    assert wedge(x, y) == -1 * wedge(y, x)
    assert wedge(x, x).is_zero()
    assert (wedge(x, y) - wedge(x, y)).is_zero()


def test_standard_pi_examples():
    pi = standard_pi(alg("A1"))
    assert pi.terms == {(1, 2): Fraction(1, 4)}
    pi = standard_pi(alg("A2"))
    assert len(pi.terms) == 3 and len(set(pi.terms.values())) == 1
    pi = standard_pi(alg("B2"))
    assert len(pi.terms) == 4 and len(set(pi.terms.values())) == 2


def test_a1_adjoint_action():
    g = alg("A1")
    e, h = g.E((1,)), g.H(0)
    assert ad_bivector(e, standard_pi(g)) == Fraction(1, 4) * wedge(e, h)
    assert ad_bivector(e, Bivector(g.dim)).is_zero()
    assert zambon_subalgebra(g, (1,)) == Subspace.span([h.coords, e.coords], g.dim)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C3", "G2", "B3"])
def test_ad_matches_closed_form_term_by_term(name):
    g = alg(name)
    pi = standard_pi(g)
    for beta in g.root_system.long_positive_roots:
        assert ad_bivector(g.E(beta), pi) == ebeta_pi_closed_form(g, beta)
        unit = ebeta_pi_closed_form(g, beta, leading="unit")
        assert image(sharp(unit)) == zambon_subalgebra(g, beta)


def test_a2_theta():
    g = alg("A2")
    theta = g.root_system.highest_root
    u = zambon_subalgebra(g, theta)
    assert u.dim == 4
    assert u == Subspace.span([g.H_root(theta).coords] + [g.E(a).coords for a in
                              [(1, 0), (0, 1), (1, 1)]], g.dim)
    assert orbit_pairs(g, theta) == [((1, 0), (0, 1))]


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "C3", "B3"])
def test_orbits_pair_up(name):
    g = alg(name)
    rs = g.root_system
    for beta in rs.long_positive_roots:
        inv = reflection_inversions(g, beta)
        assert len(inv) % 2 == 1
        for orbit in orbit_pairs(g, beta):
            assert len(orbit) == 2
            a, b = orbit
            assert tuple(x + y for x, y in zip(a, b)) == beta


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C3", "G2"])
def test_zambon_equivalence(name):
    g = alg(name)
    d, W = Double(g, check=False), WeylGroup(g.root_system)
    for beta in g.root_system.long_positive_roots:
        for sign in (1, -1):
            res = zambon_as_l(d, W, beta, sign)
            assert res.closed_form_match and res.as_l_match
            assert res.candidate.coisotropic
            assert res.u.dim % 2 == 0
            assert res.u.dim == 1 + len(reflection_inversions(g, beta))
            assert is_subalgebra_of_g(g, res.u)


def test_short_roots_refused():
    g = alg("B2")
    with pytest.raises(ShortRootError, match="not a long root"):
        zambon_subalgebra(g, (0, 1))
    with pytest.raises(ShortRootError):
        zambon_closed_form(alg("G2"), (1, 0))


def test_negative_root_refused():
    with pytest.raises(ValueError):
        zambon_subalgebra(alg("A2"), (-1, 0))


@given(st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool))
def test_scale_independence(c):
    g = alg("B2")
    pi = standard_pi(g)
    for beta in g.root_system.long_positive_roots:
        for sign in (1, -1):
            assert zambon_subalgebra(g, beta, sign, pi=c * pi) == zambon_subalgebra(g, beta, sign)


def test_sharp_of_simple_wedge():
    g = alg("A2")
    x, y = g.E((1, 0)), g.H(1) + g.E((-1, -1))
    assert image(sharp(wedge(x, y))) == Subspace.span([x.coords, y.coords], g.dim)
    assert image(sharp(Bivector(g.dim))).dim == 0


def test_negative_sign_closed_form():
    g = alg("G2")
    for beta in g.root_system.long_positive_roots:
        u = zambon_subalgebra(g, beta, -1)
        for a in reflection_inversions(g, beta):
            assert u.contains(g.E(negate(a)).coords)
