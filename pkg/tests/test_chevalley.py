from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from liebialg.chevalley import AlgebraMismatch, extraspecial_pairs, jacobi_failures
from liebialg.rootsys import RootError, height, negate


def sl_matrix_units(n):
    """Root of sl(n+1) for the matrix unit E_ij (i != j), in simple-root coordinates."""
    out = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i < j:
                out[tuple(int(i <= k < j) for k in range(n))] = (i, j)
            elif i > j:
                out[tuple(-int(j <= k < i) for k in range(n))] = (i, j)
    return out


def unit(n, i, j):
    m = sympy.zeros(n + 1, n + 1)
    m[i, j] = 1
    return m


@pytest.mark.parametrize("name,n", [("A1", 1), ("A2", 2), ("A3", 3), ("A4", 4)])
def test_isomorphic_to_matrix_sl(algebras, name, n):
    g = algebras(name)
    rs = g.root_system
    where = sl_matrix_units(n)
    assert set(where) == set(rs.roots)
    # E_a -> eps_a E_ij, E_-a -> eps_a E_ji, H_k -> E_kk - E_{k+1,k+1}
    eps = {}
    for a in sorted(rs.positive_roots, key=height):
        if height(a) == 1:
            eps[a] = 1
            continue
        b = next(b for b in rs.simple_roots if rs.is_root(tuple(x - y for x, y in zip(a, b))))
        c = tuple(x - y for x, y in zip(a, b))
        (i, j), (k, l) = where[b], where[c]
        comm = unit(n, i, j) * unit(n, k, l) - unit(n, k, l) * unit(n, i, j)
        p, q = where[a]
        eps[a] = eps[b] * eps[c] * int(comm[p, q]) * g.structure_constant(b, c)
    for a in list(eps):
        eps[negate(a)] = eps[a]

    def image(idx):
        if idx < n:
            return unit(n, idx, idx) - unit(n, idx + 1, idx + 1)
        a = rs.roots[idx - n]
        return eps[a] * unit(n, *where[a])

    def phi(sparse):
        m = sympy.zeros(n + 1, n + 1)
        for k, c in sparse.items():
            m += sympy.Rational(c.numerator, c.denominator) * image(k)
        return m

    for x in range(g.dim):
        for y in range(g.dim):
            lhs = phi(g.bracket_sparse({x: Fraction(1)}, {y: Fraction(1)}))
            X, Y = image(x), image(y)
            assert lhs == X * Y - Y * X


@pytest.mark.parametrize("n", [1, 2, 3])
def test_killing_form_of_sl_is_2n_trace(algebras, n):
    # K(X, Y) = 2(n+1) tr(XY) on sl(n+1)
    g = algebras(f"A{n}")
    rs = g.root_system
    for a in rs.roots:
        assert g.killing_form(g.E(a), g.E(negate(a))) == 2 * (n + 1)
    for i in range(n):
        assert g.killing[i, i] == 4 * (n + 1)
        if i + 1 < n:
            assert g.killing[i, i + 1] == -2 * (n + 1)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "C3", "B3", "D4"])
def test_jacobi(algebras, name):
    count, bad = jacobi_failures(algebras(name))
    assert bad == []
    n = algebras(name).dim
    assert count == n * (n - 1) * (n - 2) // 6


@pytest.mark.parametrize("name,values", [("A2", {1}), ("B2", {1, 2}), ("C3", {1, 2}), ("G2", {1, 2, 3})])
def test_structure_constant_values(algebras, name, values):
    g = algebras(name)
    assert {abs(v) for v in g.N.values()} == values


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "C3"])
def test_extraspecial_pairs_are_positive(algebras, name):
    g = algebras(name)
    rs = g.root_system
    for xi, (a, b) in extraspecial_pairs(rs).items():
        p, _ = rs.root_string(rs.roots[b], rs.roots[a])
        assert g.N[(a, b)] == p + 1
        assert a <= b


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "C3", "F4"])
def test_lambda_is_half_squared_length(algebras, name):
    g = algebras(name)
    rs = g.root_system
    for a in rs.roots:
        assert g.lambda_(a) == rs.form(a, a) / 2


def test_full_trace_agrees_with_weight_zero_table(algebras):
    g = algebras("B2")
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.killing_form(g.basis_element(i), g.basis_element(j)) == g.killing[i, j]


def test_inner_form_is_dual_of_killing_on_h(algebras):
    g = algebras("G2")
    rs = g.root_system
    # (a, b) = K(t_a, t_b) with t_a the Killing dual of a; equivalently (a, b) = a(t_b)
    kinv = sympy.Matrix(g.killing_h.tolist()).inv()
    A = sympy.Matrix(rs.cartan_matrix)
    for a in rs.simple_roots:
        for b in rs.simple_roots:
            va, vb = sympy.Matrix([a]) * A, sympy.Matrix([b]) * A
            assert (va * kinv * vb.T)[0, 0] == rs.form(a, b)


def test_structure_constant_errors(algebras):
    g = algebras("A2")
    with pytest.raises(RootError):
        g.structure_constant((1, 0), (-1, 0))
    with pytest.raises(RootError):
        g.structure_constant((1, 0), (1, 0))
    assert g.structure_constant((1, 0), (1, 1)) == 0


def test_mixing_algebras_fails(algebras):
    a, b = algebras("A2"), algebras("B2")
    with pytest.raises(AlgebraMismatch):
        a.E((1, 0)) + b.E((1, 0))


def elements(g):
    return st.lists(st.integers(-3, 3), min_size=g.dim, max_size=g.dim).map(g.element)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_killing_invariance(algebras, name):
    g = algebras(name)

    @given(elements(g), elements(g), elements(g))
    def check(x, y, z):
        assert g.killing_form(g.bracket(x, y), z) == g.killing_form(x, g.bracket(y, z))
        assert g.bracket(x, y) == -g.bracket(y, x)
        assert g.bracket(x + y, z) == g.bracket(x, z) + g.bracket(y, z)

    check()


def test_ad_matrix_is_bracket(algebras):
    g = algebras("B2")
    x = g.E((1, 1)) + 3 * g.H(0)
    m = g.ad_matrix(x)
    for k in range(g.dim):
        y = g.basis_element(k)
        assert g.element(m.apply(y.coords)) == g.bracket(x, y)
