from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from liebialg.rootsys import (CartanType, CartanTypeError, RootError, build_root_system, height,
                              negate)

# |Phi+|, number of long positive roots, highest root (Bourbaki labels)
CLASSICAL = {
    "A1": (1, 1, (1,)),
    "A2": (3, 3, (1, 1)),
    "A3": (6, 6, (1, 1, 1)),
    "B2": (4, 2, (1, 2)),
    "B3": (9, 6, (1, 2, 2)),
    "C3": (9, 3, (2, 2, 1)),
    "D4": (12, 12, (1, 2, 1, 1)),
    "G2": (6, 3, (3, 2)),
    "F4": (24, 12, (2, 3, 4, 2)),
    "E6": (36, 36, (1, 2, 2, 3, 2, 1)),
    "E7": (63, 63, (2, 2, 3, 4, 3, 2, 1)),
}

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "B2xA1"]


@lru_cache(maxsize=None)
def rs_of(name):
    return build_root_system(name)


@pytest.mark.parametrize("name", sorted(CLASSICAL))
def test_classical_counts(name):
    npos, nlong, top = CLASSICAL[name]
    rs = rs_of(name)
    assert rs.npos == npos
    assert len(rs.roots) == 2 * npos
    assert len(rs.long_positive_roots) == nlong
    assert rs.highest_root == top


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_b_and_c_families(n):
    assert rs_of(f"B{n}").npos == n * n
    if n > 2:
        assert rs_of(f"C{n}").npos == n * n
        assert len(rs_of(f"C{n}").long_positive_roots) == n
    assert len(rs_of(f"B{n}").long_positive_roots) == n * (n - 1)


def test_c2_is_an_alias_of_b2():
    assert CartanType.parse("C2") == CartanType.parse("B2")


@pytest.mark.parametrize("text", ["", "Z3", "A0", "B1", "D3", "E5", "G3", "F2", "A2x", "a2"])
def test_bad_types_rejected(text):
    with pytest.raises(CartanTypeError):
        build_root_system(text)


def test_order_and_negatives():
    rs = rs_of("B3")
    assert rs.simple_roots == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    hs = [height(r) for r in rs.positive_roots]
    assert hs == sorted(hs)
    for i, r in enumerate(rs.roots):
        assert rs.roots[rs.neg_index(i)] == negate(r)
        assert rs.is_positive(r) == (i < rs.npos)


def test_product_type_is_orthogonal():
    rs = rs_of("B2xA1")
    assert rs.rank == 3
    assert rs.npos == 5
    assert rs.form((1, 0, 0), (0, 0, 1)) == 0
    assert not rs.is_root((1, 0, 1))
    # long roots are measured inside each factor
    assert rs.is_long((0, 0, 1))
    assert not rs.is_long((0, 1, 0))


def test_unknown_root_raises():
    with pytest.raises(RootError):
        rs_of("A2").index((2, 0))


def test_long_root_examples():
    assert rs_of("A2").is_long((1, 1))
    assert not rs_of("B2").is_long((0, 1))
    assert rs_of("G2").is_long((3, 2))
    assert not rs_of("G2").is_long((1, 0))


def test_root_string_examples():
    b2 = rs_of("B2")
    short, long_ = (0, 1), (1, 0)
    assert b2.root_string(short, long_) == (0, 1)
    assert b2.root_string(long_, short) == (0, 2)
    g2 = rs_of("G2")
    assert g2.root_string((0, 1), (1, 0)) == (0, 3)
    with pytest.raises(RootError):
        g2.root_string((1, 0), (-1, 0))


def test_inner_form_of_a2_is_killing_dual():
    # sl3: Killing form 6 tr(XY); roots then have squared length 1/3
    rs = rs_of("A2")
    assert all(rs.form(r, r) == Fraction(1, 3) for r in rs.roots)


def root_pairs():
    return st.sampled_from(TYPES).flatmap(lambda t: st.tuples(
        st.just(t), st.sampled_from(rs_of(t).roots), st.sampled_from(rs_of(t).roots)))


@given(root_pairs())
def test_reflection_properties(data):
    t, a, b = data
    rs = rs_of(t)
    s = rs.reflect(b, a)
    assert rs.is_root(s)
    assert rs.reflect(b, s) == a
    assert rs.form(s, s) == rs.form(a, a)
    k = rs.pairing(a, b)
    assert k.denominator == 1 and abs(k) <= 3


@given(root_pairs())
def test_root_string_arithmetic(data):
    t, a, b = data
    rs = rs_of(t)
    if a == b or a == negate(b):
        return
    p, q = rs.root_string(a, b)
    assert p - q == rs.pairing(a, b)
    assert p + q + 1 <= 4
    for k in range(-p, q + 1):
        assert rs.is_root(tuple(x + k * y for x, y in zip(a, b)))


@given(st.sampled_from(TYPES).flatmap(lambda t: st.tuples(st.just(t), st.sampled_from(rs_of(t).roots))))
def test_long_iff_no_three_string(data):
    t, beta = data
    rs = rs_of(t)
    assert rs.no_three_string(beta) == rs.is_long(beta)
