from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st

from afnorm.abelian import (
    abelianize,
    characters,
    class_of_word,
    determinant,
    matmul,
    parse_character,
    relation_matrix,
    smith_normal_form,
)
from afnorm.cyclotomic import CyclotomicField, cyclotomic_polynomial, euler_phi
from afnorm.presentation import Presentation, parse_presentation

from conftest import load, presentation_fixtures, words

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _determinantal_divisors(M):
    """d_k = gcd of all k x k minors, by brute force."""
    rows, cols = len(M), len(M[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, determinant([[M[i][j] for j in cs] for i in rs]))
        out.append(g)
    return out


def _check_snf(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            assert i == j or v == 0
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert diag[:len(nz)] == nz
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    return diag


def test_snf_examples():
    assert _check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert _check_snf([[4, 9]]) == [1]
    assert _check_snf([[0, 0], [0, 0]]) == [0, 0]


@given(matrices)
def test_snf_matches_determinantal_divisors(M):
    diag = _check_snf(M)
    divisors = _determinantal_divisors(M)
    prod = 1
    for d, dk in zip(diag, divisors):
        prod *= d
        assert prod == dk


def test_abelianize_examples():
    a = abelianize(load("torus_2_3"))
    assert (a.free_rank, a.invariant_factors) == (1, ())
    a = abelianize(load("commutator_1_1_2"))
    assert (a.free_rank, a.invariant_factors) == (1, (2,))
    a = abelianize(parse_presentation("< x | >"))
    assert (a.free_rank, a.invariant_factors) == (1, ())


def test_torus_knot_generator_coordinates():
    a = abelianize(load("torus_2_3"))
    fx = class_of_word(a, load("torus_2_3").word("x"))[1][0]
    fy = class_of_word(a, load("torus_2_3").word("y"))[1][0]
    # relator x^2 y^3 forces 2 fx + 3 fy = 0, with fx, fy generating Z
    assert (abs(fx), abs(fy)) == (3, 2)
    assert 2 * fx + 3 * fy == 0


def test_character_counts():
    a = abelianize(parse_presentation("< x, y | x^2, y^4 >"))
    chars = characters(a)
    assert len(chars) == 8 and chars[0].is_trivial
    assert len(characters(abelianize(load("torus_2_3")))) == 1
    assert len(characters(abelianize(load("commutator_1_1_2")))) == 2
    assert parse_character(a, "0,2").exponents == (0, 2)
    with pytest.raises(ValueError):
        parse_character(a, "2,0")


@pytest.mark.parametrize("name", presentation_fixtures())
def test_relators_map_to_zero(name):
    p = load(name)
    a = abelianize(p)
    zero = ((0,) * len(a.invariant_factors), (0,) * a.free_rank)
    for r in p.relators:
        assert class_of_word(a, r) == zero


presentations = st.lists(words(3, 5), min_size=0, max_size=3).map(
    lambda rels: Presentation.from_names(["x", "y", "z"], rels)
)


@given(presentations, words(3, 8), words(3, 8))
def test_class_of_word_is_additive(p, u, v):
    a = abelianize(p)
    tu, fu = class_of_word(a, u)
    tv, fv = class_of_word(a, v)
    tw, fw = class_of_word(a, u * v)
    assert fw == tuple(x + y for x, y in zip(fu, fv))
    assert tw == tuple((x + y) % d for x, y, d in zip(tu, tv, a.invariant_factors))
    assert a.pr(u * v) == fw


@given(presentations)
def test_structure_matches_snf(p):
    a = abelianize(p)
    M = relation_matrix(p)
    if M:
        diag = [d for d in _check_snf(M) if d]
    else:
        diag = []
    assert a.invariant_factors == tuple(d for d in diag if d > 1)
    assert a.free_rank == 3 - len(diag)
    for r in p.relators:
        assert class_of_word(a, r)[1] == (0,) * a.free_rank


@given(presentations, words(3, 6), words(3, 6))
def test_characters_are_multiplicative(p, u, v):
    a = abelianize(p)
    K = a.field()
    tu, tv, tw = (class_of_word(a, w)[0] for w in (u, v, u * v))
    for sigma in characters(a):
        assert sigma.value(tw, K) == sigma.value(tu, K) * sigma.value(tv, K)


def test_cyclotomic_examples():
    K4 = CyclotomicField(4)
    assert K4.gen() * K4.gen() == -1
    K3 = CyclotomicField(3)
    z = K3.gen()
    assert 1 + z + z * z == 0
    assert CyclotomicField(2).gen() == -1


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_oracle(n):
    import sympy

    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == expected
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


@given(st.sampled_from([3, 4, 5, 6, 8, 12]), st.lists(st.integers(-5, 5), min_size=1, max_size=6),
       st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_cyclotomic_field_axioms(n, ca, cb):
    K = CyclotomicField(n)
    a, b = K.element(ca), K.element(cb)
    assert a * b == b * a
    assert (a + b) * b == a * b + b * b
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1
