import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from jacobi_modsym.arith import is_square
from jacobi_modsym.cusps import Cusp, INFINITY, gamma0_classes, gamma0_equivalent, parse_cusp
from jacobi_modsym.modsym import (
    CheckUnavailable,
    CuspidalityWarning,
    ModularSymbol,
    SymbolParseError,
    boundary_check_weight2,
    check_cuspidal,
    format_symbol,
    intersection,
    intersection_with_line,
    parse_symbol,
)
from jacobi_modsym.poly import HomPoly, Mat2, act
from jacobi_modsym.qf import BinaryQF
from oracles import gamma0_equivalent_by_search

ONE = HomPoly((1,))


def test_parse_table_symbol(symbols):
    s = symbols["w2m37"]
    assert (s.weight, s.level, s.sign) == (2, 37, -1)
    assert [(n, str(c)) for n, c, _ in s.terms] == [(1, "-1/23"), (-1, "-1/32"), (1, "-1/34"), (-1, "0/1")]
    s = symbols["w10m1"]
    assert s.terms[0][2] == HomPoly.monomial(16, 14)
    assert symbols["zero"].terms == ()


def test_parse_round_trip(symbols):
    for s in symbols.values():
        assert parse_symbol(format_symbol(s)) == s


def test_parse_paths_and_comments():
    s = parse_symbol("# comment\nk=2 m=11 eps=+1\n1 ; {0, 1/3} ; [1]  # trailing\n2 ; inf ; [1]\n")
    assert s.terms == ((1, Cusp.make(1, 3), ONE), (-1, Cusp.make(0), ONE), (2, INFINITY, ONE))


@pytest.mark.parametrize("text,kind", [
    ("k=2 m=37\n", "header"),
    ("k=2 m=37 eps=-1\n1 ; 0\n", "malformed"),
    ("k=2 m=37 eps=-1\n1 ; 0 ; [1,2]\n", "degree"),
    ("k=2 m=37 eps=-1\n1 ; 3/0 ; [1]\n", "infinite-denominator"),
    ("k=2 m=37 eps=-1\n1 ; 2/4 ; [1]\n", "not-coprime"),
])
def test_parse_errors(text, kind):
    with pytest.raises(SymbolParseError) as info:
        parse_symbol(text)
    assert info.value.kind == kind
    assert info.value.line >= 1


def test_intersection_examples():
    Q = BinaryQF(1, 0, -2)
    assert intersection_with_line(Q, INFINITY, Cusp.make(0), ONE) == 1
    assert intersection_with_line(Q, Cusp.make(0), INFINITY, ONE) == -1
    assert intersection_with_line(Q, Cusp.make(3), INFINITY, ONE) == 0
    sigma = ModularSymbol(2, 1, -1, ((1, Cusp.make(0), ONE),))
    assert intersection(Q, sigma) == 1
    assert intersection(BinaryQF(1, 0, -2), ModularSymbol(2, 1, -1, ((1, Cusp.make(5), ONE),))) == 0
    with pytest.raises(ValueError):
        intersection(BinaryQF(1, 0, -1), sigma)


def test_intersection_translation_instance():
    A = Mat2(1, 1, 0, 1)
    Q = BinaryQF(1, 1, -3)
    sigma = ModularSymbol(2, 1, -1, ((1, Cusp.make(0), ONE), (2, Cusp.make(1, 2), ONE)))
    assert intersection(Q.act(A), sigma.transform(A)) == intersection(Q, sigma)


cusp_st = st.builds(Cusp.make, st.integers(-9, 9), st.integers(0, 9)).filter(lambda c: c is not None)
UNIMODULAR = [Mat2(a, b, c, d) for a in range(-5, 6) for b in range(-5, 6) for c in range(-5, 6)
              for d in range(-5, 6) if a * d - b * c in (1, -1)]


def _safe_cusp(p, q):
    if p == 0 and q == 0:
        return INFINITY
    return Cusp.make(p, q)


@st.composite
def symbols_st(draw, k):
    w = 2 * k - 4
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        c = _safe_cusp(draw(st.integers(-9, 9)), draw(st.integers(0, 9)))
        P = HomPoly(tuple(draw(st.lists(st.integers(-4, 4), min_size=w + 1, max_size=w + 1))))
        terms.append((draw(st.integers(-3, 3)), c, P))
    return ModularSymbol(k, 1, -1, tuple(terms))


@st.composite
def nonsquare_forms(draw):
    while True:
        a, b, c = (draw(st.integers(-12, 12)) for _ in range(3))
        D = b * b - 4 * a * c
        if D > 0 and not is_square(D) and a != 0:
            return BinaryQF(a, b, c)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.large_base_example, HealthCheck.too_slow])
@given(st.integers(2, 5), st.sampled_from(UNIMODULAR), nonsquare_forms(), st.data())
def test_intersection_gl2_invariance(k, A, Q, data):
    sigma = data.draw(symbols_st(k))
    assert intersection(Q.act(A), sigma.transform(A)) == intersection(Q, sigma)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.large_base_example, HealthCheck.too_slow])
@given(st.integers(2, 4), nonsquare_forms(), st.data())
def test_intersection_bilinear_and_termwise(k, Q, data):
    s1, s2 = data.draw(symbols_st(k)), data.draw(symbols_st(k))
    assert intersection(Q, s1 + s2) == intersection(Q, s1) + intersection(Q, s2)
    termwise = sum(n * intersection_with_line(Q, INFINITY, s, P) for n, s, P in s1.terms)
    assert intersection(Q, s1) == termwise


def test_boundary_check_examples(symbols):
    assert boundary_check_weight2(symbols["w2m37"]) is True
    assert boundary_check_weight2(symbols["w2m11"]) is True
    assert boundary_check_weight2(symbols["w2m15"]) is True
    assert boundary_check_weight2(symbols["w2m389"]) is True
    assert boundary_check_weight2(symbols["zero"]) is True
    assert boundary_check_weight2(ModularSymbol(2, 37, -1, ((1, Cusp.make(0), ONE),))) is False
    with pytest.raises(CheckUnavailable):
        boundary_check_weight2(symbols["w10m1"])
    with pytest.warns(CuspidalityWarning):
        assert check_cuspidal(symbols["w10m1"]) is None


@pytest.mark.parametrize("N", [1, 4, 6, 11, 12, 15, 25, 37])
def test_cusp_equivalence_against_search(N):
    cusps = sorted({Cusp.make(p, q) for q in range(0, 9) for p in range(-8, 9) if (p, q) != (0, 0)})
    rng = random.Random(N)
    sample = rng.sample(cusps, 18)
    for c1 in sample:
        for c2 in sample:
            assert gamma0_equivalent(c1, c2, N) == gamma0_equivalent_by_search(c1, c2, N), (c1, c2, N)


def test_cusp_class_count():
    # Gamma_0(N) has sum_{d | N} phi(gcd(d, N/d)) cusp classes
    cusps = [Cusp.make(p, q) for q in range(0, 40) for p in range(-40, 41) if (p, q) != (0, 0) and __import__("math").gcd(p, q) == 1]
    for N, count in [(1, 1), (11, 2), (12, 6), (15, 4), (25, 6), (37, 2)]:
        assert len(set(gamma0_classes(cusps, N))) == count


def test_parse_cusp():
    assert parse_cusp("inf") == INFINITY
    assert parse_cusp("-1/2") == Cusp.make(-2, 4)
    with pytest.raises(ValueError):
        parse_cusp("-2/4")
    assert str(Cusp.make(3, -6)) == "-1/2"
