"""Seeded property suites, 1000 examples each."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gammagrammar.gammalib import GammaVector, gamma_expand, gamma_expand_xy, reconstruct_xy
from gammagrammar.grammar import derive, grammar
from gammagrammar.polycore import Poly, format_poly, poly_parse

PROPS = settings(max_examples=1000, derandomize=True, deadline=None,
                 suppress_health_check=[HealthCheck.too_slow])

VARS = ("x", "y", "z")
monomials = st.tuples(*(st.integers(-2, 3) for _ in VARS)).map(
    lambda es: tuple((v, e) for v, e in zip(VARS, es) if e))
polys = st.dictionaries(monomials, st.integers(-10 ** 6, 10 ** 6), max_size=5).map(Poly)
big_polys = st.dictionaries(monomials, st.integers(-10 ** 40, 10 ** 40), max_size=6).map(Poly)
grammars = st.fixed_dictionaries({v: st.dictionaries(monomials, st.integers(-5, 5), max_size=3)
                                  for v in VARS}).map(lambda r: grammar(
                                      {k: Poly(t) for k, t in r.items()}))


@PROPS
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()
    assert a * 1 == a and a + 0 == a


@PROPS
@given(grammars, polys, polys)
def test_leibniz(g, a, b):
    assert derive(g, a * b) == derive(g, a) * b + a * derive(g, b)
    assert derive(g, a + b) == derive(g, a) + derive(g, b)
    assert derive(g, 5) == Poly()


@PROPS
@given(big_polys)
def test_parse_format_roundtrip(p):
    text = format_poly(p)
    assert poly_parse(text) == p
    assert format_poly(poly_parse(text)) == text


@PROPS
@given(st.integers(0, 10).flatmap(lambda d: st.tuples(
    st.just(d), st.lists(st.integers(-100, 100), min_size=d // 2 + 1, max_size=d // 2 + 1))))
def test_gamma_reconstruction(data):
    d, gammas = data
    gv = GammaVector(d, tuple(gammas))
    assert gamma_expand(gv.reconstruct(), d, "x") == gv
    pxy = reconstruct_xy(gammas, d)
    if pxy != Poly():
        assert gamma_expand_xy(pxy, d) == gammas
