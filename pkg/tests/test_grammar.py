import pytest

from gammagrammar import grammar
from gammagrammar.grammar import (TRANSFORMS, derive, derive_alternating, derive_n, parse_rules,
                                  preset, verify_grammar_transform)
from gammagrammar.polycore import X

x, y, z = X("x"), X("y"), X("z")


def test_stirling_second_derivative():
    g = preset("stirling")
    assert derive(g, x) == x * y * z
    assert derive_n(g, x, 2) == x * y ** 2 * z ** 2 + x ** 2 * y * z ** 2 + x ** 2 * y ** 2 * z


def test_steps_zero_echoes_start():
    assert derive_n(preset("typeB"), x + 3, 0) == x + 3


def test_alternating_jacobi_round():
    gs = [preset("jacobi-1"), preset("jacobi-2")]
    assert derive_alternating(gs, x, 1) == x * y ** 2 * z + x ** 2 * y * z


def test_letters_without_rules_are_constants():
    g = grammar.grammar({"x": "x*y"})
    assert derive(g, 7 * z) == 0
    assert derive(g, x * z) == x * y * z


def test_iterates_consistent():
    g = preset("eulerian")
    its = grammar.derive_iterates(g, x, 4)
    assert its[0] == x and all(derive(g, a) == b for a, b in zip(its, its[1:]))


def test_eulerian_grammar_generates_eulerian_polynomials():
    # D^n(x) = sum over S_n of x^(des+1) y^(asc+1) for x -> xy, y -> xy
    p = derive_n(preset("eulerian"), x, 4).substitute({"y": 1})
    assert p == x * (1 + 11 * x + 11 * x ** 2 + x ** 3)


def test_unknown_preset():
    with pytest.raises(grammar.UnknownGrammar):
        preset("no-such-grammar")


def test_rules_file_roundtrip(tmp_path):
    path = tmp_path / "g.rules"
    path.write_text("# demo\nx -> x*y\ny -> x*y  # same\n")
    g = grammar.load_rules(path)
    assert derive(g, x) == x * y
    assert parse_rules(grammar.format_rules(g)).rules == g.rules


def test_rules_errors():
    with pytest.raises(ValueError):
        parse_rules("x = y")
    with pytest.raises(ValueError):
        parse_rules("x -> y\nx -> z")


@pytest.mark.parametrize("t", TRANSFORMS, ids=lambda t: t.name)
def test_transform_verifies(t):
    assert all(res.ok for _, _, res in grammar.check_transform(t))


@pytest.mark.parametrize("t", TRANSFORMS, ids=lambda t: t.name)
def test_transform_commutes(t):
    ok, *_ = grammar.transform_commutes(t, 8)
    assert ok


def test_wrong_transform_is_rejected():
    res = verify_grammar_transform(preset("stirling"), {"w": "x", "u": "y*z", "v": "y+z"},
                                   grammar.grammar({"w": "w*u", "u": "w*u*v", "v": "w*u"}))
    assert not res.ok and res.variable == "v"
    assert res.lhs == 2 * x * y * z and res.rhs == x * y * z


def test_intro_grammar_gives_stirling_numbers_of_second_kind():
    p = derive_n(preset("intro"), x, 4)
    assert p == x * (y + 7 * y ** 2 + 6 * y ** 3 + y ** 4)
