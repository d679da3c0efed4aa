import itertools
from collections import Counter

import pytest

from gammagrammar import combinat
from gammagrammar.combinat import (BudgetExceeded, GenWord, UndefinedStatistic, UnsupportedFamily,
                                   distribution, parse_stats)
from gammagrammar.polycore import Poly, X

x, y, z = X("x"), X("y"), X("z")


# ---------------------------------------------------------------- oracles
# Written straight from the definitions, sharing nothing with the library.


def oracle_stirling(n):
    seen = set()
    for w in itertools.permutations([v for v in range(1, n + 1) for _ in (0, 1)]):
        if w in seen:
            continue
        seen.add(w)
        ok = all(min(w[w.index(v) + 1:len(w) - w[::-1].index(v) - 1], default=v + 1) > v
                 for v in range(1, n + 1))
        if ok:
            yield w


def oracle_stirling_E(n):
    counts = Counter()
    for w in oracle_stirling(n):
        s = (0,) + w + (0,)
        asc = sum(s[i] < s[i + 1] for i in range(len(s) - 1))
        des = sum(s[i] > s[i + 1] for i in range(len(s) - 1))
        plat = sum(s[i] == s[i + 1] for i in range(len(s) - 1))
        counts[(asc, des, plat)] += 1
    return Poly.from_counts(counts, ["x", "y", "z"])


def oracle_typeB(n):
    counts = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            w = [s * p for s, p in zip(signs, perm)]
            pi = lambda i: w[abs(i) - 1] if i > 0 else -w[abs(i) - 1]  # noqa: E731
            if any(pi(i) == i for i in range(1, n + 1)):
                continue
            wexc = sum(pi(abs(pi(i))) > pi(i) for i in range(1, n + 1))
            aexc = sum(pi(abs(pi(i))) < pi(i) for i in range(1, n + 1))
            single = sum(pi(i) == -i for i in range(1, n + 1))
            counts[(wexc, aexc, single)] += 1
    return Poly.from_counts(counts, ["x", "y", "z"])


# ---------------------------------------------------------------- tests


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stirling_against_oracle(n):
    assert combinat.C_poly(n) == oracle_stirling_E(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_typeB_derangements_against_oracle(n):
    assert combinat.E_poly(n) == oracle_typeB(n)


def test_family_sizes():
    assert [combinat.family_size("stirling", n) for n in range(1, 6)] == [1, 3, 15, 105, 945]
    assert combinat.family_size("jacobi", 4) == 246400
    assert sum(1 for _ in combinat.typeB_derangements(5)) == 2329


def test_small_examples():
    assert distribution("stirling", 1, parse_stats("asc:x,des:y,plat:z")).polynomial == x * y * z
    assert distribution("typeB-derangements", 3, [("wexc", "x")]).polynomial == \
        1 + 20 * x + 8 * x ** 2
    assert combinat.S_poly(1) == x * y * (x + y) * z


def test_word_parse_and_format():
    w = GenWord.parse("2447887332115665", "stirling")
    assert combinat.is_valid(w)
    assert GenWord.parse("b1 1 1", "jacobi").codes == (1, 2, 2)
    assert str(GenWord.parse("b2 b1 1 1", "jacobi")) == "b2 b1 1 1"
    assert not combinat.is_valid(GenWord.parse("1212", "stirling"))


def test_generate_yields_valid_words():
    for w in combinat.generate("legendre", 2):
        assert combinat.is_valid(w)


def test_budget_guard(monkeypatch):
    with pytest.raises(BudgetExceeded) as info:
        distribution("stirling", 7, [("des", "x")])
    assert info.value.budget == 6
    monkeypatch.setenv(combinat.BUDGET_ENV, "2")
    with pytest.raises(BudgetExceeded):
        distribution("stirling", 3, [("des", "x")])
    assert distribution("stirling", 3, [("des", "x")], budget=3).cardinality() == 15


def test_errors():
    with pytest.raises(UnsupportedFamily):
        distribution("trees", 2, [("des", "x")])
    with pytest.raises(UndefinedStatistic):
        distribution("stirling", 2, [("wexc", "x")])
    with pytest.raises(ValueError):
        parse_stats("asc")


def test_shared_variable_merges_statistics():
    # asc + des + plat = 2n + 1 on Stirling words
    p = distribution("stirling", 3, parse_stats("asc:t,des:t,plat:t")).polynomial
    assert p == 15 * X("t") ** 7


def test_workers_do_not_change_output():
    one = distribution("jacobi", 2, parse_stats("asc:x,des:y,plat:z"))
    many = distribution("jacobi", 2, parse_stats("asc:x,des:y,plat:z"), workers=3)
    assert one.to_json() == many.to_json()


def test_cycle_form_roundtrip_small():
    for w in combinat.signed_perms(3):
        cf = combinat.to_cycle_form(w)
        assert combinat.is_standard_cycle_form(cf)
        assert combinat.from_cycle_form(cf) == w


def test_jacobi_partial_endpoints():
    # S lists the barred letters removed from the multiset
    stats = parse_stats("asc:x,des:y,plat:z")
    assert distribution("jacobi-partial", 2, stats, extra=[]).polynomial == combinat.S_poly(2)
    assert distribution("jacobi-partial", 2, stats, extra=[1, 2]).polynomial == combinat.C_poly(2)
    for S in ([1], [2], [3], [1, 3]):
        d = distribution("jacobi-partial", 3, stats, extra=S)
        assert d.cardinality() == len(combinat.brute_force_codes("jacobi-partial", 3, S))


def test_standard_cycle_form_example():
    cf = combinat.to_cycle_form((-3, 5, 1, -7, 2, -6, -4))
    assert str(cf) == "(b6)(b7,b4)(b3,1)(2,5)"
    assert combinat.from_cycle_form(cf) == (-3, 5, 1, -7, 2, -6, -4)
