import json

import pytest

from gammagrammar import combinat, recurtab
from gammagrammar.polycore import X
from gammagrammar.recurtab import UnknownRecurrence, table

x, y = X("x"), X("y")


def test_a_table_small():
    assert table("a", 4).entries == {1: 1, 2: 8}
    assert table("a", 5).entries == {1: 1, 2: 22, 3: 16}


def test_eulerian_numbers():
    assert [recurtab.eulerian_number(4, k) for k in range(1, 5)] == [1, 11, 11, 1]
    assert recurtab.eulerian_from_a(4) == combinat.eulerian_poly(4)


def test_g_seed_and_sums():
    assert table("g", 0).entries == {(0, 0): 1}
    assert [table("g", n).total() for n in range(6)] == [1, 1, 5, 21, 153, 1209]


def test_gamma_stirling_low_rows():
    assert table("gamma-stirling", 2).to_poly() == x * y ** 2 + x ** 2 * y


def test_negative_indices_read_as_zero():
    t = table("l", 1)
    assert t[(-1, 0)] == 0 and t[(2, 1)] == 2


def test_pairs_agree_with_standalone():
    for n in range(1, 6):
        assert table("l-standalone", n).entries == table("l", n).entries
        assert table("s-standalone", n).entries == table("s", n).entries


def test_b_and_d_reconstruct():
    for n in range(1, 6):
        assert recurtab.gamma_poly(table("b", n), n) == combinat.typeB_eulerian_poly(n)


def test_tsv_and_json():
    t = table("g", 2)
    assert t.to_tsv() == "i\tj\tvalue\n0\t1\t4\n2\t0\t1\n"
    assert json.loads(t.dumps()) == {"name": "g", "n": 2, "entries": [
        {"i": 0, "j": 1, "value": 4}, {"i": 2, "j": 0, "value": 1}]}
    assert table("a", 3).to_tsv() == "k\tvalue\n1\t1\n2\t2\n"


@pytest.mark.parametrize("name", sorted(recurtab.POLYFORMS))
def test_polyforms(name):
    assert recurtab.polyform_recurrence_check(name, 6)


def test_leibniz_corollary():
    assert all(recurtab.leibniz_corollary_check(n) for n in range(7))


def test_unknown():
    with pytest.raises(UnknownRecurrence):
        table("zeta", 3)
    with pytest.raises(UnknownRecurrence):
        recurtab.polyform_recurrence_check("zeta", 3)
