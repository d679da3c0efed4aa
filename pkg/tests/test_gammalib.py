import pytest

from gammagrammar import combinat, recurtab
from gammagrammar.gammalib import (GammaVector, NotHomogeneous, NotSymmetric, gamma_expand,
                                   gamma_expand_xy, partial_gamma, reconstruct_xy)
from gammagrammar.polycore import Poly, X

x, y, z = X("x"), X("y"), X("z")


def test_constant():
    assert gamma_expand(1, 0) == GammaVector(0, (1,))


def test_eulerian_peak_vector():
    # A_4(x) = 1 + 11x + 11x^2 + x^3 = (1+x)^3 + 8x(1+x)
    assert gamma_expand(1 + 11 * x + 11 * x ** 2 + x ** 3, 3).gammas == (1, 8)


def test_asymmetric_reports_pair():
    with pytest.raises(NotSymmetric) as info:
        gamma_expand(1 + 2 * x, 1)
    assert info.value.pair == (0, 1)


def test_negative_gamma_is_allowed():
    gv = gamma_expand(1 - x + x ** 2, 2)
    assert gv.gammas == (1, -3) and not gv.is_nonnegative()


def test_bivariate():
    assert gamma_expand_xy(x ** 3 + 11 * x ** 2 * y + 11 * x * y ** 2 + y ** 3) == [1, 8]
    assert reconstruct_xy([1, 8], 3) == x ** 3 + 11 * x ** 2 * y + 11 * x * y ** 2 + y ** 3
    with pytest.raises(NotHomogeneous):
        gamma_expand_xy(x + y ** 2)
    with pytest.raises(NotSymmetric):
        gamma_expand_xy(x ** 2 + x * y)


def test_S1_slice():
    exp = partial_gamma(combinat.S_poly(1))
    assert {i: list(cs) for i, (_, cs) in exp.slices.items()} == {1: [0, 1]}


def test_E4_matches_g4():
    exp = partial_gamma(combinat.E_poly(4))
    assert exp.table() == recurtab.table_g(4).entries
    assert exp.reconstruct() == combinat.E_poly(4)


def test_slice_errors_carry_index():
    with pytest.raises(NotSymmetric) as info:
        partial_gamma(z * (x + y) + z ** 2 * x)
    assert info.value.slice_index == 2


def test_witness_for_negative_coefficient():
    exp = partial_gamma(z * (x ** 2 - x * y + y ** 2))
    assert not exp.positive and exp.witness == (1, 1, -3)


def test_json_shape():
    j = partial_gamma(combinat.S_poly(2)).to_json()
    assert j["slices"]["1"] == {"d": 6, "gamma": [0, 0, 3, 4]}
    assert set(j) == {"z", "pair", "slices", "positive", "witness"}


def test_reports_are_verdicts():
    from gammagrammar.gammalib import conjecture_check_jsp, guo_zeng_check
    v = conjecture_check_jsp(3, 1)
    assert v.to_json()["k"] == 3 and isinstance(v.positive, bool)
    g = guo_zeng_check(4)
    assert g.to_json()["gamma"] == [1, 1]
    with pytest.raises(ValueError):
        conjecture_check_jsp(3, 3)


def test_zero_polynomial():
    assert partial_gamma(Poly()).slices == {}
