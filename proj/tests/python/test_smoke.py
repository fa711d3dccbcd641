import pytest

import purecubic as pc


def test_field_constants():
    assert pc.field(10) == {"m": 10, "h": 10, "k": 1, "sigma": 3, "sign": 1}
    assert pc.field(12)["k"] == 2


def test_invalid_moduli():
    with pytest.raises(pc.InvalidModulus, match="is a perfect cube"):
        pc.field(8)
    with pytest.raises(ValueError, match="redundant with m = 12"):
        pc.field(18)


def test_canonical_form():
    assert pc.canonical_form([(2, 0, 0), (1, 1, 0), (0, 0, 1)]) == (2, 1, 1, 0, 0, 1)
    with pytest.raises(pc.RankDeficient):
        pc.canonical_form([(1, 0, 0), (0, 1, 0)])


def test_ideals_and_reduced():
    assert pc.primitive_ideals(2, 1) == [(1, 0, 1, 0, 0, 1)]
    assert pc.is_ideal(2, (5, 0, 5, 0, 0, 5))
    assert pc.upper_bound_length(2) == 6
    assert pc.reduced_ideals(2) == [(1, 0, 1, 0, 0, 1)]
    reduced = pc.reduced_ideals(7)
    assert len(reduced) == 8
    assert all(pc.is_reduced(7, g) for g in reduced)


def test_big_integers_round_trip():
    big = 2**80 + 7
    assert pc.principal_ideal(2, (big, 0, 0)) == (big, 0, big, 0, 0, big)
    assert pc.norm(2, (big, 0, 0)) == big**3


def test_unit_and_sequence():
    u = pc.fundamental_unit(2, digits=6)
    assert u["epsilon0"] == (0, 0, 1)
    assert u["value"] == "3.847322"
    assert u["period"] == 1
    seq = pc.minimal_sequence(3, 4)
    assert [s["point"] for s in seq] == [(1, 0, 0), (0, 0, 1), (1, 0, 1), (2, 1, 2)]
    assert [s["norm"] for s in seq] == [1, 4, 2, 1]
    with pytest.raises(pc.IterationCapExceeded):
        pc.fundamental_unit(17, iteration_cap=3)


def test_bijection_round_trip():
    m = 17
    unit = pc.fundamental_unit(m)
    reduced = set(pc.reduced_ideals(m))
    for gamma in unit["minimal_elements"]:
        ideal = pc.map_F(m, gamma)
        assert ideal in reduced
        eta = pc.ideal_generator(m, gamma)
        assert pc.principal_ideal(m, eta) == ideal
        assert pc.map_G(m, ideal, eta) == gamma
    assert pc.map_G(m, (1, 0, 1, 0, 0, 1), (1, 0, 0)) == (1, 0, 0)
    with pytest.raises(pc.NotMinimalElement):
        pc.map_F(m, (2, 0, 0))
