import pytest

from cablefloer.errors import InvalidKnot, InvalidParameters
from cablefloer.knots import (PRESET_KNOTS, TREFOIL, UNKNOT, cable_knot, h_knot, hfl_rank, parse_knot,
                              torus_knot, validate)
from cablefloer.laurent import parse_laurent


def test_validate_basic():
    assert validate(parse_laurent("1")).genus == 0
    assert validate(parse_laurent("t - 1 + t^-1")).genus == 1


@pytest.mark.parametrize("text, constraint", [
    ("t - 2 + t^-1", "coefficient"),
    ("t + 1 + t^-1", "alternating"),
    ("t^2 - t + 1", "symmetric"),
    ("-t + 3 - t^-1", "coefficient"),
    ("-t + 1 - t^-1", "leading"),
    ("t^(1/2) - t^(-1/2)", "integer-exponents"),
])
def test_validate_rejects(text, constraint):
    with pytest.raises(InvalidKnot) as info:
        validate(parse_laurent(text))
    assert info.value.constraint == constraint


def test_h_unknot():
    assert [h_knot(UNKNOT, 2 * v) for v in (3, 0, -1, -7)] == [0, 0, 1, 7]


def test_h_trefoil_frozen():
    # frozen from summing the chi stream of t - 1 + t^-1
    assert [h_knot(TREFOIL, 2 * v) for v in (1, 0, -1, -2)] == [0, 1, 1, 2]
    assert [hfl_rank(TREFOIL, 2 * v) for v in (1, 0, -1)] == [1, 0, 1]


def test_h_rejects_half_integers():
    with pytest.raises(InvalidParameters):
        h_knot(TREFOIL, 1)


def test_torus_knots():
    assert torus_knot(2, 3) == TREFOIL
    assert torus_knot(1, 7) == UNKNOT
    T34 = torus_knot(3, 4)
    assert T34.genus == 3 and len(T34.alexander) == 5
    assert T34.alexander == parse_laurent("t^3 - t^2 + 1 - t^-2 + t^-3")
    with pytest.raises(InvalidParameters):
        torus_knot(4, 6)


def test_t34_and_t25():
    # T(2,5): t^2 - t + 1 - t^-1 + t^-2, genus 2
    assert torus_knot(2, 5).alexander == parse_laurent("t^2 - t + 1 - t^-1 + t^-2")
    assert torus_knot(3, 5).genus == 4


def test_cable_knots():
    assert cable_knot(UNKNOT, 2, 3) == TREFOIL
    C = cable_knot(TREFOIL, 2, 3)
    assert C.genus == 3
    assert cable_knot(TREFOIL, 1, 5) is TREFOIL
    with pytest.raises(InvalidParameters):
        cable_knot(TREFOIL, 2, 1)         # 1/2 < 1
    with pytest.raises(InvalidParameters):
        cable_knot(TREFOIL, 1, 0)
    with pytest.raises(InvalidParameters):
        cable_knot(TREFOIL, 2, 4)


def test_iterated_cable_genus():
    K = cable_knot(cable_knot(TREFOIL, 2, 3), 2, 13)
    assert K.genus == 2 * 3 + 12 // 2
    assert K.alexander.top == 2 * K.genus


@pytest.mark.parametrize("name", sorted(PRESET_KNOTS))
def test_preset_invariants(name):
    K = PRESET_KNOTS[name]()
    g = K.genus
    for v in range(-2 * g - 5, 2 * g + 6):
        assert h_knot(K, -2 * v) == h_knot(K, 2 * v) + v
        assert hfl_rank(K, 2 * v) == K.chi[2 * v]
        assert h_knot(K, 2 * v - 2) - h_knot(K, 2 * v) in (0, 1)
    assert h_knot(K, 2 * g) == 0
    assert validate(K.alexander) == K


@pytest.mark.parametrize("spec, genus", [
    ("unknot", 0), ("trefoil", 1), ("torus(3,4)", 3), ("cable(trefoil,2,3)", 3),
    ("cable(cable(trefoil,2,3),2,13)", 12), ("poly:t^2-t+1-t^-1+t^-2", 2),
    ("poly:[[1,1,1],[0,1,-1],[-1,1,1]]", 1),
])
def test_parse_knot(spec, genus):
    assert parse_knot(spec).genus == genus


@pytest.mark.parametrize("spec", ["foo", "torus(2)", "cable(trefoil,2)", "torus(a,b)", "poly:t-2+t^-1"])
def test_parse_knot_errors(spec):
    with pytest.raises((InvalidParameters, InvalidKnot)):
        parse_knot(spec)
