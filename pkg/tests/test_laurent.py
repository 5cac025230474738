import pytest
from hypothesis import given, settings, strategies as st

from cablefloer.errors import InvalidPolynomial
from cablefloer.knots import TREFOIL, cable_knot
from cablefloer.laurent import LaurentPoly, chi_expand, format_laurent, mul, parse_laurent


def P(text):
    return parse_laurent(text)


polys = st.dictionaries(st.integers(-8, 8), st.integers(-3, 3), max_size=5).map(LaurentPoly)


def test_mul_identity():
    assert mul(P("t - 1 + t^-1"), P("1")) == P("t - 1 + t^-1")


def test_half_integer_square():
    assert P("t^(1/2) - t^(-1/2)") ** 2 == P("t - 2 + t^-1")


def test_cable_of_trefoil_polynomial_recovered_from_chi():
    delta = TREFOIL.alexander.substitute_power(2) * P("t - 1 + t^-1")
    assert delta == P("t^3 - t^2 + 1 - t^-2 + t^-3")
    chi = chi_expand(delta)
    # t^3 + 1 + t^-1 + t^-3 + t^-4 + ...
    assert chi.window(-12, 8) == {e: (1 if e in (6, 0, -2) or e <= -6 else 0) for e in range(-12, 9, 2)}
    assert chi.times_one_minus_tinv() == delta


def test_chi_unknot():
    chi = chi_expand(P("1"))
    assert [chi[2 * v] for v in (2, 1, 0, -1, -5)] == [0, 0, 1, 1, 1]


def test_chi_trefoil():
    chi = chi_expand(P("t - 1 + t^-1"))
    assert (chi[2], chi[0], chi[-2], chi[-20]) == (1, 0, 1, 1)


@pytest.mark.parametrize("bad", ["t - 1", "t - 2 + t^-1", "t^2 + t^-1"])
def test_chi_rejects(bad):
    with pytest.raises(InvalidPolynomial):
        chi_expand(P(bad))


@pytest.mark.parametrize("text", ["t^3-t^2+t^-2", "t^(1/2) - t^(-1/2)", "2*t - 1", "-t^-3/2 + 5", "7"])
def test_parse_format_roundtrip(text):
    p = P(text)
    assert P(format_laurent(p)) == p


def test_parse_values():
    assert P("t^3-t^2+t^-2").coeffs == {6: 1, 4: -1, -4: 1}
    assert P("t^(1/2)").coeffs == {1: 1}
    assert P("-t^-3/2").coeffs == {-3: -1}
    assert LaurentPoly.parse("[[1, 2, 1], [-1, 2, -1]]") == P("t^(1/2) - t^(-1/2)")


@pytest.mark.parametrize("bad", ["", "t^", "t^1/3", "3 3", "x"])
def test_parse_errors(bad):
    with pytest.raises(InvalidPolynomial):
        P(bad)


def test_exact_division():
    num = P("t^3 - t^-3") * P("t^(1/2) - t^(-1/2)")
    den = P("t - t^-1") * P("t^(3/2) - t^(-3/2)")
    assert num.exact_div(den) == P("t - 1 + t^-1")
    with pytest.raises(InvalidPolynomial):
        P("t^2 + 1").exact_div(P("t - 1"))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def _staircase(steps):
    # Alexander polynomial of a staircase with the given (positive) gaps
    exps, e = [0], 0
    for g in steps:
        e += g
        exps.append(e)
    top = exps[-1]
    if top % 2:
        return None
    coeffs = {}
    for i, x in enumerate(exps):
        coeffs[2 * x - top] = (-1) ** i
    p = LaurentPoly(coeffs)
    return p if p.is_symmetric() else None


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_chi_properties_on_staircases(half):
    steps = half + half[::-1]
    delta = _staircase(steps)
    if delta is None or delta.value_at_one() != 1:
        return
    g = delta.top // 2
    chi = chi_expand(delta)
    window = chi.window(-2 * g - 10, 2 * g + 10)
    assert set(window.values()) <= {0, 1}
    assert chi[2 * g] == 1 and all(chi[e] == 0 for e in range(2 * g + 2, 2 * g + 12, 2))
    assert all(chi[e] == 1 for e in range(-2 * g - 10, -2 * g + 1, 2))
    assert chi.times_one_minus_tinv() == delta


def test_cable_series_matches_knot_series():
    K = cable_knot(TREFOIL, 2, 3)
    assert chi_expand(K.alexander) == K.chi
