"""L-space knots described by their Alexander polynomials.

All Alexander gradings are doubled integers; for a knot they are even.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .errors import InvalidKnot, InvalidParameters, InvalidPolynomial
from .laurent import ChiSeries, LaurentPoly, chi_expand, t_half_difference


@dataclass(frozen=True, eq=False)
class LSpaceKnot:
    alexander: LaurentPoly
    genus: int
    chi: ChiSeries = field(repr=False)
    name: str = field(default="", compare=False)

    def __eq__(self, other):
        if not isinstance(other, LSpaceKnot):
            return NotImplemented
        return self.alexander == other.alexander

    def __hash__(self):
        return hash(self.alexander)

    def __str__(self):
        return self.name or f"poly:{self.alexander}"

    def h(self, v2):
        return h_knot(self, v2)

    def rank(self, v2):
        return hfl_rank(self, v2)


def validate(delta: LaurentPoly, name="") -> LSpaceKnot:
    """Check the L-space knot constraints on ``delta`` and wrap it."""
    if delta.is_zero():
        raise InvalidKnot("nonzero", "zero polynomial")
    if not delta.has_integer_exponents():
        raise InvalidKnot("integer-exponents", f"knot polynomial has half-integer exponents: {delta}")
    terms = delta.items()
    for e2, c in terms:
        if abs(c) != 1:
            raise InvalidKnot("coefficient", f"coefficient {c} at t^{e2 // 2} is not +-1")
    if not delta.is_symmetric():
        raise InvalidKnot("symmetric", f"{delta} is not symmetric under t -> 1/t")
    if terms[0][1] != 1:
        raise InvalidKnot("leading", f"leading coefficient of {delta} is not +1")
    for (_, a), (_, b) in zip(terms, terms[1:]):
        if a == b:
            raise InvalidKnot("alternating", f"coefficients of {delta} do not alternate in sign")
    if delta.value_at_one() != 1:
        raise InvalidKnot("normalization", f"delta(1) = {delta.value_at_one()}")
    try:
        chi = chi_expand(delta)
    except InvalidPolynomial as exc:
        raise InvalidKnot("normalization", str(exc)) from None
    return LSpaceKnot(delta, delta.top // 2, chi, name)


def _check_even(v2):
    if v2 % 2:
        raise InvalidParameters(f"knot grading must be an integer, got doubled value {v2}")


def h_knot(K: LSpaceKnot, v2: int) -> int:
    """h(v) = sum of chi_u over u > v.  ``v2`` is the doubled grading."""
    _check_even(v2)
    return _h_cached(K.alexander, v2)


@lru_cache(maxsize=None)
def _h_table(delta: LaurentPoly):
    chi = chi_expand(delta)
    top, bottom = delta.top, delta.bottom
    table, acc = {}, 0
    for e in range(top, bottom - 4, -2):
        table[e] = acc
        acc += chi[e]
    return table, bottom


def _h_cached(delta, v2):
    table, bottom = _h_table(delta)
    if v2 >= delta.top:
        return 0
    if v2 >= bottom - 2:
        return table[v2]
    # every chi coefficient below the bottom exponent is 1
    return table[bottom - 2] + (bottom - 2 - v2) // 2


def hfl_rank(K: LSpaceKnot, v2: int) -> int:
    """Rank of HFK^- in Alexander grading ``v2/2``; 0 or 1 for an L-space knot."""
    return h_knot(K, v2 - 2) - h_knot(K, v2)


def _torus_delta(p, q):
    # doubled exponents: t^{pq/2} -> pq
    num = t_half_difference(p * q) * t_half_difference(1)
    den = t_half_difference(p) * t_half_difference(q)
    return num.exact_div(den)


def torus_knot(p: int, q: int) -> LSpaceKnot:
    if p <= 0 or q <= 0:
        raise InvalidParameters(f"torus knot parameters must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise InvalidParameters(f"T({p},{q}) is not a knot: gcd = {gcd(p, q)}")
    if p == 1 or q == 1:
        return validate(LaurentPoly({0: 1}), "unknot")
    name = "trefoil" if {p, q} == {2, 3} else f"torus({p},{q})"
    return validate(_torus_delta(p, q), name)


def cable_polynomial(K: LSpaceKnot, m: int, n: int) -> LaurentPoly:
    """Delta_K(t^m) * Delta_{T(m,n)}(t), no validity check beyond m, n > 0."""
    if m == 1:
        return K.alexander
    return K.alexander.substitute_power(m) * _torus_delta(m, n)


def cable_condition(K: LSpaceKnot, m: int, n: int):
    """``"strict"`` if n/m > 2g-1, ``"boundary"`` if m = 1 and n = 2g-1, else ``None``."""
    lhs, rhs = n, m * (2 * K.genus - 1)
    if lhs > rhs:
        return "strict"
    if lhs == rhs and m == 1:
        return "boundary"
    return None


def cable_knot(K: LSpaceKnot, m: int, n: int) -> LSpaceKnot:
    """The (m, n)-cable of ``K``; must itself be an L-space knot."""
    if m < 1:
        raise InvalidParameters(f"m must be >= 1, got {m}")
    if gcd(m, n) != 1:
        raise InvalidParameters(f"gcd({m}, {n}) != 1")
    if m == 1:
        if n < 2 * K.genus - 1:
            raise InvalidParameters(f"K_(1,{n}) = K but n < 2g-1 = {2 * K.genus - 1}")
        return K
    if n <= 0:
        # mirror cables are not L-space knots for m > 1 and are rejected outright
        raise InvalidParameters(f"negative cables are not supported (n = {n})")
    if cable_condition(K, m, n) is None:
        raise InvalidParameters(
            f"({m},{n})-cable of {K} is not an L-space knot: need n/m > 2g-1 = {2 * K.genus - 1}")
    out = validate(cable_polynomial(K, m, n), f"cable({K},{m},{n})")
    expected = m * K.genus + (m - 1) * (n - 1) // 2
    if out.genus != expected:
        raise AssertionError(f"cable genus {out.genus} != {expected}")
    return out


UNKNOT = validate(LaurentPoly({0: 1}), "unknot")
TREFOIL = torus_knot(2, 3)

PRESET_KNOTS = {
    "unknot": lambda: UNKNOT,
    "trefoil": lambda: TREFOIL,
    "T25": lambda: torus_knot(2, 5),
    "T34": lambda: torus_knot(3, 4),
    "T35": lambda: torus_knot(3, 5),
    "cable(trefoil,2,3)": lambda: cable_knot(TREFOIL, 2, 3),
    "cable(cable(trefoil,2,3),2,13)": lambda: cable_knot(cable_knot(TREFOIL, 2, 3), 2, 13),
}


def _split_args(body):
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    parts.append(cur.strip())
    return parts


def parse_knot(spec: str) -> LSpaceKnot:
    """Parse ``unknot | trefoil | torus(p,q) | cable(<knot>,m,n) | poly:<laurent>``."""
    s = spec.strip()
    if s in ("unknot", "trefoil"):
        return PRESET_KNOTS[s]()
    if s.startswith("poly:"):
        return validate(LaurentPoly.parse(s[5:]))
    m = re.fullmatch(r"(torus|cable)\s*\((.*)\)", s)
    if not m:
        raise InvalidParameters(f"unrecognised knot spec {spec!r}")
    args = _split_args(m.group(2))
    try:
        if m.group(1) == "torus":
            if len(args) != 2:
                raise InvalidParameters("torus(p,q) takes two integers")
            return torus_knot(int(args[0]), int(args[1]))
        if len(args) != 3:
            raise InvalidParameters("cable(<knot>,m,n) takes a knot and two integers")
        return cable_knot(parse_knot(args[0]), int(args[1]), int(args[2]))
    except ValueError as exc:
        if isinstance(exc, (InvalidParameters, InvalidKnot, InvalidPolynomial)):
            raise
        raise InvalidParameters(f"bad integer in {spec!r}") from None
