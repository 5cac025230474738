"""Cable links K_{rm,rn}: h-function, diagonal profile, Euler characteristic.

Every Alexander grading is a doubled integer.  For the cable link all
coordinates share the parity of ``l*(r-1)`` with ``l = m*n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import GradingError, InvalidParameters, UnsupportedRegime
from .knots import LSpaceKnot, cable_condition, cable_knot, h_knot, hfl_rank
from .laurent import LaurentPoly, t_half_difference


class Regime(enum.Enum):
    STRICT = "strict"
    BOUNDARY = "boundary"
    NOT_LSPACE = "not-lspace"

    def __str__(self):
        return self.value


def _half(x):
    """Doubled integer from an int, Fraction, float-free string like ``"-3/2"``."""
    if isinstance(x, str):
        x = Fraction(x.strip())
    x = Fraction(x)
    d = 2 * x
    if d.denominator != 1:
        raise GradingError(f"{x} is not in Z/2")
    return int(d)


@dataclass(frozen=True, order=True)
class Grading:
    """A point of the Alexander lattice; ``coords`` are doubled integers."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def of(cls, *values):
        """Build from actual (half-integer) values: ``Grading.of("1/2", "-1/2")``."""
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = tuple(values[0])
        return cls(tuple(_half(x) for x in values))

    @classmethod
    def parse(cls, text):
        return cls.of(*[p for p in text.replace(" ", "").split(",") if p])

    @classmethod
    def diagonal(cls, k2, r):
        return cls((k2,) * r)

    @property
    def r(self):
        return len(self.coords)

    def sorted(self):
        return tuple(sorted(self.coords))

    @property
    def total(self):
        """Doubled |v|."""
        return sum(self.coords)

    @property
    def top(self):
        return max(self.coords)

    @property
    def lam(self):
        k = self.top
        return sum(1 for c in self.coords if c == k)

    @property
    def is_diagonal(self):
        return len(set(self.coords)) == 1

    def minus(self, mask):
        """``v - e_B`` for the subset encoded by bitmask ``mask``."""
        return Grading(tuple(c - 2 if mask >> i & 1 else c for i, c in enumerate(self.coords)))

    def plus(self, mask):
        return Grading(tuple(c + 2 if mask >> i & 1 else c for i, c in enumerate(self.coords)))

    def neg(self):
        return Grading(tuple(-c for c in self.coords))

    def values(self):
        return tuple(Fraction(c, 2) for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.values()) + ")"


@dataclass(frozen=True, eq=False)
class CableLink:
    knot: LSpaceKnot
    r: int
    m: int
    n: int
    regime: Regime
    companion_cable: LSpaceKnot = field(default=None, repr=False)

    @property
    def l(self):
        return self.m * self.n

    @property
    def c2(self):
        """Doubled c = l(r-1)/2."""
        return self.l * (self.r - 1)

    @property
    def parity(self):
        return self.c2 % 2

    @property
    def genus_c(self):
        return self.companion_cable.genus

    @property
    def name(self):
        return f"{self.knot}_({self.r * self.m},{self.r * self.n})"

    def __str__(self):
        return f"{self.name} [r={self.r}, m={self.m}, n={self.n}, {self.regime}]"

    def check_grading(self, v: Grading):
        if v.r != self.r:
            raise GradingError(f"grading {v} has {v.r} coordinates, link has {self.r} components")
        for x in v.coords:
            if (x - self.parity) % 2:
                raise GradingError(
                    f"grading {v} off the lattice: coordinates must be in Z + {Fraction(self.parity, 2)}")

    def require_lspace(self):
        if self.regime is Regime.NOT_LSPACE:
            raise UnsupportedRegime(f"{self.name} is not an L-space link")

    def require_strict(self, what="this quantity"):
        self.require_lspace()
        if self.regime is not Regime.STRICT:
            raise UnsupportedRegime(f"{what} is not available in the boundary regime (m=1, n=2g-1)")

    def default_window(self):
        """Doubled diagonal window ``(lo, hi)`` with the right parity."""
        span = 2 * self.genus_c + self.l * self.r + 4
        lo, hi = -span, span
        if (lo - self.parity) % 2:
            lo, hi = lo - 1, hi + 1
        return lo, hi

    def h(self, v):
        return h_cable(self, v)


def classify(K: LSpaceKnot, r: int, m: int, n: int) -> CableLink:
    if r < 1 or m < 1:
        raise InvalidParameters(f"need r >= 1 and m >= 1, got r={r}, m={m}")
    if gcd(m, n) != 1:
        raise InvalidParameters(f"gcd({m}, {n}) != 1")
    if n <= 0:
        raise InvalidParameters(f"n must be positive for a cable link, got {n}")
    cond = cable_condition(K, m, n)
    if cond is None:
        return CableLink(K, r, m, n, Regime.NOT_LSPACE, None)
    regime = Regime.STRICT if cond == "strict" else Regime.BOUNDARY
    return CableLink(K, r, m, n, regime, cable_knot(K, m, n))


def h_cable(L: CableLink, v: Grading) -> int:
    """Sum of h_{m,n}(v_i - c + i*l) over the ascending coordinates."""
    L.require_lspace()
    L.check_grading(v)
    return _h_sorted(L, v.sorted())


def _h_sorted(L, coords):
    Kc, c2, l2 = L.companion_cable, L.c2, 2 * L.l
    return sum(h_knot(Kc, x - c2 + i * l2) for i, x in enumerate(coords))


def hh(L: CableLink, k2: int) -> int:
    """Diagonal value h(k,...,k)."""
    L.require_lspace()
    return _h_sorted(L, (k2,) * L.r)


def beta(L: CableLink, k2: int) -> int:
    return hh(L, k2 - 2) - hh(L, k2) - 1


@dataclass(frozen=True)
class DiagonalProfile:
    window: tuple
    hh: dict
    beta: dict
    r: int

    def hh_at(self, k2):
        lo, hi = self.window
        if k2 > hi:
            return 0
        if k2 < lo:
            return self.hh[lo] + self.r * (lo - k2) // 2
        return self.hh[k2]

    def beta_at(self, k2):
        lo, hi = self.window
        if k2 > hi:
            return -1
        if k2 < lo:
            return self.r - 1
        return self.beta[k2]

    def ks(self):
        return sorted(self.hh)


def diagonal_profile(L: CableLink, window=None) -> DiagonalProfile:
    L.require_lspace()
    lo, hi = window if window is not None else L.default_window()
    if (lo - L.parity) % 2 or (hi - L.parity) % 2:
        raise GradingError(f"window endpoints must have parity {L.parity} (doubled)")
    hvals = {k: hh(L, k) for k in range(lo, hi + 1, 2)}
    bvals = {k: hh(L, k - 2) - hvals[k] - 1 for k in hvals}
    if window is None:
        # both tails must already be flat at the window edges
        gc2 = 2 * L.genus_c
        if not (hi > gc2 + L.c2 and hvals[hi] == 0 and bvals[hi] == -1):
            raise AssertionError(f"right tail of {L.name} not stable at {hi}")
        if not (lo + L.c2 <= -gc2 and bvals[lo] == L.r - 1):
            raise AssertionError(f"left tail of {L.name} not stable at {lo}")
    return DiagonalProfile((lo, hi), hvals, bvals, L.r)


def beta_via_hfk(L: CableLink, k2: int) -> int:
    """Largest j in [0, r-1] with HFK(K_{m,n}, k-c+jl) nonzero, or -1."""
    L.require_strict("beta_via_hfk")
    Kc = L.companion_cable
    best = -1
    for j in range(L.r):
        if hfl_rank(Kc, k2 - L.c2 + 2 * j * L.l):
            best = j
    return best


def hh_generating_series(L: CableLink, lo: int, hi: int) -> dict:
    """Coefficients of t^-1 Delta (t^{lr/2}-t^{-lr/2}) / ((1-t^-1)^2 (t^{l/2}-t^{-l/2})) on [lo, hi]."""
    L.require_lspace()
    ratio = t_half_difference(L.l * L.r).exact_div(t_half_difference(L.l))
    P = (L.companion_cable.alexander * ratio).shift(-2)
    top = P.top
    out, a, b = {}, 0, 0
    start = max(hi, top)
    start += (start - P.top) % 2
    for e in range(start, lo - 1, -2):
        a += P[e]
        b += a
        if e <= hi:
            out[e] = b
    return out


def multivariable_chi(L: CableLink) -> LaurentPoly:
    """chi_{K_{m,n}}(t) (t^{l/2} - t^{-l/2})^{r-1}, as a polynomial in the diagonal variable."""
    L.require_lspace()
    if L.r < 2:
        raise InvalidParameters("multivariable_chi needs r >= 2; use the knot's ChiSeries")
    factor = t_half_difference(L.l) ** (L.r - 1)
    return L.companion_cable.chi.times_poly(factor)


def chi_at_grading(L: CableLink, v: Grading) -> int:
    """Inclusion-exclusion sum over subsets B of (-1)^{|B|-1} h(v - e_B)."""
    L.require_lspace()
    L.check_grading(v)
    total = 0
    for mask in range(1 << L.r):
        sign = -1 if bin(mask).count("1") % 2 == 0 else 1
        total += sign * _h_sorted(L, v.minus(mask).sorted())
    return total


def grading_window(L: CableLink, lo: int, hi: int):
    """All gradings with every doubled coordinate in [lo, hi] (lattice points only)."""
    start = lo + ((L.parity - lo) % 2)
    axis = range(start, hi + 1, 2)

    def rec(prefix):
        if len(prefix) == L.r:
            yield Grading(tuple(prefix))
            return
        for x in axis:
            yield from rec(prefix + [x])

    yield from rec([])


def sublink_cable(L: CableLink, r_sub: int) -> CableLink:
    """Any r'-component sublink of K_{rm,rn} is K_{r'm,r'n}."""
    return CableLink(L.knot, r_sub, L.m, L.n, L.regime, L.companion_cable)


def h_via_inversion(L: CableLink, v: Grading) -> int:
    """Recompute h(v) from Euler characteristics of the sublinks.

    Slow reference path: for each sublink, the characteristic on its own
    lattice is read off h-differences of the knot K_{m,n} via the diagonal
    support, then summed over the cone above ``pi(v + 1)``.
    """
    L.require_lspace()
    total = 0
    for size in range(1, L.r + 1):
        Lp = sublink_cable(L, size)
        # projection forgetting r - size components shifts each coordinate by -l(r-size)/2
        shift = L.l * (L.r - size)
        poly = Lp.companion_cable.chi if size == 1 else None
        if size > 1:
            poly = multivariable_chi(Lp)
        for idx in combinations(range(L.r), size):
            corner = [v.coords[i] + 2 - shift for i in idx]
            total += (-1) ** (size - 1) * _cone_sum(Lp, poly, corner)
    return total


def _cone_sum(Lp, poly, corner):
    """Sum of chi_{Lp,u} over u >= corner (componentwise, doubled)."""
    if Lp.r == 1:
        # chi is the knot series; its tail is 1 so the sum is finite only from the top
        chi = poly
        return sum(chi[e] for e in range(corner[0], chi.top + 1, 2))
    # chi is supported on the diagonal: the monomial t^s sits at (s,...,s)
    floor = max(corner)
    return sum(coeff for s, coeff in poly.items() if s >= floor)
