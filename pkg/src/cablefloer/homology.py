"""Closed formulas for HFL^- and HFL-hat of L-space cable links, and the U-module structure."""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache

from .algebra import binomial, ideal_graded_piece
from .cables import CableLink, Grading, Regime, diagonal_profile, h_cable, hh
from .errors import GradingError
from .knots import hfl_rank


class GradedDim(Mapping):
    """Finite map Maslov grading -> F2 dimension, zeros dropped."""

    __slots__ = ("_d",)

    def __init__(self, dims=None):
        d = {}
        for deg, n in (dims or {}).items():
            if n < 0:
                raise ValueError(f"negative dimension {n} in degree {deg}")
            if n:
                d[int(deg)] = d.get(int(deg), 0) + int(n)
        self._d = dict(sorted(d.items(), reverse=True))

    def __getitem__(self, deg):
        return self._d[deg]

    def get(self, deg, default=0):
        return self._d.get(deg, default)

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, GradedDim):
            return self._d == other._d
        if isinstance(other, Mapping):
            return self._d == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __add__(self, other):
        out = dict(self._d)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return GradedDim(out)

    def shift(self, s):
        return GradedDim({k + s: v for k, v in self._d.items()})

    def tensor(self, other):
        out = {}
        for a, x in self._d.items():
            for b, y in other.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return GradedDim(out)

    def scale(self, k):
        return GradedDim({d: k * n for d, n in self._d.items()})

    @property
    def total(self):
        return sum(self._d.values())

    def euler(self):
        return sum((-1) ** (d % 2) * n for d, n in self._d.items())

    def as_dict(self):
        return dict(self._d)

    def __repr__(self):
        return f"GradedDim({self._d})"

    def __str__(self):
        if not self._d:
            return "0"
        return " + ".join((f"{n}F({d})" if n > 1 else f"F({d})") for d, n in self._d.items())


EMPTY = GradedDim()


def _pair_power(a):
    """(F_0 + F_-1)^a."""
    return GradedDim({-j: binomial(a, j) for j in range(a + 1)})


def _binomial_run(lam, count, top):
    """sum_{i=0}^{count-1} C(lam-1, i) F_{top - i}."""
    return GradedDim({top - i: binomial(lam - 1, i) for i in range(count)})


@dataclass(frozen=True)
class SpecialCaseInfo:
    nu: int


def special_case(L: CableLink, v: Grading):
    """The nu of the boundary-regime special case, or None."""
    if L.regime is not Regime.BOUNDARY:
        return None
    k2, lam = v.top, v.lam
    lhs = k2 - L.c2 + 2 * L.l * (L.r - lam)
    diff = 2 * L.knot.genus - lhs
    step = 2 * L.l
    if diff % step:
        return None
    nu = diff // step
    if 1 <= nu <= lam:
        return SpecialCaseInfo(nu)
    return None


def top_block_beta(L: CableLink, v: Grading) -> int:
    """r - lam - 1 plus the number of top-block companion ranks equal to one.

    Agrees with beta(k) in the strict regime; in the boundary regime it is
    the quantity that actually controls the generic case.
    """
    k2, lam = v.top, v.lam
    Kc = L.companion_cable
    ones = sum(hfl_rank(Kc, k2 - L.c2 + 2 * L.l * (L.r - lam + j)) for j in range(lam))
    return L.r - lam - 1 + ones


def hfl_minus(L: CableLink, v: Grading) -> GradedDim:
    """HFL^-(L, v) as Maslov grading -> dimension."""
    L.require_lspace()
    L.check_grading(v)
    r, k2, lam = L.r, v.top, v.lam
    if L.regime is Regime.BOUNDARY:
        info = special_case(L, v)
        h = h_cable(L, v)
        if info is not None:
            nu = info.nu
            inner = _binomial_run(lam, nu - 1, -2 * h) + GradedDim({-2 * h + 2 - nu: binomial(lam - 1, nu)})
            return _pair_power(r - lam).tensor(inner)
        b = top_block_beta(L, v)
    else:
        b = hh(L, k2 - 2) - hh(L, k2) - 1
        h = hh(L, k2) + (k2 * r - v.total) // 2
    if b < r - lam:
        return EMPTY
    inner = _binomial_run(lam, b - r + lam + 1, -2 * h)
    return _pair_power(r - lam).tensor(inner)


def hfl_hat(L: CableLink, v: Grading) -> GradedDim:
    """HFL-hat(L, v); strict regime only."""
    L.require_strict("hfl_hat")
    L.check_grading(v)
    r = L.r
    coords = v.sorted()
    hi, lo = coords[-1], coords[0]
    if hi - lo > 2:
        return EMPTY
    if hi == lo:
        k2 = hi
        bk, bk1 = _beta(L, k2), _beta(L, k2 + 2)
        H = hh(L, k2)
        a = b = None
        if bk + bk1 <= r - 2:
            a = _hat_diag_a(r, H, bk, bk1)
        if bk + bk1 >= r - 2:
            b = _hat_diag_b(r, H, bk, bk1)
        if a is not None and b is not None and a != b:
            raise AssertionError(f"hat formulas disagree at {v}: {a} vs {b}")
        return a if a is not None else b
    # j coordinates equal k-1, r-j equal k
    k2 = hi
    j = sum(1 for c in coords if c == lo)
    bk = _beta(L, k2)
    dim = binomial(r - 2, bk)
    if not dim:
        return EMPTY
    return GradedDim({-2 * hh(L, k2) - bk - j: dim})


def _beta(L, k2):
    return hh(L, k2 - 2) - hh(L, k2) - 1


def _hat_diag_a(r, H, bk, bk1):
    out = GradedDim({-2 * H - i: binomial(r - 1, i) for i in range(bk + 1)})
    return out + GradedDim({-2 * H + 2 - r + i: binomial(r - 1, i) for i in range(bk1 + 1)})


def _hat_diag_b(r, H, bk, bk1):
    out = GradedDim({-2 * H - i: binomial(r - 1, i) for i in range(r - 1 - bk1)})
    return out + GradedDim({-2 * H + 2 - r + i: binomial(r - 1, i) for i in range(r - 1 - bk)})


def u_exponent(L: CableLink, v: Grading, i: int) -> int:
    """1 - h(v - e_i) + h(v), the power of U in U_i z(v)."""
    L.require_lspace()
    L.check_grading(v)
    if not 0 <= i < L.r:
        raise GradingError(f"component index {i} out of range 0..{L.r - 1}")
    return 1 - h_cable(L, v.minus(1 << i)) + h_cable(L, v)


def u_surjective(L: CableLink, v: Grading, i: int) -> bool:
    """Is U_i : HFL(v) -> HFL(v - e_i) onto?  Strict regime only."""
    L.require_strict("u_surjective")
    L.check_grading(v)
    if not 0 <= i < L.r:
        raise GradingError(f"component index {i} out of range 0..{L.r - 1}")
    w = v.minus(1 << i)
    if not hfl_minus(L, w):
        return True
    if not hfl_minus(L, v):
        return False
    if w.top == v.top:
        return True
    # max drops by one: onto exactly when the top block is saturated
    return _beta(L, v.top) == L.r - 1


class SummandKind(enum.Enum):
    BETA = "M"
    TRUNCATED = "M_trunc"
    INFINITE = "M_inf"


@dataclass(frozen=True)
class ModuleSummand:
    kind: SummandKind
    generator: int          # doubled diagonal coordinate
    beta: int = 0           # for BETA
    length: int = 0         # for TRUNCATED

    def label(self, r):
        if self.kind is SummandKind.BETA:
            return f"M{self.beta}"
        if self.kind is SummandKind.TRUNCATED:
            return f"M({r - 1},{self.length})"
        return f"M({r - 1},inf)"


def module_decomposition(L: CableLink, profile=None):
    """Summands of HFL^- as an R-module, ordered by generator from the top down."""
    L.require_strict("module_decomposition")
    P = profile or diagonal_profile(L)
    r = L.r
    lo, hi = P.window
    out = []
    k = hi
    while k >= lo:
        b = P.beta_at(k)
        if 0 <= b <= r - 2 and P.beta_at(k + 2) < r - 1:
            out.append(ModuleSummand(SummandKind.BETA, k, beta=b))
            k -= 2
        elif b == r - 1:
            top = k
            while k >= lo and P.beta_at(k) == r - 1:
                k -= 2
            if k < lo:
                out.append(ModuleSummand(SummandKind.INFINITE, top))
                break
            if P.beta_at(k) != r - 2:
                raise AssertionError(f"run below {top} ends with beta {P.beta_at(k)} != r-2")
            out.append(ModuleSummand(SummandKind.TRUNCATED, top, length=(top - k) // 2))
        else:
            k -= 2
    return out


def decomposition_string(L: CableLink, summands):
    counts = {}
    order = []
    for s in summands:
        lab = s.label(L.r)
        if lab not in counts:
            order.append(lab)
            counts[lab] = 0
        counts[lab] += 1

    def key(lab):
        if lab.startswith("M(") and lab.endswith("inf)"):
            return (2, 0)
        if lab.startswith("M("):
            return (1, int(lab.split(",")[1][:-1]))
        return (0, int(lab[1:]))

    parts = []
    for lab in sorted(order, key=key):
        n = counts[lab]
        parts.append(f"{n}·{lab}" if n > 1 else lab)
    return " + ".join(parts)


def summand_dims(L: CableLink, s: ModuleSummand, v: Grading) -> GradedDim:
    """Graded dimension of a summand at Alexander grading ``v``."""
    r = L.r
    u = [(c - s.generator) // 2 for c in v.coords]
    if any(x > 0 for x in u):
        return EMPTY
    if s.kind is SummandKind.BETA:
        if max(u) != 0:
            return EMPTY
        piece = _piece(r, s.beta, tuple(u), 0)
    elif s.kind is SummandKind.TRUNCATED:
        piece = _piece(r, r - 2, tuple(u), s.length)
    else:
        piece = {p: binomial(r - 1, p) for p in range(r)}
    base = -2 * hh(L, s.generator) + 2 * sum(u)
    return GradedDim({base - p: n for p, n in piece.items()})


@lru_cache(maxsize=None)
def _piece(r, beta, u, power):
    return ideal_graded_piece(r, beta, u, power).dims
