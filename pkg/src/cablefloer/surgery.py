"""Linking-matrix arithmetic for surgeries on cable links."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .cables import CableLink
from .errors import InvalidParameters


@dataclass(frozen=True)
class SurgeryFraming:
    p: tuple
    l: int

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if not self.p:
            raise InvalidParameters("need at least one surgery coefficient")

    @property
    def r(self):
        return len(self.p)

    def matrix(self):
        return [[self.p[i] if i == j else self.l for j in range(self.r)] for i in range(self.r)]


def det_lambda(f: SurgeryFraming) -> int:
    """prod(p_i - l) + l * sum_i prod_{j != i}(p_j - l)."""
    q = [x - f.l for x in f.p]
    rest = sum(prod(q[:i] + q[i + 1:]) for i in range(len(q)))
    return prod(q) + f.l * rest


def det_direct(matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_positive_cone(f: SurgeryFraming) -> bool:
    """All p_i > l: the cone where surgery on an L-space cable link is known to give an L-space."""
    return all(x > f.l for x in f.p)


@dataclass(frozen=True)
class SurgeryDescription:
    knot: str
    slope: Fraction
    lens_spaces: tuple   # (p, q) pairs for L(p, q)

    def __str__(self):
        slope = str(self.slope.numerator) if self.slope.denominator == 1 else f"{self.slope.numerator}/{self.slope.denominator}"
        parts = [f"S^3_{{{slope}}}({self.knot})"] + [f"L({a},{b})" for a, b in self.lens_spaces]
        return " # ".join(parts)

    def as_dict(self):
        return {
            "knot": self.knot,
            "slope": [self.slope.numerator, self.slope.denominator],
            "lens_spaces": [list(x) for x in self.lens_spaces],
            "text": str(self),
        }


def surgery_description(L: CableLink, p) -> SurgeryDescription:
    """Connected-sum description of (mn, p_2, ..., p_r)-surgery on K_{rm,rn}."""
    p = tuple(int(x) for x in p)
    if len(p) != L.r:
        raise InvalidParameters(f"need {L.r} surgery coefficients, got {len(p)}")
    if p[0] != L.l:
        raise InvalidParameters(f"the description needs p_1 = mn = {L.l}, got {p[0]}")
    lens = [(L.m, L.n)] + [(x - L.l, 1) for x in p[1:]]
    # the slope is kept as given: n/m with m >= 1, so no sign normalisation is needed
    return SurgeryDescription(str(L.knot), Fraction(L.n, L.m), tuple(lens))
