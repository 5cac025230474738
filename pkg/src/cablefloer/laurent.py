"""Exact integer Laurent polynomials in one variable with half-integer exponents.

Exponents are stored *doubled*: the key ``e`` stands for ``t^(e/2)``.  So
``t - 1 + t^-1`` is ``{2: 1, 0: -1, -2: 1}`` and ``t^(1/2)`` is ``{1: 1}``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import InvalidPolynomial


class LaurentPoly:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        data = {}
        for e, c in (coeffs or {}).items():
            if int(e) != e or int(c) != c:
                raise InvalidPolynomial(f"non-integral entry {e}: {c}")
            if c:
                data[int(e)] = data.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in data.items() if c}
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, e2, c=1):
        return cls({e2: c})

    @classmethod
    def from_int_exponents(cls, coeffs):
        """Build from a map with ordinary integer exponents."""
        return cls({2 * e: c for e, c in coeffs.items()})

    @classmethod
    def from_triples(cls, triples):
        """Build from ``(numerator, denominator, coefficient)`` triples, denominator 1 or 2."""
        out = {}
        for num, den, c in triples:
            if den not in (1, 2):
                raise InvalidPolynomial(f"denominator must be 1 or 2, got {den}")
            e2 = 2 * num // den
            out[e2] = out.get(e2, 0) + c
        return cls(out)

    @classmethod
    def parse(cls, text):
        """Parse either a compact string (``"t^3-t^2+t^-2"``) or a JSON list of triples."""
        text = text.strip()
        if text.startswith("["):
            try:
                triples = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InvalidPolynomial(f"bad triple list: {exc}") from None
            return cls.from_triples(triples)
        return parse_laurent(text)

    # mapping-like access

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def __getitem__(self, e2):
        return self._coeffs.get(e2, 0)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    @property
    def top(self):
        """Largest doubled exponent; ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def bottom(self):
        return min(self._coeffs) if self._coeffs else None

    @property
    def leading_coefficient(self):
        return self._coeffs[self.top] if self._coeffs else 0

    def value_at_one(self):
        return sum(self._coeffs.values())

    def is_symmetric(self):
        return all(self._coeffs.get(-e, 0) == c for e, c in self._coeffs.items())

    def has_integer_exponents(self):
        return all(e % 2 == 0 for e in self._coeffs)

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e2):
        """Multiply by ``t^(e2/2)``."""
        return LaurentPoly({e + e2: c for e, c in self._coeffs.items()})

    def substitute_power(self, k):
        """Return ``p(t^k)`` for a positive integer ``k``."""
        if k <= 0:
            raise ValueError("substitution power must be positive")
        return LaurentPoly({e * k: c for e, c in self._coeffs.items()})

    def divmod(self, divisor):
        """Long division from the top degree down; returns ``(quotient, remainder)``.

        Division stops once no quotient term could stay above the lowest
        exponent an exact quotient may have, so the remainder is zero exactly
        when ``divisor`` divides ``self``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = divisor.top, divisor.leading_coefficient
        span = divisor.top - divisor.bottom
        rem = dict(self._coeffs)
        quot = {}
        floor = (self.bottom if self._coeffs else 0) + span
        while rem:
            e = max(rem)
            if e < floor:
                break
            c = rem[e]
            if c % lead_c:
                break
            q = c // lead_c
            qe = e - lead_e
            quot[qe] = q
            for de, dc in divisor._coeffs.items():
                key = qe + de
                rem[key] = rem.get(key, 0) - q * dc
                if rem[key] == 0:
                    del rem[key]
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor):
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise InvalidPolynomial(f"{divisor} does not divide {self}")
        return quot

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._coeffs.items(), reverse=True))})"

    def __str__(self):
        return format_laurent(self)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    out = {}
    for ea, ca in a._coeffs.items():
        for eb, cb in b._coeffs.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return LaurentPoly(out)


def t_half_difference(e2):
    """``t^(e2/2) - t^(-e2/2)`` as a polynomial (``e2`` doubled)."""
    return LaurentPoly({e2: 1, -e2: -1}) if e2 else LaurentPoly()


class ChiSeries:
    """Coefficient stream ``delta(t) * (1 + t^-1 + t^-2 + ...)``.

    Coefficients live on exponents of one parity (doubled); below
    ``tail_start`` the stream is the constant ``tail_value``.  The tail is
    never materialised.
    """

    __slots__ = ("finite", "tail_start", "tail_value", "parity")

    def __init__(self, finite, tail_start, tail_value, parity=0):
        self.finite = {e: c for e, c in finite.items() if c and e >= tail_start}
        self.tail_start = tail_start
        self.tail_value = tail_value
        self.parity = parity % 2

    def __getitem__(self, e2):
        if (e2 - self.parity) % 2:
            return 0
        if e2 < self.tail_start:
            return self.tail_value
        return self.finite.get(e2, 0)

    @property
    def top(self):
        return max(self.finite) if self.finite else self.tail_start - 2

    def window(self, lo, hi):
        """Coefficients on ``lo <= e2 <= hi`` (doubled, matching parity)."""
        start = lo + ((self.parity - lo) % 2)
        return {e: self[e] for e in range(start, hi + 1, 2)}

    def __eq__(self, other):
        if not isinstance(other, ChiSeries):
            return NotImplemented
        lo = min(self.tail_start, other.tail_start) - 2
        hi = max(self.top, other.top) + 2
        return (self.parity == other.parity and self.tail_value == other.tail_value
                and self.window(lo, hi) == other.window(lo, hi))

    def __repr__(self):
        shown = " + ".join(f"{c}*t^{Fraction(e, 2)}" for e, c in sorted(self.finite.items(), reverse=True))
        return f"ChiSeries({shown} | {self.tail_value} below t^{Fraction(self.tail_start, 2)})"

    def times_one_minus_tinv(self):
        """``(1 - t^-1) * chi``; the tail cancels so the result is finite."""
        out = {}
        for e in range(self.tail_start - 2, self.top + 1, 2):
            if (e - self.parity) % 2:
                continue
            c = self[e] - self[e + 2]
            if c:
                out[e] = c
        return LaurentPoly(out)

    def times_poly(self, poly: LaurentPoly) -> LaurentPoly:
        """Product with a polynomial vanishing at ``t = 1`` (so the tail cancels)."""
        if poly.value_at_one() != 0 and self.tail_value != 0:
            raise InvalidPolynomial("product with a non-vanishing tail is infinite")
        if poly.is_zero():
            return LaurentPoly()
        lo = self.tail_start + poly.bottom - 2
        hi = self.top + poly.top
        out = {}
        for e in range(lo, hi + 1):
            c = sum(pc * self[e - pe] for pe, pc in poly._coeffs.items())
            if c:
                out[e] = c
        return LaurentPoly(out)


def chi_expand(delta: LaurentPoly) -> ChiSeries:
    """Expand ``delta / (1 - t^-1)`` as a stream in decreasing powers.

    ``delta`` must be symmetric with ``delta(1) == 1``.
    """
    if delta.is_zero() or not delta.is_symmetric():
        raise InvalidPolynomial(f"not symmetric: {delta}")
    if delta.value_at_one() != 1:
        raise InvalidPolynomial(f"delta(1) = {delta.value_at_one()}, expected 1")
    parity = delta.top % 2
    if any((e - parity) % 2 for e in delta.coeffs):
        raise InvalidPolynomial("mixed exponent parities")
    finite, running = {}, 0
    for e in range(delta.top, delta.bottom - 1, -2):
        running += delta[e]
        finite[e] = running
    return ChiSeries(finite, delta.bottom, running, parity)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)?\s*\*?\s*(?P<var>t)
          (?:\s*\^\s*(?:\(\s*(?P<pnum>-?\d+)\s*(?:/\s*(?P<pden>\d+)\s*)?\)
                        |(?P<num>-?\d+)(?:\s*/\s*(?P<den>\d+))?))?
        |
          (?P<const>\d+)
        )""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse strings such as ``"t^3-t^2+t^-2"``, ``"t^(1/2) - t^(-1/2)"`` or ``"2*t - 1"``.

    Grammar: ``poly := term (('+'|'-') term)*``; ``term := [int ['*']] 't' ['^' exp] | int``;
    ``exp := int ['/' '2'] | '(' int ['/' '2'] ')'``.
    """
    src = text.strip()
    if not src:
        raise InvalidPolynomial("empty polynomial")
    pos, out, first = 0, {}, True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise InvalidPolynomial(f"cannot parse {text!r} at offset {pos}")
        if m.group("sign") is None and not first:
            raise InvalidPolynomial(f"missing operator in {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            e2, c = 0, int(m.group("const"))
        else:
            c = int(m.group("coef")) if m.group("coef") else 1
            num = m.group("pnum") if m.group("pnum") is not None else m.group("num")
            den = m.group("pden") if m.group("pnum") is not None else m.group("den")
            num = 1 if num is None else int(num)
            den = 1 if den is None else int(den)
            if den not in (1, 2):
                raise InvalidPolynomial(f"exponent denominator {den} not in (1, 2)")
            e2 = 2 * num // den
        out[e2] = out.get(e2, 0) + sign * c
        pos, first = m.end(), False
    return LaurentPoly(out)


def _format_exponent(e2):
    if e2 % 2 == 0:
        return str(e2 // 2)
    return f"({e2}/2)"


def format_laurent(p: LaurentPoly, var="t") -> str:
    """Inverse of :func:`parse_laurent`."""
    if p.is_zero():
        return "0"
    parts = []
    for e2, c in p.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e2 == 0:
            body = str(mag)
        else:
            body = var if e2 == 2 else f"{var}^{_format_exponent(e2)}"
            if mag != 1:
                body = f"{mag}*{body}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
