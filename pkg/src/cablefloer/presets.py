"""Named links and the grading-family tables that summarise their HFL^-.

A table row is a family of Alexander gradings together with a Maslov
formula.  Rows are checked against :func:`hfl_minus` over a window, and the
window is checked to be covered: every grading with nonzero homology must
belong to exactly one row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cables import CableLink, Grading, classify, grading_window
from .homology import GradedDim, hfl_minus
from .knots import TREFOIL, UNKNOT

PRESET_LINKS = {
    "T22": (UNKNOT, 2, 1, 1),
    "T33": (UNKNOT, 3, 1, 1),
    "T44": (UNKNOT, 4, 1, 1),
    "T55": (UNKNOT, 5, 1, 1),
    "T46": (UNKNOT, 2, 2, 3),
    "T69": (UNKNOT, 3, 2, 3),
    "CABLE-TREFOIL-46": (TREFOIL, 2, 2, 3),
    "CABLE-TREFOIL-22": (TREFOIL, 2, 1, 1),
}


def preset_link(name: str) -> CableLink:
    try:
        K, r, m, n = PRESET_LINKS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(sorted(PRESET_LINKS))}") from None
    return classify(K, r, m, n)


@dataclass
class Row:
    pattern: str
    homology: str
    member: Callable        # values (Fractions) -> bool
    formula: Callable       # values -> {maslov: dim}
    note: str = ""

    def dims(self, values):
        return GradedDim(self.formula(values))


@dataclass
class TableSpec:
    preset: str
    caption: str
    rows: list
    window: tuple           # doubled bounds for verification
    notes: list = field(default_factory=list)

    def sorted_rows(self):
        return sorted(self.rows, key=lambda row: row.pattern)


def _point(values, pattern, homology, dims):
    target = tuple(Fraction(x) for x in values)
    return Row(pattern, homology, lambda v: tuple(v) == target, lambda v: dims)


def _pair_line(fixed, bound, side, homology, terms, note=""):
    """(fixed, k) and (k, fixed) with k <= bound (side '<=') or k >= bound."""
    fixed, bound = Fraction(fixed), Fraction(bound)
    ok = (lambda k: k <= bound) if side == "<=" else (lambda k: k >= bound)

    def member(v):
        a, b = v
        return (a == fixed and ok(b)) or (b == fixed and ok(a))

    def formula(v):
        a, b = v
        k = b if a == fixed else a
        return {int(2 * k + c): d for c, d in terms}

    f = _fmt(fixed)
    sym = "≤" if side == "<=" else "≥"
    return Row(f"({f},k) and (k,{f}), k {sym} {_fmt(bound)}", homology, member, formula, note)


def _quadrant(r, bound, homology, terms):
    bound = Fraction(bound)
    names = "abc"[:r]

    def member(v):
        return all(x <= bound for x in v)

    def formula(v):
        s = sum(v)
        return {int(2 * s + c): d for c, d in terms}

    pattern = f"({','.join(names)}), {','.join(names)} ≤ {_fmt(bound)}"
    return Row(pattern, homology, member, formula)


def _annotated(row, note):
    row.note = note
    return row


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _t33_axis_row():
    def member(v):
        zeros = sum(1 for x in v if x == 0)
        neg = [x for x in v if x != 0]
        return zeros == 2 and len(neg) == 1 and neg[0] < 0

    def formula(v):
        k = min(v)
        return {int(2 * k - 2): 1, int(2 * k - 3): 1}

    return Row("(0,0,k), (0,k,0) and (k,0,0), k < 0", "F(2k-2) + F(2k-3)", member, formula)


def table_spec(preset: str) -> TableSpec:
    if preset == "T22":
        rows = [
            _point(("1/2", "1/2"), "(1/2,1/2)", "F(0)", {0: 1}),
            _quadrant(2, "-1/2", "F(2a+2b) + F(2a+2b-1)", [(0, 1), (-1, 1)]),
        ]
        return TableSpec(preset, "Maslov gradings for the (2,2) torus link", rows, (-13, 13))
    if preset == "T33":
        rows = [
            _point((1, 1, 1), "(1,1,1)", "F(0)", {0: 1}),
            _point((0, 0, 0), "(0,0,0)", "F(-2) + 2F(-3)", {-2: 1, -3: 2}),
            _t33_axis_row(),
            _quadrant(3, -1, "F(2a+2b+2c) + 2F(2a+2b+2c-1) + F(2a+2b+2c-2)", [(0, 1), (-1, 2), (-2, 1)]),
        ]
        return TableSpec(preset, "Maslov gradings for the (3,3) torus link", rows, (-12, 12))
    if preset == "T46":
        rows = [
            _point((4, 4), "(4,4)", "F(0)", {0: 1}),
            _point((2, 2), "(2,2)", "F(-2)", {-2: 1}),
            _point((1, 1), "(1,1)", "F(-4)", {-4: 1}),
            _point((0, 0), "(0,0)", "F(-6)", {-6: 1}),
            _point((-1, -1), "(-1,-1)", "F(-8)", {-8: 1}),
            _pair_line(-2, -2, "<=", "F(2k-6) + F(2k-7)", [(-6, 1), (-7, 1)]),
            _annotated(_point((-3, -3), "(-3,-3)", "F(-14)", {-14: 1}),
                       "printed table has F(-12); h(-3,-3) = 7 forces F(-14)"),
            _quadrant(2, -4, "F(2a+2b) + F(2a+2b-1)", [(0, 1), (-1, 1)]),
        ]
        return TableSpec(preset, "Maslov gradings for the (4,6) torus link", rows, (-36, 36),
                         [r.pattern + ": " + r.note for r in rows if r.note])
    if preset == "CABLE-TREFOIL-46":
        note = "printed table has k ≥ {}; the homology formula gives k ≤ {} (the ray points down, as in the figure)"
        rows = [
            _point((6, 6), "(6,6)", "F(0)", {0: 1}),
            _point((3, 3), "(3,3)", "F(-2)", {-2: 1}),
            _point((2, 2), "(2,2)", "F(-4)", {-4: 1}),
            _pair_line(0, 0, "<=", "F(2k-6) + F(2k-7)", [(-6, 1), (-7, 1)], note.format(0, 0)),
            _point((-1, -1), "(-1,-1)", "F(-10)", {-10: 1}),
            _point((-2, -2), "(-2,-2)", "F(-12)", {-12: 1}),
            _pair_line(-3, -3, "<=", "F(2k-8) + F(2k-9)", [(-8, 1), (-9, 1)], note.format(-3, -3)),
            _pair_line(-4, -4, "<=", "F(2k-10) + F(2k-11)", [(-10, 1), (-11, 1)], note.format(10, -4)),
            _point((-5, -5), "(-5,-5)", "F(-22)", {-22: 1}),
            _quadrant(2, -6, "F(2a+2b) + F(2a+2b-1)", [(0, 1), (-1, 1)]),
        ]
        return TableSpec(preset, "Maslov gradings for the (4,6) cable of the trefoil", rows, (-40, 40),
                         [r.pattern + ": " + r.note for r in rows if r.note])
    raise KeyError(f"no table for preset {preset!r}; tables exist for T22, T33, T46, CABLE-TREFOIL-46")


TABLE_PRESETS = ("T22", "T33", "T46", "CABLE-TREFOIL-46")


@dataclass
class TableCheck:
    checked: int
    mismatches: list        # (grading, row pattern, expected, computed)
    uncovered: list         # gradings with homology but no row
    overlaps: list          # gradings matched by two rows

    @property
    def ok(self):
        return not (self.mismatches or self.uncovered or self.overlaps)


def verify_table(spec: TableSpec, window=None) -> TableCheck:
    L = preset_link(spec.preset)
    lo, hi = window or spec.window
    mism, uncovered, overlaps = [], [], []
    count = 0
    for v in grading_window(L, lo, hi):
        count += 1
        values = v.values()
        hits = [row for row in spec.rows if row.member(values)]
        got = hfl_minus(L, v)
        if len(hits) > 1:
            overlaps.append((v, [row.pattern for row in hits]))
        if not hits:
            if got:
                uncovered.append((v, got))
            continue
        expect = hits[0].dims(values)
        if expect != got:
            mism.append((v, hits[0].pattern, expect, got))
    return TableCheck(count, mism, uncovered, overlaps)


def grid_cells(L: CableLink, lo, hi):
    """Nonzero HFL^- for r = 2 on a square window, as {(a2, b2): GradedDim}."""
    out = {}
    for v in grading_window(L, lo, hi):
        d = hfl_minus(L, v)
        if d:
            out[v.coords] = d
    return out


__all__ = ["PRESET_LINKS", "TABLE_PRESETS", "TableSpec", "Row", "preset_link", "table_spec",
           "verify_table", "grid_cells", "Grading"]
