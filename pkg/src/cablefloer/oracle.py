"""Brute-force E2 pages over F2, independent of the closed formulas.

The E1 page at v is the sum over subsets B of F[U] z(v - e_B).  The
generator U^m z(v - e_B) sits at U-level D = m + h(v - e_B), and the
differential keeps D fixed, so E1 splits into finite cube complexes

    S_D(v) = { B : h(v - e_B) <= D },

each carrying the plain cube differential.  A class of cube degree c in
level D has bidegree (c, -2D) and Maslov grading c - 2D.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .algebra import ChainComplexF2, HomologyBasis, cube_complex, homology_f2, popcount, rank_f2
from .cables import CableLink, Grading, chi_at_grading, grading_window, h_cable
from .errors import InvalidParameters

# -- minus flavour ---------------------------------------------------------


def _cube_h(L, v):
    return tuple(h_cable(L, v.minus(mask)) for mask in range(1 << L.r))


def stability_bound(hs):
    return max(hs) - min(hs) + 1


def default_ucut(hs):
    return max(hs) - min(hs) + 2


def build_e1(L: CableLink, v: Grading, ucut=None) -> ChainComplexF2:
    """Literal E1 complex with U-powers below ``ucut``.

    Cells are ``(B, m)``; each is keyed by its U-level and graded by |B|.
    """
    L.require_lspace()
    L.check_grading(v)
    hs = _cube_h(L, v)
    if ucut is None:
        ucut = default_ucut(hs)
    if ucut < stability_bound(hs):
        raise InvalidParameters(f"Ucut {ucut} below the stability bound {stability_bound(hs)}")
    return _e1_from_profile(L.r, hs, ucut)


def _e1_from_profile(r, hs, ucut):
    cells, bd = {}, {}
    for mask in range(1 << r):
        for m in range(ucut):
            cells[(mask, m)] = (m + hs[mask], popcount(mask))
    for (mask, m) in cells:
        out = []
        for i in range(r):
            if mask >> i & 1:
                face = mask ^ (1 << i)
                power = m + hs[mask] - hs[face]
                if power < ucut:
                    out.append((face, power))
        bd[(mask, m)] = out
    return ChainComplexF2(cells, bd)


@lru_cache(maxsize=None)
def _e2_relative(r, rel, ucut):
    """{(cube degree, level - h(v)): dim} for the relative profile ``rel``."""
    C = _e1_from_profile(r, rel, ucut)
    lo = min(rel)
    out = {}
    for (level, c), dim in homology_f2(C).items():
        if level - lo < ucut:  # only levels whose generators all fit under the cut
            out[(c, level)] = dim
    return out


def e2_bigraded(L: CableLink, v: Grading, ucut=None):
    """E2 page at v as {(cube degree, level D): dim}."""
    L.require_lspace()
    L.check_grading(v)
    hs = _cube_h(L, v)
    if ucut is None:
        ucut = default_ucut(hs)
    if ucut < stability_bound(hs):
        raise InvalidParameters(f"Ucut {ucut} below the stability bound {stability_bound(hs)}")
    h0 = hs[0]
    rel = tuple(x - h0 for x in hs)
    return {(c, d + h0): n for (c, d), n in _e2_relative(L.r, rel, ucut).items()}


def e2_minus(L: CableLink, v: Grading, ucut=None):
    """Total-degree collapse of the E2 page; equals HFL^-(v) for cable links."""
    from .homology import GradedDim

    out = {}
    for (c, d), n in e2_bigraded(L, v, ucut).items():
        out[c - 2 * d] = out.get(c - 2 * d, 0) + n
    return GradedDim(out)


# -- sublevel cube homology with representatives ---------------------------


@lru_cache(maxsize=None)
def _level_homology(r, masks):
    C = cube_complex(r, masks)
    return {c: HomologyBasis(C, 0, c) for c in range(r + 1)}


class LevelHomology:
    """Homology of every level of E1(w), with representatives."""

    def __init__(self, r, hs):
        self.r = r
        self.hs = hs
        self.levels = {}
        for D in range(min(hs), max(hs)):
            masks = frozenset(b for b in range(1 << r) if hs[b] <= D)
            bases = _level_homology(r, masks)
            kept = {c: hb for c, hb in bases.items() if hb.dim}
            if kept:
                self.levels[D] = kept

    def classes(self):
        for D, by_c in sorted(self.levels.items()):
            for c, hb in sorted(by_c.items()):
                for idx in range(hb.dim):
                    yield D, c, idx

    def image_coordinates(self, D, c, idx, target, shift):
        """Coordinates in ``target`` (level D + shift) of the class pushed by inclusion."""
        hb = self.levels[D][c]
        labels = hb.rep_labels(idx)
        tgt = target.levels.get(D + shift, {}).get(c)
        if tgt is None:
            return 0
        return tgt.coordinates(tgt.vector(labels))


def _wh(L, w):
    return tuple(h_cable(L, w.minus(mask)) for mask in range(1 << L.r))


def u_map_rank(L: CableLink, v: Grading, mask: int) -> int:
    """Rank of U_B : HFL(v) -> HFL(v - e_B) for the subset encoded by ``mask``."""
    L.require_lspace()
    L.check_grading(v)
    src = LevelHomology(L.r, _wh(L, v))
    tgt = LevelHomology(L.r, _wh(L, v.minus(mask)))
    shift = popcount(mask)
    images = [src.image_coordinates(D, c, idx, tgt, shift) for D, c, idx in src.classes()]
    # coordinates from different target slots occupy different bit ranges only
    # within one slot, so rank is summed per (level, degree)
    by_slot = {}
    for (D, c, idx), img in zip(src.classes(), images):
        by_slot.setdefault((D, c), []).append(img)
    return sum(rank_f2(vs) for vs in by_slot.values())


def hfl_dim_oracle(L, v):
    return LevelHomology(L.r, _wh(L, v))


# -- hat flavour -----------------------------------------------------------


@dataclass
class HatPage:
    dims: object                     # GradedDim of E2-hat by total degree
    bigraded: dict                   # (cube degree |B|, total degree) -> dim
    clean: bool
    warnings: list = field(default_factory=list)

    @property
    def flag(self):
        return "clean" if self.clean else "possible-higher-differentials"


def _hat_profile(L, v):
    r = L.r
    out = {}
    for x in product((-2, 0, 2), repeat=r):
        w = Grading(tuple(a + b for a, b in zip(v.coords, x)))
        out[x] = h_cable(L, w)
    return out


def e2_hat(L: CableLink, v: Grading) -> HatPage:
    """E2 of the hat spectral sequence built from E1-hat = sum_B HFL^-(v + e_B)."""
    L.require_strict("e2_hat")
    L.check_grading(v)
    prof = _hat_profile(L, v)
    h0 = prof[(0,) * L.r]
    rel = tuple(sorted((k, val - h0) for k, val in prof.items()))
    bigraded = _e2_hat_relative(L.r, rel)
    from .homology import GradedDim

    shifted = {(p, M - 2 * h0): n for (p, M), n in bigraded.items()}
    dims = {}
    for (p, M), n in shifted.items():
        dims[M] = dims.get(M, 0) + n
    clean = True
    warnings = []
    for (p, M) in shifted:
        for (q, M2) in shifted:
            if M2 == M - 1 and p - q >= 2:
                clean = False
                warnings.append(f"classes at cube degrees {p} and {q} (total {M}, {M2}) "
                                f"could be joined by a higher differential")
    return HatPage(GradedDim(dims), shifted, clean, warnings)


@lru_cache(maxsize=None)
def _e2_hat_relative(r, rel):
    prof = dict(rel)

    def hs_at(B):
        # cube of h(v + e_B - e_A) over A
        base = tuple(2 if B >> i & 1 else 0 for i in range(r))
        out = []
        for A in range(1 << r):
            x = tuple(base[i] - (2 if A >> i & 1 else 0) for i in range(r))
            out.append(prof[x])
        return tuple(out)

    pages = {B: LevelHomology(r, hs_at(B)) for B in range(1 << r)}
    cells, bd = {}, {}
    for B, page in pages.items():
        nb = popcount(B)
        for D, c, idx in page.classes():
            M = c - 2 * D - nb
            cells[(B, D, c, idx)] = (M - nb, nb)
    for (B, D, c, idx) in cells:
        out = []
        for i in range(r):
            if B >> i & 1:
                tgt_B = B ^ (1 << i)
                coords = pages[B].image_coordinates(D, c, idx, pages[tgt_B], 1)
                j = 0
                while coords:
                    if coords & 1:
                        out.append((tgt_B, D + 1, c, j))
                    coords >>= 1
                    j += 1
        bd[(B, D, c, idx)] = out
    # over F2 the sum of the U_i components is the differential
    merged = {}
    for cell, targets in bd.items():
        acc = set()
        for t in targets:
            acc ^= {t}
        merged[cell] = sorted(acc)
    C = ChainComplexF2(cells, merged)
    out = {}
    for (key, p), n in homology_f2(C).items():
        out[(p, key + p)] = out.get((p, key + p), 0) + n
    return out


# -- Euler characteristic ----------------------------------------------------


@dataclass
class EulerReport:
    checked: int
    mismatches: list

    @property
    def ok(self):
        return not self.mismatches


def euler_check(L: CableLink, window) -> EulerReport:
    """Compare the signed count of e2_minus with the inclusion-exclusion chi at every grading."""
    lo, hi = window
    mismatches, count = [], 0
    for v in grading_window(L, lo, hi):
        count += 1
        e = e2_minus(L, v).euler()
        chi = chi_at_grading(L, v)
        if e != chi:
            mismatches.append((v, e, chi))
    return EulerReport(count, mismatches)
