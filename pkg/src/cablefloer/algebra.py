"""F2 linear algebra, exterior-algebra elements and graded chain complexes.

Vectors over F2 are Python ints used as bitsets.  Exterior monomials are
bitmasks over the generators z_0 .. z_{r-1} (0-based here; the docs count
from 1).
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from math import comb

from .errors import ChainComplexError, InvalidParameters


# -- F2 row reduction ----------------------------------------------------

class Echelon:
    """Incrementally built F2 row-echelon basis.

    Each stored row carries a tag bitset recording which inserted vectors
    it is a combination of, so reductions can be traced back.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}  # pivot bit -> (row, tag)

    def reduce(self, vec, tag=0):
        while vec:
            p = vec.bit_length() - 1
            hit = self.rows.get(p)
            if hit is None:
                break
            vec ^= hit[0]
            tag ^= hit[1]
        return vec, tag

    def full_reduce(self, vec, tag=0):
        """Reduce every bit that has a pivot, not only the leading one."""
        out = 0
        while vec:
            p = vec.bit_length() - 1
            hit = self.rows.get(p)
            if hit is None:
                out |= 1 << p
                vec ^= 1 << p
                continue
            vec ^= hit[0]
            tag ^= hit[1]
        return out, tag

    def add(self, vec, tag=0):
        """Insert; returns True if ``vec`` was independent of the stored rows."""
        vec, tag = self.reduce(vec, tag)
        if not vec:
            return False
        self.rows[vec.bit_length() - 1] = (vec, tag)
        return True

    def __len__(self):
        return len(self.rows)

    def contains(self, vec):
        return self.reduce(vec)[0] == 0


def rank_f2(vectors):
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def kernel_f2(columns, ncols=None):
    """Kernel of the map sending basis vector j to ``columns[j]``; returns bitsets over j."""
    ech = Echelon()
    kernel = []
    for j, col in enumerate(columns):
        vec, tag = ech.reduce(col, 1 << j)
        if vec:
            ech.rows[vec.bit_length() - 1] = (vec, tag)
        else:
            kernel.append(tag)
    return kernel


# -- exterior algebra ----------------------------------------------------

def popcount(x):
    return bin(x).count("1")


class ExtElement:
    """F2 combination of monomials ``U^k z_mask``; stored as a frozenset of ``(mask, k)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = set()
        for t in terms:
            t = (t, 0) if isinstance(t, int) else (int(t[0]), int(t[1]))
            acc ^= {t}
        self.terms = frozenset(acc)

    @classmethod
    def one(cls):
        return cls([(0, 0)])

    @classmethod
    def z(cls, i):
        return cls([(1 << i, 0)])

    @classmethod
    def monomial(cls, mask, upower=0):
        return cls([(mask, upower)])

    def __add__(self, other):
        return _raw(self.terms.symmetric_difference(other.terms))

    __sub__ = __add__

    def __xor__(self, other):
        return self.wedge(other)

    def wedge(self, other):
        acc = set()
        for ma, ua in self.terms:
            for mb, ub in other.terms:
                if ma & mb:
                    continue
                acc ^= {(ma | mb, ua + ub)}
        return _raw(acc)

    def times_u(self, k=1):
        return _raw({(m, u + k) for m, u in self.terms})

    def __eq__(self, other):
        return isinstance(other, ExtElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {popcount(m) for m, _ in self.terms}

    def masks(self):
        """Bitset over monomial masks, ignoring U-powers (for U-free elements)."""
        out = 0
        for m, _ in self.terms:
            out ^= 1 << m
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, u in sorted(self.terms):
            z = "^".join(f"z{i + 1}" for i in range(m.bit_length()) if m >> i & 1) or "1"
            parts.append((f"U^{u}*" if u else "") + z)
        return " + ".join(parts)


def _raw(terms):
    # terms already reduced mod 2
    out = ExtElement()
    out.terms = frozenset(terms)
    return out


def cube_diff(x: ExtElement) -> ExtElement:
    """Drop one generator in every possible way."""
    acc = set()
    for mask, u in x.terms:
        bits = mask
        while bits:
            low = bits & -bits
            acc ^= {(mask ^ low, u)}
            bits ^= low
    return _raw(acc)


def truncated_diff(b: int):
    """The b-truncated differential: multiply by U on monomials of degree <= b."""
    if b < 0:
        raise InvalidParameters("b must be >= 0")

    def d(x: ExtElement) -> ExtElement:
        acc = set()
        for mask, u in x.terms:
            bump = 1 if popcount(mask) <= b else 0
            bits = mask
            while bits:
                low = bits & -bits
                acc ^= {(mask ^ low, u + bump)}
                bits ^= low
        return _raw(acc)

    return d


def weight(mask, b):
    return min(popcount(mask), b)


def reduced_generators(r):
    """z_1 + z_j for j = 2..r (signs are irrelevant over F2)."""
    return [ExtElement([(1, 0), (1 << j, 0)]) for j in range(1, r)]


def reduced_basis(r, degree=None):
    """Wedges of the reduced generators, by degree, in a fixed order."""
    gens = reduced_generators(r)
    degrees = range(r) if degree is None else [degree]
    out = []
    for p in degrees:
        for combo in combinations(range(r - 1), p):
            el = ExtElement.one()
            for j in combo:
                el = el.wedge(gens[j])
            out.append(el)
    return out


def monomials_of_degree(r, p):
    return [sum(1 << i for i in c) for c in combinations(range(r), p)]


# -- chain complexes -----------------------------------------------------

class ChainComplexF2:
    """Finite graded F2 complex.

    ``cells`` maps a label to ``(key, degree)``; ``boundary`` maps a label to
    the labels in its boundary.  The differential must keep ``key`` and
    lower ``degree`` by one; both that and d^2 = 0 are checked on
    construction.
    """

    def __init__(self, cells, boundary, check=True):
        self.cells = dict(cells)
        self.boundary = {c: tuple(boundary.get(c, ())) for c in self.cells}
        groups = defaultdict(list)
        for label, (key, deg) in self.cells.items():
            groups[(key, deg)].append(label)
        self.groups = {k: sorted(v, key=repr) for k, v in groups.items()}
        self._index = {}
        for labels in self.groups.values():
            for i, lab in enumerate(labels):
                self._index[lab] = i
        if check:
            self._check()

    def _check(self):
        for label, targets in self.boundary.items():
            key, deg = self.cells[label]
            for t in targets:
                if t not in self.cells:
                    raise ChainComplexError(f"boundary of {label!r} hits unknown cell {t!r}")
                if self.cells[t] != (key, deg - 1):
                    raise ChainComplexError(f"boundary {label!r} -> {t!r} breaks the grading")
        for label in self.cells:
            key, deg = self.cells[label]
            if self.column(self.boundary_vector(label), (key, deg - 1)):
                raise ChainComplexError(f"d^2 != 0 at {label!r}")

    def boundary_vector(self, label):
        vec = 0
        for t in self.boundary[label]:
            vec ^= 1 << self._index[t]
        return vec

    def column(self, vec, slot):
        """Apply d to a vector living in ``slot = (key, degree)``."""
        key, deg = slot
        labels = self.groups.get((key, deg), [])
        out = 0
        i = 0
        while vec:
            if vec & 1:
                out ^= self.boundary_vector(labels[i])
            vec >>= 1
            i += 1
        return out

    def slots(self):
        return sorted(self.groups, key=repr)

    def matrix(self, key, deg):
        """Columns of d: C_(key,deg) -> C_(key,deg-1)."""
        return [self.boundary_vector(lab) for lab in self.groups.get((key, deg), [])]

    def homology(self):
        return homology_f2(self)

    def homology_basis(self, key, deg):
        return HomologyBasis(self, key, deg)


def homology_f2(C: ChainComplexF2) -> dict:
    """dim ker - dim im per ``(key, degree)``; zero slots are omitted."""
    ranks = {slot: rank_f2(C.matrix(*slot)) for slot in C.groups}
    out = {}
    for (key, deg), labels in C.groups.items():
        dim = len(labels) - ranks[(key, deg)] - ranks.get((key, deg + 1), 0)
        if dim:
            out[(key, deg)] = dim
    return out


class HomologyBasis:
    """Representatives for H at one slot, with a coordinate map for cycles."""

    def __init__(self, C: ChainComplexF2, key, deg):
        self.labels = C.groups.get((key, deg), [])
        cycles = kernel_f2(C.matrix(key, deg))
        boundaries = C.matrix(key, deg + 1)
        self._ech = Echelon()
        for b in boundaries:
            self._ech.add(b, 0)
        self.reps = []
        for z in cycles:
            if self._ech.add(z, 1 << len(self.reps)):
                self.reps.append(z)

    @property
    def dim(self):
        return len(self.reps)

    def coordinates(self, cycle):
        vec, tag = self._ech.reduce(cycle, 0)
        if vec:
            raise ChainComplexError("vector is not a cycle of this slot")
        return tag

    def vector(self, label_set):
        index = {lab: i for i, lab in enumerate(self.labels)}
        out = 0
        for lab in label_set:
            out ^= 1 << index[lab]
        return out

    def rep_labels(self, i):
        vec = self.reps[i]
        return [lab for j, lab in enumerate(self.labels) if vec >> j & 1]


def cube_complex(r, masks=None):
    """The cube complex on the given subsets (must be closed under taking faces)."""
    allowed = set(range(1 << r)) if masks is None else set(masks)
    cells = {m: (0, popcount(m)) for m in allowed}
    bd = {m: [m ^ (1 << i) for i in range(r) if m >> i & 1] for m in allowed}
    return ChainComplexF2(cells, bd)


def truncated_complex(r, b, ucut):
    """(E_r[U], d^(b)) with U-powers below ``ucut``; keyed by the conserved slot m + w(mask)."""
    cells, bd = {}, {}
    for mask in range(1 << r):
        w = weight(mask, b)
        for m in range(ucut):
            cells[(mask, m)] = (m + w, popcount(mask))
    for (mask, m) in cells:
        w = weight(mask, b)
        out = []
        for i in range(r):
            if mask >> i & 1:
                face = mask ^ (1 << i)
                target = (face, m + w - weight(face, b))
                if target in cells:
                    out.append(target)
        bd[(mask, m)] = out
    # targets past the U-cut are dropped; w is monotone, so d^2 = 0 survives
    return ChainComplexF2(cells, bd)


def homology_d_b(r, b, ucut=None):
    """Homology dims of (E_r[U], d^(b)) per exterior degree, from complete slots."""
    if ucut is None:
        ucut = b + 2
    C = truncated_complex(r, b, ucut)
    out = defaultdict(int)
    for (slot, deg), dim in homology_f2(C).items():
        if slot < ucut:
            out[deg] += dim
    return dict(out)


def kernel_dims_cube(r):
    """dim ker(d) on each exterior degree of the plain cube."""
    out = {}
    for p in range(r + 1):
        cols = []
        lower = {m: i for i, m in enumerate(monomials_of_degree(r, p - 1))} if p else {}
        for mask in monomials_of_degree(r, p):
            vec = 0
            for i in range(r):
                if mask >> i & 1:
                    vec ^= 1 << lower[mask ^ (1 << i)]
            cols.append(vec)
        out[p] = len(kernel_f2(cols))
    return out


def in_span(elements, target):
    ech = Echelon()
    for e in elements:
        ech.add(e.masks())
    return ech.contains(target.masks())


# -- ideals in the reduced algebra ---------------------------------------

class IdealPiece:
    """Graded piece of A^red / I at one Alexander grading."""

    def __init__(self, dims, basis):
        self.dims = dims        # exterior degree p -> dimension
        self.basis = basis      # list of ExtElement representatives

    @property
    def total(self):
        return sum(self.dims.values())

    def __repr__(self):
        return f"IdealPiece(dims={self.dims}, basis={self.basis})"


def relation_monomial(mask, beta, big):
    """Is z_mask a relation: some U_S with S inside ``big``, disjoint from mask, |S|+|mask| = beta+1?"""
    return popcount(mask | big) >= beta + 1


def ideal_graded_piece(r: int, beta: int, v, power: int = 0) -> IdealPiece:
    """[A^red / (U_1...U_r)^power I_beta](v) for an Alexander grading ``v`` with v <= 0.

    ``v`` is an ordinary integer vector.  With ``power = 0`` this is the
    quotient by I_beta itself and ``v`` must have maximum 0.
    """
    if not 0 <= beta <= r - 1:
        raise InvalidParameters(f"beta must lie in 0..{r - 1}, got {beta}")
    v = list(v)
    if len(v) != r or any(x > 0 for x in v):
        raise InvalidParameters(f"grading {v} must have {r} non-positive entries")
    if power == 0 and max(v) != 0:
        raise InvalidParameters(f"grading {v} must have maximum 0")
    depth = [-x for x in v]
    if all(d >= power for d in depth):
        big = sum(1 << i for i, d in enumerate(depth) if d >= power + 1)
        dead = lambda mask: relation_monomial(mask, beta, big)
    else:
        dead = lambda mask: False
    dims, basis = {}, []
    for p in range(r):
        keep = 0
        for mask in monomials_of_degree(r, p):
            if not dead(mask):
                keep |= 1 << mask
        ech = Echelon()
        count = 0
        for el in reduced_basis(r, p):
            if ech.add(el.masks() & keep):
                basis.append(el)
                count += 1
        if count:
            dims[p] = count
    return IdealPiece(dims, basis)


def quotient_span_dim(r, beta, v, elements, power=0):
    """Dimension of the image of ``elements`` in the graded piece at ``v``."""
    depth = [-x for x in v]
    if all(d >= power for d in depth):
        big = sum(1 << i for i, d in enumerate(depth) if d >= power + 1)
    else:
        big = None
    keep = 0
    for mask in range(1 << r):
        if big is None or not relation_monomial(mask, beta, big):
            keep |= 1 << mask
    return rank_f2([e.masks() & keep for e in elements])


def binomial(n, k):
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)
