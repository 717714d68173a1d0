"""The quadratic space over GF(2) carried by an even lattice mod 2.

Vectors of the rank-n reduction are bitmask ints (bit i = coordinate i
in the lattice basis); the quadratic form is q(v) = (v, v)/2 mod 2,
tabulated over all 2^n vectors, and the polarization b(u, v) =
q(u+v)+q(u)+q(v) is the reduced bilinear form. Matrices over GF(2) are
tuples of column bitmasks.

Totally singular subspaces of half dimension are enumerated by orderly
generation: a subspace is held as its reduced-row-echelon row tuple
(descending pivots), the parent of a dimension-k member is the tuple
with its smallest-pivot row removed, and children are produced only
from their unique parent, so the full census needs no dedup set. The
candidate bookkeeping uses 2^n-bit masks over the vector universe.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotIsometry, WrongDimension
from . import lattice as lat


class Mod2QuadSpace:
    """q(v) = (half the even Gram norm) mod 2, tabulated."""

    __slots__ = ("dim", "gram", "q")

    def __init__(self, gram):
        n = len(gram)
        if any(len(r) != n for r in gram):
            raise DimensionMismatch("gram must be square")
        if any(gram[i][i] % 2 for i in range(n)):
            raise WrongDimension("gram is not even; no quadratic refinement")
        self.dim = n
        self.gram = tuple(tuple(r) for r in gram)
        q = []
        for v in range(1 << n):
            coords = [(v >> j) & 1 for j in range(n)]
            norm = sum(coords[i] * gram[i][j] * coords[j]
                       for i in range(n) for j in range(n))
            q.append((norm // 2) % 2)
        self.q = tuple(q)

    def bilinear(self, u: int, v: int) -> int:
        return self.q[u ^ v] ^ self.q[u] ^ self.q[v]

    def singular_nonzero_count(self) -> int:
        return sum(1 for v in range(1, 1 << self.dim) if self.q[v] == 0)

    def is_plus_type(self) -> bool:
        """Arf invariant 0: 2^(n-1) + 2^(n/2 - 1) - 1 nonzero singular."""
        n = self.dim
        if n % 2:
            return False
        return (self.singular_nonzero_count()
                == (1 << (n - 1)) + (1 << (n // 2 - 1)) - 1)


def standard_space(basis=None) -> Mod2QuadSpace:
    """The rank-10 space of the bundled even sublattice basis."""
    if basis is None:
        basis = lat.e10_basis()
    return Mod2QuadSpace(lat.gram_of(basis))


# ---------------------------------------------------------------------------
# GF(2) matrices as column bitmasks


def mat2_from_int(m) -> tuple:
    """Columns of an integer matrix reduced mod 2."""
    n = len(m)
    return tuple(sum(((m[i][j] % 2) & 1) << i for i in range(n))
                 for j in range(n))


def mat2_identity(n) -> tuple:
    return tuple(1 << j for j in range(n))


def mat2_apply(cols, v: int) -> int:
    r = 0
    j = 0
    while v:
        if v & 1:
            r ^= cols[j]
        v >>= 1
        j += 1
    return r


def mat2_mul(a, b) -> tuple:
    return tuple(mat2_apply(a, bj) for bj in b)


def mat2_add(a, b) -> tuple:
    return tuple(x ^ y for x, y in zip(a, b))


def mat2_order(cols) -> int:
    n = len(cols)
    ident = mat2_identity(n)
    cur = cols
    for k in range(1, (1 << (2 * n)) + 1):
        if cur == ident:
            return k
        cur = mat2_mul(cols, cur)
    raise NotIsometry("matrix mod 2 is not invertible")


def mat2_poly_at(cols, coeffs) -> tuple:
    """p(M) over GF(2): coeffs low degree first, each taken mod 2."""
    n = len(cols)
    acc = (0,) * n
    pw = mat2_identity(n)
    for c in coeffs:
        if c % 2:
            acc = mat2_add(acc, pw)
        pw = mat2_mul(cols, pw)
    return acc


def mat2_kernel(cols) -> list:
    """Basis bitmasks of {v : M v = 0}."""
    n = len(cols)
    rows = [sum(((cols[j] >> i) & 1) << j for j in range(n))
            for i in range(n)]
    red = []
    for r in rows:
        for pr in red:
            if (r >> (pr.bit_length() - 1)) & 1:
                r ^= pr
        if r:
            red.append(r)
            red.sort(reverse=True)
    changed = True
    while changed:
        changed = False
        for i in range(len(red)):
            for j in range(len(red)):
                if i != j and (red[i] >> (red[j].bit_length() - 1)) & 1:
                    red[i] ^= red[j]
                    changed = True
    pivots = {r.bit_length() - 1 for r in red}
    ker = []
    for free in range(n):
        if free in pivots:
            continue
        v = 1 << free
        for r in red:
            if (r >> free) & 1:
                v ^= 1 << (r.bit_length() - 1)
        ker.append(v)
    return ker


def rref_rows(vectors) -> tuple:
    """Canonical RREF row tuple (descending pivots) of a span."""
    red = []
    for r in vectors:
        for pr in red:
            if (r >> (pr.bit_length() - 1)) & 1:
                r ^= pr
        if r:
            red.append(r)
            red.sort(reverse=True)
    changed = True
    while changed:
        changed = False
        for i in range(len(red)):
            for j in range(len(red)):
                if i != j and (red[i] >> (red[j].bit_length() - 1)) & 1:
                    red[i] ^= red[j]
                    changed = True
    return tuple(sorted(red, reverse=True))


def span_of(rows):
    s = {0}
    for v in rows:
        s |= {x ^ v for x in s}
    return s


def subspace_contains(rows, v: int) -> bool:
    for r in rows:
        if (v >> (r.bit_length() - 1)) & 1:
            v ^= r
    return v == 0


def intersection_dim(rows_a, rows_b) -> int:
    red = []
    for r in list(rows_a) + list(rows_b):
        for pr in red:
            if (r >> (pr.bit_length() - 1)) & 1:
                r ^= pr
        if r:
            red.append(r)
            red.sort(reverse=True)
    return len(rows_a) + len(rows_b) - len(red)


# ---------------------------------------------------------------------------
# action analysis


class KernelRecord:
    __slots__ = ("factor", "multiplicity", "dimension", "totally_singular",
                 "basis")

    def __init__(self, factor, multiplicity, dimension, totally_singular,
                 basis):
        self.factor = factor
        self.multiplicity = multiplicity
        self.dimension = dimension
        self.totally_singular = totally_singular
        self.basis = basis


class Mod2ActionReport:
    __slots__ = ("order", "preserves_form", "invariant_subspaces")

    def __init__(self, order, preserves_form, invariant_subspaces):
        self.order = order
        self.preserves_form = preserves_form
        self.invariant_subspaces = invariant_subspaces


def mod2_action_analysis(m, basis=None) -> Mod2ActionReport:
    """Order and irreducible-factor kernels of an isometry reduced mod 2.

    m: integer matrix on the stored even-sublattice basis; must preserve
    its Gram matrix (NotIsometry otherwise). Kernels are of p_i(m mod 2)
    for each irreducible factor p_i of the mod-2 characteristic
    polynomial, each reported with its dimension and whether the
    quadratic form vanishes on all of it.
    """
    if basis is None:
        basis = lat.e10_basis()
    ge = lat.gram_of(basis)
    if not lat.is_isometry_of(m, ge):
        raise NotIsometry("matrix does not preserve the sublattice form")
    space = Mod2QuadSpace(ge)
    cols = mat2_from_int(m)
    order = mat2_order(cols)
    cp = lat.char_poly(m)
    records = []
    for coeffs, mult in lat.mod2_reduce_and_factor(cp):
        ker = mat2_kernel(mat2_poly_at(cols, coeffs))
        rows = rref_rows(ker)
        sing = all(space.q[v] == 0 for v in span_of(rows))
        records.append(KernelRecord(tuple(coeffs), mult, len(rows), sing,
                                    rows))
    return Mod2ActionReport(order, _preserves(space, cols), records)


def _preserves(space, cols) -> bool:
    return all(space.q[mat2_apply(cols, v)] == space.q[v]
               for v in range(1 << space.dim))


# ---------------------------------------------------------------------------
# the Lagrangian census


class LagrangianCensus:
    """All half-dimension totally singular subspaces, canonically sorted.

    members: RREF row tuples in ascending tuple order; reference: the
    first member; class_parity[i]: dim(members[i] meet reference) mod 2,
    flipped so 0 means the same class as the reference (intersection
    dimension congruent to half-dim mod 2).
    """

    __slots__ = ("space", "members", "reference", "class_parity")

    def __init__(self, space, members):
        self.space = space
        self.members = members
        self.reference = members[0]
        half = space.dim // 2
        self.class_parity = tuple(
            (intersection_dim(rows, self.reference) - half) % 2
            for rows in members)

    def class_sizes(self):
        ones = sum(self.class_parity)
        return (len(self.members) - ones, ones)

    def invariant_members(self, cols):
        """Members L with (M mod 2) L = L, for a GF(2) column matrix."""
        out = []
        for rows in self.members:
            if all(subspace_contains(rows, mat2_apply(cols, r))
                   for r in rows):
                out.append(rows)
        return out

    def index_of(self, rows) -> int:
        import bisect
        i = bisect.bisect_left(self.members, tuple(rows))
        if i == len(self.members) or self.members[i] != tuple(rows):
            raise KeyError("not a census member")
        return i


def enumerate_lagrangians(space: Mod2QuadSpace) -> LagrangianCensus:
    """Complete census for the 10-dimensional plus-type space.

    Each subspace is reached exactly once: rows are added in strictly
    decreasing pivot order and a new row must be singular, orthogonal to
    all chosen rows, reduced against their pivots, and must not disturb
    their reducedness (no chosen row may have a 1 in the new pivot
    column, enforced by pivot-block masks). Removing the smallest-pivot
    row of any RREF tuple recovers its unique parent, so the depth-first
    walk is duplicate-free by construction and emits in canonical
    (ascending tuple) order.
    """
    n = space.dim
    if n != 10:
        raise WrongDimension(f"census is specified for dimension 10, got {n}")
    if not space.is_plus_type():
        raise WrongDimension("census needs the plus-type form")
    half = n // 2
    q = space.q
    universe = 1 << n

    singmask = 0
    for v in range(1, universe):
        if q[v] == 0:
            singmask |= 1 << v
    ortho = [0] * universe
    for u in range(universe):
        m = 0
        qu = q[u]
        for v in range(universe):
            if q[u ^ v] ^ qu ^ q[v] == 0:
                m |= 1 << v
        ortho[u] = m
    leadclear = [0] * n  # vectors with coordinate p zero
    for p in range(n):
        m = 0
        for v in range(universe):
            if not (v >> p) & 1:
                m |= 1 << v
        leadclear[p] = m
    lesslead = [(1 << (1 << p)) - 2 for p in range(n)]  # 0 < v < 2^p
    leadexact = [((1 << (1 << (p + 1))) - (1 << (1 << p)))
                 for p in range(n)]  # 2^p <= v < 2^(p+1)

    out = []

    def descend(rows, cand, depth):
        if depth == half:
            out.append(rows)
            return
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            p = v.bit_length() - 1
            child = cand & ortho[v] & leadclear[p] & lesslead[p]
            vv = v & ~(1 << p)
            while vv:
                lowb = vv & -vv
                vv ^= lowb
                child &= ~leadexact[lowb.bit_length() - 1]
            descend(rows + (v,), child, depth + 1)

    descend((), singmask, 0)
    out.sort()
    return LagrangianCensus(space, out)
