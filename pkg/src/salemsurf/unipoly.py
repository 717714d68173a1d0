"""Dense univariate polynomials over GF(2^m), with factorization.

Coefficients are stored low degree first as raw bit-ints of the parent
FieldCtx (see gf2m); the zero polynomial is the empty tuple. The
factorization pipeline is the characteristic-2 chain: squarefree
decomposition via the inverse-Frobenius square root (the derivative
test degenerates on even powers), distinct-degree splitting, then
equal-degree splitting with GF(2)-trace maps. Equal-degree splitting
draws from a fixed-seed PRNG (CZ_SEED) so runs are reproducible.

Root search (`uni_roots`) walks extensions of GF(2) whose absolute
degree divides the caller's bound, embedding coefficients via the fixed
embeddings of gf2m.
"""

from __future__ import annotations

import random

from .errors import ContextMismatch, DivisionByZero, ZeroPolynomial
from .gf2m import FieldCtx, FieldElement, embed, ext_context

CZ_SEED = 0x5A1E  # documented constant: equal-degree splitting randomness


class UniPoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        # coeffs: iterable of raw bit-ints, low degree first
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def from_elems(cls, ctx: FieldCtx, elems) -> "UniPoly":
        return cls(ctx, [e.bits if isinstance(e, FieldElement) else int(e)
                         for e in elems])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "UniPoly":
        return cls(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, bits: int) -> "UniPoly":
        return cls(ctx, [bits])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lc_bits(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of 0")
        return self.coeffs[-1]

    def coeff_elems(self):
        return [FieldElement(self.ctx, c) for c in self.coeffs]

    def _chk(self, other: "UniPoly"):
        if other.ctx is not self.ctx:
            raise ContextMismatch("UniPoly contexts differ")

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and other.ctx is self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._chk(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return UniPoly(self.ctx, out)

    __sub__ = __add__

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._chk(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(self.ctx, [])
        mul = self.ctx.mul_bits
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] ^= mul(ca, cb)
        return UniPoly(self.ctx, out)

    def scale_bits(self, s: int) -> "UniPoly":
        if s == 0:
            return UniPoly(self.ctx, [])
        mul = self.ctx.mul_bits
        return UniPoly(self.ctx, [mul(c, s) for c in self.coeffs])

    def __divmod__(self, other: "UniPoly"):
        self._chk(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        mul, inv = self.ctx.mul_bits, self.ctx.inv_bits
        r = list(self.coeffs)
        d = other.degree()
        lcinv = inv(other.coeffs[-1])
        q = [0] * max(0, len(r) - d)
        while len(r) - 1 >= d and r:
            k = len(r) - 1 - d
            c = mul(r[-1], lcinv)
            q[k] = c
            for i, bc in enumerate(other.coeffs):
                r[k + i] ^= mul(bc, c)
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(self.ctx, q), UniPoly(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale_bits(self.ctx.inv_bits(self.coeffs[-1]))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.ctx,
                       [c if i % 2 == 1 else 0
                        for i, c in enumerate(self.coeffs)][1:])

    def eval_bits(self, x: int) -> int:
        mul = self.ctx.mul_bits
        acc = 0
        for c in reversed(self.coeffs):
            acc = mul(acc, x) ^ c
        return acc

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.ctx is not self.ctx:
            raise ContextMismatch("evaluation point in a different field")
        return FieldElement(self.ctx, self.eval_bits(x.bits))

    def sqrt(self) -> "UniPoly":
        """Inverse of squaring; requires all odd coefficients zero."""
        if any(c for i, c in enumerate(self.coeffs) if i % 2 == 1):
            raise ZeroPolynomial("polynomial is not a square")
        sq = self.ctx.sqrt_bits
        return UniPoly(self.ctx, [sq(c) for c in self.coeffs[0::2]])

    def pow_mod(self, n: int, mod: "UniPoly") -> "UniPoly":
        r = UniPoly(self.ctx, [1])
        b = self % mod
        while n:
            if n & 1:
                r = (r * b) % mod
            b = (b * b) % mod
            n >>= 1
        return r

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly(self.ctx, [fn(c) for c in self.coeffs])

    def embed_to(self, sup: FieldCtx) -> "UniPoly":
        cs = [embed(FieldElement(self.ctx, c), self.ctx, sup).bits
              for c in self.coeffs]
        return UniPoly(sup, cs)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{FieldElement(self.ctx, c)!r}*x^{i}")
        return "UniPoly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# factorization


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic squarefree parts with multiplicities, characteristic-2 safe."""
    f = f.monic()
    if f.degree() <= 0:
        return []
    out: dict[UniPoly, int] = {}

    def add(g: UniPoly, m: int):
        if g.degree() > 0:
            out[g] = out.get(g, 0) + m

    def rec(h: UniPoly, mult: int):
        if h.degree() <= 0:
            return
        hp = h.derivative()
        if hp.is_zero():
            rec(h.sqrt(), 2 * mult)
            return
        c = h.gcd(hp)
        w = (h // c).monic()
        i = 1
        while w.degree() > 0:
            y = w.gcd(c)
            z = (w // y).monic()
            add(z, i * mult)
            w = y
            c = (c // y).monic()
            i += 1
        if c.degree() > 0:
            rec(c.sqrt(), 2 * mult)  # everything left is a perfect square

    rec(f, 1)
    items = sorted(out.items(), key=lambda t: (t[0].degree(), t[0].coeffs))
    return items


def distinct_degree_factorization(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """f monic squarefree -> [(product of irreducibles of degree d, d)]."""
    ctx = f.ctx
    out = []
    h = UniPoly.x(ctx)
    v = f
    d = 0
    x = UniPoly.x(ctx)
    while v.degree() > 0:
        d += 1
        if 2 * d > v.degree():
            out.append((v.monic(), v.degree()))
            break
        for _ in range(ctx.m):  # h -> h^(2^m) mod v, i.e. h^q
            h = (h * h) % v
        g = v.gcd(h + x)
        if g.degree() > 0:
            out.append((g, d))
            v = (v // g).monic()
            h = h % v
    return out


def _trace_split(g: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Split a monic product of degree-d irreducibles into irreducibles."""
    ctx = g.ctx
    if g.degree() == d:
        return [g]
    n = ctx.m * d  # absolute degree of the residue fields over GF(2)
    while True:
        a = UniPoly(ctx, [rng.randrange(1 << ctx.m) for _ in range(g.degree())])
        if a.degree() < 1 and d > 0 and g.degree() > d:
            continue
        # absolute trace map: a + a^2 + a^4 + ... (n terms), mod g
        t = a % g
        s = t
        for _ in range(n - 1):
            t = (t * t) % g
            s = s + t
        h = g.gcd(s)
        if 0 < h.degree() < g.degree():
            return sorted(
                _trace_split(h, d, rng) + _trace_split((g // h).monic(), d, rng),
                key=lambda p: p.coeffs)


def factor(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities."""
    rng = random.Random(CZ_SEED)
    out = []
    for part, mult in squarefree_decomposition(f):
        for block, d in distinct_degree_factorization(part):
            for irr in _trace_split(block, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree(), t[0].coeffs))
    return out


def uni_roots(f: UniPoly, search_degree_bound: int = 10
              ) -> list[tuple[FieldElement, int]]:
    """All roots in extensions of GF(2) whose degree divides the bound.

    Returns (root, multiplicity) pairs; each root lives in the smallest
    constructed context the search visits (the base field for roots
    rational over it). Roots beyond the bound are silently absent; the
    caller can compare multiplicity totals against the degree.
    """
    if f.is_zero():
        raise ZeroPolynomial("uni_roots of the zero polynomial")
    base = f.ctx
    out = []
    for part, mult in squarefree_decomposition(f):
        for block, d in distinct_degree_factorization(part):
            absdeg = base.m * d
            if search_degree_bound % absdeg != 0:
                continue
            if d == 1:
                rng = random.Random(CZ_SEED)
                for irr in _trace_split(block, 1, rng):
                    out.append((FieldElement(base, irr.coeffs[0]), mult))
            else:
                sup = ext_context(absdeg)
                lifted = block.embed_to(sup)
                rng = random.Random(CZ_SEED)
                for irr in _trace_split(lifted, 1, rng):
                    out.append((FieldElement(sup, irr.coeffs[0]), mult))
    out.sort(key=lambda t: (t[0].ctx.m, t[0].bits))
    return out


def product_over_roots(ctx: FieldCtx, roots) -> UniPoly:
    """prod (x - r)^mult as a UniPoly over ctx (roots must lie in ctx)."""
    acc = UniPoly(ctx, [1])
    for r, mult in roots:
        if r.ctx is not ctx:
            raise ContextMismatch("root outside the requested context")
        lin = UniPoly(ctx, [r.bits, 1])
        for _ in range(mult):
            acc = acc * lin
    return acc
