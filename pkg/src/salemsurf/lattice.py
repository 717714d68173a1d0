"""Exact lattice arithmetic: the rank-11 hyperbolic lattice, a fixed
Coxeter-type isometry, characteristic polynomials, Sturm real-root
isolation over Fraction, Salem certification through the trace
polynomial, and spectral-radius enclosures.

Integer polynomials are plain lists of ints, low degree first; matrices
are tuples of row tuples acting on column vectors. The ambient bilinear
form is diag(1, -1, ..., -1) on the ordered basis (h, e1, ..., e10);
the even sublattice orthogonal to the canonical class uses the basis
stored in data/e10_basis.dat (rows are ambient coordinates).
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .errors import (
    DimensionMismatch,
    NotIsometry,
    NotPreserved,
    NotReciprocal,
    NotSalem,
    NotSquarefree,
    OddDegree,
    SpectralRadiusNotRealCertified,
)
from .gf2m import field_make
from .unipoly import UniPoly, factor as gf2_factor

# ---------------------------------------------------------------------------
# integer polynomials, low degree first


def ip_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def ip_add(p, q):
    n = max(len(p), len(q))
    return ip_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                    for i in range(n)])


def ip_neg(p):
    return [-c for c in p]


def ip_sub(p, q):
    return ip_add(p, ip_neg(q))


def ip_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return ip_trim(out)


def ip_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ip_deriv(p):
    return ip_trim([i * c for i, c in enumerate(p)][1:])


def ip_divmod(p, q):
    """Division over the rationals; returns Fraction-coefficient lists."""
    r = [Fraction(c) for c in p]
    qq = [Fraction(c) for c in q]
    while qq and qq[-1] == 0:
        qq.pop()
    if not qq:
        raise ZeroDivisionError("polynomial division by zero")
    out = [Fraction(0)] * max(0, len(r) - len(qq) + 1)
    while len(r) >= len(qq) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(qq):
            break
        k = len(r) - len(qq)
        c = r[-1] / qq[-1]
        out[k] = c
        for i, b in enumerate(qq):
            r[k + i] -= c * b
    while r and r[-1] == 0:
        r.pop()
    return out, r


def ip_primitive(p):
    """Clear denominators and content; keep the sign of the leading term."""
    from math import gcd
    if not p:
        return []
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def ip_gcd(p, q):
    """Primitive integer gcd via the Euclidean algorithm over Q."""
    a, b = [Fraction(c) for c in ip_trim(p)], [Fraction(c) for c in ip_trim(q)]
    while b:
        _, r = ip_divmod(a, b)
        a, b = b, r
    return ip_primitive(a)


def is_reciprocal(p):
    p = ip_trim(p)
    return bool(p) and p == p[::-1]


def lehmer_polynomial():
    """The degree-10 Salem polynomial with minimal known Mahler measure."""
    return [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


# ---------------------------------------------------------------------------
# integer matrices (tuples of rows)


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    if len(a[0]) != k:
        raise DimensionMismatch("matrix product shapes")
    bt = list(zip(*b))
    return tuple(tuple(sum(ra[t] * cb[t] for t in range(k)) for cb in bt)
                 for ra in a)


def mat_vec(a, v):
    if len(a[0]) != len(v):
        raise DimensionMismatch("matrix-vector shapes")
    return tuple(sum(r[i] * v[i] for i in range(len(v))) for r in a)


def mat_transpose(a):
    return tuple(zip(*a))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, s):
    return tuple(tuple(x * s for x in r) for r in a)


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_eq_mod2(a, b):
    return all((x - y) % 2 == 0 for ra, rb in zip(a, b)
               for x, y in zip(ra, rb))


def char_poly(m):
    """Exact characteristic polynomial, low degree first, monic.

    Faddeev-LeVerrier; every division by k is exact over the integers.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("char_poly needs a square matrix")
    coeffs = [0] * (n + 1)  # x^n + c1 x^(n-1) + ... + cn
    coeffs[0] = 1
    nmat = m
    cs = []
    for k in range(1, n + 1):
        ck = -mat_trace(nmat)
        if ck % k:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        ck //= k
        cs.append(ck)
        if k < n:
            nmat = mat_mul(m, mat_add(nmat, mat_scale(mat_identity(n), ck)))
    desc = [1] + cs  # descending: x^n, x^(n-1), ..., const
    return desc[::-1]


def is_isometry_of(m, gram):
    mt = mat_transpose(m)
    return mat_mul(mat_mul(mt, gram), m) == gram


# ---------------------------------------------------------------------------
# the hyperbolic lattice and its fixed isometry


def ambient_gram():
    """diag(1, -1, ..., -1) on (h, e1, ..., e10)."""
    return tuple(tuple((1 if i == 0 else -1) if i == j else 0
                       for j in range(11)) for i in range(11))


def coxeter_matrix():
    """The order-infinite isometry used throughout, as an 11x11 matrix.

    Columns are the images of h, e1, ..., e10 in ambient coordinates:
    h -> 2h - e2 - e3 - e4, e1 -> h - e3 - e4, e2 -> h - e2 - e4,
    e3 -> h - e2 - e3, e_n -> e_{n+1} for 4 <= n <= 9, e10 -> e1.
    """
    def basis(i):
        return [1 if j == i else 0 for j in range(11)]

    cols = []
    cols.append([2, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0])        # image of h
    cols.append([1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0])         # image of e1
    cols.append([1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0])         # image of e2
    cols.append([1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0])         # image of e3
    for n in range(4, 10):                                   # e_n -> e_{n+1}
        cols.append(basis(n + 1))
    cols.append(basis(1))                                    # image of e10
    return tuple(zip(*cols))


def canonical_class():
    """-3h + e1 + ... + e10, fixed by the isometry."""
    return tuple([-3] + [1] * 10)


def e10_basis(path=None):
    """Basis of the even rank-10 sublattice orthogonal to the fixed class.

    Rows of data/e10_basis.dat, ambient coordinates. The file is part of
    the bundled data so reports can show exactly which basis was used.
    """
    if path is None:
        text = (resources.files("salemsurf") / "data" / "e10_basis.dat"
                ).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        rows.append(tuple(int(x) for x in ln.split()))
    if len(rows) != 10 or any(len(r) != 11 for r in rows):
        raise DimensionMismatch("basis file must hold 10 rows of 11 entries")
    return rows


def gram_of(vectors, gram=None):
    if gram is None:
        gram = ambient_gram()
    return tuple(tuple(_pair(u, v, gram) for v in vectors) for u in vectors)


def _pair(u, v, gram):
    return sum(u[i] * gram[i][j] * v[j]
               for i in range(len(u)) for j in range(len(v)))


def restrict_to_basis(m, basis, gram=None):
    """Matrix of m on the span of `basis`, integer entries enforced.

    Coordinates are recovered by pairing against the basis and solving
    with the basis Gram matrix (unimodular here, so the solve is exact).
    """
    if gram is None:
        gram = ambient_gram()
    ge = gram_of(basis, gram)
    n = len(basis)
    cols = []
    for b in basis:
        img = mat_vec(m, b)
        rhs = [Fraction(_pair(a, img, gram)) for a in basis]
        coeffs = _frac_solve([[Fraction(ge[i][j]) for j in range(n)]
                              for i in range(n)], rhs)
        if any(c.denominator != 1 for c in coeffs):
            raise NotPreserved("image leaves the sublattice")
        cols.append([int(c) for c in coeffs])
    return tuple(zip(*cols))


def _frac_solve(a, b):
    n = len(a)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return b


def reference_interior_vector():
    """Coordinates (in the stored basis) of 10h - 3(e1+...+e10).

    A fixed norm-10 vector interior to the chosen half-cone; membership
    tests orient the cone by pairing images against it.
    """
    return (10, 7, 14, 21, 18, 15, 12, 9, 6, 3)


def reflection_in(v, gram):
    """Reflection in a norm -2 vector: x -> x + (x . v) v."""
    n = len(v)
    if _pair(v, v, gram) != -2:
        raise NotIsometry("reflection formula needs a norm -2 vector")
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        pv = _pair(e, v, gram)
        cols.append([e[i] + pv * v[i] for i in range(n)])
    return tuple(zip(*cols))


# ---------------------------------------------------------------------------
# Sturm sequences over exact rationals


def _sturm_chain(p):
    chain = [[Fraction(c) for c in ip_trim(p)]]
    d = ip_deriv(p)
    if d:
        chain.append([Fraction(c) for c in d])
    while len(chain[-1]) > 1:
        _, r = ip_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _variations(chain, x):
    signs = []
    for p in chain:
        v = ip_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(p):
    lead = abs(p[-1])
    return Fraction(1) + max(abs(Fraction(c, lead)) for c in p)


def _count_roots(chain, a, b):
    """Number of distinct real roots in (a, b]; endpoints must not be roots
    of the first chain entry (callers arrange that)."""
    return _variations(chain, a) - _variations(chain, b)


def real_roots(p, precision=Fraction(1, 10 ** 6)):
    """Isolating rational intervals for all real roots of a squarefree p.

    Exact rational roots come back as degenerate [r, r] intervals. The
    remaining roots are isolated by Sturm counts and bisected below the
    requested width. Sorted by position.
    """
    p = ip_trim(p)
    if len(p) <= 1:
        return []
    g = ip_gcd(p, ip_deriv(p))
    if len(g) > 1:
        raise NotSquarefree("input shares a factor with its derivative")
    precision = Fraction(precision)
    exact = []
    work = [Fraction(c) for c in p]
    # rational roots: p/q with p | constant term, q | leading term
    while work[0] == 0:
        exact.append(Fraction(0))
        work = work[1:]
    ints = ip_primitive(work)
    for r in _rational_roots(ints):
        if ip_eval(work, r) == 0:
            exact.append(r)
            work, rem = ip_divmod(work, [-r, Fraction(1)])
            assert not rem
    intervals = [(r, r) for r in exact]
    rest = ip_primitive(work)
    if len(rest) > 1:
        chain = _sturm_chain(rest)
        bound = _root_bound(rest)
        stack = [(-bound, bound)]
        while stack:
            lo, hi = stack.pop()
            n = _count_roots(chain, lo, hi)
            if n == 0:
                continue
            if n == 1 and hi - lo <= precision:
                intervals.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            # no rational roots remain, so mid is never a root
            stack.append((lo, mid))
            stack.append((mid, hi))
    intervals.sort(key=lambda iv: iv[0] + iv[1])
    return intervals


def _rational_roots(p):
    """Candidate rational roots of an integer polynomial (may overshoot)."""
    if not p or len(p) == 1:
        return []
    a0, an = abs(p[0]), abs(p[-1])
    if a0 == 0:
        return [Fraction(0)]
    if a0 > 10 ** 9 or an > 10 ** 9:
        return []  # candidate enumeration would be unreasonable
    out = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            out.add(Fraction(num, den))
            out.add(Fraction(-num, den))
    return sorted(out)


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# trace polynomial and Salem certification


def trace_polynomial(p):
    """The unique R with x^d R(x + 1/x) = p(x), for reciprocal even p.

    Expanding x^d (x + 1/x)^k = sum_j C(k, j) x^(d-k+2j) makes the
    coefficient identities triangular; solve from the top degree down.
    """
    p = ip_trim(p)
    n = len(p) - 1
    if n < 0 or n % 2:
        raise OddDegree("trace polynomial needs even degree")
    if not is_reciprocal(p):
        raise NotReciprocal("input is not palindromic")
    d = n // 2
    from math import comb
    r = [0] * (d + 1)
    # coefficient of x^(d+t) in x^d (x+1/x)^k is C(k, (k+t)/2) when parity fits
    for t in range(d, -1, -1):
        acc = p[d + t]
        for k in range(t + 1, d + 1):
            if (k + t) % 2 == 0:
                acc -= r[k] * comb(k, (k + t) // 2)
        r[t] = acc  # C(t, t) = 1
    # exact re-expansion check
    if trace_reexpand(r) != p:
        raise NotReciprocal("re-expansion mismatch")
    return r


def trace_reexpand(r):
    """x^d R(x + 1/x) as an integer polynomial, d = deg R."""
    d = len(r) - 1
    acc = []
    for k, c in enumerate(r):
        if c == 0:
            continue
        # x^(d-k) (x^2+1)^k
        term = [0] * (d - k) + [1]
        sq = [1, 0, 1]
        for _ in range(k):
            term = ip_mul(term, sq)
        acc = ip_add(acc, [c * v for v in term])
    return acc


class SalemCertificate:
    """Outcome of the Salem test on a reciprocal polynomial.

    trace_poly: the half-degree polynomial R; trace_intervals: isolating
    rational intervals for its (all real) roots in ascending order;
    interior_signs: sign of R' at each root inside (-2, 2), ascending;
    lambda_interval: enclosure of the root of the input that exceeds 1.
    """

    __slots__ = ("trace_poly", "trace_intervals", "interior_signs",
                 "lambda_interval")

    def __init__(self, trace_poly, trace_intervals, interior_signs,
                 lambda_interval):
        self.trace_poly = trace_poly
        self.trace_intervals = trace_intervals
        self.interior_signs = interior_signs
        self.lambda_interval = lambda_interval


def _sign_at_root(p, dp, lo, hi):
    """Sign of dp on an isolating interval of a root of p.

    Refines until dp has no root in [lo, hi] (Sturm count plus endpoint
    checks), then any point of the interval gives the constant sign.
    """
    chain = _sturm_chain(dp)
    while True:
        if (ip_eval(dp, lo) != 0 and ip_eval(dp, hi) != 0
                and _count_roots(chain, lo, hi) == 0):
            v = ip_eval(dp, lo)
            return 1 if v > 0 else -1
        if lo == hi:
            raise NotSalem("derivative vanishes at a trace root")
        mid = (lo + hi) / 2
        if ip_eval(p, mid) == 0:  # landed on the root exactly
            third = (hi - lo) / 3
            lo, hi = mid - third, mid + third
            continue
        if ip_eval(p, lo) * ip_eval(p, mid) < 0:
            hi = mid
        else:
            lo = mid
        if hi == lo:
            raise NotSalem("could not separate a derivative sign")


def salem_certify(p, precision=Fraction(1, 10 ** 9)):
    """Certify that a reciprocal even-degree p is a Salem polynomial.

    All roots of the trace polynomial R must be real, exactly one above
    2, the rest strictly inside (-2, 2); then the roots of p off the
    real line have modulus exactly 1 and the real ones are lambda > 1
    and its reciprocal. Raises NotSalem (or NotReciprocal / OddDegree)
    when a condition fails; returns a SalemCertificate on success.
    """
    p = ip_trim(p)
    r = trace_polynomial(p)
    d = len(r) - 1
    try:
        ivs = real_roots(r, precision)
    except NotSquarefree as ex:
        raise NotSalem(f"trace polynomial not squarefree: {ex}") from ex
    if len(ivs) != d:
        raise NotSalem(f"trace polynomial has {len(ivs)} real roots, "
                       f"needs {d}")
    if ip_eval(r, Fraction(2)) == 0 or ip_eval(r, Fraction(-2)) == 0:
        raise NotSalem("trace root at +/-2 (cyclotomic boundary)")
    above = [iv for iv in ivs if iv[0] >= 2]
    below = [iv for iv in ivs if iv[1] <= -2]
    inside = [iv for iv in ivs if -2 <= iv[0] and iv[1] <= 2]
    if len(above) != 1 or below or len(inside) != d - 1:
        # refine a straddling interval rather than guessing
        ivs = real_roots(r, min(precision, Fraction(1, 10 ** 12)))
        above = [iv for iv in ivs if iv[0] >= 2]
        below = [iv for iv in ivs if iv[1] <= -2]
        inside = [iv for iv in ivs if -2 <= iv[0] and iv[1] <= 2]
        if len(above) != 1 or below or len(inside) != d - 1:
            raise NotSalem("trace roots do not split as one above 2 "
                           "plus the rest inside (-2, 2)")
    dr = ip_deriv(r)
    signs = tuple(_sign_at_root(r, dr, lo, hi) for lo, hi in inside)
    lam = _largest_root_interval(p, precision)
    if lam[0] <= 1:
        raise NotSalem("leading root does not exceed 1")
    return SalemCertificate(r, ivs, signs, lam)


def _largest_root_interval(p, precision):
    ivs = real_roots(ip_primitive([Fraction(c) for c in p]), precision)
    if not ivs:
        raise NotSalem("no real roots at all")
    return ivs[-1]


def sign_vector_target():
    """The certified sign pattern of the interior trace-root derivative
    analysis, positive-derivative roots listed first: (-1, -1, +1, +1).

    Asserts the certificate (two positive interior signs for the fixed
    degree-10 polynomial) before returning the frozen tuple.
    """
    cert = salem_certify(lehmer_polynomial())
    pos = sum(1 for s in cert.interior_signs if s > 0)
    if pos != 2 or len(cert.interior_signs) != 4:
        raise NotSalem("interior derivative signs changed; refusing target")
    return (-1, -1, 1, 1)


# ---------------------------------------------------------------------------
# spectral radius


def dynamical_degree(m, precision=Fraction(1, 10 ** 9)):
    """Certified rational enclosure of the spectral radius of m.

    The radius is certified to be a real eigenvalue in two situations:
    every root of the characteristic polynomial is real (Sturm count
    equals the degree of the squarefree part), or, after stripping the
    rational roots 0 and +-1, the remaining factor is a Salem
    polynomial, whose non-real roots all have modulus exactly 1. Raises
    SpectralRadiusNotRealCertified otherwise.
    """
    precision = Fraction(precision)
    p = ip_trim(char_poly(m))
    saw_unit = False
    while p[0] == 0:
        p = p[1:]
    for root in (1, -1):
        while ip_eval(p, root) == 0:
            q, rem = ip_divmod(p, [-root, 1])
            assert not rem
            p = ip_primitive(q)
            saw_unit = True
    floor = Fraction(1) if saw_unit else Fraction(0)
    if len(p) <= 1:
        return (floor, floor)
    sqf = ip_primitive(ip_divmod(p, ip_gcd(p, ip_deriv(p)))[0])
    ivs = real_roots(sqf, precision)
    if len(ivs) == len(sqf) - 1:
        # all eigenvalues real: enclose max |root| by the componentwise
        # maxima of the per-root absolute intervals
        blo, bhi = floor, floor
        for lo, hi in ivs:
            alo, ahi = min(abs(lo), abs(hi)), max(abs(lo), abs(hi))
            if lo <= 0 <= hi:
                alo = Fraction(0)
            blo, bhi = max(blo, alo), max(bhi, ahi)
        return (blo, bhi)
    try:
        cert = salem_certify(sqf, precision)
    except (NotSalem, NotReciprocal, OddDegree) as ex:
        raise SpectralRadiusNotRealCertified(
            "characteristic polynomial is neither totally real nor Salem "
            f"after removing unit rational roots: {ex}") from ex
    lo, hi = cert.lambda_interval
    return (max(lo, floor), max(hi, floor))


# ---------------------------------------------------------------------------
# mod-2 reduction and parity checks


def mod2_reduce_and_factor(p):
    """Irreducible factors over GF(2) of p mod 2, with multiplicities.

    Returns [(coeff bit list low degree first, multiplicity)], sorted.
    """
    gf2 = field_make(1, 0b11)
    f = UniPoly(gf2, [c % 2 for c in p])
    return [([c for c in irr.coeffs], mult) for irr, mult in gf2_factor(f)]


def e10_parity_check(gram=None):
    """True iff the Gram matrix is even, so doubled norms are 0 mod 4.

    Evenness on a basis forces all norms even (the off-diagonal terms
    appear twice), and rescaling the form by 2 puts every norm in 4Z;
    in particular no vector of the rescaled lattice has norm -2.
    """
    if gram is None:
        gram = gram_of(e10_basis())
    n = len(gram)
    if any(len(r) != n for r in gram):
        raise DimensionMismatch("gram must be square")
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        return False
    return all(gram[i][i] % 2 == 0 for i in range(n))


def weyl2_membership(m, basis=None):
    """True iff m is in the kernel of reduction mod 2 and keeps the cone.

    m acts on the stored basis of the even sublattice; it must preserve
    the Gram matrix (else NotIsometry), reduce to the identity mod 2,
    and pair the image of the reference interior vector positively
    against that vector (half-cone preservation).
    """
    if basis is None:
        basis = e10_basis()
    ge = gram_of(basis)
    if not is_isometry_of(m, ge):
        raise NotIsometry("matrix does not preserve the sublattice form")
    u = reference_interior_vector()
    if _pair(mat_vec(m, u), u, ge) <= 0:
        return False
    return mat_eq_mod2(m, mat_identity(len(m)))
