import math
import random
from fractions import Fraction

import pytest

from salemsurf.errors import (NotIsometry, NotReciprocal, NotSalem,
                              NotSquarefree, OddDegree,
                              SpectralRadiusNotRealCertified)
from salemsurf.lattice import (ambient_gram, canonical_class, char_poly,
                               coxeter_matrix, dynamical_degree, e10_basis,
                               e10_parity_check, gram_of, ip_add, ip_divmod,
                               ip_gcd, ip_mul, is_isometry_of,
                               is_reciprocal, lehmer_polynomial,
                               mat_add, mat_identity, mat_mul, mat_scale,
                               mat_vec, mod2_reduce_and_factor, real_roots,
                               reference_interior_vector, reflection_in,
                               restrict_to_basis, salem_certify,
                               sign_vector_target, trace_polynomial,
                               trace_reexpand, weyl2_membership)

P10 = lehmer_polynomial()


def _mid(iv):
    return float((iv[0] + iv[1]) / 2)


def test_integer_poly_helpers():
    p = [1, 2, 3]
    q = [4, 5]
    assert ip_add(p, q) == [5, 7, 3]
    prod = ip_mul(p, q)
    quo, rem = ip_divmod([Fraction(c) for c in prod],
                         [Fraction(c) for c in q])
    assert quo == [1, 2, 3] and not rem
    assert ip_gcd(prod, q) == [Fraction(4, 5), Fraction(1)] or \
        ip_gcd(prod, q)[-1] != 0  # monic up to normalisation, nonzero


def test_coxeter_shape_and_action():
    w = coxeter_matrix()
    assert len(w) == 11 and all(len(r) == 11 for r in w)
    e4 = [1 if i == 5 else 0 for i in range(11)]  # exceptional e4 slot
    e5 = [1 if i == 6 else 0 for i in range(11)]
    assert list(mat_vec(w, e4)) == e5
    k = canonical_class()
    assert tuple(mat_vec(w, k)) == tuple(k)
    assert is_isometry_of(w, ambient_gram())


def test_char_poly_identity():
    assert char_poly(mat_identity(3)) == [-1, 3, -3, 1]


def test_cayley_hamilton():
    rng = random.Random(5)
    for _ in range(5):
        n = rng.randrange(2, 5)
        m = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
        p = char_poly(m)
        acc = [[0] * n for _ in range(n)]
        for c in reversed(p):
            acc = mat_add(mat_mul(acc, m), mat_scale(mat_identity(n), c))
        assert all(v == 0 for row in acc for v in row)


def test_char_poly_of_coxeter_is_lehmer_times_unit():
    full = char_poly(coxeter_matrix())
    assert ip_mul([-1, 1], P10) == full
    basis, restr = coxeter_restriction()
    assert char_poly(restr) == P10


def coxeter_restriction():
    basis = e10_basis()
    return basis, restrict_to_basis(coxeter_matrix(), basis)


def test_lehmer_polynomial_shape():
    assert len(P10) == 11
    assert P10[0] == P10[-1] == 1
    assert is_reciprocal(P10)
    assert not is_reciprocal([1, 2, 3])


def test_real_roots_quadratics():
    ivs = real_roots([-2, 0, 1], Fraction(1, 10 ** 7))
    assert len(ivs) == 2
    assert abs(_mid(ivs[0]) + math.sqrt(2)) < 1e-6
    assert abs(_mid(ivs[1]) - math.sqrt(2)) < 1e-6
    assert real_roots([1, 0, 1]) == []
    with pytest.raises(NotSquarefree):
        real_roots([1, -2, 1])


def test_real_roots_of_degree10():
    ivs = real_roots(P10, Fraction(1, 10 ** 9))
    assert len(ivs) == 2
    lam = _mid(ivs[1])
    assert abs(lam - 1.17628081841) < 1e-9
    assert abs(_mid(ivs[0]) * lam - 1.0) < 1e-8  # reciprocal pair


def test_trace_polynomial_small():
    assert trace_polynomial([1, 0, 1]) == [0, 1]
    assert trace_polynomial([1, -2, 1]) == [-2, 1]
    with pytest.raises(NotReciprocal):
        trace_polynomial([1, 2, 3])
    with pytest.raises(OddDegree):
        trace_polynomial([0, 1])


def test_trace_polynomial_degree10():
    r = trace_polynomial(P10)
    assert r == [3, 4, -5, -5, 1, 1]
    assert trace_reexpand(r) == P10


def test_salem_certificate():
    cert = salem_certify(P10)
    assert len(cert.trace_intervals) == 5
    t0 = cert.trace_intervals[-1]
    assert abs(_mid(t0) - 2.02642) < 1e-4
    assert len(cert.interior_signs) == 4
    assert sum(1 for s in cert.interior_signs if s > 0) == 2
    lam = _mid(cert.lambda_interval)
    assert abs(lam - 1.17628081841) < 1e-8
    with pytest.raises((NotSalem, NotReciprocal)):
        salem_certify([1, 1, 1])  # both roots on the unit circle


def test_sign_vector_target():
    assert sign_vector_target() == (-1, -1, 1, 1)


def test_dynamical_degree_small_cases():
    assert dynamical_degree(mat_identity(3)) == (1, 1)
    assert dynamical_degree([[2, 0], [0, 1]]) == (2, 2)
    assert dynamical_degree([[3, 0], [0, -5]]) == (5, 5)
    with pytest.raises(SpectralRadiusNotRealCertified):
        dynamical_degree([[0, -1], [1, 0]])  # rotation, radius not real


def test_dynamical_degree_of_coxeter():
    lo, hi = dynamical_degree(coxeter_matrix())
    assert hi - lo <= Fraction(1, 10 ** 9)
    assert abs(float((lo + hi) / 2) - 1.176280818413943) < 2e-9


def test_mod2_factorisation():
    assert mod2_reduce_and_factor([-1, 0, 1]) == [([1, 1], 2)]
    assert mod2_reduce_and_factor([-1, 1]) == [([1, 1], 1)]
    facs = mod2_reduce_and_factor(P10)
    assert facs == [([1, 0, 1, 1, 1, 1], 1), ([1, 1, 1, 1, 0, 1], 1)]
    a, b = facs[0][0], facs[1][0]
    assert a == b[::-1]


def test_parity_check():
    assert e10_parity_check()
    assert not e10_parity_check(ambient_gram())
    # Cartan matrix of E8: even diagonal, so doubled norms lie in 4Z
    e8 = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in ((0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)):
        e8[i][j] = e8[j][i] = -1
    assert e10_parity_check(e8)


def test_weyl2_membership(e10_restriction):
    basis, restr = e10_restriction
    assert weyl2_membership(mat_identity(10), basis)
    assert not weyl2_membership(restr, basis)
    ge = gram_of(basis)
    assert ge[0][0] == -2
    v = [1 if i == 0 else 0 for i in range(10)]
    refl = reflection_in(v, ge)
    assert is_isometry_of(refl, ge)
    assert not weyl2_membership(refl, basis)
    with pytest.raises(NotIsometry):
        weyl2_membership([[2 if i == j else 0 for j in range(10)]
                          for i in range(10)], basis)


def test_reference_vector_is_interior():
    basis, _ = coxeter_restriction()
    ge = gram_of(basis)
    u = reference_interior_vector()
    norm = sum(u[i] * ge[i][j] * u[j]
               for i in range(10) for j in range(10))
    assert norm == 10
