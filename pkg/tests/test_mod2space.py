import random

import pytest

from salemsurf.errors import NotIsometry
from salemsurf.mod2space import (Mod2QuadSpace, intersection_dim,
                                 mat2_apply, mat2_from_int, mat2_identity,
                                 mat2_kernel, mat2_mul, mat2_order,
                                 mod2_action_analysis, rref_rows, span_of,
                                 standard_space, subspace_contains)

QUINTIC_A = (1, 0, 1, 1, 1, 1)
QUINTIC_B = (1, 1, 1, 1, 0, 1)


def test_quadratic_form_axioms():
    sp = standard_space()
    rng = random.Random(13)
    assert sp.q[0] == 0
    for _ in range(200):
        u = rng.randrange(1 << sp.dim)
        v = rng.randrange(1 << sp.dim)
        w = rng.randrange(1 << sp.dim)
        assert sp.bilinear(u, u) == 0
        assert sp.bilinear(u, v) == sp.bilinear(v, u)
        assert sp.bilinear(u ^ v, w) == sp.bilinear(u, w) ^ sp.bilinear(v, w)
        assert sp.q[u ^ v] == sp.q[u] ^ sp.q[v] ^ sp.bilinear(u, v)


def test_standard_space_is_plus_type():
    sp = standard_space()
    assert sp.dim == 10
    assert sp.is_plus_type()
    assert sp.singular_nonzero_count() == (1 << 9) + (1 << 4) - 1


def test_odd_gram_rejected():
    from salemsurf.errors import WrongDimension
    with pytest.raises(WrongDimension):
        Mod2QuadSpace([[1]])


def test_mat2_ops():
    ident = mat2_identity(4)
    assert mat2_from_int([[1 if i == j else 0 for j in range(4)]
                          for i in range(4)]) == ident
    assert mat2_order(ident) == 1
    rng = random.Random(14)
    cols = tuple(rng.randrange(16) for _ in range(4))
    for _ in range(20):
        u, v = rng.randrange(16), rng.randrange(16)
        assert mat2_apply(cols, u ^ v) == \
            mat2_apply(cols, u) ^ mat2_apply(cols, v)
    a = tuple(rng.randrange(16) for _ in range(4))
    for _ in range(20):
        v = rng.randrange(16)
        assert mat2_apply(mat2_mul(a, cols), v) == \
            mat2_apply(a, mat2_apply(cols, v))
    assert len(mat2_kernel((0, 0, 0, 0))) == 4


def test_subspace_helpers():
    rows = rref_rows([0b011, 0b110, 0b101])
    assert len(rows) == 2
    assert subspace_contains(rows, 0b101)
    assert not subspace_contains(rows, 0b001)
    assert len(list(span_of(rows))) == 4
    assert intersection_dim(rows, rref_rows([0b011])) == 1
    assert intersection_dim(rows, rref_rows([0b001])) == 0


def test_action_analysis_of_restriction(e10_restriction):
    basis, restr = e10_restriction
    rep = mod2_action_analysis(restr, basis)
    assert rep.order == 31
    assert rep.preserves_form
    assert len(rep.invariant_subspaces) == 2
    facs = sorted(tuple(r.factor) for r in rep.invariant_subspaces)
    assert facs == sorted([QUINTIC_A, QUINTIC_B])
    for rec in rep.invariant_subspaces:
        assert rec.multiplicity == 1
        assert rec.dimension == 5
        assert rec.totally_singular


def test_action_analysis_of_identity(e10_restriction):
    basis, _ = e10_restriction
    ident = [[1 if i == j else 0 for j in range(10)] for i in range(10)]
    rep = mod2_action_analysis(ident, basis)
    assert rep.order == 1
    assert rep.preserves_form
    assert len(rep.invariant_subspaces) == 1
    rec = rep.invariant_subspaces[0]
    assert tuple(rec.factor) == (1, 1)
    assert rec.multiplicity == 10
    assert rec.dimension == 10
    assert not rec.totally_singular


def test_action_analysis_rejects_non_isometry():
    with pytest.raises(NotIsometry):
        mod2_action_analysis([[2 if i == j else 0 for j in range(10)]
                              for i in range(10)])


def test_census_counts(census):
    assert len(census.members) == 4590
    assert census.class_sizes() == (2295, 2295)
    assert census.reference == census.members[0]
    assert all(census.members[i] < census.members[i + 1]
               for i in range(len(census.members) - 1))


def test_census_members_are_lagrangian(census):
    sp = census.space
    for rows in census.members:
        assert len(rows) == 5
        assert all(sp.q[v] == 0 for v in span_of(rows))


def test_census_index_of(census):
    assert census.index_of(census.members[17]) == 17
    with pytest.raises(KeyError):
        census.index_of(((1 << 10) - 1,))


def test_invariant_members(census, e10_restriction):
    _, restr = e10_restriction
    cols = mat2_from_int(restr)
    inv = census.invariant_members(cols)
    assert len(inv) == 2
    parities = sorted(census.class_parity[census.index_of(rows)]
                      for rows in inv)
    assert parities == [0, 1]
