"""Exact subspace arithmetic: canonical forms, membership, perp, intersections."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadop.linalg import EchelonBasis, SubspaceQ, invert_matrix, kernel_basis


def _span(ambient, *vecs):
    return SubspaceQ.from_vectors(ambient, [dict(enumerate(v)) for v in vecs])


@st.composite
def subspace_and_ambient(draw, max_dim=6):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    nvecs = draw(st.integers(min_value=0, max_value=n + 2))
    vecs = [
        draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=n, max_size=n))
        for _ in range(nvecs)
    ]
    return n, vecs


def test_canonical_form_is_generating_set_independent():
    a = _span(3, [1, 0, 1], [0, 1, 1])
    b = _span(3, [1, 1, 2], [2, 1, 3], [3, 2, 5])
    assert a == b
    assert hash(a) == hash(b)
    assert a.dim == 2


def test_membership():
    s = _span(4, [1, 2, 0, 0], [0, 0, 1, 1])
    assert s.contains({0: Fraction(1), 1: Fraction(2)})
    assert s.contains({0: Fraction(1, 2), 1: Fraction(1), 2: Fraction(3), 3: Fraction(3)})
    assert not s.contains({0: Fraction(1)})
    assert s.contains({})


def test_zero_subspace():
    z = _span(3)
    assert z.dim == 0
    assert z.contains({})
    assert not z.contains({1: Fraction(1)})
    assert z.perp().dim == 3


@given(subspace_and_ambient())
@settings(max_examples=60, deadline=None)
def test_perp_is_involutive(data):
    n, vecs = data
    s = _span(n, *vecs)
    p = s.perp()
    assert s.dim + p.dim == n
    assert p.perp() == s


@given(subspace_and_ambient())
@settings(max_examples=60, deadline=None)
def test_perp_annihilates(data):
    n, vecs = data
    s = _span(n, *vecs)
    for u in s.dense_basis():
        for w in s.perp().dense_basis():
            assert sum(a * b for a, b in zip(u, w)) == 0


@given(subspace_and_ambient(), subspace_and_ambient())
@settings(max_examples=60, deadline=None)
def test_dimension_formula(data_a, data_b):
    n = max(data_a[0], data_b[0])
    a = _span(n, *[v + [0] * (n - len(v)) for v in data_a[1]])
    b = _span(n, *[v + [0] * (n - len(v)) for v in data_b[1]])
    meet = a.intersect(b)
    join = a.sum_with(b)
    assert a.dim + b.dim == meet.dim + join.dim
    for row in meet.basis():
        assert a.contains(row) and b.contains(row)
    assert join.contains_subspace(a) and join.contains_subspace(b)


def test_intersect_subset_case():
    big = _span(3, [1, 0, 0], [0, 1, 0])
    small = _span(3, [1, 1, 0])
    assert big.intersect(small) == small
    assert big.sum_with(small) == big


def test_echelon_rank_matches_subspace_dim():
    eb = EchelonBasis(4)
    assert eb.add({0: 1, 1: 1})
    assert not eb.add({0: 2, 1: 2})
    assert eb.add({2: 1})
    assert eb.rank == 2
    assert eb.contains({0: Fraction(3), 1: Fraction(3), 2: Fraction(-1)})
    assert not eb.contains({3: Fraction(1)})


def test_kernel_basis_kills_rows():
    rows = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1), 2: Fraction(-1)}]
    ker = kernel_basis(rows, 4)
    assert ker.dim == 2
    for v in ker.basis():
        for r in rows:
            assert sum(r.get(c, 0) * x for c, x in v.items()) == 0


def test_invert_matrix_roundtrip():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = invert_matrix(m)
    prod = [
        [sum(m[i][k] * inv[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert prod == [[1, 0], [0, 1]]


def test_invert_matrix_singular_returns_none():
    m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert invert_matrix(m) is None


def test_fractions_survive_canonicalisation():
    s = _span(2, [Fraction(1, 3), Fraction(1, 6)])
    (row,) = s.basis()
    assert row[0] == 1
    assert row[1] == Fraction(1, 2)


def test_ambient_mismatch_raises():
    a = _span(2, [1, 0])
    b = _span(3, [1, 0, 0])
    with pytest.raises(ValueError):
        a.sum_with(b)
