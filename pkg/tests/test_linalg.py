import itertools

import pytest
from hypothesis import given, settings, strategies as st

from whamming.errors import CapExceededError
from whamming.gf import field_create
from whamming.linalg import (
    COL,
    Subspace,
    dual,
    identity,
    point_of,
    projective_points,
    qbinom,
    rref,
    subspaces,
    subspaces_containing,
)

from oracles import all_subspace_sets, span_set

GF2 = field_create(2)


def test_rref_examples():
    assert rref(GF2, [[0, 0], [0, 0]]) == (((0, 0), (0, 0)), 0, [])
    assert rref(GF2, identity(3)) == (identity(3), 3, [0, 1, 2])
    assert rref(GF2, [[1, 1], [1, 1]]) == (((1, 1), (0, 0)), 1, [0])


def test_rref_over_gf5():
    f = field_create(5)
    red, rk, piv = rref(f, [[2, 4, 1], [1, 2, 4]])
    # (2,4,1) scales to (1,2,3); (1,2,4) minus that is (0,0,1)
    assert rk == 2 and piv == [0, 2]
    assert red == ((1, 2, 0), (0, 0, 1))


def test_qbinom_examples():
    assert qbinom(5, 0, 3) == 1
    assert qbinom(1, 2, 2) == 0
    assert qbinom(2, 1, 2) == 3
    assert qbinom(3, 2, 2) == 7
    assert qbinom(4, 2, 2) == 35


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_qbinom_counts_subspaces_by_brute_force(q, k):
    f = field_create(*{2: (2, 1), 3: (3, 1), 4: (2, 2)}[q])
    for m in range(k + 1):
        assert qbinom(k, m, q) == len(all_subspace_sets(f, k, m))


def test_subspaces_examples():
    zero = subspaces(3, 0, GF2)
    assert len(zero) == 1 and zero[0].dim == 0
    lines = subspaces(2, 1, GF2)
    assert {s.basis[0] for s in lines} == {(1, 0), (0, 1), (1, 1)}
    assert len(subspaces(3, 2, GF2)) == 7


@pytest.mark.parametrize("q", [2, 3, 4])
def test_subspaces_match_oracle_sets(q):
    f = field_create(*{2: (2, 1), 3: (3, 1), 4: (2, 2)}[q])
    k = 3
    for m in range(k + 1):
        ours = {frozenset(s.vectors()) for s in subspaces(k, m, f)}
        assert ours == all_subspace_sets(f, k, m)


def test_subspaces_cap():
    with pytest.raises(CapExceededError):
        subspaces(4, 2, field_create(5), cap=100)


def test_subspaces_containing_examples():
    f = GF2
    a = Subspace.span(f, [[1, 0, 1]], 3)
    assert subspaces_containing(a, 1) == [a]
    full = subspaces_containing(Subspace.zero(f, 3), 3)
    assert len(full) == 1 and full[0].dim == 3
    planes = subspaces_containing(a, 2)
    assert len(planes) == 3
    for b in planes:
        assert (1, 0, 1) in b


def test_subspaces_containing_against_filter(desk_field):
    f, k = desk_field, 3
    for a_dim in range(k + 1):
        for a in subspaces(k, a_dim, f)[:4]:
            for m in range(a_dim, k + 1):
                ours = subspaces_containing(a, m)
                expected = [b for b in subspaces(k, m, f) if all(v in b for v in a.basis)]
                assert sorted(s.basis for s in ours) == sorted(s.basis for s in expected)
                assert len(ours) == qbinom(k - a_dim, m - a_dim, f.q)


def test_dual_examples():
    f = GF2
    assert dual(Subspace.zero(f, 3)) == Subspace.full(f, 3, COL)
    assert dual(Subspace.full(f, 3)) == Subspace.zero(f, 3, COL)
    u = Subspace.span(f, [[1, 1, 0]], 3)
    assert dual(u) == Subspace.span(f, [[1, 1, 0], [0, 0, 1]], 3, COL)


def test_dual_properties(desk_field):
    f = desk_field
    for k in (1, 2, 3):
        for m in range(k + 1):
            for u in subspaces(k, m, f):
                d = dual(u)
                assert d.dim == k - m and d.side == COL
                assert dual(d) == u
                for x in u.basis:
                    for y in d.basis:
                        s = 0
                        for a, b in zip(x, y):
                            s = f.add(s, f.mul(a, b))
                        assert s == 0


def test_projective_points_examples():
    assert len(projective_points(1, field_create(7))) == 1
    assert set(projective_points(2, GF2)) == {(1, 0), (0, 1), (1, 1)}
    assert len(projective_points(3, GF2)) == 7


@pytest.mark.parametrize("k", [1, 2, 3])
def test_points_partition_nonzero_vectors(desk_field, k):
    f = desk_field
    pts = projective_points(k, f)
    assert len(pts) == (f.q**k - 1) // (f.q - 1)
    classes = {}
    for v in itertools.product(range(f.q), repeat=k):
        if any(v):
            classes.setdefault(point_of(f, v), []).append(v)
    assert set(classes) == set(pts)
    assert all(len(c) == f.q - 1 for c in classes.values())
    # Each representative's class is exactly its nonzero scalar multiples.
    for p, members in classes.items():
        assert set(members) == set(span_set(f, [p], k)) - {(0,) * k}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]), st.integers(1, 4), st.data())
def test_span_is_canonical(pm, k, data):
    f = field_create(*pm)
    vecs = data.draw(st.lists(st.lists(st.integers(0, f.q - 1), min_size=k, max_size=k), max_size=4))
    s = Subspace.span(f, vecs, k)
    shuffled = data.draw(st.permutations(vecs))
    assert Subspace.span(f, shuffled, k) == s
    assert len(s) == len(span_set(f, vecs, k))
