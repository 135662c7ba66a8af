from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qmassey import exactla as la


def F(x, y=1):
    return Fraction(x, y)


def random_matrix(rng, rows, cols, den=3):
    return [[Fraction(rng.randint(-4, 4), rng.randint(1, den)) for _ in range(cols)]
            for _ in range(rows)]


def test_rref_identity():
    m = [la.unit_vec(3, i) for i in range(3)]
    red, piv = la.rref(m)
    assert red == m
    assert piv == [0, 1, 2]


def test_rank_hand_values():
    assert la.rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert la.rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert la.rank([[F(0), F(0)]]) == 0


def test_solve_consistent_and_inconsistent():
    m = [[F(2), F(1)], [F(1), F(3)]]
    x = la.solve(m, [F(5), F(10)])
    assert x is not None
    assert la.mat_vec(m, x) == [F(5), F(10)]
    # rank-1 system, incompatible rhs
    assert la.solve([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)]) is None


def test_nullspace_dimensions_and_membership():
    m = [[F(1), F(2), F(3)]]
    basis = la.nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert la.mat_vec(m, v) == [F(0)]


def test_span_coefficients_roundtrip():
    rng = random.Random(7)
    spanning = random_matrix(rng, 4, 6)
    coeffs = [F(rng.randint(-3, 3)) for _ in range(4)]
    v = la.zeros(6)
    for c, s in zip(coeffs, spanning):
        v = la.vec_add(v, la.vec_scale(c, s))
    got = la.span_coefficients(spanning, v)
    assert got is not None
    rebuilt = la.zeros(6)
    for c, s in zip(got, spanning):
        rebuilt = la.vec_add(rebuilt, la.vec_scale(c, s))
    assert rebuilt == v


def test_annihilating_functional_separates():
    spanning = [la.vec([1, 0, 0, 2]), la.vec([0, 1, 0, -1])]
    outside = la.vec([0, 0, 1, 0])
    phi = la.annihilating_functional(spanning, outside)
    assert phi is not None
    assert la.vec_dot(phi, outside) == 1
    for s in spanning:
        assert la.vec_dot(phi, s) == 0
    inside = la.vec_add(spanning[0], la.vec_scale(F(3), spanning[1]))
    assert la.annihilating_functional(spanning, inside) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_rank_nullity_random(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    m = random_matrix(rng, rows, cols)
    r = la.rank(m)
    basis = la.nullspace(m)
    assert r + len(basis) == cols
    for v in basis:
        assert la.is_zero_vec(la.mat_vec(m, v))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_solve_matches_direct_substitution(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    m = random_matrix(rng, rows, cols)
    x0 = [F(rng.randint(-3, 3)) for _ in range(cols)]
    b = la.mat_vec(m, x0)
    x = la.solve(m, b)
    assert x is not None
    assert la.mat_vec(m, x) == b


def test_sparse_rank_kernel_agrees_with_dense():
    rng = random.Random(11)
    for _ in range(25):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(cols)] for _ in range(rows)]
        sparse = [{c: x for c, x in enumerate(row) if x} for row in dense]
        dense_f = [[Fraction(x) for x in row] for row in dense]
        r, kern = la.sparse_rank_and_kernel(sparse, cols)
        assert r == la.rank(dense_f)
        assert len(kern) == cols - r
        for v in kern:
            assert la.is_zero_vec(la.mat_vec(dense_f, v))
