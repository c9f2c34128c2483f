import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from expoweyl import lattice as L
from expoweyl.scalars import ScalarField, quadratic_symbol

F = ScalarField([quadratic_symbol("s2", 2)], [])


def euclid(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def random_unimodular(rng, n, steps=8):
    M = [list(r) for r in L.identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.randrange(3)
        if kind == 0 and n > 1:
            k = rng.choice([-2, -1, 1, 2])
            for row in M:
                row[i] += k * row[j]
        elif kind == 1 and n > 1:
            for row in M:
                row[i], row[j] = row[j], row[i]
        else:
            for row in M:
                row[i] = -row[i]
    return tuple(tuple(r) for r in M)


# -- examples -------------------------------------------------------------------


def test_content_examples():
    assert L.content((4, 6)) == 2
    assert L.content((0, 0)) == 0
    assert L.content((3, 5, 7)) == euclid(euclid(3, 5), 7) == 1


def test_is_primitive_examples():
    assert L.is_primitive((1, 1))
    assert not L.is_primitive((2, 4))
    assert L.is_primitive((6, 10, 15))
    assert euclid(euclid(6, 10), 15) == 1


def test_complete_to_basis_examples():
    assert L.complete_to_basis((1, 0)) == L.identity(2)
    M = L.complete_to_basis((2, 3))
    assert L.apply_matrix(M, (1, 0)) == (2, 3)
    assert abs(M[0][0] * M[1][1] - M[0][1] * M[1][0]) == 1
    assert L.complete_to_basis((0, 1)) == ((0, 1), (1, 0))


def test_complete_to_basis_rejects_non_primitive():
    with pytest.raises(L.LatticeError):
        L.complete_to_basis((2, 4))
    with pytest.raises(L.LatticeError):
        L.complete_to_basis((0, 0))


def test_apply_matrix_examples():
    assert L.apply_matrix(L.identity(2), (5, -2)) == (5, -2)
    assert L.apply_matrix(((0, 1), (1, 0)), (1, 2)) == (2, 1)
    assert L.apply_matrix(((1, 0), (1, -1)), (1, 1)) == (1, 0)


def test_apply_matrix_dimension_mismatch():
    with pytest.raises(L.LatticeError):
        L.apply_matrix(L.identity(3), (1, 2))


def test_canonical_orbit_rep():
    assert L.canonical_orbit_rep((2, 3)) == (1, 0)
    assert L.canonical_orbit_rep((4, 6)) == (2, 0)
    assert L.canonical_orbit_rep((1, 0)) == (1, 0)
    with pytest.raises(L.LatticeError):
        L.canonical_orbit_rep((0, 0))


def test_determinant_and_inverse():
    M = ((2, 3, 1), (1, 2, 0), (0, 1, 1))
    assert L.determinant(M) == 2 * 2 - 3 * 1 + 1 * 1
    U = ((1, 2, 0), (0, 1, 3), (0, 0, 1))
    assert L.mat_mul(U, L.inverse(U)) == L.identity(3)
    with pytest.raises(L.LatticeError):
        L.inverse(((2, 0), (0, 1)))


def test_basis_validation():
    s2 = F.symbol("s2")
    b = L.LatticeBasis((F.one, s2))
    assert b.rank == 2
    assert b.value((3, -1)) == 3 - s2
    with pytest.raises(L.LatticeError):
        L.LatticeBasis((s2, F.one))
    with pytest.raises(L.LatticeError):
        L.LatticeBasis((F.one, F.one))
    with pytest.raises(L.LatticeError):
        L.LatticeBasis(())


# -- properties ---------------------------------------------------------------------

vec2 = st.tuples(st.integers(-10, 10), st.integers(-10, 10))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=5))
def test_content_is_gcd(v):
    assert L.content(v) == math.gcd(*v)


@given(vec2.filter(lambda v: L.content(v) == 1))
def test_complete_to_basis_property(v):
    M = L.complete_to_basis(v)
    assert L.apply_matrix(M, (1, 0)) == v
    assert abs(L.determinant(M)) == 1


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5).filter(lambda v: L.content(v) == 1))
def test_complete_to_basis_higher_rank(v):
    M = L.complete_to_basis(v)
    assert L.apply_matrix(M, L.unit_vector(len(v))) == tuple(v)
    assert L.is_unimodular(M)


def test_complete_to_basis_exhaustive_box():
    for a in range(-10, 11):
        for b in range(-10, 11):
            if L.content((a, b)) == 1:
                M = L.complete_to_basis((a, b))
                assert L.apply_matrix(M, (1, 0)) == (a, b)
                assert abs(L.determinant(M)) == 1


@given(st.integers(0, 10**6), st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_content_orbit_invariance(seed, v):
    M = random_unimodular(random.Random(seed), 3)
    assert L.is_unimodular(M)
    assert L.content(L.apply_matrix(M, v)) == L.content(v)


@given(vec2, vec2)
def test_equal_content_vectors_are_connected(v, w):
    c = L.content(v)
    if c == 0 or L.content(w) != c:
        return
    Mv = L.complete_to_basis(tuple(x // c for x in v))
    Mw = L.complete_to_basis(tuple(x // c for x in w))
    sigma = L.mat_mul(Mw, L.inverse(Mv))
    assert L.is_unimodular(sigma)
    assert L.apply_matrix(sigma, v) == w
