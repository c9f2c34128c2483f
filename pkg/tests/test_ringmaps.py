import random

import pytest
from conftest import RANK2, session
from hypothesis import given
from hypothesis import strategies as st
from oracles import gl2_orbit
from test_lattice import random_unimodular

from expoweyl import lattice as L
from expoweyl import ringmaps as M
from expoweyl.parser import parse_element

S1 = session("classical")
S2 = session("classical", **RANK2)
R1 = S1.ring
seeds = st.integers(0, 10**9)


def random_aut(ring, rng):
    F = ring.field
    n = ring.n_coords
    torus = []
    for _ in range(n):
        c = F(rng.choice([1, -1, 2, 3, -2])) * F.symbol(rng.choice(["lam", "t"])) ** rng.randint(0, 1)
        torus.append(c)
    return M.RingAutomorphism(tuple(torus), random_unimodular(rng, n, steps=4))


# -- automorphisms -----------------------------------------------------------------


def test_identity_automorphism():
    f = R1.x(2) + R1.e(-1) * 3 + R1.y()
    assert M.apply_automorphism(M.RingAutomorphism.identity(R1), f) == f


def test_pure_torus_scales_y():
    g = M.RingAutomorphism.pure_torus(R1, (2, 1, 1))
    assert M.apply_automorphism(g, R1.y()) == R1.y() * 2


def test_swap_y_and_first_exponential():
    g = M.RingAutomorphism.pure_matrix(R1, ((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    assert M.apply_automorphism(g, R1.y()) == R1.e()


def test_compose_examples():
    g = M.RingAutomorphism.pure_torus(R1, (2, 3, 5))
    ident = M.RingAutomorphism.identity(R1)
    assert M.compose(g, ident) == g
    h = M.RingAutomorphism.pure_torus(R1, (7, 1, -1))
    assert M.compose(g, h).torus == tuple(R1.field(v) for v in (14, 3, -5))
    swap = M.RingAutomorphism.pure_matrix(R1, ((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    a, b = M.compose(g, swap), M.compose(swap, g)
    assert any(M.apply_automorphism(a, x) != M.apply_automorphism(b, x) for x in (R1.y(), R1.e(), R1.x()))


def test_automorphism_validation():
    F = R1.field
    with pytest.raises(M.MapError):
        M.RingAutomorphism((F.one, F.zero, F.one), L.identity(3))
    with pytest.raises(M.MapError):
        M.RingAutomorphism((F.one,) * 3, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(M.MapError):
        M.RingAutomorphism((F.one,) * 2, L.identity(3))
    with pytest.raises(M.MapError):
        M.apply_automorphism(M.RingAutomorphism.identity(R1), S2.ring.one())


@given(seeds)
def test_automorphism_is_ring_homomorphism(seed):
    rng = random.Random(seed)
    g = random_aut(R1, rng)
    f, h = R1.random(rng, radius=2), R1.random(rng, radius=2)
    ap = lambda z: M.apply_automorphism(g, z)  # noqa: E731
    assert ap(f * h) == ap(f) * ap(h)
    assert ap(f + h) == ap(f) + ap(h)


@given(seeds)
def test_compose_associative_and_inverse(seed):
    rng = random.Random(seed)
    g, h, k = (random_aut(R1, rng) for _ in range(3))
    assert M.compose(M.compose(g, h), k) == M.compose(g, M.compose(h, k))
    gi = M.inverse(g)
    for _, gen in [("y", R1.y()), ("e", R1.e()), ("x", R1.x())]:
        assert M.apply_automorphism(M.compose(g, gi), gen) == gen
        assert M.apply_automorphism(M.compose(gi, g), gen) == gen


# -- torus on exponentials ----------------------------------------------------------


def test_torus_on_exponentials_examples():
    F = S2.field
    l1, l2, l3 = (F.symbol(n) for n in ("lam", "t", "tau"))
    a, b, c = 2, -1, 3
    assert M.torus_on_exponentials((l1, l2, l3), (a, b, c)) == l1**a * l2**b * l3**c
    assert M.torus_on_exponentials((F.one,) * 3, (4, 5, 6)) == 1
    assert M.torus_on_exponentials((F(2), F(3)), (1, -1)) == F(2) / 3


def test_exponential_torus_scales_exponentials():
    F = S2.field
    lam = (F(2), F.symbol("lam"))
    g = M.exponential_torus(S2.ring, lam)
    e = S2.ring.e(1, -2)
    assert M.apply_automorphism(g, e) == e * M.torus_on_exponentials(lam, (1, -2))
    assert M.apply_automorphism(g, S2.ring.x(1, 1)) == S2.ring.x(1, 1)


def test_torus_injectivity():
    F = S2.field
    assert M.torus_is_trivial((F.one, F.one))
    assert not M.torus_is_trivial((F.one, F(-1)))
    assert not M.torus_is_trivial((F.symbol("lam"), F.one))


# -- isomorphism decision -------------------------------------------------------------


def test_iso_examples():
    v = M.iso_decide((1, 1), (1, 0))
    assert v.isomorphic and L.apply_matrix(v.witness, (1, 1)) in {(1, 0), (-1, 0)}
    assert L.is_unimodular(v.witness)
    assert not M.iso_decide((2, 0), (1, 1)).isomorphic
    same = M.iso_decide((3, -4), (3, -4))
    assert same.isomorphic and same.witness == L.identity(2)


def test_iso_alternative_witness_is_valid():
    sigma = ((1, 0), (1, -1))
    assert L.apply_matrix(sigma, (1, 1)) == (1, 0) and L.is_unimodular(sigma)


def test_iso_rank1_and_errors():
    assert M.iso_decide((2,), (-2,)).isomorphic
    assert not M.iso_decide((2,), (3,)).isomorphic
    with pytest.raises(M.MapError):
        M.iso_decide((0, 0), (1, 0))
    with pytest.raises(M.MapError):
        M.iso_decide((1,), (1, 0))


def test_iso_rank3_witness():
    v = M.iso_decide((2, 4, 6), (0, 0, 2))
    assert v.isomorphic and L.apply_matrix(v.witness, (2, 4, 6)) == (0, 0, 2)


def test_iso_agrees_with_bfs_for_a_few_starts():
    for p1 in [(1, 1), (2, 2), (0, 3)]:
        orbit = gl2_orbit(p1)
        for p2 in [(1, 0), (2, -2), (3, 0), (1, 2)]:
            expect = p2 in orbit or (-p2[0], -p2[1]) in orbit
            assert M.iso_decide(p1, p2).isomorphic == expect


def test_canonical_orbit_rep_reexport():
    assert M.canonical_orbit_rep((4, 6)) == (2, 0)


# -- Galois ------------------------------------------------------------------------------


def test_galois_examples():
    sig = S1.galois
    P = lambda t: parse_element(t, S1.algebra)  # noqa: E731
    assert M.galois_apply(sig, P("s2*D")) == P("-s2*D")
    assert M.galois_apply(sig, P("3*X(1)*D")) == P("3*X(1)*D")
    assert M.galois_apply(sig, P("(1+s2)*E(1)")) == P("(1-s2)*E(1)")


def test_reynolds_examples():
    sig = S1.galois
    P = lambda t: parse_element(t, S1.algebra)  # noqa: E731
    assert M.reynolds_project(sig, P("(1+s2)*X(1)*D")) == P("X(1)*D")
    assert M.reynolds_project(sig, P("s2*D")).is_zero()
    assert M.reynolds_project(sig, P("7*E(1)")) == P("7*E(1)")
    f = S1.ring.x() * (1 + S1.field.symbol("s2"))
    assert M.reynolds_project(sig, f) == S1.ring.x()


def test_galois_bad_layer():
    with pytest.raises(M.MapError):
        M.GaloisAction("s2", order=3)
    with pytest.raises(M.MapError):
        M.galois_apply(M.GaloisAction("q"), S1.algebra.one())


@given(seeds)
def test_galois_apply_preserves_products(seed):
    rng = random.Random(seed)
    A = S1.algebra
    sig = S1.galois

    def rnd():
        out = A.zero()
        for _ in range(2):
            out = out + A.element(S1.ring.random(rng, radius=1, coeff_symbols=("s2",)), rng.randint(0, 2))
        return out

    a, b = rnd(), rnd()
    assert M.galois_apply(sig, a * b) == M.galois_apply(sig, a) * M.galois_apply(sig, b)
