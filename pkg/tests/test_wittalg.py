import random

import pytest
import sympy as sp
from conftest import RANK2, session
from hypothesis import given
from hypothesis import strategies as st
from oracles import X, functions_equal, poly_to_function

from expoweyl.wittalg import WittElement, WittError, jacobi_defect, structure_constants, witt_basis, witt_bracket

R1 = session("classical").ring
R2 = session("classical", **RANK2).ring
seeds = st.integers(0, 10**9)


def random_witt(ring, rng, radius=2):
    f = ring.random(rng, radius=radius, coeff_symbols=("s2",))
    return WittElement(type(f)(ring, {m._replace(y_pow=0): c for m, c in f.terms.items()}))


def D(ring):
    return witt_basis(ring, (0,) * ring.rank, (0,) * ring.rank)


def test_bracket_with_d():
    for g, d in [(1, 0), (2, -1), (-1, 2)]:
        got = witt_bracket(D(R1), witt_basis(R1, (g,), (d,)))
        assert got == structure_constants(R1, (0,), (0,), (g,), (d,))
        expected = R1.term(R1.monomial(e_part=(g,), x_part=(d,)), g) + R1.term(R1.monomial(e_part=(g,), x_part=(d - 1,)), d)
        assert got.coeff == expected


def test_bracket_example_against_calculus():
    a, b = witt_basis(R1, (1,), (0,)), witt_basis(R1, (0,), (1,))
    got = witt_bracket(a, b)
    assert got.coeff == R1.e() - R1.e() * R1.x()
    f, g = sp.exp(X), X
    oracle = f * sp.diff(g, X) - g * sp.diff(f, X)
    assert functions_equal(poly_to_function(got.coeff, [1]), oracle)


def test_bracket_self_is_zero():
    a = witt_basis(R2, (1, 1), (0, -1), 3)
    assert witt_bracket(a, a).is_zero()


def test_structure_constants_examples():
    assert structure_constants(R1, (2,), (1,), (2,), (1,)).is_zero()
    got = structure_constants(R1, (1,), (0,), (0,), (1,))
    assert got.coeff == R1.e() * (1 - R1.x())
    assert got == witt_bracket(witt_basis(R1, (1,), (0,)), witt_basis(R1, (0,), (1,)))


def test_jacobi_examples():
    x_d = [witt_basis(R1, (0,), (k,)) for k in range(3)]
    assert jacobi_defect(*x_d).is_zero()
    a, b, c = witt_basis(R2, (1, 0), (0, 0)), witt_basis(R2, (0, 1), (0, 0)), witt_basis(R2, (0, 0), (1, 0))
    assert jacobi_defect(a, b, c).is_zero()
    assert jacobi_defect(c, a, a).is_zero()


def test_y_coefficients_rejected():
    with pytest.raises(WittError):
        WittElement(R1.y())


def test_printing_as_d_multiple():
    assert str(witt_basis(R1, (1,), (2,), 3)) == "3*E(1)*X(2)*D"


def test_bracket_matches_calculus_oracle():
    rng = random.Random(11)
    embed = [1, sp.sqrt(2)]
    for _ in range(10):
        a, b = random_witt(R2, rng, 1), random_witt(R2, rng, 1)
        f, g = poly_to_function(a.coeff, embed), poly_to_function(b.coeff, embed)
        oracle = f * sp.diff(g, X) - g * sp.diff(f, X)
        assert functions_equal(poly_to_function(witt_bracket(a, b).coeff, embed), oracle)


@given(seeds)
def test_antisymmetry_and_bilinearity(seed):
    rng = random.Random(seed)
    a, b, c = (random_witt(R2, rng) for _ in range(3))
    k = R2.field(rng.randint(-3, 3)) + R2.field.symbol("lam")
    assert witt_bracket(a, b) == -witt_bracket(b, a)
    assert witt_bracket(a * k + c, b) == witt_bracket(a, b) * k + witt_bracket(c, b)


@given(seeds)
def test_jacobi_hypothesis(seed):
    rng = random.Random(seed)
    assert jacobi_defect(*(random_witt(R2, rng) for _ in range(3))).is_zero()


def test_structure_constants_rank2_sample():
    rng = random.Random(5)
    for _ in range(100):
        a, b, c, d = (tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(4))
        assert witt_bracket(witt_basis(R2, a, b), witt_basis(R2, c, d)) == structure_constants(R2, a, b, c, d)
