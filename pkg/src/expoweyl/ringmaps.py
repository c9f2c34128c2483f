"""Maps on R and on Weyl elements.

* :class:`RingAutomorphism`: a torus vector and a unimodular matrix acting on
  the monomial lattice Z^{n} with coordinates (y, e-part, x-part).
* :func:`iso_decide`: whether two choices of ``p`` give isomorphic rings,
  with a unimodular witness.
* Galois conjugation of coefficients and the averaging projector onto the
  fixed algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .expolyring import ExpoPoly, ExpoRing, _acc
from .lattice import LatticeError, as_vector, check_unimodular, complete_to_basis, content
from .scalars import Scalar, ScalarError


class MapError(ValueError):
    pass


def _power_product(bases, exps, one):
    out = one
    for b, e in zip(bases, exps):
        if e:
            out = out * b**e
    return out


@dataclass(frozen=True)
class RingAutomorphism:
    """z^v -> (prod_i torus_i^{(Mv)_i}) z^{Mv} on exponent vectors v = (y, e..., x...)."""

    torus: tuple[Scalar, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        torus = tuple(self.torus)
        if not torus:
            raise MapError("empty torus")
        if any(not t for t in torus):
            raise MapError("torus entries must be nonzero")
        try:
            matrix = check_unimodular(self.matrix)
        except LatticeError as exc:
            raise MapError(str(exc)) from None
        if len(matrix) != len(torus):
            raise MapError(f"torus has {len(torus)} entries but matrix is {len(matrix)}x{len(matrix)}")
        object.__setattr__(self, "torus", torus)
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return len(self.torus)

    @classmethod
    def identity(cls, ring: ExpoRing) -> RingAutomorphism:
        n = ring.n_coords
        return cls((ring.field.one,) * n, lattice.identity(n))

    @classmethod
    def pure_torus(cls, ring: ExpoRing, torus) -> RingAutomorphism:
        return cls(tuple(ring.field(t) for t in torus), lattice.identity(ring.n_coords))

    @classmethod
    def pure_matrix(cls, ring: ExpoRing, matrix) -> RingAutomorphism:
        return cls((ring.field.one,) * ring.n_coords, matrix)

    def to_record(self) -> dict:
        return {"torus": [str(t) for t in self.torus], "matrix": [list(r) for r in self.matrix]}


def apply_automorphism(g: RingAutomorphism, f: ExpoPoly) -> ExpoPoly:
    ring = f.ring
    if g.size != ring.n_coords:
        raise MapError(f"automorphism of size {g.size} applied to a ring with {ring.n_coords} coordinates")
    one = ring.field.one
    out = {}
    for m, c in f.terms.items():
        w = lattice.apply_matrix(g.matrix, m.exponents())
        _acc(out, ring.from_exponents(w), c * _power_product(g.torus, w, one))
    return ExpoPoly(ring, out)


def compose(g: RingAutomorphism, h: RingAutomorphism) -> RingAutomorphism:
    """g after h."""
    if g.size != h.size:
        raise MapError("size mismatch in compose")
    ginv = lattice.inverse(g.matrix)
    n = g.size
    one = g.torus[0].field.one
    torus = tuple(g.torus[j] * _power_product(h.torus, [ginv[i][j] for i in range(n)], one) for j in range(n))
    return RingAutomorphism(torus, lattice.mat_mul(g.matrix, h.matrix))


def inverse(g: RingAutomorphism) -> RingAutomorphism:
    n = g.size
    one = g.torus[0].field.one
    torus = tuple(_power_product(g.torus, [-g.matrix[j][i] for j in range(n)], one) for i in range(n))
    return RingAutomorphism(torus, lattice.inverse(g.matrix))


def torus_on_exponentials(lam, alpha) -> Scalar:
    """Scaling factor prod_i lam_i^{alpha_i} of e^{alpha x} under the exponential torus."""
    lam = tuple(lam)
    alpha = as_vector(alpha, len(lam))
    if any(not l for l in lam):
        raise MapError("torus entries must be nonzero")
    one = lam[0].field.one if isinstance(lam[0], Scalar) else 1
    return _power_product(lam, alpha, one)


def exponential_torus(ring: ExpoRing, lam) -> RingAutomorphism:
    """Automorphism scaling e^{e_i x} by lam_i and fixing x^alpha and y."""
    lam = tuple(ring.field(l) for l in lam)
    if len(lam) != ring.e_rank:
        raise MapError(f"expected {ring.e_rank} torus entries, got {len(lam)}")
    one = ring.field.one
    return RingAutomorphism.pure_torus(ring, (one, *lam) + (one,) * ring.rank)


def torus_is_trivial(lam) -> bool:
    """True iff the exponential torus element lam fixes every e^{e_i x}."""
    r = len(lam)
    return all(torus_on_exponentials(lam, lattice.unit_vector(r, i)) == 1 for i in range(r))


# -- isomorphism classification ------------------------------------------------


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    witness: tuple[tuple[int, ...], ...] | None
    reason: str

    def to_record(self) -> dict:
        return {
            "verdict": "YES" if self.isomorphic else "NO",
            "witness": None if self.witness is None else [list(r) for r in self.witness],
            "reason": self.reason,
        }


def iso_decide(p1, p2) -> IsoVerdict:
    """Decide whether some sigma in GL(r, Z) has sigma(p1) = +-p2.

    For r >= 2 the GL(r, Z)-orbits of nonzero vectors are classified by
    content; for r = 1 the group is {+-1}.
    """
    p1, p2 = as_vector(p1), as_vector(p2)
    if len(p1) != len(p2):
        raise MapError("p1 and p2 have different ranks")
    c1, c2 = content(p1), content(p2)
    if c1 == 0 or c2 == 0:
        raise MapError("p must be nonzero")
    r = len(p1)
    if r == 1:
        if p1 == p2:
            return IsoVerdict(True, ((1,),), "p1 = p2")
        if p1[0] == -p2[0]:
            return IsoVerdict(True, ((-1,),), "p1 = -p2")
        return IsoVerdict(False, None, "rank 1: p1 != +-p2")
    if c1 != c2:
        return IsoVerdict(False, None, f"contents differ ({c1} vs {c2})")
    if p1 == p2:
        return IsoVerdict(True, lattice.identity(r), "p1 = p2")
    m1 = complete_to_basis(tuple(c // c1 for c in p1))
    m2 = complete_to_basis(tuple(c // c2 for c in p2))
    sigma = lattice.mat_mul(m2, lattice.inverse(m1))
    return IsoVerdict(True, sigma, f"equal content {c1}")


canonical_orbit_rep = lattice.canonical_orbit_rep


# -- Galois descent ------------------------------------------------------------


@dataclass(frozen=True)
class GaloisAction:
    """The nontrivial automorphism of a quadratic layer F(s) over F."""

    layer: str
    order: int = 2

    def __post_init__(self):
        if self.order != 2:
            raise MapError("only order-2 Galois layers are supported")

    def scalar(self, c: Scalar) -> Scalar:
        return c.field.conjugate(c, self.layer)


def galois_apply(sigma: GaloisAction, a):
    """Conjugate every coefficient of an ExpoPoly or WeylElement."""
    try:
        return a.map_coefficients(sigma.scalar)
    except ScalarError as exc:
        raise MapError(str(exc)) from None


def reynolds_project(sigma: GaloisAction, a):
    """(a + sigma(a)) / 2: the projector onto the fixed algebra."""
    s = a + galois_apply(sigma, a)
    if hasattr(s, "scale"):
        return s.scale(s.algebra.field(1) / 2)
    return s * (s.ring.field(1) / 2)


def is_fixed(sigma: GaloisAction, a) -> bool:
    return galois_apply(sigma, a) == a
