"""The Witt-type Lie algebra spanned by e^{alpha x} x^beta d.

An element f*d is stored as its coefficient f, an :class:`ExpoPoly` with no
y-dependence.
"""

from __future__ import annotations

from .expolyring import ExpoPoly, ExpoRing, RingError
from .lattice import as_vector


class WittError(ValueError):
    pass


class WittElement:
    __slots__ = ("coeff",)

    def __init__(self, coeff: ExpoPoly):
        if any(m.y_pow for m in coeff.terms):
            raise WittError("Witt coefficients must not involve y")
        self.coeff = coeff

    @property
    def ring(self) -> ExpoRing:
        return self.coeff.ring

    def __add__(self, other):
        return WittElement(self.coeff + _coeff(other))

    def __sub__(self, other):
        return WittElement(self.coeff - _coeff(other))

    def __neg__(self):
        return WittElement(-self.coeff)

    def __mul__(self, c):
        """Scalar multiple."""
        return WittElement(self.coeff * self.ring.field(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return self.coeff == other.coeff

    def __hash__(self):
        return hash(self.coeff)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def as_weyl(self, algebra=None):
        """The element f*d inside a (classical) Weyl algebra over the same ring."""
        from .weylalg import WeylAlgebra

        if algebra is None:
            algebra = WeylAlgebra(self.ring)
        return algebra.element(self.coeff, 1)

    def __repr__(self):
        return f"WittElement({self})"

    def __str__(self):
        from .printer import print_canonical

        return print_canonical(self)


def _coeff(x) -> ExpoPoly:
    if isinstance(x, WittElement):
        return x.coeff
    raise TypeError(f"expected WittElement, got {type(x).__name__}")


def witt(f: ExpoPoly) -> WittElement:
    return WittElement(f)


def witt_basis(ring: ExpoRing, alpha, beta, coeff=1) -> WittElement:
    """coeff * e^{alpha x} x^beta d."""
    m = ring.monomial(e_part=as_vector(alpha, ring.rank), x_part=as_vector(beta, ring.rank))
    return WittElement(ring.term(m, coeff))


def witt_bracket(a: WittElement, b: WittElement) -> WittElement:
    """[f d, g d] = (f delta(g) - g delta(f)) d."""
    f, g = a.coeff, b.coeff
    if f.ring is not g.ring:
        raise RingError("ring mismatch")
    R = f.ring
    return WittElement(f * R.delta(g) - g * R.delta(f))


def structure_constants(ring: ExpoRing, alpha, beta, gamma, delta_) -> WittElement:
    """Closed form of [e^{ax}x^b d, e^{cx}x^d d] = e^{(a+c)x}((c-a)x^{b+d} + (d-b)x^{b+d-1}) d."""
    r = ring.rank
    alpha, beta, gamma, delta_ = (as_vector(v, r) for v in (alpha, beta, gamma, delta_))
    e = tuple(a + c for a, c in zip(alpha, gamma))
    x = tuple(b + d for b, d in zip(beta, delta_))
    x1 = tuple(c - (1 if i == 0 else 0) for i, c in enumerate(x))
    val = ring.basis.value
    out = ring.term(ring.monomial(e_part=e, x_part=x), val(gamma) - val(alpha))
    out = out + ring.term(ring.monomial(e_part=e, x_part=x1), val(delta_) - val(beta))
    return WittElement(out)


def jacobi_defect(a: WittElement, b: WittElement, c: WittElement) -> WittElement:
    br = witt_bracket
    return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
