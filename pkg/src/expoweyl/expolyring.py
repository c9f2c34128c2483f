"""The commutative ring R_{p,t,A} of Laurent monomials y^m e^{alpha x} x^beta.

A monomial is an :class:`ExpoMonomial` ``(y_pow, e_part, x_part)``; a ring
element is an :class:`ExpoPoly`, a finite map monomial -> scalar.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .lattice import LatticeBasis, as_vector, unit_vector
from .scalars import Scalar


class RingError(ValueError):
    pass


class Variant(str, Enum):
    CONSTANT = "constant"  # y = e^{x^p e^t}, e^t kept as the scalar symbol tau
    DYNAMIC = "dynamic"  # y = e^{x^p e^{tx}}, e^{tx} is an extra exponential generator


class ExpoMonomial(NamedTuple):
    y_pow: int
    e_part: tuple[int, ...]
    x_part: tuple[int, ...]

    def __mul__(self, other):  # type: ignore[override]
        return ExpoMonomial(
            self.y_pow + other.y_pow,
            tuple(a + b for a, b in zip(self.e_part, other.e_part)),
            tuple(a + b for a, b in zip(self.x_part, other.x_part)),
        )

    def inverse(self):
        return ExpoMonomial(-self.y_pow, tuple(-a for a in self.e_part), tuple(-a for a in self.x_part))

    def power(self, n: int):
        return ExpoMonomial(n * self.y_pow, tuple(n * a for a in self.e_part), tuple(n * a for a in self.x_part))

    def exponents(self) -> tuple[int, ...]:
        """Flat exponent vector (y, e..., x...) in Z^{1 + |e| + |x|}."""
        return (self.y_pow, *self.e_part, *self.x_part)

    def size(self) -> int:
        return abs(self.y_pow) + sum(map(abs, self.e_part)) + sum(map(abs, self.x_part))


def multidegree(m: ExpoMonomial, d_pow: int = 0):
    """Bidegree (y_pow + total e-exponent, x-part); the derivative power is ignored."""
    return m.y_pow + sum(m.e_part), m.x_part


class ExpoRing:
    """R_{p,t,A} for a lattice basis, a nonzero ``p`` in A and a variant.

    Under the dynamic variant the e-lattice gets one extra coordinate whose
    embedding is the symbol ``t_symbol``, so that e^{tx} is a generator.
    """

    def __init__(self, basis: LatticeBasis, p, variant=Variant.CONSTANT, t_symbol="t", tau_symbol="tau"):
        self.basis = basis
        self.field = basis.field
        self.rank = basis.rank
        self.p = as_vector(p, self.rank)
        if not any(self.p):
            raise RingError("p must be nonzero")
        self.variant = Variant(variant)
        self.t_symbol = t_symbol
        self.tau_symbol = tau_symbol
        if self.variant is Variant.DYNAMIC:
            self.e_embed = basis.embed + (self.field.symbol(t_symbol),)
        else:
            self.e_embed = basis.embed
            self.field.symbol(tau_symbol)  # must exist
        self.e_rank = len(self.e_embed)
        self._unit = ExpoMonomial(0, (0,) * self.e_rank, (0,) * self.rank)
        self._logder_cache = {}
        self._y_logder = None

    def __repr__(self):
        return f"ExpoRing(rank={self.rank}, p={self.p}, variant={self.variant.value})"

    @property
    def n_coords(self) -> int:
        return 1 + self.e_rank + self.rank

    # -- constructors ------------------------------------------------------

    def monomial(self, y_pow=0, e_part=None, x_part=None) -> ExpoMonomial:
        e = (0,) * self.e_rank if e_part is None else tuple(int(c) for c in e_part)
        x = (0,) * self.rank if x_part is None else tuple(int(c) for c in x_part)
        if len(e) == self.rank and self.e_rank == self.rank + 1:
            e = e + (0,)
        if len(e) != self.e_rank or len(x) != self.rank:
            raise RingError(f"coordinate arity mismatch: e{e} x{x}")
        return ExpoMonomial(int(y_pow), e, x)

    def from_exponents(self, vec) -> ExpoMonomial:
        vec = tuple(vec)
        if len(vec) != self.n_coords:
            raise RingError(f"expected {self.n_coords} exponents, got {len(vec)}")
        return ExpoMonomial(vec[0], vec[1 : 1 + self.e_rank], vec[1 + self.e_rank :])

    @property
    def unit_monomial(self) -> ExpoMonomial:
        return self._unit

    def term(self, mono: ExpoMonomial, coeff=1) -> ExpoPoly:
        return ExpoPoly(self, {mono: self.field(coeff)})

    def const(self, c) -> ExpoPoly:
        return self.term(self._unit, c)

    def one(self) -> ExpoPoly:
        return self.const(1)

    def zero(self) -> ExpoPoly:
        return ExpoPoly(self, {})

    def x(self, *coords) -> ExpoPoly:
        """x^alpha for alpha given in basis coordinates; ``x()`` is x itself."""
        alpha = coords or unit_vector(self.rank)
        return self.term(self.monomial(x_part=alpha))

    def e(self, *coords) -> ExpoPoly:
        """e^{alpha x}; ``e()`` is e^x."""
        alpha = coords or unit_vector(self.rank)
        return self.term(self.monomial(e_part=alpha))

    def y(self, k: int = 1) -> ExpoPoly:
        return self.term(self.monomial(y_pow=k))

    # -- derivation ----------------------------------------------------------

    def e_value(self, e_part) -> Scalar:
        total = self.field.zero
        for c, b in zip(e_part, self.e_embed):
            if c:
                total = total + c * b
        return total

    def x_value(self, x_part) -> Scalar:
        return self.basis.value(x_part)

    def y_log_derivative(self) -> ExpoPoly:
        """delta(y) / y."""
        if self._y_logder is None:
            p_val = self.basis.value(self.p)
            p_minus_1 = tuple(c - (1 if i == 0 else 0) for i, c in enumerate(self.p))
            if self.variant is Variant.CONSTANT:
                tau = self.field.symbol(self.tau_symbol)
                self._y_logder = self.term(self.monomial(x_part=p_minus_1), p_val * tau)
            else:
                t = self.field.symbol(self.t_symbol)
                et = unit_vector(self.e_rank, self.e_rank - 1)
                self._y_logder = ExpoPoly(
                    self,
                    {
                        self.monomial(e_part=et, x_part=p_minus_1): p_val,
                        self.monomial(e_part=et, x_part=self.p): t,
                    },
                )
        return self._y_logder

    def log_derivative(self, m: ExpoMonomial) -> ExpoPoly:
        """delta(m) / m, an element of R."""
        cached = self._logder_cache.get(m)
        if cached is not None:
            return cached
        terms = {}
        const = self.e_value(m.e_part)
        if const:
            terms[self._unit] = const
        xval = self.x_value(m.x_part)
        if xval:
            xinv = self.monomial(x_part=tuple(-1 if i == 0 else 0 for i in range(self.rank)))
            terms[xinv] = xval
        out = ExpoPoly(self, terms)
        if m.y_pow:
            out = out + self.y_log_derivative() * m.y_pow
        self._logder_cache[m] = out
        return out

    def delta_monomial(self, m: ExpoMonomial) -> ExpoPoly:
        return self.log_derivative(m).shift(m)

    def delta(self, f: ExpoPoly) -> ExpoPoly:
        """The derivation d/dx: x^a -> a x^{a-1}, e^{ax} -> a e^{ax}, y -> y * (d/dx of its exponent)."""
        self.check(f)
        out = {}
        for m, c in f.terms.items():
            for n, d in self.delta_monomial(m).terms.items():
                _acc(out, n, c * d)
        return ExpoPoly(self, out)

    def check(self, f):
        if f.ring is not self:
            raise RingError("element belongs to a different ring")
        return f

    def random(self, rng, n_terms=3, radius=2, coeff_symbols=()) -> ExpoPoly:
        terms = {}
        for _ in range(rng.randint(1, n_terms)):
            vec = [rng.randint(-radius, radius) for _ in range(self.n_coords)]
            c = self.field(rng.randint(-4, 4))
            for s in coeff_symbols:
                if rng.random() < 0.4:
                    c = c + rng.randint(-2, 2) * self.field.symbol(s)
            _acc(terms, self.from_exponents(vec), c)
        return ExpoPoly(self, terms)


def _acc(d, key, val):
    if not val:
        return
    cur = d.get(key)
    if cur is None:
        d[key] = val
    else:
        s = cur + val
        if s:
            d[key] = s
        else:
            del d[key]


class ExpoPoly:
    """Finite F-linear combination of monomials of an :class:`ExpoRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ExpoRing, terms=None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def _other(self, other):
        if isinstance(other, ExpoPoly):
            if other.ring is not self.ring:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            _acc(out, m, c)
        return ExpoPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return ExpoPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = self.ring.field(other)
            return ExpoPoly(self.ring, {m: a * c for m, a in self.terms.items()})
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                _acc(out, m1 * m2, c1 * c2)
        return ExpoPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise RingError("only units have negative powers")
            ((m, c),) = self.terms.items()
            return ExpoPoly(self.ring, {m.power(n): c**n})
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, m: ExpoMonomial) -> ExpoPoly:
        """Multiply by the monomial m."""
        return ExpoPoly(self.ring, {n * m: c for n, c in self.terms.items()})

    def map_coefficients(self, fn) -> ExpoPoly:
        return ExpoPoly(self.ring, {m: fn(c) for m, c in self.terms.items()})

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of a Laurent monomial ring are exactly the nonzero monomial multiples."""
        return len(self.terms) == 1

    def coefficient(self, m: ExpoMonomial) -> Scalar:
        return self.terms.get(m, self.ring.field.zero)

    def monomials(self):
        return sorted(self.terms, reverse=True)

    def __repr__(self):
        from .printer import print_canonical

        return f"ExpoPoly({print_canonical(self)})"

    def __str__(self):
        from .printer import print_canonical

        return print_canonical(self)


def is_unit(f: ExpoPoly) -> bool:
    return f.is_unit()
