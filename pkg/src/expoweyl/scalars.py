"""Exact coefficient field: rationals, adjoined algebraic symbols, formal transcendentals.

Elements are stored as ``num / den`` with ``num`` in ``Q[alg, trans]`` reduced
below each minimal polynomial, and ``den`` in ``Q[trans]`` (algebraic symbols
are cleared from denominators by multiplying through by a norm).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.rings import ring as _poly_ring


class ScalarError(ArithmeticError):
    pass


@dataclass(frozen=True)
class AlgebraicSymbol:
    """A symbol ``s`` satisfying ``min_poly(s) = 0``; coefficients high-to-low, monic."""

    name: str
    min_poly: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.min_poly)
        object.__setattr__(self, "min_poly", coeffs)
        if len(coeffs) < 3:
            raise ScalarError(f"min_poly of {self.name} must have degree >= 2")
        if coeffs[0] != 1:
            raise ScalarError(f"min_poly of {self.name} must be monic")
        if self.degree == 2 and _has_rational_root(coeffs):
            raise ScalarError(f"min_poly of {self.name} is reducible over Q")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1


def _has_rational_root(coeffs):
    # monic quadratic X^2 + bX + c
    _, b, c = coeffs
    disc = b * b - 4 * c
    if disc < 0:
        return False
    num, den = disc.numerator, disc.denominator
    return _is_square(num) and _is_square(den)


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


def quadratic_symbol(name: str, d) -> AlgebraicSymbol:
    """Square root of ``d`` as an algebraic symbol, e.g. ``quadratic_symbol("s2", 2)``."""
    return AlgebraicSymbol(name, (1, 0, -Fraction(d)))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[Fraction, ...]:
    from sympy import Symbol, cyclotomic_poly

    poly = cyclotomic_poly(n, Symbol("X"), polys=True)
    return tuple(Fraction(int(c)) for c in poly.all_coeffs())


class ScalarField:
    """Parent object for :class:`Scalar` values.

    ``algebraic`` is a sequence of :class:`AlgebraicSymbol`; ``transcendental`` a
    sequence of names of formal, algebraically independent symbols.
    """

    def __init__(self, algebraic=(), transcendental=()):
        algebraic = tuple(algebraic)
        transcendental = tuple(transcendental)
        names = [a.name for a in algebraic] + list(transcendental)
        if len(set(names)) != len(names):
            raise ScalarError(f"duplicate symbol names in {names}")
        for n in names:
            if not n.isidentifier():
                raise ScalarError(f"bad symbol name {n!r}")
        self.algebraic = algebraic
        self.transcendental = transcendental
        self.names = tuple(names)
        if names:
            self._ring, *gens = _poly_ring(",".join(names), QQ)
        else:
            # sympy needs at least one generator; keep a dummy that never appears
            self._ring, *gens = _poly_ring("_unit", QQ)
        self._gens = dict(zip(names, gens))
        self._alg_index = {a.name: i for i, a in enumerate(algebraic)}
        self._minpolys = []
        for a in algebraic:
            s = self._gens[a.name]
            mp = self._ring.zero
            for k, c in enumerate(a.min_poly):
                mp += QQ(c.numerator, c.denominator) * s ** (a.degree - k)
            self._minpolys.append(mp)
        self.zero = Scalar(self, self._ring.zero, self._ring.one)
        self.one = Scalar(self, self._ring.one, self._ring.one)

    def __repr__(self):
        return f"ScalarField(algebraic={[a.name for a in self.algebraic]}, transcendental={list(self.transcendental)})"

    def __eq__(self, other):
        return (
            isinstance(other, ScalarField)
            and self.algebraic == other.algebraic
            and self.transcendental == other.transcendental
        )

    def __hash__(self):
        return hash((self.algebraic, self.transcendental))

    # -- construction ------------------------------------------------------

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            if value.field == self:
                return Scalar(self, self._ring(value.num.as_expr()), self._ring(value.den.as_expr()))
            raise ScalarError("scalar from a different field")
        if isinstance(value, str):
            return self.symbol(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Scalar(self, self._ring(value), self._ring.one)
        if isinstance(value, Fraction):
            return Scalar(self, self._ring(QQ(value.numerator, value.denominator)), self._ring.one)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def symbol(self, name: str) -> Scalar:
        try:
            g = self._gens[name]
        except KeyError:
            raise ScalarError(f"unknown symbol {name!r}") from None
        return Scalar(self, g, self._ring.one)

    def has_symbol(self, name: str) -> bool:
        return name in self._gens

    def is_algebraic(self, name: str) -> bool:
        return name in self._alg_index

    def algebraic_symbol(self, name: str) -> AlgebraicSymbol:
        try:
            return self.algebraic[self._alg_index[name]]
        except KeyError:
            raise ScalarError(f"{name!r} is not a configured algebraic symbol") from None

    # -- normalisation -----------------------------------------------------

    def _reduce(self, p):
        if self._minpolys and p:
            return p.rem(self._minpolys)
        return p

    def _has_algebraic(self, p) -> bool:
        if not self.algebraic:
            return False
        na = len(self.algebraic)
        return any(any(m[:na]) for m in p.itermonoms())

    def _make(self, num, den) -> Scalar:
        """Build a reduced scalar; ``den`` must already be free of algebraic symbols."""
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        if den.is_ground:
            c = den.LC
            if c != 1:
                num = num.quo_ground(c)
            return Scalar(self, num, self._ring.one)
        g = num.gcd(den)
        if not g.is_ground:
            num = num.exquo(g)
            den = den.exquo(g)
        c = den.LC
        if c != 1:
            num = num.quo_ground(c)
            den = den.quo_ground(c)
        if den.is_ground:
            den = self._ring.one
        return Scalar(self, num, den)

    def _make_coprime(self, num, den) -> Scalar:
        """Like :meth:`_make` for ``num``, ``den`` already known to be coprime."""
        if not num:
            return self.zero
        c = den.LC
        if c != 1:
            num = num.quo_ground(c)
            den = den.quo_ground(c)
        if den.is_ground:
            den = self._ring.one
        return Scalar(self, num, den)

    def _norm_cofactor(self, p):
        """Return ``(cof, norm)`` with ``p * cof == norm`` and ``norm`` free of algebraic symbols."""
        cof = self._ring.one
        cur = p
        for i, a in enumerate(self.algebraic):
            s = self._gens[a.name]
            if cur.degree(s) <= 0:
                continue
            c = self._cofactor_wrt(cur, s, i, a.degree)
            cof = self._reduce(cof * c)
            cur = self._reduce(cur * c)
        if self._has_algebraic(cur):
            raise ScalarError("norm computation failed to eliminate algebraic symbols")
        return cof, cur

    def _cofactor_wrt(self, p, s, idx, d):
        # multiplication-by-p matrix on the basis 1, s, ..., s^(d-1); column j = p * s^j
        cols = []
        cur = p
        for j in range(d):
            if j:
                cur = self._reduce(cur * s)
            cols.append([cur.coeff_wrt(s, i) for i in range(d)])
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        # adj(M) e_0 via Cramer: entry i = det(M with column i replaced by e_0)
        out = self._ring.zero
        for i in range(d):
            mi = [row[:] for row in mat]
            for r in range(d):
                mi[r][i] = self._ring.one if r == 0 else self._ring.zero
            out += self._reduce(_det(mi)) * s**i
        return self._reduce(out)

    # -- Galois conjugation ------------------------------------------------

    def conjugate(self, a: Scalar, layer: str) -> Scalar:
        """Apply the nontrivial automorphism of the quadratic layer ``Q(layer)``."""
        sym = self.algebraic_symbol(layer)
        if sym.degree != 2:
            raise ScalarError(f"layer {layer!r} is not quadratic")
        a = self(a)
        s = self._gens[layer]
        b = QQ(sym.min_poly[1].numerator, sym.min_poly[1].denominator)
        image = -s - b
        num = self._reduce(a.num.compose(s, image))
        return Scalar(self, num, a.den)

    def random(self, rng, symbols=None, max_terms=3, max_deg=2, coeff=5) -> Scalar:
        """Random polynomial scalar (for tests); ``rng`` is a ``random.Random``."""
        symbols = list(self.names if symbols is None else symbols)
        total = self.zero
        for _ in range(rng.randint(1, max_terms)):
            term = self(Fraction(rng.randint(-coeff, coeff), rng.randint(1, 3)))
            for _ in range(rng.randint(0, max_deg)):
                if symbols:
                    term = term * self.symbol(rng.choice(symbols))
            total = total + term
        return total


def _det(mat):
    """Division-free determinant (Laplace expansion along the first row, memoised)."""
    n = len(mat)
    cache = {}

    def minor(row, cols):
        if row == n:
            return 1
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = 0
        sign = 1
        for c in range(n):
            if not cols & (1 << c):
                continue
            entry = mat[row][c]
            if entry:
                total = total + sign * entry * minor(row + 1, cols & ~(1 << c))
            sign = -sign
        cache[key] = total
        return total

    return minor(0, (1 << n) - 1)


class Scalar:
    """Immutable element of a :class:`ScalarField`."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise ScalarError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if self.den == o.den:
            if self.den.is_ground:
                return Scalar(F, self.num + o.num, self.den)
            return F._make(self.num + o.num, self.den)
        # Henrici: only the shared part of the denominators can cancel
        d1, d2 = self.den, o.den
        g = d1.gcd(d2)
        if g.is_ground:
            return F._make_coprime(self.num * d2 + o.num * d1, d1 * d2)
        d1g, d2g = d1.exquo(g), d2.exquo(g)
        t = self.num * d2g + o.num * d1g
        if not t:
            return F.zero
        g2 = t.gcd(g)
        return F._make_coprime(t.exquo(g2), d1g * d2.exquo(g2))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if self.den.is_ground and o.den.is_ground:
            num = F._reduce(self.num * o.num)
            return Scalar(F, num, self.den) if num else F.zero
        if F._minpolys and F._has_algebraic(self.num) and F._has_algebraic(o.num):
            # reduction by the minimal polynomials can create new common factors
            return F._make(F._reduce(self.num * o.num), self.den * o.den)
        # Henrici: cancel across, the results are already coprime
        g1, g2 = self.num.gcd(o.den), o.num.gcd(self.den)
        n1, d2 = (self.num, o.den) if g1.is_ground else (self.num.exquo(g1), o.den.exquo(g1))
        n2, d1 = (o.num, self.den) if g2.is_ground else (o.num.exquo(g2), self.den.exquo(g2))
        return F._make_coprime(F._reduce(n1 * n2), d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        F = self.field
        num = self.num
        if F._has_algebraic(num):
            cof, norm = F._norm_cofactor(num)
            return F._make(F._reduce(self.den * cof), norm)
        return F._make(self.den, num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.field._ring.one and self.den == self.field._ring.one

    def is_rational(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        c = self.num.LC if self.num else QQ(0)
        return Fraction(int(c.numerator), int(c.denominator))

    def symbols(self) -> frozenset[str]:
        """Names of symbols that occur in this scalar."""
        names = self.field.names
        used = set()
        for p in (self.num, self.den):
            for m in p.itermonoms():
                used.update(names[i] for i, e in enumerate(m) if e)
        return frozenset(used)

    def conjugate(self, layer: str) -> Scalar:
        return self.field.conjugate(self, layer)

    def is_single_term(self) -> bool:
        return self.den == self.field._ring.one and len(self.num) <= 1

    def sign(self) -> int:
        """Sign of the leading coefficient (printing helper)."""
        if not self.num:
            return 0
        return -1 if self.num.LC < 0 else 1

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


def format_poly(p, names) -> str:
    if not p:
        return "0"
    pieces = []
    for monom, coeff in sorted(p.items(), key=lambda kv: kv[0], reverse=True):
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        neg = c < 0
        c = abs(c)
        if not factors:
            body = _frac_str(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_frac_str(c)] + factors)
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(a: Scalar) -> str:
    names = a.field.names
    num = format_poly(a.num, names)
    if a.den == a.field._ring.one:
        return num
    if len(a.num) > 1:
        num = f"({num})"
    return f"{num}/({format_poly(a.den, names)})"
