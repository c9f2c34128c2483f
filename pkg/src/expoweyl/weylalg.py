"""The Ore extension A = R[d; sigma, delta_q] and its q-deformations.

Every element is kept in normal form ``sum f_k d^k`` (derivatives on the
right).  Moving ``d`` past a ring element uses ``d f = sigma(f) d + delta_q(f)``.

Twist conventions
-----------------
* classical: sigma = id and delta_q is the derivation of :class:`ExpoRing`.
* generic / root: sigma(m) = chi(m) m for a character chi of the monomial
  group.  chi(x) = q (a formal symbol, or a primitive N-th root of unity in
  root mode); every other lattice coordinate gets its own formal symbol
  ``q_x<i>``, ``q_e<i>``, ``q_y``.  Because x is a unit and sigma(x) != x, the
  only sigma-derivation with delta_q(x) = 1 is
  ``delta_q(f) = (sigma(f) - f) / ((q - 1) x)``, so delta_q(x^n) = [n]_q x^{n-1}.
  With ``exp_twist="trivial"`` the exponentials and y are left untwisted,
  which makes them central.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .expolyring import ExpoMonomial, ExpoPoly, ExpoRing, _acc
from .linalg import Echelon, nullspace
from .scalars import AlgebraicSymbol, Scalar, ScalarField, cyclotomic_coeffs


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class DeformationConfig:
    kind: str = "classical"  # classical | generic | root
    order: int | None = None  # root of unity order for kind == "root"
    exp_twist: str = "formal"  # formal | trivial

    def __post_init__(self):
        if self.kind not in ("classical", "generic", "root"):
            raise WeylError(f"unknown q-mode {self.kind!r}")
        if self.kind == "root":
            if self.order is None or self.order < 2:
                raise WeylError("root-of-unity mode needs order >= 2")
        elif self.order is not None:
            raise WeylError("order only applies to root-of-unity mode")
        if self.exp_twist not in ("formal", "trivial"):
            raise WeylError(f"unknown exp_twist {self.exp_twist!r}")

    @classmethod
    def parse(cls, text: str, exp_twist: str = "formal") -> DeformationConfig:
        text = text.strip()
        if text in ("classical", "q=1", "1"):
            return cls("classical", exp_twist=exp_twist)
        if text == "generic":
            return cls("generic", exp_twist=exp_twist)
        if text.startswith("root:"):
            try:
                n = int(text[5:])
            except ValueError:
                raise WeylError(f"bad root order in {text!r}") from None
            return cls("root", n, exp_twist=exp_twist)
        raise WeylError(f"unknown q-mode {text!r}")

    def __str__(self):
        return f"root:{self.order}" if self.kind == "root" else self.kind

    @property
    def root_symbol(self) -> str:
        return f"w{self.order}"

    def required_symbols(self, rank: int, e_rank: int):
        """(algebraic symbols, transcendental names) the scalar field must provide."""
        alg, trans = [], []
        if self.kind == "classical":
            return alg, trans
        if self.kind == "generic":
            trans.append("q")
        elif self.order > 2:
            alg.append(AlgebraicSymbol(self.root_symbol, cyclotomic_coeffs(self.order)))
        trans += [f"q_x{i}" for i in range(1, rank)]
        if self.exp_twist == "formal":
            trans += [f"q_e{i}" for i in range(e_rank)] + ["q_y"]
        return alg, trans


@dataclass(frozen=True)
class ObstructionReport:
    dimension: int
    lhs: object
    rhs: object


class WeylAlgebra:
    def __init__(self, ring: ExpoRing, deformation: DeformationConfig | None = None):
        self.ring = ring
        self.field: ScalarField = ring.field
        self.deformation = deformation or DeformationConfig()
        self._setup_twist()
        self._dpow_cache = {}
        self._dq_cache = {}

    def _setup_twist(self):
        F, d = self.field, self.deformation
        self.classical = d.kind == "classical"
        if self.classical:
            self.q = F.one
            self._chars = None
            return
        if d.kind == "generic":
            self.q = F.symbol("q")
        elif d.order == 2:
            self.q = F(-1)
        else:
            self.q = F.symbol(d.root_symbol)
        one = F.one
        formal = d.exp_twist == "formal"
        y_char = F.symbol("q_y") if formal else one
        e_chars = [F.symbol(f"q_e{i}") if formal else one for i in range(self.ring.e_rank)]
        x_chars = [self.q] + [F.symbol(f"q_x{i}") for i in range(1, self.ring.rank)]
        self._chars = [y_char, *e_chars, *x_chars]
        self._q_minus_1_inv = (self.q - 1).inverse()
        self._xinv = self.ring.monomial(x_part=tuple(-1 if i == 0 else 0 for i in range(self.ring.rank)))

    def __repr__(self):
        return f"WeylAlgebra({self.ring!r}, q_mode={self.deformation})"

    # -- twist data ----------------------------------------------------------

    def character(self, m: ExpoMonomial) -> Scalar:
        if self._chars is None:
            return self.field.one
        out = self.field.one
        for c, e in zip(self._chars, m.exponents()):
            if e:
                out = out * c**e
        return out

    def sigma(self, f: ExpoPoly) -> ExpoPoly:
        """The twist endomorphism of R (identity in classical mode)."""
        if self.classical:
            return f
        return ExpoPoly(self.ring, {m: c * self.character(m) for m, c in f.terms.items()})

    def delta_q_monomial(self, m: ExpoMonomial) -> ExpoPoly:
        cached = self._dq_cache.get(m)
        if cached is not None:
            return cached
        if self.classical:
            out = self.ring.delta_monomial(m)
        else:
            c = (self.character(m) - 1) * self._q_minus_1_inv
            out = ExpoPoly(self.ring, {m * self._xinv: c})
        self._dq_cache[m] = out
        return out

    def delta_q(self, f: ExpoPoly) -> ExpoPoly:
        out = {}
        for m, c in f.terms.items():
            for n, d in self.delta_q_monomial(m).terms.items():
                _acc(out, n, c * d)
        return ExpoPoly(self.ring, out)

    def _d_power_times(self, k: int, m: ExpoMonomial):
        """Normal form of d^k * m as a dict {(monomial, j): coeff}."""
        key = (k, m)
        cached = self._dpow_cache.get(key)
        if cached is not None:
            return cached
        if k == 0:
            out = {(m, 0): self.field.one}
        else:
            prev = self._d_power_times(k - 1, m)
            out = {}
            for (n, j), c in prev.items():
                _acc(out, (n, j + 1), c * self.character(n))
                for n2, c2 in self.delta_q_monomial(n).terms.items():
                    _acc(out, (n2, j), c * c2)
        self._dpow_cache[key] = out
        return out

    # -- elements ----------------------------------------------------------

    def element(self, f=None, k: int = 0) -> WeylElement:
        """f * d^k for a ring element (or scalar) f."""
        if f is None:
            f = self.ring.one()
        if not isinstance(f, ExpoPoly):
            f = self.ring.const(f)
        self.ring.check(f)
        return WeylElement(self, {(m, k): c for m, c in f.terms.items()})

    def zero(self) -> WeylElement:
        return WeylElement(self, {})

    def one(self) -> WeylElement:
        return self.element(self.ring.one())

    def const(self, c) -> WeylElement:
        return self.element(self.ring.const(c))

    def d(self, k: int = 1) -> WeylElement:
        return self.element(self.ring.one(), k)

    def x(self, *coords) -> WeylElement:
        return self.element(self.ring.x(*coords))

    def e(self, *coords) -> WeylElement:
        return self.element(self.ring.e(*coords))

    def y(self, k: int = 1) -> WeylElement:
        return self.element(self.ring.y(k))

    def check(self, a):
        if not isinstance(a, WeylElement) or a.algebra is not self:
            raise WeylError("element belongs to a different algebra")
        return a

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        self.check(a)
        self.check(b)
        out = {}
        for (m1, i), c1 in a.terms.items():
            for (m2, j), c2 in b.terms.items():
                c12 = c1 * c2
                for (n, l), c in self._d_power_times(i, m2).items():
                    _acc(out, (m1 * n, l + j), c12 * c)
        return WeylElement(self, out)

    def commutator(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.mul(a, b) - self.mul(b, a)

    def normal_form(self, tokens) -> WeylElement:
        """Product of a word of generators/scalars, fully normally ordered.

        Tokens are WeylElement, ExpoPoly, scalars, or the strings ``"D"``,
        ``"X"``, ``"E"``, ``"Y"``, ``"Y^-1"``.
        """
        out = self.one()
        for tok in tokens:
            out = out * self._token(tok)
        return out

    def _token(self, tok) -> WeylElement:
        if isinstance(tok, WeylElement):
            return self.check(tok)
        if isinstance(tok, ExpoPoly):
            return self.element(tok)
        if isinstance(tok, str):
            table = {"D": self.d, "X": self.x, "E": self.e, "Y": self.y, "Y^-1": lambda: self.y(-1)}
            if tok in table:
                return table[tok]()
            if self.field.has_symbol(tok):
                return self.const(self.field.symbol(tok))
            raise WeylError(f"unknown token {tok!r}")
        return self.const(tok)

    # -- generators and bounded search ---------------------------------------

    def generators(self, inverses: bool = True):
        """Named algebra generators: x^{e_i}, e^{e_i x}, y and d (with inverses if asked)."""
        r, er = self.ring.rank, self.ring.e_rank
        out = []
        signs = (1, -1) if inverses else (1,)
        for i in range(r):
            for s in signs:
                v = [0] * r
                v[i] = s
                out.append((f"X({','.join(map(str, v))})", self.element(self.ring.term(self.ring.monomial(x_part=v)))))
        for i in range(er):
            for s in signs:
                v = [0] * er
                v[i] = s
                out.append((f"E({','.join(map(str, v))})", self.element(self.ring.term(self.ring.monomial(e_part=v)))))
        for s in signs:
            out.append(("Y" if s == 1 else "Y^-1", self.y(s)))
        out.append(("D", self.d()))
        return out

    def basis_keys(self, D: int):
        """All (monomial, d-power) pairs of size <= D."""
        n = self.ring.n_coords
        keys = []
        for k in range(D + 1):
            for vec in _l1_ball(n, D - k):
                keys.append((self.ring.from_exponents(vec), k))
        return keys

    def trace_obstruction(self, n: int) -> ObstructionReport:
        return trace_obstruction(n, self.field)

    def center_up_to_degree(self, D: int) -> list[WeylElement]:
        """Basis of the elements supported in size <= D commuting with every generator."""
        if D < 1:
            raise WeylError("degree bound must be >= 1")
        keys = self.basis_keys(D)
        gens = [g for _, g in self.generators(inverses=False)]
        rows = {}
        for u in keys:
            ue = WeylElement(self, {u: self.field.one})
            for gi, g in enumerate(gens):
                for w, c in self.commutator(g, ue).terms.items():
                    rows.setdefault((gi, w), {})[u] = c
        basis = nullspace(rows.values(), keys, order=key_order)
        out = []
        for vec in basis:
            out.append(WeylElement(self, {k: self.field(c) for k, c in vec.items()}))
        return out

    def ideal_saturate(self, gen: WeylElement, D: int) -> SaturationReport:
        """Close span{gen} under left/right multiplication by generators, within size <= D.

        Products that leave the size bound are discarded, so the span is
        always contained in the two-sided ideal.  Stops once 1 is in the span
        or nothing new appears.
        """
        self.check(gen)
        if gen.is_zero():
            raise WeylError("zero generator")
        if D < 1:
            raise WeylError("degree bound must be >= 1")
        one_vec = {(self.ring.unit_monomial, 0): self.field.one}
        ech = Echelon(key_order)
        profile = []
        frontier = []
        if gen.max_size() <= D:
            row = ech.add(gen.terms)
            if row is not None:
                frontier.append(row)
        profile.append(len(ech))
        gens = [g for _, g in self.generators(inverses=True)]
        while frontier and not ech.contains(one_vec):
            new = []
            for vec in frontier:
                el = WeylElement(self, vec)
                for g in gens:
                    for prod in (self.mul(g, el), self.mul(el, g)):
                        if prod.is_zero() or prod.max_size() > D:
                            continue
                        row = ech.add(prod.terms)
                        if row is not None:
                            new.append(row)
            frontier = new
            profile.append(len(ech))
        return SaturationReport(ech.contains(one_vec), tuple(profile), D)

    # -- induced (dense-type) weight modules -----------------------------------

    def induced_module_apply(self, a: WeylElement, v: dict, chi: RingCharacter) -> dict:
        """Action of ``a`` on ``sum_k v[k] d^k (x) 1`` in A (x)_R F_chi (classical mode only)."""
        if not self.classical:
            raise WeylError("induced modules are defined only for q = 1")
        self.check(a)
        out = {}
        for k, vk in v.items():
            if not vk:
                continue
            vk = self.field(vk)
            for (m, i), c in a.terms.items():
                n = i + k
                f = self.ring.term(m)
                for j in range(n + 1):
                    val = chi.evaluate(f)
                    if val:
                        coeff = c * vk * val * ((-1) ** j * comb(n, j))
                        _acc(out, n - j, coeff)
                    f = self.ring.delta(f)
                    if f.is_zero():
                        break
        return out


def key_order(key):
    m, k = key
    return (m.size() + k, k, m)


def _l1_ball(n: int, radius: int):
    if n == 0:
        yield ()
        return
    for c in range(-radius, radius + 1):
        for rest in _l1_ball(n - 1, radius - abs(c)):
            yield (c, *rest)


@dataclass(frozen=True)
class SaturationReport:
    contains_one: bool
    profile: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class RingCharacter:
    """Algebra map R -> F given by its values on x^{e_i}, e^{e_i x} and y."""

    x: tuple
    e: tuple
    y: object

    def evaluate(self, f: ExpoPoly) -> Scalar:
        F = f.ring.field
        total = F.zero
        for m, c in f.terms.items():
            val = c * F(self.y) ** m.y_pow if m.y_pow else c
            for a, e in zip(self.e, m.e_part):
                if e:
                    val = val * F(a) ** e
            for a, e in zip(self.x, m.x_part):
                if e:
                    val = val * F(a) ** e
            total = total + val
        return total


def trace_obstruction(n: int, field: ScalarField | None = None) -> ObstructionReport:
    """Trace of [D, X] versus trace of I_n for concrete n x n matrices X, D.

    X is the diagonal matrix diag(0, 1, ..., n-1) and D the upper shift plus a
    dense rational perturbation; any choice gives trace(DX - XD) = 0.
    """
    if n < 1:
        raise WeylError("dimension must be positive")
    from fractions import Fraction

    X = [[Fraction(i if i == j else 0) for j in range(n)] for i in range(n)]
    D = [[Fraction(1 if j == i + 1 else 0) + Fraction(i + 2 * j, n + i + 1) for j in range(n)] for i in range(n)]

    def mm(A, B):
        return [[sum(A[i][l] * B[l][j] for l in range(n)) for j in range(n)] for i in range(n)]

    DX, XD = mm(D, X), mm(X, D)
    lhs = sum(DX[i][i] - XD[i][i] for i in range(n))
    rhs = sum(Fraction(1) for _ in range(n))
    if field is not None:
        lhs, rhs = field(lhs), field(rhs)
    return ObstructionReport(n, lhs, rhs)


class WeylElement:
    """Normally ordered element sum c * m * d^k; ``terms`` maps (monomial, k) -> scalar."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: WeylAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @property
    def parts(self) -> dict[int, ExpoPoly]:
        out = {}
        for (m, k), c in self.terms.items():
            out.setdefault(k, {})[m] = c
        return {k: ExpoPoly(self.algebra.ring, t) for k, t in sorted(out.items())}

    def _other(self, other):
        if isinstance(other, WeylElement):
            return self.algebra.check(other)
        if isinstance(other, ExpoPoly):
            return self.algebra.element(other)
        try:
            return self.algebra.const(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            _acc(out, k, c)
        return WeylElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.algebra, {k: -c for k, c in self.terms.items()})

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
        if isinstance(other, WeylElement) or isinstance(other, ExpoPoly):
            return self.algebra.mul(self, self._other(other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.algebra.mul(self, o)

    def __rmul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.algebra.mul(o, self)

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> WeylElement:
        c = self.algebra.field(c)
        return WeylElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def map_coefficients(self, fn) -> WeylElement:
        return WeylElement(self.algebra, {k: fn(c) for k, c in self.terms.items()})

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

    def is_scalar(self) -> bool:
        unit = (self.algebra.ring.unit_monomial, 0)
        return all(k == unit for k in self.terms)

    def d_degree(self) -> int:
        return max((k for _, k in self.terms), default=-1)

    def max_size(self) -> int:
        return max((m.size() + k for m, k in self.terms), default=0)

    def __repr__(self):
        from .printer import print_canonical

        return f"WeylElement({print_canonical(self)})"

    def __str__(self):
        from .printer import print_canonical

        return print_canonical(self)
