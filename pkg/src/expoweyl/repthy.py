"""Representation-theoretic calculators: Verma weight dimensions, the rank-1
Verma action, BGG characters, character duality and weight-support types."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .lattice import LatticeBasis, as_vector
from .scalars import Scalar


class RepError(ValueError):
    pass


# -- negative part and Verma weight dimensions ----------------------------------


def _lead(v):
    for i, c in enumerate(v):
        if c:
            return i, c
    return None, 0


@dataclass(frozen=True)
class NegativePart:
    """Finite generating set of A^-: every generator is lexicographically negative."""

    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(sorted({as_vector(g) for g in self.gens}, key=lambda g: (_lead(g)[0], g)))
        if not gens:
            raise RepError("negative part needs at least one generator")
        r = len(gens[0])
        for g in gens:
            if len(g) != r:
                raise RepError("generators have different ranks")
            i, c = _lead(g)
            if i is None:
                raise RepError("0 is not allowed as a generator")
            if c > 0:
                raise RepError(f"generator {g} is not negative (leading coordinate {c} > 0)")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def parse(cls, text: str) -> NegativePart:
        """``"-1; -2"`` or ``"-1,0; 0,-1"``."""
        try:
            gens = [tuple(int(c) for c in part.split(",")) for part in text.split(";") if part.strip()]
        except ValueError:
            raise RepError(f"bad generator list {text!r}") from None
        return cls(tuple(gens))

    @property
    def rank(self) -> int:
        return len(self.gens[0])


def _multiset_counts(gens, n):
    """{number of parts K: sum over multisets with K parts of 1/prod(k_g!)} and the plain count."""
    r = len(n)
    leads = [_lead(g)[0] for g in gens]

    @lru_cache(maxsize=None)
    def go(i, rem):
        # before moving to a generator whose leading index is larger, coordinates
        # below it can no longer change and must already be zero
        j = leads[i] if i < len(gens) else r
        if any(rem[:j]):
            return ()
        if i == len(gens):
            return ((0, Fraction(1), 1),)
        g = gens[i]
        gl = g[j]
        out = {}
        kmax = rem[j] // gl if rem[j] * gl >= 0 else -1
        for k in range(kmax + 1):
            nxt = tuple(a - k * b for a, b in zip(rem, g))
            w = Fraction(1, factorial(k))
            for K, val, cnt in go(i + 1, nxt):
                cur = out.get(K + k, (Fraction(0), 0))
                out[K + k] = (cur[0] + w * val, cur[1] + cnt)
        return tuple((K, v, c) for K, (v, c) in sorted(out.items()))

    return go(0, tuple(n))


def verma_weight_dim(neg: NegativePart, n, ordered: bool = False) -> int:
    """Number of multisets (or, with ``ordered``, tuples) of generators of A^- summing to n."""
    n = as_vector(n, neg.rank)
    rows = _multiset_counts(neg.gens, n)
    if ordered:
        total = sum(factorial(K) * v for K, v, _ in rows)
        assert total.denominator == 1
        return int(total)
    return sum(c for _, _, c in rows)


def verma_action_rank1(lam, n: int):
    """Eigenvalue lam - n of d on x^n (x) 1 in the rank-1 Verma module."""
    if n < 0:
        raise RepError("n must be non-negative")
    return lam - n


# -- characters -----------------------------------------------------------------


def _weight_key(w):
    if isinstance(w, Scalar) and w.is_rational():
        return (0, w.to_fraction(), "")
    if isinstance(w, (int, Fraction)):
        return (0, Fraction(w), "")
    return (1, Fraction(0), str(w))


@dataclass(frozen=True)
class Character:
    """Weight -> dimension, with zero entries dropped."""

    dims: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, d in dict(self.dims).items():
            d = int(d)
            if d < 0:
                raise RepError(f"negative dimension {d} at weight {w}")
            if d:
                clean[w] = d
        object.__setattr__(self, "dims", clean)

    def __eq__(self, other):
        return isinstance(other, Character) and self.dims == other.dims

    def __hash__(self):
        return hash(frozenset(self.dims.items()))

    def total(self) -> int:
        return sum(self.dims.values())

    def support(self):
        return sorted(self.dims, key=_weight_key, reverse=True)

    def records(self):
        return [[str(w), self.dims[w]] for w in self.support()]


def verma_character_rank1(highest: int, lowest: int) -> dict:
    """Rank-1 Verma character (dimension 1 at every weight <= highest), cut at ``lowest``."""
    return {mu: 1 for mu in range(lowest, highest + 1)}


def bgg_character(n: int, depth: int) -> Character:
    """ch L(chi_n) = ch Delta(chi_n) - ch Delta(chi_{-n-2}) on weights n, n-1, ..., n-depth."""
    if n < 0:
        raise RepError("n must be non-negative")
    if depth < 1:
        raise RepError("depth must be positive")
    low = n - depth
    top = verma_character_rank1(n, low)
    sub = verma_character_rank1(-n - 2, low)
    dims = {}
    for mu in range(low, n + 1):
        d = top.get(mu, 0) - sub.get(mu, 0)
        if d < 0:
            raise RepError("BGG subtraction produced a negative dimension")
        dims[mu] = d
    return Character(dims)


def duality_on_characters(ch: Character) -> Character:
    """Rank-1 duality: weights are negated (w0 = -1)."""
    return Character({-w: d for w, d in ch.dims.items()})


# -- weight-support classification ----------------------------------------------


@dataclass(frozen=True)
class SupportVerdict:
    kind: str  # dense | discrete
    reason: str


def classify_support(chi_x: Scalar, basis: LatticeBasis) -> SupportVerdict:
    """Dense iff chi(x) involves a transcendental symbol outside the field generated by A."""
    F = chi_x.field
    lattice_syms = set()
    for b in basis.embed:
        lattice_syms |= b.symbols()
    foreign = sorted(s for s in chi_x.symbols() if s not in lattice_syms and not F.is_algebraic(s))
    if foreign:
        return SupportVerdict("dense", f"transcendental over the lattice field: {', '.join(foreign)}")
    extra = sorted(s for s in chi_x.symbols() if s not in lattice_syms)
    if extra:
        return SupportVerdict("discrete", f"algebraic over the lattice field via {', '.join(extra)}")
    return SupportVerdict("discrete", "lies in the field generated by the lattice")


def discrete_module_action(n: int, k: int, q_char):
    """(x-eigenvalue, e^x-eigenvalue) on v_{n+k}: (n + k, q^{n+k})."""
    if not q_char:
        raise RepError("the e^x character must be nonzero")
    return n + k, q_char ** (n + k)
