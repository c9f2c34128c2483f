"""The exponent lattice A as a free Z-module with an embedding into the scalar field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .linalg import Echelon
from .scalars import Scalar


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeBasis:
    """Z-basis of A given by its images in the scalar field; ``embed[0]`` must be 1."""

    embed: tuple[Scalar, ...]

    def __post_init__(self):
        embed = tuple(self.embed)
        object.__setattr__(self, "embed", embed)
        if not embed:
            raise LatticeError("rank must be positive")
        if embed[0] != 1:
            raise LatticeError("embed[0] must be 1 (A must contain Z)")
        for i in range(len(embed)):
            for j in range(i):
                if embed[i] == embed[j]:
                    raise LatticeError(f"embedding values {i} and {j} coincide")
        if not _q_independent(embed):
            raise LatticeError("embedding values are linearly dependent over Q")

    @property
    def rank(self) -> int:
        return len(self.embed)

    @property
    def field(self):
        return self.embed[0].field

    def value(self, v) -> Scalar:
        """The element of F that the coordinate vector ``v`` represents."""
        v = as_vector(v, self.rank)
        total = self.field.zero
        for c, b in zip(v, self.embed):
            if c:
                total = total + c * b
        return total


def _q_independent(values) -> bool:
    # denominators are free of algebraic symbols, so cross-multiplied numerators stay reduced
    F = values[0].field
    ech = Echelon()
    for i, v in enumerate(values):
        scaled = v.num
        for j, w in enumerate(values):
            if j != i:
                scaled = scaled * w.den
        vec = {m: F(Fraction(int(c.numerator), int(c.denominator))) for m, c in scaled.terms()}
        if ech.add(vec) is None:
            return False
    return True


def as_vector(v, rank: int | None = None) -> tuple[int, ...]:
    v = tuple(int(c) for c in v)
    if rank is not None and len(v) != rank:
        raise LatticeError(f"expected {rank} coordinates, got {len(v)}")
    return v


def unit_vector(rank: int, i: int = 0) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(rank))


def content(v) -> int:
    """gcd of the coordinates; 0 exactly for the zero vector."""
    g = 0
    for c in v:
        g = gcd(g, int(c))
    return g


def is_primitive(v) -> bool:
    return content(v) == 1


def _xgcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        k = a // b
        a, b = b, a - k * b
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(unit_vector(n, i) for i in range(n))


def mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    if any(len(row) != m for row in A):
        raise LatticeError("dimension mismatch in matrix product")
    return tuple(tuple(sum(A[i][l] * B[l][j] for l in range(m)) for j in range(k)) for i in range(n))


def apply_matrix(M, v) -> tuple[int, ...]:
    v = as_vector(v)
    if any(len(row) != len(v) for row in M):
        raise LatticeError(f"matrix of width {len(M[0])} applied to vector of length {len(v)}")
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def determinant(M) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(M)
    a = [list(row) for row in M]
    if any(len(row) != n for row in a):
        raise LatticeError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def is_unimodular(M) -> bool:
    return abs(determinant(M)) == 1


def check_unimodular(M):
    M = tuple(tuple(int(c) for c in row) for row in M)
    if not M or any(len(row) != len(M) for row in M):
        raise LatticeError("unimodular matrix must be square and nonempty")
    if not is_unimodular(M):
        raise LatticeError(f"matrix {M} has determinant {determinant(M)}, not +-1")
    return M


def inverse(M):
    """Inverse of a unimodular integer matrix (exact)."""
    M = check_unimodular(M)
    n = len(M)
    a = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = tuple(tuple(int(x) for x in row[n:]) for row in a)
    assert all(x.denominator == 1 for row in a for x in row[n:])
    return out


def complete_to_basis(v):
    """Unimodular M with first column ``v``; ``v`` must be primitive.

    Reduces ``v`` to ``e_1`` by 2x2 extended-gcd moves on coordinates (0, i) and
    returns the inverse of the accumulated transformation.
    """
    v = as_vector(v)
    if not is_primitive(v):
        raise LatticeError(f"{v} is not primitive (content {content(v)})")
    n = len(v)
    w = list(v)
    M = [list(row) for row in identity(n)]  # M * w_current == v throughout
    for i in range(n - 1, 0, -1):
        a, b = w[0], w[i]
        if b == 0:
            continue
        if a == 0:
            # swap coordinates 0 and i
            w[0], w[i] = b, 0
            for row in M:
                row[0], row[i] = row[i], row[0]
            continue
        g, s, t = _xgcd(a, b)
        # E = [[s, t], [-b/g, a/g]] sends (a, b) -> (g, 0); M <- M * E^{-1}
        bp, ap = b // g, a // g
        w[0], w[i] = g, 0
        for row in M:
            c0, ci = row[0], row[i]
            row[0], row[i] = c0 * ap + ci * bp, -c0 * t + ci * s
    if w[0] == -1:
        for row in M:
            row[0] = -row[0]
    return tuple(tuple(row) for row in M)


def canonical_orbit_rep(v) -> tuple[int, ...]:
    """content(v) * e_1: the normal form of v's GL(r, Z)-orbit (r >= 2)."""
    v = as_vector(v)
    c = content(v)
    if c == 0:
        raise LatticeError("zero vector has no orbit representative")
    return tuple(c if i == 0 else 0 for i in range(len(v)))
