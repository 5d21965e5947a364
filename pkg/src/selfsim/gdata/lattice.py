"""Exact integer lattices in Z^n and rational virtual endomorphisms between them.

Vectors are tuples of ints (or Fractions before an integrality check).  A
lattice is stored by the nonzero rows of its row-style Hermite normal form:
upper echelon, positive pivots, entries above each pivot reduced into
[0, pivot).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..errors import InputError


def _egcd(a, b):
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(rows, n=None):
    """Nonzero rows of the Hermite normal form of the row span of ``rows``."""
    A = [[int(x) for x in r] for r in rows]
    if n is None:
        if not A:
            raise InputError("cannot infer the width of an empty matrix")
        n = len(A[0])
    if any(len(r) != n for r in A):
        raise InputError("rows of unequal length")
    r = 0
    for c in range(n):
        if r >= len(A):
            break
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = _egcd(a, b)
            ra, rb = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(ra, rb)]
            A[i] = [(b // g) * u - (a // g) * v for u, v in zip(ra, rb)]
        p = A[r][c]
        if p == 0:
            continue
        if p < 0:
            A[r] = [-u for u in A[r]]
            p = -p
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
    return [tuple(row) for row in A[:r]]


def left_kernel(rows, n):
    """Integer basis of {x : x . rows = 0}, via the HNF of [rows | I]."""
    k = len(rows)
    if k == 0:
        return []
    aug = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    H = hnf(aug, n + k)
    return [row[n:] for row in H if not any(row[:n])]


def _combine(coeffs, basis, n):
    return tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(n))


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^n given by its HNF basis."""

    n: int
    basis: tuple

    @classmethod
    def span(cls, rows, n):
        return cls(n, tuple(hnf(list(rows), n)) if rows else ())

    @classmethod
    def full(cls, n):
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @property
    def rank(self):
        return len(self.basis)

    @property
    def is_full_rank(self):
        return self.rank == self.n

    def pivots(self):
        out = []
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            out.append((c, row[c]))
        return out

    def measure(self):
        """Product of the pivots: the index for full rank, a covolume in the pivot coordinates otherwise."""
        return prod(p for _, p in self.pivots())

    def index(self):
        if not self.is_full_rank:
            raise InputError(f"rank {self.rank} lattice has infinite index in Z^{self.n}")
        return self.measure()

    def reduce(self, v):
        """Canonical coset representative: pivot coordinates pushed into [0, pivot)."""
        v = [int(x) for x in v]
        for (c, p), row in zip(self.pivots(), self.basis):
            q = v[c] // p
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v):
        v = tuple(v)
        if any(Fraction(x).denominator != 1 for x in v):
            return False
        return not any(self.reduce(v))

    def contains_lattice(self, other):
        return all(b in self for b in other.basis)

    def digit_transversal(self):
        """Coset representatives 0 <= x_j < pivot_j, in lexicographic order (full rank only)."""
        if not self.is_full_rank:
            raise InputError("transversal of an infinite-index lattice")
        out = [()]
        for _, p in self.pivots():
            out = [t + (x,) for t in out for x in range(p)]
        return out

    def __str__(self):
        if not self.basis:
            return "0"
        return "<" + ", ".join("(" + " ".join(map(str, r)) + ")" for r in self.basis) + ">"


def member(v, L):
    return tuple(v) in L


def index(L):
    return L.index()


def intersect(L1, L2):
    if L1.n != L2.n:
        raise InputError("lattices in different ranks")
    n = L1.n
    if not L1.basis or not L2.basis:
        return Lattice.zero(n)
    B1 = list(L1.basis)
    K = left_kernel(B1 + list(L2.basis), n)
    return Lattice.span([_combine(x[:len(B1)], B1, n) for x in K], n)


def intersect_all(lattices, n):
    out = Lattice.full(n)
    for L in lattices:
        out = intersect(out, L)
    return out


def _frac_matrix(M):
    return tuple(tuple(Fraction(x) for x in row) for row in M)


def mat_vec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def mat_mul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def mat_inverse(M):
    """Exact inverse of a square rational matrix, or None if singular."""
    n = len(M)
    A = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return None
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return tuple(tuple(row[n:]) for row in A)


def inf_norm(M):
    return max((sum(abs(x) for x in row) for row in M), default=Fraction(0))


@dataclass(frozen=True)
class VirtualEndo:
    """A homomorphism f: H -> Z^n, H = ``domain``, given by f(v) = M v for a rational M."""

    domain: Lattice
    matrix: tuple

    def __post_init__(self):
        M = _frac_matrix(self.matrix)
        n = self.domain.n
        if len(M) != n or any(len(r) != n for r in M):
            raise InputError(f"virtual endomorphism matrix must be {n}x{n}")
        object.__setattr__(self, "matrix", M)
        for b in self.domain.basis:
            img = mat_vec(M, b)
            if any(x.denominator != 1 for x in img):
                raise InputError(f"f maps the domain vector {b} outside Z^{n}: {tuple(map(str, img))}")

    @property
    def n(self):
        return self.domain.n

    def __call__(self, v):
        if tuple(v) not in self.domain:
            raise InputError(f"{tuple(v)} is not in the domain {self.domain}")
        return tuple(int(x) for x in mat_vec(self.matrix, v))

    def _images(self):
        return [tuple(int(x) for x in mat_vec(self.matrix, b)) for b in self.domain.basis]

    def image(self):
        return Lattice.span(self._images(), self.n)

    def is_epimorphism(self):
        return self.image() == Lattice.full(self.n)

    def kernel(self):
        B = list(self.domain.basis)
        K = left_kernel(self._images(), self.n)
        return Lattice.span([_combine(x, B, self.n) for x in K], self.n)

    def preimage(self, K):
        """{v in domain : f(v) in K}."""
        B = list(self.domain.basis)
        imgs = self._images()
        if not B:
            return Lattice.zero(self.n)
        rows = imgs + list(K.basis)
        X = left_kernel(rows, self.n)
        return Lattice.span([_combine(x[:len(B)], B, self.n) for x in X], self.n)

    def restrict(self, L):
        """f on a sublattice of its domain."""
        if not self.domain.contains_lattice(L):
            raise InputError("restriction to a lattice outside the domain")
        return VirtualEndo(L, self.matrix)


def kernel_lattice(f):
    return f.kernel()


def image(f):
    return f.image()


def preimage(f, K):
    return f.preimage(K)
