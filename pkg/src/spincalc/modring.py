"""Arithmetic of H_1(surface; Z/rZ) in a fixed geometric symplectic basis.

Coordinates are ordered (a_1, b_1, ..., a_g, b_g) and the symplectic form
is normalized by iota(a_i, b_i) = +1.  A Dehn twist about a curve in
class c acts on homology as the transvection x -> x + iota(x, c) c and
this is the only representation-theoretic input the rest of the package
needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SpinError(Exception):
    """Base class for all structured errors raised by this package."""


class MismatchError(SpinError):
    """Objects live over different genus or modulus."""


def check_modulus(r):
    if not isinstance(r, int) or r < 2:
        raise SpinError(f"modulus must be an integer >= 2, got {r!r}")
    return r


@dataclass(frozen=True)
class BaseClass:
    """A homology class mod r: 2g residues over the fixed symplectic basis."""

    g: int
    r: int
    coords: tuple

    def __post_init__(self):
        check_modulus(self.r)
        if self.g < 1:
            raise SpinError("genus must be >= 1")
        if len(self.coords) != 2 * self.g:
            raise SpinError("expected 2g coordinates")
        object.__setattr__(self, "coords", tuple(c % self.r for c in self.coords))

    @classmethod
    def from_ints(cls, g, r, coords):
        return cls(g, r, tuple(coords))

    @classmethod
    def zero(cls, g, r):
        return cls(g, r, (0,) * (2 * g))

    @classmethod
    def basis_vector(cls, g, r, i):
        """The i-th basis class; even i are a-curves, odd i are b-curves."""
        coords = [0] * (2 * g)
        coords[i] = 1
        return cls(g, r, tuple(coords))

    def __add__(self, other):
        self.check_compatible(other)
        return BaseClass(self.g, self.r, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self.check_compatible(other)
        return BaseClass(self.g, self.r, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return BaseClass(self.g, self.r, tuple(-x for x in self.coords))

    def scale(self, k):
        return BaseClass(self.g, self.r, tuple(k * x for x in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def check_compatible(self, other):
        if self.g != other.g or self.r != other.r:
            raise MismatchError(
                f"incompatible classes: (g={self.g}, r={self.r}) vs (g={other.g}, r={other.r})"
            )


def intersection_form(x, y):
    """iota(x, y) = sum_i (x_{a_i} y_{b_i} - x_{b_i} y_{a_i})  (mod r)."""
    x.check_compatible(y)
    total = 0
    for i in range(x.g):
        a, b = 2 * i, 2 * i + 1
        total += x.coords[a] * y.coords[b] - x.coords[b] * y.coords[a]
    return total % x.r


def is_primitive(v):
    """True iff some coordinate is a unit mod r, i.e. gcd of all coords with r is 1.

    This is the usable mod-r remnant of "the integral class of a
    nonseparating curve is primitive".
    """
    g = v.r
    for c in v.coords:
        g = gcd(g, c)
    return g == 1


def iota_int(x, y):
    """Integer symplectic form on plain coordinate sequences."""
    if len(x) != len(y) or len(x) % 2:
        raise MismatchError("integer classes need equal even length")
    total = 0
    for i in range(len(x) // 2):
        a, b = 2 * i, 2 * i + 1
        total += x[a] * y[b] - x[b] * y[a]
    return total


@dataclass(frozen=True)
class SpMatrix:
    """2g x 2g matrix over Z/rZ, normally symplectic."""

    g: int
    r: int
    rows: tuple

    def __post_init__(self):
        check_modulus(self.r)
        n = 2 * self.g
        if len(self.rows) != n or any(len(row) != n for row in self.rows):
            raise SpinError("matrix must be 2g x 2g")
        object.__setattr__(
            self, "rows", tuple(tuple(x % self.r for x in row) for row in self.rows)
        )

    @classmethod
    def identity(cls, g, r):
        n = 2 * g
        return cls(g, r, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def apply(self, v):
        if v.g != self.g or v.r != self.r:
            raise MismatchError("matrix and vector dimensions differ")
        n = 2 * self.g
        out = [0] * n
        for i in range(n):
            out[i] = sum(self.rows[i][j] * v.coords[j] for j in range(n))
        return BaseClass(self.g, self.r, tuple(out))

    def __mul__(self, other):
        if self.g != other.g or self.r != other.r:
            raise MismatchError("matrix dimensions differ")
        n = 2 * self.g
        rows = []
        for i in range(n):
            row = [0] * n
            for k in range(n):
                c = self.rows[i][k]
                if c:
                    other_row = other.rows[k]
                    for j in range(n):
                        row[j] += c * other_row[j]
            rows.append(tuple(row))
        return SpMatrix(self.g, self.r, tuple(rows))

    def __pow__(self, k):
        if k < 0:
            raise SpinError("negative powers not supported; invert explicitly")
        result = SpMatrix.identity(self.g, self.r)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_symplectic(self):
        """Check iota(M e_i, M e_j) = iota(e_i, e_j) on all basis pairs."""
        n = 2 * self.g
        cols = [
            BaseClass(self.g, self.r, tuple(self.rows[i][j] for i in range(n)))
            for j in range(n)
        ]
        for i in range(n):
            for j in range(i + 1, n):
                expected = 0
                if j == i + 1 and i % 2 == 0:
                    expected = 1
                if intersection_form(cols[i], cols[j]) != expected % self.r:
                    return False
        return True


def base_transvection(c, power=1):
    """Matrix of T_c^power on homology: x -> x + power * iota(x, c) c."""
    g, r = c.g, c.r
    n = 2 * g
    rows = []
    for i in range(n):
        row = [1 if i == j else 0 for j in range(n)]
        rows.append(row)
    # column j picks up iota(e_j, c) * c
    for j in range(n):
        e_j = BaseClass.basis_vector(g, r, j)
        coef = power * intersection_form(e_j, c)
        if coef % r:
            for i in range(n):
                rows[i][j] += coef * c.coords[i]
    return SpMatrix(g, r, tuple(tuple(row) for row in rows))
