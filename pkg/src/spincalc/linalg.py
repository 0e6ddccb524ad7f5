"""Exact linear algebra over the integers and over Z/nZ.

Everything here works on plain Python ints (no overflow, no floats):

* Smith normal form with unimodular transforms,
* solution of linear systems over Z and over Z/nZ, returned as explicit
  affine sets (particular solution + generators of the homogeneous part),
* skew-symmetric congruence normal form, used to extract a symplectic
  basis from an integral intersection form.

Matrices are lists of lists of ints, rows first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out

def mat_vec(a, v):
    return [sum(c * x for c, x in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_eq(a, b):
    return a == b


def det(a):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def smith_normal_form(a):
    """Return (u, d, v) with u*a*v = d diagonal and u, v unimodular.

    The diagonal is not forced into a divisibility chain; that is
    irrelevant for solving linear systems, which is all we need.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [row[:] for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_op(i, j, c):  # R_i += c * R_j
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):  # C_i += c * C_j
        for row in d:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    k = 0
    while k < m and k < n:
        # locate a nonzero pivot of minimal absolute value
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(k, best[0])
        col_swap(k, best[1])
        while True:
            # clear column k
            dirty = False
            for i in range(k + 1, m):
                if d[i][k]:
                    q = d[i][k] // d[k][k]
                    row_op(i, k, -q)
                    if d[i][k]:  # remainder became the smaller pivot
                        row_swap(k, i)
                        dirty = True
            for j in range(k + 1, n):
                if d[k][j]:
                    q = d[k][j] // d[k][k]
                    col_op(j, k, -q)
                    if d[k][j]:
                        col_swap(k, j)
                        dirty = True
            if not dirty:
                break
        if d[k][k] < 0:
            row_op(k, k, -2)  # negate row: R_k += -2 R_k
        k += 1
    return u, d, v


@dataclass
class AffineSolutionSet:
    """Solutions of A x = b over Z/nZ: {particular + span(generators)}.

    Each homogeneous generator comes with its additive order; the total
    number of solutions is the product of the orders.
    """

    modulus: int
    particular: tuple
    generators: tuple  # of (vector, order) pairs

    @property
    def count(self):
        c = 1
        for _, order in self.generators:
            c *= order
        return c

    @property
    def is_unique(self):
        return self.count == 1

    def __iter__(self):
        n = self.modulus

        def rec(i, acc):
            if i == len(self.generators):
                yield tuple(x % n for x in acc)
                return
            vec, order = self.generators[i]
            for t in range(order):
                yield from rec(i + 1, [x + t * y for x, y in zip(acc, vec)])

        yield from rec(0, list(self.particular))


def solve_mod(a, b, n):
    """Solve A x = b (mod n) exactly.  Returns AffineSolutionSet or None.

    Works for any modulus n >= 2, prime or not, via Smith normal form
    over Z.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    m = len(a)
    cols = len(a[0]) if m else 0
    if len(b) != m:
        raise ValueError("dimension mismatch")
    if m == 0:
        gens = tuple((tuple(1 if j == i else 0 for j in range(cols)), n) for i in range(cols))
        return AffineSolutionSet(n, tuple([0] * cols), gens)
    u, d, v = smith_normal_form(a)
    c = [x % n for x in mat_vec(u, b)]
    t_part = [0] * cols
    gens = []
    for i in range(max(m, cols)):
        di = d[i][i] if i < min(m, cols) else 0
        if i < m:
            g = gcd(di, n)
            ci = c[i]
            if ci % g != 0:
                return None
            if i < cols:
                if di == 0:
                    t_part[i] = 0
                else:
                    red = n // g
                    t_part[i] = (ci // g) * pow(di // g, -1, red) % red
        if i < cols:
            g = gcd(di, n) if i < m else n
            if g > 1:
                step = n // g
                t_vec = [0] * cols
                t_vec[i] = step
                gens.append((t_vec, g))
    # map t-coordinates back through V
    part = tuple(x % n for x in mat_vec(v, t_part))
    out_gens = tuple(
        (tuple(x % n for x in mat_vec(v, t_vec)), order) for t_vec, order in gens
    )
    return AffineSolutionSet(n, part, out_gens)


def solve_int(a, b):
    """One integer solution of A x = b over Z, or None if inconsistent.

    Only full solvability is checked; the caller is responsible for
    uniqueness questions (kernel inspection via SNF if needed).
    """
    m = len(a)
    cols = len(a[0]) if m else 0
    u, d, v = smith_normal_form(a)
    c = mat_vec(u, b)
    t = [0] * cols
    for i in range(m):
        di = d[i][i] if i < min(m, cols) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            t[i] = c[i] // di
    return mat_vec(v, t)


def kernel_rank(a):
    """Rank of the integer kernel of A."""
    m = len(a)
    cols = len(a[0]) if m else 0
    _, d, _ = smith_normal_form(a)
    r = sum(1 for i in range(min(m, cols)) if d[i][i] != 0)
    return cols - r


def elementary_divisors(a):
    _, d, _ = smith_normal_form(a)
    out = [abs(d[i][i]) for i in range(min(len(d), len(d[0]) if d else 0))]
    return sorted(x for x in out if x != 0)


def skew_normal_form(n_mat):
    """Congruence normal form of an antisymmetric integer matrix.

    Returns (p, ds) with p unimodular such that p^T N p is the block
    diagonal matrix with 2x2 blocks [[0, d], [-d, 0]] for d in ds,
    followed by zeros.
    """
    n = len(n_mat)
    a = [row[:] for row in n_mat]
    p = identity_matrix(n)
    for i in range(n):
        for j in range(n):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not antisymmetric")

    def sym_op(i, j, c):
        # basis change e_i -> e_i + c e_j: apply to rows and columns of a,
        # record as column operation on p
        for k in range(n):
            a[i][k] += c * a[j][k]
        for k in range(n):
            a[k][i] += c * a[k][j]
        for k in range(n):
            p[k][i] += c * p[k][j]

    def sym_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    ds = []
    k = 0
    while True:
        # find nonzero entry in the remaining block, minimal |value|
        best = None
        for i in range(k, n):
            for j in range(i + 1, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        sym_swap(k, best[0])
        sym_swap(k + 1, best[1])
        if a[k][k + 1] < 0:
            sym_op(k + 1, k + 1, -2)  # negate e_{k+1}
        while True:
            pivot = a[k][k + 1]
            dirty = False
            for j in range(k + 2, n):
                if a[k][j]:
                    q = a[k][j] // pivot
                    sym_op(j, k + 1, -q)
                    if a[k][j]:
                        sym_swap(k + 1, j)
                        if a[k][k + 1] < 0:
                            sym_op(k + 1, k + 1, -2)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(k + 2, n):
                if a[k + 1][j]:
                    q = a[k + 1][j] // pivot
                    sym_op(j, k, q)
                    if a[k + 1][j]:
                        sym_swap(k, j)
                        if a[k][k + 1] < 0:
                            sym_op(k + 1, k + 1, -2)
                        dirty = True
                        break
            if not dirty:
                break
        ds.append(a[k][k + 1])
        k += 2
    return p, ds
