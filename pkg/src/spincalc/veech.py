"""Square-tiled surfaces (origamis) and their flat spin data.

An origami is a pair of permutations of the squares: h sends a square to
its right neighbor, v to its upper neighbor.  Everything else is derived
combinatorics:

* cone points: cycles of square corners under the gluing relations;
  a class of 4(k+1) quarter-turns is a zero of order k,
* winding numbers of closed midline paths (quarter turns / 4),
* integral homology via edge chains (bottom edges oriented E, left edges
  oriented N) with an explicit intersection pairing,
* a symplectic basis extracted from the fundamental cycles of a spanning
  tree, from which the Arf invariant of the flat spin structure is read
  off as Arf = sum q(a_i) q(b_i) with q(path) = winding(path) + 1 mod 2.

Orientation conventions, fixed once: counterclockwise quarter turns count
+1, the boundary of an embedded disk of squares has winding +1, and
iota(eastbound, northbound) = +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .modring import SpinError
from .spin import Parity

EAST, NORTH, WEST, SOUTH = "E", "N", "W", "S"
DIRS = (EAST, NORTH, WEST, SOUTH)
_LEFT = {EAST: NORTH, NORTH: WEST, WEST: SOUTH, SOUTH: EAST}
_REVERSE = {EAST: WEST, WEST: EAST, NORTH: SOUTH, SOUTH: NORTH}

SW, SE, NE, NW = 0, 1, 2, 3


def _check_perm(p, n):
    if sorted(p) != list(range(n)):
        raise SpinError("not a permutation of the squares")


def _inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@dataclass(frozen=True)
class ConePoint:
    """A vertex of the square complex: its corner slots and zero order."""

    slots: tuple  # of (square, corner) pairs
    order: int


class Origami:
    def __init__(self, h, v):
        h = tuple(h)
        v = tuple(v)
        n = len(h)
        if n < 1 or len(v) != n:
            raise SpinError("h and v must be permutations of the same squares")
        _check_perm(h, n)
        _check_perm(v, n)
        self.n = n
        self.h = h
        self.v = v
        self.h_inv = _inverse(h)
        self.v_inv = _inverse(v)
        if not self._is_transitive():
            raise SpinError("origami is disconnected: <h, v> is not transitive")
        self._cones = None

    def _is_transitive(self):
        seen = {0}
        stack = [0]
        while stack:
            s = stack.pop()
            for t in (self.h[s], self.v[s], self.h_inv[s], self.v_inv[s]):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return len(seen) == self.n

    def neighbor(self, s, d):
        if d == EAST:
            return self.h[s]
        if d == WEST:
            return self.h_inv[s]
        if d == NORTH:
            return self.v[s]
        if d == SOUTH:
            return self.v_inv[s]
        raise SpinError(f"bad direction {d!r}")

    # -- cone points ---------------------------------------------------

    def cone_points(self):
        """All corner classes, each with zero order (angle/2pi - 1)."""
        if self._cones is not None:
            return self._cones
        n = self.n
        parent = list(range(4 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for s in range(n):
            union(4 * s + SE, 4 * self.h[s] + SW)
            union(4 * s + NE, 4 * self.h[s] + NW)
            union(4 * s + NW, 4 * self.v[s] + SW)
            union(4 * s + NE, 4 * self.v[s] + SE)
        classes = {}
        for s in range(n):
            for q in range(4):
                classes.setdefault(find(4 * s + q), []).append((s, q))
        cones = []
        for slots in classes.values():
            if len(slots) % 4:
                raise SpinError("corner class with fractional total angle")
            cones.append(ConePoint(tuple(sorted(slots)), len(slots) // 4 - 1))
        cones.sort(key=lambda c: c.slots[0])
        self._cones = tuple(cones)
        return self._cones

    def stratum(self):
        """Sorted zero orders (positive only); empty for the torus."""
        return tuple(sorted((c.order for c in self.cone_points() if c.order), reverse=True))

    def genus(self):
        total = sum(c.order for c in self.cone_points())
        if total % 2:
            raise SpinError("odd total zero order; orientation error")
        return 1 + total // 2

    def euler_characteristic(self):
        return len(self.cone_points()) - 2 * self.n + self.n

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        return {"schema": "spincalc-origami/1", "squares": self.n,
                "h": list(self.h), "v": list(self.v)}

    @classmethod
    def from_json_dict(cls, doc):
        if doc.get("schema") != "spincalc-origami/1":
            raise SpinError("unknown origami schema")
        o = cls(doc["h"], doc["v"])
        if o.n != doc.get("squares"):
            raise SpinError("square count disagrees with permutation length")
        return o


class GridPath:
    """A closed path of unit midline steps; each step is (square, dir).

    Steps run between square centers, so cone points (which sit at
    corners) are never traversed.  Construction cyclically cancels
    backtracks; the resulting reduced path has a well defined turning
    number.
    """

    def __init__(self, origami, steps, reduce=True):
        self.origami = origami
        steps = [(int(s), d) for s, d in steps]
        if not steps:
            raise SpinError("empty path")
        for s, d in steps:
            if d not in DIRS:
                raise SpinError(f"bad direction {d!r}")
            if not 0 <= s < origami.n:
                raise SpinError("step outside the origami")
        cur = steps[0][0]
        for s, d in steps:
            if s != cur:
                raise SpinError("steps do not concatenate")
            cur = origami.neighbor(s, d)
        if cur != steps[0][0]:
            raise SpinError("path is not closed")
        if reduce:
            steps = self._reduce(steps)
        self.steps = tuple(steps)

    def _reduce(self, steps):
        def is_backtrack(a, b):
            s, d = a
            s2, d2 = b
            return d2 == _REVERSE[d] and s2 == self.origami.neighbor(s, d)

        changed = True
        while changed and steps:
            changed = False
            out = []
            i = 0
            while i < len(steps):
                if out and is_backtrack(out[-1], steps[i]):
                    out.pop()
                    i += 1
                    changed = True
                else:
                    out.append(steps[i])
                    i += 1
            # cyclic cancellation across the seam
            while len(out) >= 2 and is_backtrack(out[-1], out[0]):
                out = out[1:-1]
                changed = True
            steps = out
        if not steps:
            raise SpinError("path reduces to a point; winding undefined")
        return steps

    def winding(self):
        """Quarter-turn count / 4; counterclockwise positive."""
        turns = 0
        k = len(self.steps)
        for i in range(k):
            d1 = self.steps[i][1]
            d2 = self.steps[(i + 1) % k][1]
            if d2 == d1:
                continue
            if d2 == _LEFT[d1]:
                turns += 1
            elif d1 == _LEFT[d2]:
                turns -= 1
            else:
                raise SpinError("reversal survived reduction; degenerate path")
        if turns % 4:
            raise SpinError("turning count not divisible by 4")
        return turns // 4

    def reversed(self):
        o = self.origami
        steps = [(o.neighbor(s, d), _REVERSE[d]) for s, d in reversed(self.steps)]
        return GridPath(o, steps)

    def edge_chain(self):
        """Homology chain in Z^(2n): index s = bottom(s) (east), n + s = left(s) (north)."""
        o = self.origami
        chain = [0] * (2 * o.n)
        for s, d in self.steps:
            if d == EAST:
                chain[s] += 1
            elif d == WEST:
                chain[o.h_inv[s]] -= 1
            elif d == NORTH:
                chain[o.n + s] += 1
            else:
                chain[o.n + o.v_inv[s]] -= 1
        return chain


def horizontal_core(origami, s0):
    """The rightward core path of the horizontal cylinder through s0."""
    steps = [(s0, EAST)]
    s = origami.h[s0]
    while s != s0:
        steps.append((s, EAST))
        s = origami.h[s]
    return GridPath(origami, steps)


def vertical_core(origami, s0):
    steps = [(s0, NORTH)]
    s = origami.v[s0]
    while s != s0:
        steps.append((s, NORTH))
        s = origami.v[s]
    return GridPath(origami, steps)


def square_boundary(origami, s, clockwise=False):
    """The unit-square loop around the NE corner of s (ccw by default).

    This is the boundary of an embedded disk of four quarter-squares,
    so it requires the encircled corner to be a regular point; around a
    cone point the four steps do not close up (see corner_link).
    """
    o = origami
    ccw = [(s, EAST), (o.h[s], NORTH), (o.v[o.h[s]], WEST), (o.h_inv[o.v[o.h[s]]], SOUTH)]
    try:
        path = GridPath(o, ccw)
    except SpinError as exc:
        raise SpinError(f"NE corner of square {s} is a cone point: {exc}") from exc
    return path.reversed() if clockwise else path


def corner_link(origami, s):
    """The full ccw loop of midline steps around the NE corner of s.

    For a zero of order k the loop has 4(k+1) steps, all left turns, so
    its winding is k + 1; k = 0 recovers the square boundary.
    """
    o = origami
    steps = [(s, EAST)]
    dirs = [EAST, NORTH, WEST, SOUTH]
    cur = o.h[s]
    i = 1
    while True:
        d = dirs[i % 4]
        steps.append((cur, d))
        cur = o.neighbor(cur, d)
        i += 1
        if i % 4 == 0 and cur == s:
            break
        if i > 16 * o.n:
            raise SpinError("corner link failed to close")
    return GridPath(o, steps)


def chain_pairing(origami, x, y):
    """Algebraic intersection of two edge chains.

    Perturb y diagonally by (+eps, +eps); the crossings that survive give
    iota(x, y) = sum_t [ x_bottom(v(t)) y_left(t) - x_left(h(t)) y_bottom(t) ].
    """
    o = origami
    n = o.n
    total = 0
    for t in range(n):
        total += x[o.v[t]] * y[n + t] - x[n + o.h[t]] * y[t]
    return total


def slide_move(path, i):
    """Homotope step i across the square NE of it: E,N -> N,E (or back).

    Valid only when the corner crossed is a regular point; raises
    otherwise since winding is not invariant across a cone point.
    """
    o = path.origami
    steps = list(path.steps)
    k = len(steps)
    s, d = steps[i]
    s2, d2 = steps[(i + 1) % k]
    if (d, d2) == (EAST, NORTH):
        corner_of = (s, NE)
        replacement = [(s, NORTH), (o.v[s], EAST)]
    elif (d, d2) == (NORTH, EAST):
        corner_of = (s, NE)
        replacement = [(s, EAST), (o.h[s], NORTH)]
    else:
        raise SpinError("slide applies to an E,N or N,E corner")
    for cone in o.cone_points():
        if corner_of in cone.slots:
            if cone.order != 0:
                raise SpinError("cannot slide across a cone point")
            break
    if i + 1 < k:
        steps[i:i + 2] = replacement
    else:
        steps = replacement[1:] + steps[1:i] + replacement[:1]
    return GridPath(o, steps)


# -- homology and flat spin structure ---------------------------------


def _spanning_tree_paths(origami):
    """BFS tree of the square adjacency graph; returns (step path to each
    square from square 0, list of non-tree directed steps)."""
    o = origami
    paths = {0: []}
    order = [0]
    frontier = [0]
    tree_edges = set()  # undirected edge ids: ('h'|'v', square)
    while frontier:
        nxt = []
        for s in frontier:
            for d in (EAST, NORTH, WEST, SOUTH):
                t = o.neighbor(s, d)
                if t not in paths:
                    paths[t] = paths[s] + [(s, d)]
                    if d == EAST:
                        tree_edges.add(("h", s))
                    elif d == WEST:
                        tree_edges.add(("h", o.h_inv[s]))
                    elif d == NORTH:
                        tree_edges.add(("v", s))
                    else:
                        tree_edges.add(("v", o.v_inv[s]))
                    order.append(t)
                    nxt.append(t)
        frontier = nxt
    non_tree = []
    for s in range(o.n):
        if ("h", s) not in tree_edges:
            non_tree.append((s, EAST))
        if ("v", s) not in tree_edges:
            non_tree.append((s, NORTH))
    return paths, non_tree


def fundamental_cycles(origami):
    """Closed GridPaths generating H_1 of the punctured surface.

    One cycle per non-tree edge: root -> tail, the edge, head -> root.
    The backtrack reduction inside GridPath trims the common tree prefix.
    """
    paths, non_tree = _spanning_tree_paths(origami)
    cycles = []
    for s, d in non_tree:
        head = origami.neighbor(s, d)
        back = [(origami.neighbor(t, dd), _REVERSE[dd]) for t, dd in reversed(paths[head])]
        cycles.append(GridPath(origami, paths[s] + [(s, d)] + back))
    return cycles


def face_boundaries(origami):
    """Edge chains of the face cycles of the midline graph (one per cone).

    Faces are traced with the rotation system E, N, W, S (counter-
    clockwise) at every square center.
    """
    o = origami
    n = o.n
    # darts: (square, dir) meaning the half-edge leaving square in dir
    next_dart = {}
    for s in range(n):
        for d in DIRS:
            t = o.neighbor(s, d)
            back = (t, _REVERSE[d])
            # face tracing: continue along the next dart clockwise from
            # the reversal, which walks the boundary of the face to the
            # left of the dart
            next_dart[(s, d)] = (back[0], _LEFT[back[1]])
    seen = set()
    chains = []
    for start in next_dart:
        if start in seen:
            continue
        chain = [0] * (2 * n)
        cur = start
        while True:
            seen.add(cur)
            s, d = cur
            if d == EAST:
                chain[s] += 1
            elif d == WEST:
                chain[o.h_inv[s]] -= 1
            elif d == NORTH:
                chain[n + s] += 1
            else:
                chain[n + o.v_inv[s]] -= 1
            cur = next_dart[cur]
            if cur == start:
                break
        chains.append(chain)
    return chains


class FlatHomology:
    """Symplectic coordinates on H_1 of an origami.

    Built once per origami: fundamental cycles, their Gram matrix under
    the chain pairing, and an integral change of basis putting the Gram
    into the standard symplectic form.  The first 2g transformed chains
    are the working geometric symplectic basis.
    """

    def __init__(self, origami):
        self.origami = origami
        self.cycles = fundamental_cycles(origami)
        self.chains = [c.edge_chain() for c in self.cycles]
        m = len(self.chains)
        self.gram = [
            [chain_pairing(origami, self.chains[i], self.chains[j]) for j in range(m)]
            for i in range(m)
        ]
        p, ds = linalg.skew_normal_form(self.gram)
        genus = origami.genus()
        if len(ds) != genus or any(d != 1 for d in ds):
            raise SpinError(
                f"homology pairing has symplectic divisors {ds}, expected {[1] * genus}"
            )
        self.genus = genus
        self.p = p
        cols = 2 * genus
        self.basis_chains = []
        for j in range(cols):
            z = [0] * (2 * origami.n)
            for i in range(m):
                c = p[i][j]
                if c:
                    for e, val in enumerate(self.chains[i]):
                        z[e] += c * val
            self.basis_chains.append(z)

    def coordinates(self, chain):
        """Integer coordinates of a chain in the symplectic basis."""
        coords = []
        for k in range(self.genus):
            a = self.basis_chains[2 * k]
            b = self.basis_chains[2 * k + 1]
            alpha = chain_pairing(self.origami, chain, b)
            beta = -chain_pairing(self.origami, chain, a)
            coords.extend([alpha, beta])
        return coords

    def q_values_on_basis(self):
        """q = winding + 1 (mod 2) transported to the symplectic basis.

        q is quadratic: q(sum l_i g_i) = sum l_i q(g_i) + sum_{i<j} l_i l_j
        iota(g_i, g_j)  (mod 2).
        """
        q_cycles = [(c.winding() + 1) % 2 for c in self.cycles]
        values = []
        m = len(self.chains)
        for j in range(2 * self.genus):
            col = [self.p[i][j] % 2 for i in range(m)]
            q = sum(col[i] * q_cycles[i] for i in range(m))
            for i in range(m):
                if col[i]:
                    for k in range(i + 1, m):
                        if col[k]:
                            q += self.gram[i][k]
            values.append(q % 2)
        return values


def spin_parity(origami):
    """Arf invariant of the flat spin structure; all zero orders must be even."""
    orders = [c.order for c in origami.cone_points()]
    if origami.genus() < 2:
        raise SpinError("spin parity needs genus >= 2")
    odd = [k for k in orders if k % 2]
    if odd:
        raise SpinError(f"odd zero orders {odd}: flat structure has no mod-2 reduction")
    hom = FlatHomology(origami)
    q = hom.q_values_on_basis()
    total = sum(q[2 * k] * q[2 * k + 1] for k in range(hom.genus))
    return Parity.ODD if total % 2 else Parity.EVEN


def spin_value(origami, path, r):
    """winding mod r; requires r to divide every zero order."""
    if r < 2:
        raise SpinError("modulus must be >= 2")
    for cone in origami.cone_points():
        if cone.order % r:
            raise SpinError(
                f"zero of order {cone.order} at {cone.slots[0]} is not divisible by {r}; "
                "mod-r winding is not isotopy invariant"
            )
    return path.winding() % r
