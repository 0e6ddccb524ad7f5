"""Finite homological shadows of the curve graphs cut out by spin values.

Vertices of the real graphs are isotopy classes of nonseparating curves
with a prescribed spin value; the shadow keeps only their mod-2 homology
classes, and an edge survives only through its homological trace
(disjoint curves have algebraic intersection zero).  Connectivity of a
shadow is therefore a consistency experiment for the connectivity
theorems about the actual graphs, never a proof: reports say
"consistent with", not "verifies".

Kinds:

* CG0      -- classes of curves with vanishing spin value; edges iota = 0,
* CG1      -- classes with value +-1; edges iota = 0.  Distinct disjoint
              curves in one class (bounding pairs) collapse to invisible
              self-loops, a documented blind spot of the shadow,
* CG1plus  -- same vertices; the real graph also demands a connected
              complement, which excludes exactly the bounding pairs, so
              the visible shadow edges coincide with CG1,
* CG2plus  -- mod-4 shadow: vertices are pairs of lifted classes
              (x, y) with values (2, 0) and iota(x, y) = 1; edges when
              the two spans pair to zero.  Offsets of the lifts are
              pinned by the value conditions; which lifts are realized
              by embedded curves is open, so this shadow carries an
              extra faithfulness caveat.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .modring import SpinError
from .spin import Parity, SpinStructure, arf, curve_value_function

DEFAULT_MAX_VERTICES = 200_000
DEFAULT_DOT_BOUND = 2_000

KINDS = ("CG0", "CG1", "CG1plus", "CG2plus")

_CAVEATS = {
    "CG1": [
        "bounding pairs (distinct disjoint curves in one class) appear as "
        "self-loops of the shadow and are not represented",
    ],
    "CG1plus": [
        "same-class pairs are excluded: equal classes come from isotopic "
        "curves or bounding pairs, and both disconnect the complement",
    ],
    "CG2plus": [
        "lifted classes admit all offsets compatible with the value "
        "conditions; which lifts arise from embedded curves is open",
    ],
}


@dataclass
class ShadowGraph:
    kind: str
    g: int
    r: int
    parity: str | None
    vertices: list
    adjacency: list  # list of sorted neighbor-index lists
    caveats: list = field(default_factory=list)

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def vertex_label(self, i):
        v = self.vertices[i]
        if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple):
            return "|".join(",".join(str(x) for x in part) for part in v)
        return ",".join(str(x) for x in v)


def canonical_structure(g, r, parity=None):
    """A reference structure of the requested parity (even r only)."""
    values = [0] * (2 * g)
    phi = SpinStructure(g, r, tuple(values))
    if parity is None:
        return phi
    parity = Parity(parity) if not isinstance(parity, Parity) else parity
    if r % 2:
        raise SpinError("parity selection needs even r")
    if arf(reduce_mod2(phi)) is not parity:
        values[0] = values[1] = 1
        phi = SpinStructure(g, r, tuple(values))
    return phi


def reduce_mod2(phi):
    if phi.r == 2:
        return phi
    return SpinStructure(phi.g, 2, tuple(v % 2 for v in phi.basis_values))


def _mod2_vertices(g, phi, want_value):
    value = curve_value_function(phi)
    n = 2 * g
    out = []
    for mask in range(1, 1 << n):
        coords = tuple((mask >> i) & 1 for i in range(n))
        if value(coords) == want_value:
            out.append(coords)
    return out


def _pair_matrix(vertices, g, r):
    coords = np.array(vertices, dtype=np.int64)
    n = 2 * g
    jmat = np.zeros((n, n), dtype=np.int64)
    for k in range(g):
        jmat[2 * k, 2 * k + 1] = 1
        jmat[2 * k + 1, 2 * k] = -1
    return (coords @ jmat @ coords.T) % r


def build_shadow(kind, g, phi, max_vertices=DEFAULT_MAX_VERTICES):
    """Construct a shadow graph for a structure phi of the right modulus."""
    if kind not in KINDS:
        raise SpinError(f"unknown shadow kind {kind!r}")
    if kind == "CG2plus":
        if phi.r != 4:
            raise SpinError("CG2plus is a mod-4 shadow")
        return _build_cg2plus(g, phi, max_vertices)
    if phi.r != 2:
        raise SpinError(f"{kind} is a mod-2 shadow")
    if phi.g != g:
        raise SpinError("structure genus mismatch")
    want = 0 if kind == "CG0" else 1
    vertices = _mod2_vertices(g, phi, want)
    if len(vertices) > max_vertices:
        raise SpinError(f"vertex count {len(vertices)} exceeds bound {max_vertices}")
    pair = _pair_matrix(vertices, g, 2)
    adjacency = []
    for i in range(len(vertices)):
        nbrs = np.nonzero(pair[i] == 0)[0]
        adjacency.append([int(j) for j in nbrs if j != i])
    parity = arf(phi).value
    return ShadowGraph(kind, g, 2, parity, vertices, adjacency,
                       list(_CAVEATS.get(kind, [])))


def _build_cg2plus(g, phi, max_vertices):
    if phi.g != g:
        raise SpinError("structure genus mismatch")
    r = 4
    n = 2 * g
    total = r ** n
    idx = np.arange(total)
    digits = np.zeros((total, n), dtype=np.int64)
    for i in range(n):
        digits[:, i] = (idx // r ** i) % r
    primitive = digits[(digits % 2).any(axis=1)]
    # the value conditions pin the offsets uniquely per base class, so the
    # vertex set projects to all primitive pairs with iota(x, y) = 1
    jmat = np.zeros((n, n), dtype=np.int64)
    for k in range(g):
        jmat[2 * k, 2 * k + 1] = 1
        jmat[2 * k + 1, 2 * k] = -1
    cross = (primitive @ jmat @ primitive.T) % r
    xi, yi = np.nonzero(cross == 1)
    if len(xi) > max_vertices:
        raise SpinError(
            f"CG2plus vertex count {len(xi)} exceeds bound {max_vertices}; "
            "raise max_vertices to force the build"
        )
    vx = primitive[xi]
    vy = primitive[yi]
    vertices = [
        (tuple(int(a) for a in vx[i]), tuple(int(b) for b in vy[i]))
        for i in range(len(xi))
    ]
    # adjacency (both spans pair to zero), computed in row blocks to keep
    # the pairing matrices small
    count = len(vertices)
    jx = vx @ jmat
    jy = vy @ jmat
    adjacency = []
    block = max(1, 2 ** 22 // max(count, 1))
    for lo in range(0, count, block):
        hi = min(lo + block, count)
        ok = ((jx[lo:hi] @ vx.T) % r == 0)
        ok &= (jx[lo:hi] @ vy.T) % r == 0
        ok &= (jy[lo:hi] @ vx.T) % r == 0
        ok &= (jy[lo:hi] @ vy.T) % r == 0
        for i in range(lo, hi):
            row = np.nonzero(ok[i - lo])[0]
            adjacency.append([int(j) for j in row if j != i])
    parity = arf(reduce_mod2(phi)).value
    return ShadowGraph("CG2plus", g, r, parity, vertices, adjacency,
                       list(_CAVEATS["CG2plus"]))


def components(graph):
    """Connected components with sizes and the diameter of the largest."""
    n = graph.vertex_count
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt = []
            for p in frontier:
                for q in graph.adjacency[p]:
                    if not seen[q]:
                        seen[q] = True
                        comp.append(q)
                        nxt.append(q)
            frontier = nxt
        comps.append(sorted(comp))
    comps.sort(key=len, reverse=True)
    diameter = None
    if comps and len(comps[0]) <= 2_000:
        diameter = _diameter(graph, comps[0])
    return {
        "count": len(comps),
        "sizes": [len(c) for c in comps],
        "connected": len(comps) == 1,
        "diameter_largest": diameter,
        "components": comps,
    }


def _diameter(graph, comp):
    # bitset BFS: eccentricity of every vertex of the component
    masks = {}
    for i in comp:
        m = 0
        for j in graph.adjacency[i]:
            m |= 1 << j
        masks[i] = m
    comp_mask = 0
    for i in comp:
        comp_mask |= 1 << i
    best = 0
    for start in comp:
        seen = 1 << start
        frontier = seen
        dist = 0
        while True:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                grown |= masks[low.bit_length() - 1]
                f ^= low
            frontier = grown & comp_mask & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        best = max(best, dist)
    return best


def component_report(graph, summary=None):
    """JSON-ready component report, schema spincalc-graph/1."""
    if summary is None:
        summary = components(graph)
    consistency = (
        f"BFS connectivity of the {graph.kind} shadow is a consistency "
        "experiment for the corresponding connectivity statement; a "
        "connected shadow is consistent with, and does not prove, "
        "connectivity of the curve graph"
    )
    return {
        "schema": "spincalc-graph/1",
        "kind": graph.kind,
        "genus": graph.g,
        "r": graph.r,
        "parity": graph.parity,
        "vertex_count": graph.vertex_count,
        "edge_count": graph.edge_count,
        "component_count": summary["count"],
        "component_sizes": summary["sizes"][:32],
        "connected": summary["connected"],
        "diameter_largest": summary["diameter_largest"],
        "consistency": consistency,
        "caveats": graph.caveats,
    }


def export_dot(graph, max_vertices=DEFAULT_DOT_BOUND):
    """Undirected DOT text; refuses to render oversized graphs."""
    if graph.vertex_count > max_vertices:
        raise SpinError(
            f"{graph.vertex_count} vertices exceed the DOT bound {max_vertices}"
        )
    lines = [f'graph "{graph.kind}_g{graph.g}" {{']
    for i in range(graph.vertex_count):
        lines.append(f'  "{graph.vertex_label(i)}";')
    for i in range(graph.vertex_count):
        for j in graph.adjacency[i]:
            if j > i:
                lines.append(f'  "{graph.vertex_label(i)}" -- "{graph.vertex_label(j)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
