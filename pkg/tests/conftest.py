"""Shared oracles and fixtures.

The heavyweight oracle here is the brute-force enumeration of Sp(4, 2):
all 2^16 candidate 4x4 matrices over F_2, filtered by the symplectic
condition.  It is independent of every code path it is used to check
(transvection generation, Schreier-Sims orders, Arf invariance).
"""

from __future__ import annotations

import pytest

from spincalc.modring import BaseClass, SpMatrix, intersection_form
from spincalc.veech import Origami


def brute_force_sp4_mod2():
    """All 720 symplectic 4x4 matrices over F_2, as SpMatrix objects."""
    mats = []
    basis = [BaseClass.basis_vector(2, 2, i) for i in range(4)]
    for code in range(1 << 16):
        rows = tuple(
            tuple((code >> (4 * i + j)) & 1 for j in range(4)) for i in range(4)
        )
        m = SpMatrix(2, 2, rows)
        cols = [m.apply(b) for b in basis]
        ok = True
        for i in range(4):
            for j in range(i + 1, 4):
                expected = 1 if (j == i + 1 and i % 2 == 0) else 0
                if intersection_form(cols[i], cols[j]) != expected:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            mats.append(m)
    return mats


@pytest.fixture(scope="session")
def sp4_matrices():
    mats = brute_force_sp4_mod2()
    assert len(mats) == 720
    return mats


def torus_grid(width, height):
    """The flat torus tiled by a width x height grid of unit squares."""
    n = width * height
    h = [0] * n
    v = [0] * n
    for y in range(height):
        for x in range(width):
            s = x + width * y
            h[s] = (x + 1) % width + width * y
            v[s] = x + width * ((y + 1) % height)
    return Origami(h, v)
