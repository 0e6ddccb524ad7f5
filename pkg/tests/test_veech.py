import pytest

from conftest import torus_grid

from spincalc import systems
from spincalc.modring import SpinError
from spincalc.spin import Parity
from spincalc.veech import (
    EAST, NORTH, WEST, SOUTH,
    FlatHomology,
    GridPath,
    Origami,
    chain_pairing,
    corner_link,
    face_boundaries,
    fundamental_cycles,
    horizontal_core,
    slide_move,
    spin_parity,
    spin_value,
    square_boundary,
    vertical_core,
)


def test_origami_validation():
    with pytest.raises(SpinError):
        Origami([0, 0], [0, 1])  # h not a permutation
    with pytest.raises(SpinError):
        Origami([0, 1], [0, 1])  # disconnected: two tori
    o = Origami([0], [0])
    assert o.genus() == 1 and o.stratum() == ()


def test_torus_chain_origamis():
    a2 = systems.preset("A", 2)
    assert a2.origami.n == 1
    assert a2.origami.genus() == 1
    a4 = systems.preset("A", 4)
    assert a4.origami.n == 3
    assert a4.origami.genus() == 2
    assert a4.origami.stratum() == (2,)
    e6 = systems.preset("E6")
    assert e6.origami.n == 5
    assert e6.origami.genus() == 3
    assert e6.origami.stratum() == (4,)


def test_euler_consistency():
    for name, g in [("A", 4), ("E6", None), ("S", 3), ("S", 4), ("C", 4), ("U", 4), ("V", 5)]:
        o = systems.preset(name, g).origami
        cones = o.cone_points()
        assert sum(len(c.slots) for c in cones) == 4 * o.n
        assert len(cones) - 2 * o.n + o.n == 2 - 2 * o.genus()


def test_winding_normalization():
    o = torus_grid(3, 3)
    disk = square_boundary(o, 0)
    assert disk.winding() == 1
    assert disk.reversed().winding() == -1
    assert horizontal_core(o, 0).winding() == 0
    assert vertical_core(o, 0).winding() == 0
    assert horizontal_core(o, 0).reversed().winding() == 0


def test_corner_link_winding_is_order_plus_one():
    e6 = systems.preset("E6").origami
    link = corner_link(e6, 0)
    assert link.winding() == 4 + 1
    o = torus_grid(2, 2)
    assert corner_link(o, 0).winding() == 1


def test_square_boundary_needs_regular_corner():
    e6 = systems.preset("E6").origami
    with pytest.raises(SpinError):
        square_boundary(e6, 0)


def test_path_validation_and_backtracks():
    o = torus_grid(2, 2)
    with pytest.raises(SpinError):
        GridPath(o, [(0, EAST)])  # not closed
    with pytest.raises(SpinError):
        GridPath(o, [(0, EAST), (0, EAST)])  # does not concatenate
    core = horizontal_core(o, 0)
    # inserting a backtrack does not change the reduced path
    steps = list(core.steps)
    padded = steps[:1] + [(o.h[0], NORTH), (o.v[o.h[0]], SOUTH)] + steps[1:]
    assert GridPath(o, padded).steps == core.steps
    with pytest.raises(SpinError):
        GridPath(o, [(0, EAST), (1, WEST)])  # reduces to nothing


def test_slide_moves_on_torus():
    o = torus_grid(3, 3)
    # an L-shaped loop around the torus: slides preserve winding
    path = GridPath(o, [(0, EAST), (1, NORTH), (4, EAST), (5, NORTH),
                        (8, EAST), (6, NORTH)])
    w = path.winding()
    moved = slide_move(path, 0)
    assert moved.winding() == w
    back = slide_move(moved, 0)
    assert back.winding() == w


def test_slide_blocked_at_cone_point():
    # every corner of the E6 origami is the single order-4 zero, so any
    # E,N elbow refuses to slide
    e6 = systems.preset("E6").origami
    assert all(c.order == 4 for c in e6.cone_points())
    link = corner_link(e6, 0)
    elbow = next(
        i for i in range(len(link.steps))
        if (link.steps[i][1], link.steps[(i + 1) % len(link.steps)][1]) == (EAST, NORTH)
    )
    with pytest.raises(SpinError):
        slide_move(link, elbow)


def test_band_sum_additivity():
    """Joining two disjoint disk boundaries by a band adds windings +1.

    On the 4x4 torus: two ccw unit-square loops and an explicit band
    give winding +1 for one band side (= 1 + 1 - 1) and the reversed
    configuration realizes the surgery orientation with -1 = (-1)+(-1)+1
    exactly; both agree with the surgery identity mod 2.
    """
    o = torus_grid(4, 4)

    def sq(x, y):
        return x + 4 * y

    left = GridPath(o, [(sq(0, 0), EAST), (sq(1, 0), NORTH),
                        (sq(1, 1), WEST), (sq(0, 1), SOUTH)])
    right = GridPath(o, [(sq(2, 0), EAST), (sq(3, 0), NORTH),
                         (sq(3, 1), WEST), (sq(2, 1), SOUTH)])
    assert left.winding() == 1 and right.winding() == 1
    joined = GridPath(o, [
        (sq(0, 0), EAST), (sq(1, 0), NORTH), (sq(1, 1), EAST), (sq(2, 1), SOUTH),
        (sq(2, 0), EAST), (sq(3, 0), NORTH), (sq(3, 1), WEST), (sq(2, 1), WEST),
        (sq(1, 1), WEST), (sq(0, 1), SOUTH),
    ])
    assert joined.winding() == left.winding() + right.winding() - 1
    rev = joined.reversed()
    assert rev.winding() == left.reversed().winding() + right.reversed().winding() + 1
    assert (joined.winding() - (left.winding() + right.winding() + 1)) % 2 == 0


def test_spin_value_divisibility():
    e6 = systems.preset("E6").origami
    core = horizontal_core(e6, 0)
    for r in (2, 4):
        assert spin_value(e6, core, r) == 0
    with pytest.raises(SpinError):
        spin_value(e6, core, 3)
    a4 = systems.preset("A", 4).origami
    with pytest.raises(SpinError):
        spin_value(a4, horizontal_core(a4, 0), 4)


def test_chain_pairing_antisymmetric_and_faces():
    for build in (lambda: torus_grid(2, 3), lambda: systems.preset("E6").origami,
                  lambda: systems.preset("S", 3).origami):
        o = build()
        cycles = fundamental_cycles(o)
        chains = [c.edge_chain() for c in cycles]
        for x in chains:
            for y in chains:
                assert chain_pairing(o, x, y) == -chain_pairing(o, y, x)
        faces = face_boundaries(o)
        assert len(faces) == len(o.cone_points())
        for f in faces:
            for x in chains:
                assert chain_pairing(o, f, x) == 0


def test_flat_homology_symplectic_basis():
    for build in (lambda: torus_grid(2, 2), lambda: systems.preset("E6").origami,
                  lambda: systems.preset("U", 4).origami):
        o = build()
        hom = FlatHomology(o)
        g = hom.genus
        for i in range(2 * g):
            for j in range(2 * g):
                got = chain_pairing(o, hom.basis_chains[i], hom.basis_chains[j])
                expected = 0
                if j == i + 1 and i % 2 == 0:
                    expected = 1
                elif j == i - 1 and i % 2 == 1:
                    expected = -1
                assert got == expected
        # coordinates round-trip on the basis chains themselves
        for i in range(2 * g):
            coords = hom.coordinates(hom.basis_chains[i])
            assert coords == [1 if k == i else 0 for k in range(2 * g)]


def test_spin_parity_values():
    assert spin_parity(systems.preset("A", 4).origami) is Parity.ODD
    assert spin_parity(systems.preset("E6").origami) is Parity.ODD
    assert spin_parity(systems.preset("U", 4).origami) is Parity.EVEN
    with pytest.raises(SpinError):
        spin_parity(torus_grid(1, 1))  # genus 1
    # odd zero orders: a 5-chain fills H(1,1)
    a5 = systems.preset("A", 5).origami
    assert a5.stratum() == (1, 1)
    with pytest.raises(SpinError):
        spin_parity(a5)


def test_origami_json_roundtrip():
    o = systems.preset("E6").origami
    doc = o.to_json_dict()
    assert doc["schema"] == "spincalc-origami/1"
    o2 = Origami.from_json_dict(doc)
    assert o2.h == o.h and o2.v == o.v
    with pytest.raises(SpinError):
        Origami.from_json_dict({"schema": "nope", "squares": 1, "h": [0], "v": [0]})
