from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from spincalc.modring import BaseClass, MismatchError, SpinError, intersection_form, is_primitive
from spincalc.spin import SpinStructure, evaluate
from spincalc.tangent_lift import (
    LiftedClass,
    LiftedTransvection,
    pants_boundary,
    reverse,
    surgery_sum,
    translate_splitting,
    twist_apply,
    zeta,
)


def lift(g, r, coords, w):
    return LiftedClass(BaseClass(g, r, tuple(coords)), w)


def all_structures(g, r):
    for values in product(range(r), repeat=2 * g):
        yield SpinStructure(g, r, values)


def test_zeta():
    z = zeta(2, 2)
    assert z.base.is_zero() and z.zeta == 1
    for phi in all_structures(2, 2):
        assert evaluate(phi, z) == 1
    assert reverse(zeta(2, 4)).zeta == 3


def test_reverse_examples():
    a1 = lift(2, 4, (1, 0, 0, 0), 3)
    r = reverse(a1)
    assert r.base.coords == (3, 0, 0, 0)
    assert r.zeta == 1
    for phi in all_structures(1, 3):
        c = lift(1, 3, (1, 2), 1)
        assert (evaluate(phi, reverse(c)) + evaluate(phi, c)) % 3 == 0


def test_surgery_examples():
    a1 = lift(2, 2, (1, 0, 0, 0), 0)
    a2 = lift(2, 2, (0, 0, 1, 0), 0)
    s = surgery_sum(a1, a2)
    assert s.base.coords == (1, 0, 1, 0)
    assert s.zeta == 1
    # curve surgered with a reversed parallel copy bounds a disk
    assert surgery_sum(a1, reverse(a1)).base.is_zero()
    assert surgery_sum(a1, reverse(a1)).zeta == 1


@given(st.integers(1, 2), st.sampled_from([2, 3, 4]), st.data())
@settings(max_examples=120, deadline=None)
def test_surgery_identity_random(g, r, data):
    coords = st.tuples(*([st.integers(0, r - 1)] * (2 * g)))
    c = lift(g, r, data.draw(coords), data.draw(st.integers(0, r - 1)))
    d = lift(g, r, data.draw(coords), data.draw(st.integers(0, r - 1)))
    phi = SpinStructure(g, r, data.draw(coords))
    assert evaluate(phi, surgery_sum(c, d)) == (
        evaluate(phi, c) + evaluate(phi, d) + 1
    ) % r
    # associativity shadow
    e = lift(g, r, data.draw(coords), data.draw(st.integers(0, r - 1)))
    assert evaluate(phi, surgery_sum(surgery_sum(c, d), e)) == (
        evaluate(phi, c) + evaluate(phi, d) + evaluate(phi, e) + 2
    ) % r


def test_twist_examples():
    # mod 2: T_{a1} sends b1-lift to (a1+b1)-lift with unchanged offset
    c = lift(2, 2, (1, 0, 0, 0), 0)
    d = lift(2, 2, (0, 1, 0, 0), 0)
    out = twist_apply(LiftedTransvection(c, 1), d)
    assert out.base.coords == (1, 1, 0, 0) and out.zeta == 0
    # mod 4 with an offset-laden twisting class
    c = lift(2, 4, (1, 0, 0, 0), 1)
    d = lift(2, 4, (0, 1, 0, 0), 0)
    out = twist_apply(LiftedTransvection(c, 1), d)
    assert out.base.coords == (3, 1, 0, 0)
    assert out.zeta == 3
    # disjoint classes commute with the twist
    e = lift(2, 4, (0, 0, 0, 1), 2)
    assert twist_apply(LiftedTransvection(c, 1), e) == e


def test_twist_requires_primitive():
    with pytest.raises(SpinError):
        LiftedTransvection(lift(1, 4, (2, 0), 0), 1)


def test_twist_linearity_exhaustive_small():
    # every structure, every lifted twist, every target:  g = 1, r = 2, 3
    for r in (2, 3):
        g = 1
        vec_space = list(product(range(r), repeat=2 * g))
        for values in vec_space:
            phi = SpinStructure(g, r, values)
            for ccoords in vec_space:
                base = BaseClass(g, r, ccoords)
                if not is_primitive(base):
                    continue
                for cz in range(r):
                    c = LiftedClass(base, cz)
                    t = LiftedTransvection(c, 1)
                    for dcoords in vec_space:
                        for dz in range(r):
                            d = LiftedClass(BaseClass(g, r, dcoords), dz)
                            lhs = evaluate(phi, twist_apply(t, d))
                            iota = intersection_form(d.base, c.base)
                            rhs = (evaluate(phi, d) + iota * evaluate(phi, c)) % r
                            assert lhs == rhs


def test_twist_invertible_and_fixes():
    c = lift(2, 4, (1, 2, 3, 0), 2)
    t = LiftedTransvection(c, 3)
    d = lift(2, 4, (0, 1, 1, 1), 1)
    assert twist_apply(t.inverse(), twist_apply(t, d)) == d
    assert twist_apply(t, c) == c
    assert twist_apply(t, zeta(2, 4)) == zeta(2, 4)


def test_pants_examples():
    c1 = lift(2, 4, (1, 0, 0, 0), 0)
    c2 = reverse(c1)
    c = pants_boundary(c1, c2)
    assert c.base.is_zero() and c.zeta == 3  # -1 mod 4
    for phi in all_structures(2, 4):
        assert (
            evaluate(phi, c) + evaluate(phi, c1) + evaluate(phi, c2)
        ) % 4 == 3
        # an all-zero structure evaluates every lift to its offset
    phi0 = SpinStructure(2, 4, (0, 0, 0, 0))
    assert evaluate(phi0, c) == 3


@given(st.sampled_from([2, 3, 4, 6]), st.data())
@settings(max_examples=80, deadline=None)
def test_pants_identity_random(r, data):
    g = 2
    coords = st.tuples(*([st.integers(0, r - 1)] * (2 * g)))
    c1 = lift(g, r, data.draw(coords), data.draw(st.integers(0, r - 1)))
    c2 = lift(g, r, data.draw(coords), data.draw(st.integers(0, r - 1)))
    phi = SpinStructure(g, r, data.draw(coords))
    total = (
        evaluate(phi, pants_boundary(c1, c2))
        + evaluate(phi, c1)
        + evaluate(phi, c2)
    ) % r
    assert total == (-1) % r


def test_point_push_shift_and_threshold():
    """The bounding-pair composite shifts the value by exactly 2.

    The m-th iterate fixes the value exactly when 2m = 0 mod r, i.e.
    first at m = r/2 for even r and m = r for odd r.
    """
    for r in (2, 3, 4, 5, 6, 8):
        g = 2
        a1 = (1, 0, 0, 0)
        for w1 in range(r):
            c1 = lift(g, r, a1, w1)
            for w2 in range(r):
                c2 = LiftedClass(-c1.base, w2)
                boundary = pants_boundary(c1, c2)
                phi = SpinStructure(g, r, (0, 1, 0, 0))
                if evaluate(phi, boundary) != 1:
                    continue
                d = lift(g, r, (0, 1, 0, 0), 0)
                assert intersection_form(d.base, c1.base) == (-1) % r
                t1 = LiftedTransvection(c1, 1)
                t2 = LiftedTransvection(c2, -1)
                value = evaluate(phi, d)
                cur = d
                period = None
                for m in range(1, 2 * r + 1):
                    cur = twist_apply(t1, twist_apply(t2, cur))
                    got = evaluate(phi, cur)
                    assert got == (value + 2 * m) % r
                    if got == value and period is None:
                        period = m
                assert period == (r // 2 if r % 2 == 0 else r)


def test_translate_splitting_commutes():
    g, r = 2, 4
    t = (1, 3, 0, 2)
    c = lift(g, r, (1, 2, 0, 1), 1)
    d = lift(g, r, (0, 1, 1, 0), 3)
    # surgery commutes with re-coordinatization
    lhs = translate_splitting(surgery_sum(c, d), t)
    rhs = surgery_sum(translate_splitting(c, t), translate_splitting(d, t))
    assert lhs == rhs
    # twists commute as well
    tw = LiftedTransvection(c, 2)
    tw_t = LiftedTransvection(translate_splitting(c, t), 2)
    assert translate_splitting(twist_apply(tw, d), t) == twist_apply(
        tw_t, translate_splitting(d, t)
    )
    with pytest.raises(MismatchError):
        translate_splitting(c, (1, 2))
