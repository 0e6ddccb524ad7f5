"""The calculus of H_1 of the unit tangent bundle with Z/rZ coefficients.

A lifted class is a pair (base homology class, zeta offset).  The fibre
class zeta = (0, 1) generates the kernel of the projection to surface
homology, and a reference splitting is fixed once and for all: the
straight lifts of the symplectic basis curves carry offset 0.  All
observable quantities downstream are invariant under translating the
splitting by a linear cocycle, which `translate_splitting` makes testable.

The operations encode, in coordinates:

* reversal:              phi(c^{-1}) = -phi(c)
* surgery of disjoint curves joined by an arc:
                         phi(c + d) = phi(c) + phi(d) + 1
* twist linearity lift:  T_c(d) = d + k iota(d, c) c, acting on offsets too
* third pants boundary:  phi(C) + phi(c1) + phi(c2) = -1
"""

from __future__ import annotations

from dataclasses import dataclass

from .modring import BaseClass, MismatchError, SpinError, intersection_form, is_primitive


@dataclass(frozen=True)
class LiftedClass:
    base: BaseClass
    zeta: int

    def __post_init__(self):
        object.__setattr__(self, "zeta", self.zeta % self.base.r)

    @property
    def g(self):
        return self.base.g

    @property
    def r(self):
        return self.base.r

    def check_compatible(self, other):
        self.base.check_compatible(other.base)

    def __add__(self, other):
        """Plain componentwise sum -- note this is NOT the surgery sum."""
        self.check_compatible(other)
        return LiftedClass(self.base + other.base, self.zeta + other.zeta)

    def __neg__(self):
        return LiftedClass(-self.base, -self.zeta)

    def scale(self, k):
        return LiftedClass(self.base.scale(k), k * self.zeta)


def zeta(g, r):
    """The oriented fibre class of the unit tangent bundle."""
    return LiftedClass(BaseClass.zero(g, r), 1)


def reverse(c):
    """Orientation reversal: negates both the class and the offset."""
    return -c


def surgery_sum(c, d):
    """Surgery of two disjoint curves along an arc; the +1 is the arc's due."""
    c.check_compatible(d)
    return LiftedClass(c.base + d.base, c.zeta + d.zeta + 1)


def pants_boundary(c1, c2):
    """Third boundary C of a pants with boundary c1, c2, oriented so that
    phi(C) + phi(c1) + phi(c2) = -1 for every spin structure phi."""
    c1.check_compatible(c2)
    return LiftedClass(-c1.base - c2.base, -1 - c1.zeta - c2.zeta)


@dataclass(frozen=True)
class LiftedTransvection:
    """T_c^k acting on lifted classes; c must have primitive base."""

    c: LiftedClass
    k: int = 1

    def __post_init__(self):
        if not is_primitive(self.c.base):
            raise SpinError("lifted transvections require a primitive base class")

    def inverse(self):
        return LiftedTransvection(self.c, -self.k)


def twist_apply(t, d):
    """Apply T_c^k:  d + k * iota(d, c) * c, componentwise with the offset."""
    t.c.check_compatible(d)
    coef = (t.k * intersection_form(d.base, t.c.base)) % d.r
    return d + t.c.scale(coef)


def translate_splitting(c, cocycle):
    """Re-coordinatize after translating the reference splitting.

    `cocycle` is a tuple of 2g residues t; the lift recorded as (v, w)
    in the old splitting is recorded as (v, w + t.v) in the new one.
    Linear operations commute with this map, which is the content of the
    splitting-independence tests.
    """
    if len(cocycle) != 2 * c.g:
        raise MismatchError("cocycle has wrong length")
    shift = sum(t * x for t, x in zip(cocycle, c.base.coords))
    return LiftedClass(c.base, c.zeta + shift)
