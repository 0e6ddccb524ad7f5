"""Spin structures as Z/rZ-valued functionals on lifted classes.

A structure is stored by its values on the reference-splitting lifts of
the 2g symplectic basis curves; evaluation on (v, w) is then
sum(v_i s_i) + w, which forces phi(zeta) = 1.

For r even the structure has a parity, the Arf invariant of its mod 2
reduction:  Arf(phi) = sum_i (phi(a_i)+1)(phi(b_i)+1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from . import linalg
from .modring import BaseClass, MismatchError, SpinError, check_modulus, intersection_form, is_primitive
from .tangent_lift import LiftedClass


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def __invert__(self):
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN


DEFAULT_ENUMERATION_BOUND = 2 ** 20


@dataclass(frozen=True)
class SpinStructure:
    g: int
    r: int
    basis_values: tuple

    def __post_init__(self):
        check_modulus(self.r)
        if len(self.basis_values) != 2 * self.g:
            raise SpinError("expected 2g basis values")
        object.__setattr__(
            self, "basis_values", tuple(v % self.r for v in self.basis_values)
        )

    def check_compatible(self, c):
        if self.g != c.g or self.r != c.r:
            raise MismatchError(
                f"structure (g={self.g}, r={self.r}) cannot evaluate (g={c.g}, r={c.r})"
            )


def evaluate(phi, c):
    """phi((v, w)) = sum v_i s_i + w  (mod r)."""
    phi.check_compatible(c)
    return (sum(s * v for s, v in zip(phi.basis_values, c.base.coords)) + c.zeta) % phi.r


def arf(phi):
    """Parity of an even-modulus structure via the quoted Arf formula."""
    if phi.r % 2:
        raise SpinError("parity is defined only for even modulus")
    total = 0
    for i in range(phi.g):
        total += (phi.basis_values[2 * i] + 1) * (phi.basis_values[2 * i + 1] + 1)
    return Parity.ODD if total % 2 else Parity.EVEN


def parity_counts(g):
    """(even, odd) counts of mod-2 structures: 2^(g-1) (2^g +/- 1)."""
    return 2 ** (g - 1) * (2 ** g + 1), 2 ** (g - 1) * (2 ** g - 1)


def enumerate_structures(g, r, bound=DEFAULT_ENUMERATION_BOUND):
    """Yield all r^(2g) structures (deterministic lexicographic order)."""
    check_modulus(r)
    if r ** (2 * g) > bound:
        raise SpinError(f"r^(2g) = {r ** (2 * g)} exceeds enumeration bound {bound}")
    for values in product(range(r), repeat=2 * g):
        yield SpinStructure(g, r, values)


def parity_histogram(g, r, bound=DEFAULT_ENUMERATION_BOUND):
    """Totals and, for even r, the even/odd split of all structures."""
    total = 0
    counts = {Parity.EVEN: 0, Parity.ODD: 0}
    for phi in enumerate_structures(g, r, bound):
        total += 1
        if r % 2 == 0:
            counts[arf(phi)] += 1
    if r % 2:
        return {"total": total}
    return {"total": total, "even": counts[Parity.EVEN], "odd": counts[Parity.ODD]}


def reduce_structure(phi, s):
    """Reduce mod a divisor s of r; evaluation commutes with reduction."""
    check_modulus(s)
    if phi.r % s:
        raise SpinError(f"{s} does not divide the modulus {phi.r}")
    return SpinStructure(phi.g, s, tuple(v % s for v in phi.basis_values))


def twist_stabilizes(phi, c, k=1):
    """Whether T_c^k fixes phi.

    For primitive base the twist moves some class by a unit multiple of
    c, so the condition is exactly k * phi(c) = 0 mod r.
    """
    if not is_primitive(c.base):
        raise SpinError("twist_stabilizes requires a primitive base class")
    return (k * evaluate(phi, c)) % phi.r == 0


def from_vanishing(lifts):
    """All phi with phi(lift) = 0 for each given lift, as an affine set.

    Returns a linalg.AffineSolutionSet over Z/rZ in the basis-value
    coordinates (possibly empty: None).
    """
    lifts = list(lifts)
    if not lifts:
        raise SpinError("from_vanishing needs at least one lift")
    g, r = lifts[0].g, lifts[0].r
    for c in lifts[1:]:
        if c.g != g or c.r != r:
            raise MismatchError("lifts live over different (g, r)")
    rows = [list(c.base.coords) for c in lifts]
    rhs = [(-c.zeta) % r for c in lifts]
    return linalg.solve_mod(rows, rhs, r)


def structure_from_solution(g, r, values):
    return SpinStructure(g, r, tuple(values))


def unique_vanishing_structure(lifts):
    """The unique phi vanishing on the lifts; SpinError if not unique."""
    lifts = list(lifts)
    sols = from_vanishing(lifts)
    if sols is None:
        raise SpinError("no spin structure vanishes on the given lifts")
    if not sols.is_unique:
        raise SpinError(f"stabilized structure is not unique ({sols.count} solutions)")
    g, r = lifts[0].g, lifts[0].r
    return structure_from_solution(g, r, sols.particular)


def pullback(phi, m):
    """phi o m on base classes, offsets untouched: new values s'_i = phi(m e_i).

    The left action of a mapping class with matrix M is phi o M^{-1};
    callers holding M itself can use pullback directly whenever they
    range over a set closed under inversion.
    """
    values = []
    for i in range(2 * phi.g):
        e_i = BaseClass.basis_vector(phi.g, phi.r, i)
        img = m.apply(e_i)
        values.append(sum(s * v for s, v in zip(phi.basis_values, img.coords)) % phi.r)
    return SpinStructure(phi.g, phi.r, tuple(values))


def curve_value_function(phi):
    """The mod-2 homological curve-value map v -> phi(embedded curve in v).

    Only meaningful for r = 2, where the value of phi on an embedded
    curve depends on the homology class alone.  The associated quadratic
    form is q(v) = phi(v-curve) + 1 with q(e_i) = s_i + 1 and
    q(x + y) = q(x) + q(y) + iota(x, y).
    """
    if phi.r != 2:
        raise SpinError("curve values are homological only for r = 2")
    s = phi.basis_values
    g = phi.g

    def value(coords):
        q = 0
        for i, v in enumerate(coords):
            if v % 2:
                q += s[i] + 1
        for i in range(g):
            q += coords[2 * i] * coords[2 * i + 1]
        return (q + 1) % 2

    return value


def transport_mod2(phi, m):
    """The symplectic action on mod-2 structures, via curve values.

    A mapping class with matrix M carries the curve of class v to a
    curve of class M v, so the transported structure has curve-value
    function Phi' = Phi o M^{-1}.  Curve values are quadratic in the
    class, hence basis values do NOT transform linearly; this computes
    phi o M (new basis value at e_i is the curve value at M e_i), which
    ranges over the same orbits whenever the matrix set is closed under
    inversion.
    """
    if phi.r != 2:
        raise SpinError("the homological transport needs r = 2")
    value = curve_value_function(phi)
    values = []
    for i in range(2 * phi.g):
        img = m.apply(BaseClass.basis_vector(phi.g, 2, i))
        values.append(value(img.coords))
    return SpinStructure(phi.g, 2, tuple(values))


def transvection_action_on_structures(c, k, structures):
    """Images of an iterable of structures under T_c^k (lifted twist).

    (T.phi)(x) = phi(T^{-1} x); in basis values this is the affine map
    s -> s - k phi(c-lift) w(c) with w(c)_i = iota(e_i, c.base).
    """
    g, r = c.g, c.r
    w = [intersection_form(BaseClass.basis_vector(g, r, i), c.base) for i in range(2 * g)]
    out = []
    for phi in structures:
        val = evaluate(phi, c)
        shift = (k * val) % r
        values = tuple((s - shift * wi) % r for s, wi in zip(phi.basis_values, w))
        out.append(SpinStructure(g, r, values))
    return out
