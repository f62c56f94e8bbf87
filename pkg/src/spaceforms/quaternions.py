"""Unit quaternions as exact complex pairs over a cyclotomic field.

A quaternion q = w + x*i + y*j + z*k is stored as q = w1 + j*w2 with
w1 = w + x*i and w2 = y - z*i, both in Q(zeta_N).  The multiplication rule

    (a + j*b)(c + j*d) = (a*c - conj(b)*d) + j*(conj(a)*d + b*c)

realizes k = i*j; the encoding is validated by the i*j = k unit test rather
than trusted.
"""

from fractions import Fraction

from .cyclotomic import (
    FieldElement,
    embed,
    field_from_json,
    field_to_json,
    sqrt5,
    zeta,
)
from .errors import ConductorMismatch, NotADivisor


class UnitQuaternion:
    __slots__ = ("w1", "w2", "_hash")

    def __init__(self, w1, w2, check=False):
        if w1.conductor != w2.conductor:
            raise ConductorMismatch("components have different conductors")
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)
        object.__setattr__(self, "_hash", hash((w1, w2)))
        if check and not self.norm_is_one():
            raise ValueError("not a unit quaternion")

    def __setattr__(self, *a):
        raise AttributeError("UnitQuaternion is immutable")

    @property
    def conductor(self):
        return self.w1.conductor

    def norm_squared(self):
        return self.w1 * self.w1.conjugate() + self.w2 * self.w2.conjugate()

    def norm_is_one(self):
        return self.norm_squared() == FieldElement.rational(self.conductor, 1)

    def __eq__(self, other):
        return (
            isinstance(other, UnitQuaternion)
            and self.w1 == other.w1
            and self.w2 == other.w2
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"UnitQuaternion(w1={self.w1!r}, w2={self.w2!r})"

    def __mul__(self, other):
        if other.conductor != self.conductor:
            raise ConductorMismatch("conductor mismatch in quaternion product")
        a, b = self.w1, self.w2
        c, d = other.w1, other.w2
        bz, dz = b.is_zero(), d.is_zero()
        if bz and dz:
            return UnitQuaternion(a * c, b)
        if bz:
            return UnitQuaternion(a * c, a.conjugate() * d)
        if dz:
            return UnitQuaternion(a * c, b * c)
        return UnitQuaternion(
            a * c - b.conjugate() * d, a.conjugate() * d + b * c
        )

    def conj(self):
        """Quaternion conjugate: the inverse for units."""
        return UnitQuaternion(self.w1.conjugate(), -self.w2)

    def __neg__(self):
        return UnitQuaternion(-self.w1, -self.w2)

    def real_part(self):
        """The coefficient of 1, i.e. (w1 + conj(w1)) / 2."""
        half = FieldElement.rational(self.conductor, 1, 2)
        return (self.w1 + self.w1.conjugate()) * half

    def trace(self):
        """w1 + conj(w1) = 2 * real_part; cheaper for equality tests."""
        return self.w1 + self.w1.conjugate()

    def is_one(self):
        N = self.conductor
        return self.w1 == FieldElement.rational(N, 1) and self.w2.is_zero()

    def is_minus_one(self):
        N = self.conductor
        return self.w1 == FieldElement.rational(N, -1) and self.w2.is_zero()

    def is_real(self):
        return self.w2.is_zero() and self.w1 == self.w1.conjugate()

    def in_circle_union(self):
        """Exact membership in S^1 u j S^1 (w2 = 0 or w1 = 0); these are the
        elements acting complex linearly or antilinearly by right translation."""
        return self.w2.is_zero() or self.w1.is_zero()

    def embed(self, target_conductor):
        return UnitQuaternion(
            embed(self.w1, target_conductor), embed(self.w2, target_conductor)
        )

    def complex_pair(self):
        """(w1, w2) as python complexes; see geometry for the coordinate use."""
        from .geometry import field_to_complex

        return field_to_complex(self.w1), field_to_complex(self.w2)


# ---------------------------------------------------------------------------
# Constructors

def one(conductor):
    return UnitQuaternion(
        FieldElement.rational(conductor, 1), FieldElement.rational(conductor, 0)
    )


def minus_one(conductor):
    return UnitQuaternion(
        FieldElement.rational(conductor, -1), FieldElement.rational(conductor, 0)
    )


def i_unit(conductor):
    return UnitQuaternion(zeta(conductor, conductor // 4) if conductor % 4 == 0 else _need4(conductor),
                          FieldElement.rational(conductor, 0))


def _need4(conductor):
    raise NotADivisor(f"i requires 4 | conductor, got {conductor}")


def j_unit(conductor):
    return UnitQuaternion(
        FieldElement.rational(conductor, 0), FieldElement.rational(conductor, 1)
    )


def k_unit(conductor):
    # k = i*j: w2 encodes y - z*i, so k has w2 = -i
    if conductor % 4 != 0:
        _need4(conductor)
    return UnitQuaternion(
        FieldElement.rational(conductor, 0), -zeta(conductor, conductor // 4)
    )


def from_components(conductor, w, x, y, z, check=True):
    """Build w + x*i + y*j + z*k from exact rational-or-field components."""

    def lift(v):
        if isinstance(v, FieldElement):
            return v
        f = Fraction(v)
        return FieldElement.rational(conductor, f.numerator, f.denominator)

    w, x, y, z = lift(w), lift(x), lift(y), lift(z)
    if any(v.conductor != conductor for v in (w, x, y, z)):
        raise ConductorMismatch("component conductor mismatch")
    if conductor % 4 != 0 and not (x.is_zero() and z.is_zero()):
        _need4(conductor)
    im = zeta(conductor, conductor // 4) if conductor % 4 == 0 else None
    w1 = w + x * im if im is not None else w
    w2 = y - z * im if im is not None else y
    return UnitQuaternion(w1, w2, check=check)


def root_of_unity(n, conductor):
    """The quaternion zeta_n (w2 = 0); multiplicative order exactly n."""
    if conductor % n != 0:
        raise NotADivisor(f"{n} does not divide conductor {conductor}")
    return UnitQuaternion(
        zeta(conductor, conductor // n), FieldElement.rational(conductor, 0)
    )


def hurwitz_unit(conductor):
    """omega = (1 + i + j + k) / 2, an order-6 Hurwitz unit."""
    h = Fraction(1, 2)
    return from_components(conductor, h, h, h, h, check=False)


def icosian_generator(conductor):
    """(tau + tau^-1 * i + j) / 2 with tau the golden ratio; order 10."""
    if conductor % 20 != 0:
        raise NotADivisor(f"icosians require 20 | conductor, got {conductor}")
    half = FieldElement.rational(conductor, 1, 2)
    one_f = FieldElement.rational(conductor, 1)
    tau = (one_f + sqrt5(conductor)) * half
    tau_inv = tau - one_f  # tau^-1 = tau - 1
    return from_components(
        conductor, tau * half, tau_inv * half, Fraction(1, 2), 0, check=False
    )


# ---------------------------------------------------------------------------
# Spec-surface helpers

def quat_mul(p, q):
    return p * q


def quat_conj(q):
    return q.conj()


def real_part(q):
    return q.real_part()


def quat_to_json(q):
    return {"w1": field_to_json(q.w1), "w2": field_to_json(q.w2)}


def quat_from_json(obj):
    return UnitQuaternion(field_from_json(obj["w1"]), field_from_json(obj["w2"]))
