"""Builders for the standard families of freely acting isometry groups.

Sides: `side="left"` places the named group in S^3 x 1 (acting by left
multiplication), `side="right"` in 1 x S^3.  Product builders put the
coprime cyclic factor on the opposite side.

Diagonal families (the index-2 and index-3 cases):

* diagonal_q(m, n, k): the subgroup generated by (zeta_{2^k m}, j) and
  (1, zeta_{2n}) together with -(1,1); the circle factor has order 2^k m
  and couples to Q_{4n} through its mod-2 character.  Freeness forces
  k >= 3 and odd n; |G| = 2^k m n and the projection index is exactly 2.
* diagonal_t(m, k): generated by (zeta_{3^k m}, omega), (1, i), (1, j)
  with omega = (1+i+j+k)/2; the circle factor has order 3^k m and couples
  to the binary tetrahedral group through its mod-3 character.  Freeness
  forces k >= 2; |G| = 8 * 3^k * m and the projection index is exactly 3.

Every builder verifies the expected order and projection index of what it
closed, so a bad generator recipe fails loudly rather than silently
producing a different family.
"""

from dataclasses import dataclass, field
from math import gcd

from .errors import ConstraintViolated
from .quaternions import (
    hurwitz_unit,
    i_unit,
    icosian_generator,
    j_unit,
    one,
    root_of_unity,
)
from .spingroups import DEFAULT_CAP, SpinPair, closure


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def _require(cond, message):
    if not cond:
        raise ConstraintViolated(message)


def _sided(q, conductor, side):
    if side == "left":
        return SpinPair(q, one(conductor))
    if side == "right":
        return SpinPair(one(conductor), q)
    raise ConstraintViolated("side must be 'left' or 'right'")


def _other(side):
    return "right" if side == "left" else "left"


def _check_built(group, order, index=None, name=""):
    assert group.order == order, f"{name}: got |G|={group.order}, expected {order}"
    if index is not None:
        pl = len(group.project("left").elements)
        pr = len(group.project("right").elements)
        d = pl * pr // len(group)
        assert d == index, f"{name}: projection index {d}, expected {index}"
    return group


def _check_cyclic(n):
    _require(n >= 1, "n must be a positive integer")


def _check_quaternionic(n, m):
    _require(n >= 2, "n must be at least 2 (Q_4 is the cyclic group C_4)")
    _require(m >= 1, "m must be a positive integer")
    _require(gcd(m, 4 * n) == 1, "cyclic order m must be coprime to |Q_4n| = 4n")


def _check_polyhedral(m, order, letter):
    _require(m >= 1, "m must be a positive integer")
    _require(gcd(m, order) == 1,
             f"cyclic order m must be coprime to |{letter}| = {order}")


def _check_diagonal_q(m, n, k):
    _require(m >= 1 and m % 2 == 1, "m must be odd")
    _require(n >= 3 and n % 2 == 1,
             "n must be odd and at least 3 (even n collapses to the plain "
             "product family or fails to act freely)")
    _require(gcd(m, n) == 1, "n and m must be relatively prime")
    _require(k >= 3, "k must be at least 3 (the coupled cyclic factor needs "
                     "2-part at least 8 to act freely)")


def _check_diagonal_t(m, k):
    _require(m >= 1 and m % 2 == 1, "m must be odd")
    _require(gcd(m, 3) == 1, "m must be coprime to 3 (fold extra 3s into k)")
    _require(k >= 2, "k must be at least 2 (the k = 1 coupling does not act "
                     "freely; use the plain binary tetrahedral family)")


def cyclic(n, side="left", cap=DEFAULT_CAP):
    """Cyclic group of order n generated by a rotation zeta_n."""
    _check_cyclic(n)
    N = _lcm(4, n)
    grp = closure([_sided(root_of_unity(n, N), N, side)], conductor=N, cap=cap)
    return _check_built(grp, n, name=f"Cyclic({n})")


def quaternionic(n, side="left", m=1, cap=DEFAULT_CAP):
    """Q_4n (order 4n), optionally times a coprime cyclic factor of order m
    on the opposite side."""
    _check_quaternionic(n, m)
    N = _lcm(4, 2 * n, m)
    gens = [
        _sided(root_of_unity(2 * n, N), N, side),
        _sided(j_unit(N), N, side),
    ]
    if m > 1:
        gens.append(_sided(root_of_unity(m, N), N, _other(side)))
    grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, 4 * n * m, index=1, name=f"Quaternionic({n})xC{m}")


def binary_tetrahedral(side="left", m=1, cap=DEFAULT_CAP):
    """2T (order 24), optionally times a coprime cyclic factor of order m."""
    _check_polyhedral(m, 24, "T")
    N = _lcm(4, m)
    gens = [
        _sided(i_unit(N), N, side),
        _sided(j_unit(N), N, side),
        _sided(hurwitz_unit(N), N, side),
    ]
    if m > 1:
        gens.append(_sided(root_of_unity(m, N), N, _other(side)))
    grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, 24 * m, index=1, name=f"BinT x C{m}")


def binary_octahedral(side="left", m=1, cap=DEFAULT_CAP):
    """2O (order 48) = 2T extended by zeta_8 = (1+i)/sqrt(2)."""
    _check_polyhedral(m, 48, "O")
    N = _lcm(8, m)
    gens = [
        _sided(i_unit(N), N, side),
        _sided(j_unit(N), N, side),
        _sided(hurwitz_unit(N), N, side),
        _sided(root_of_unity(8, N), N, side),
    ]
    if m > 1:
        gens.append(_sided(root_of_unity(m, N), N, _other(side)))
    grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, 48 * m, index=1, name=f"BinO x C{m}")


def binary_icosahedral(side="left", m=1, cap=DEFAULT_CAP):
    """2I (order 120) from the Hurwitz unit and a golden-ratio icosian.

    The closure must have exactly 240 pairs; if the candidate generators
    ever fall short the builder retries with i adjoined.
    """
    _check_polyhedral(m, 120, "I")
    N = _lcm(20, m)
    gens = [
        _sided(hurwitz_unit(N), N, side),
        _sided(icosian_generator(N), N, side),
    ]
    if m > 1:
        gens.append(_sided(root_of_unity(m, N), N, _other(side)))
    grp = closure(gens, conductor=N, cap=cap)
    if grp.order != 120 * m:
        gens.insert(0, _sided(i_unit(N), N, side))
        grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, 120 * m, index=1, name=f"BinI x C{m}")


def product_with_cyclic(polyhedral, m, cap=DEFAULT_CAP):
    """Product of a polyhedral-family spec with a coprime cyclic factor."""
    return build_family(
        FamilySpec(polyhedral.family, n=polyhedral.n, m=m, side=polyhedral.side),
        cap=cap,
    )


def diagonal_q(m, n, k=3, cap=DEFAULT_CAP):
    """Index-2 diagonal family: C_{2^k m} coupled to Q_{4n}; |G| = 2^k m n."""
    _check_diagonal_q(m, n, k)
    c = (2 ** k) * m
    N = _lcm(4, c, 2 * n)
    gens = [
        SpinPair(root_of_unity(c, N), j_unit(N)),
        SpinPair(one(N), root_of_unity(2 * n, N)),
    ]
    grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, (2 ** k) * m * n, index=2, name=f"DiagonalQ({m},{n},k={k})")


def diagonal_t(m, k, cap=DEFAULT_CAP):
    """Index-3 diagonal family: C_{3^k m} coupled to 2T; |G| = 8 * 3^k * m."""
    _check_diagonal_t(m, k)
    c = (3 ** k) * m
    N = _lcm(4, c)
    gens = [
        SpinPair(root_of_unity(c, N), hurwitz_unit(N)),
        SpinPair(one(N), i_unit(N)),
        SpinPair(one(N), j_unit(N)),
    ]
    grp = closure(gens, conductor=N, cap=cap)
    return _check_built(grp, 8 * (3 ** k) * m, index=3, name=f"DiagonalT({m},k={k})")


# ---------------------------------------------------------------------------
# Uniform spec interface

FAMILIES = (
    "Cyclic",
    "Quaternionic",
    "BinT",
    "BinO",
    "BinI",
    "DiagonalQ",
    "DiagonalT",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    m: int = 1
    k: int = 0
    side: str = "left"

    def label(self):
        bits = [self.family]
        if self.family in ("Cyclic", "Quaternionic", "DiagonalQ"):
            bits.append(f"n={self.n}")
        if self.family != "Cyclic" and self.m != 1 or self.family in ("DiagonalQ", "DiagonalT"):
            bits.append(f"m={self.m}")
        if self.family in ("DiagonalQ", "DiagonalT"):
            bits.append(f"k={self.k}")
        if self.family not in ("DiagonalQ", "DiagonalT"):
            bits.append(self.side)
        return " ".join(bits)

    def to_json(self):
        out = {"family": self.family}
        if self.family in ("Cyclic", "Quaternionic", "DiagonalQ"):
            out["n"] = self.n
        if self.family != "Cyclic":
            out["m"] = self.m
        if self.family in ("DiagonalQ", "DiagonalT"):
            out["k"] = self.k
        else:
            out["side"] = self.side
        return out


def validate_spec(spec):
    """Run a spec's preconditions without building; raises ConstraintViolated."""
    f = spec.family
    if spec.family not in ("DiagonalQ", "DiagonalT") and spec.side not in ("left", "right"):
        raise ConstraintViolated("side must be 'left' or 'right'")
    if f == "Cyclic":
        _check_cyclic(spec.n)
    elif f == "Quaternionic":
        _check_quaternionic(spec.n, spec.m)
    elif f == "BinT":
        _check_polyhedral(spec.m, 24, "T")
    elif f == "BinO":
        _check_polyhedral(spec.m, 48, "O")
    elif f == "BinI":
        _check_polyhedral(spec.m, 120, "I")
    elif f == "DiagonalQ":
        _check_diagonal_q(spec.m, spec.n, spec.k or 3)
    elif f == "DiagonalT":
        _check_diagonal_t(spec.m, spec.k)
    else:
        raise ConstraintViolated(f"unknown family {f!r}")


def build_family(spec, cap=DEFAULT_CAP):
    f = spec.family
    if f == "Cyclic":
        return cyclic(spec.n, side=spec.side, cap=cap)
    if f == "Quaternionic":
        return quaternionic(spec.n, side=spec.side, m=spec.m, cap=cap)
    if f == "BinT":
        return binary_tetrahedral(side=spec.side, m=spec.m, cap=cap)
    if f == "BinO":
        return binary_octahedral(side=spec.side, m=spec.m, cap=cap)
    if f == "BinI":
        return binary_icosahedral(side=spec.side, m=spec.m, cap=cap)
    if f == "DiagonalQ":
        return diagonal_q(spec.m, spec.n, k=spec.k or 3, cap=cap)
    if f == "DiagonalT":
        return diagonal_t(spec.m, spec.k, cap=cap)
    raise ConstraintViolated(f"unknown family {f!r}")


def family_order(spec):
    """|G| the spec will produce, without building it."""
    f = spec.family
    if f == "Cyclic":
        return spec.n
    if f == "Quaternionic":
        return 4 * spec.n * spec.m
    if f == "BinT":
        return 24 * spec.m
    if f == "BinO":
        return 48 * spec.m
    if f == "BinI":
        return 120 * spec.m
    if f == "DiagonalQ":
        return (2 ** (spec.k or 3)) * spec.m * spec.n
    if f == "DiagonalT":
        return 8 * (3 ** spec.k) * spec.m
    raise ConstraintViolated(f"unknown family {f!r}")
