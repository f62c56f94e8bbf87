"""Hopf-style classification of freely acting groups of S^3 isometries.

Instead of searching for a conjugator into a normal form, classification is
read off conjugation-invariant data: the isomorphism types of the two factor
projections, their orders, and the projection index

    d = |proj_left| * |proj_right| / |Gtilde|  in {1, 2, 3}.

Cases and reported parameters:

  Cy  cyclic, n = |G|
  Qt  Q_4n times coprime cyclic C_m          (d = 1; cyclic projection C_2m)
  T   2T times coprime cyclic C_m, k = 1     (d = 1)
  O   2O times coprime cyclic C_m            (d = 1)
  I   2I times coprime cyclic C_m            (d = 1)
  Q2  index-2 diagonal: cyclic projection C_{2^k m} coupled to Q_4n  (d = 2)
  T2  index-3 diagonal: cyclic projection C_{2*3^k m} coupled to 2T  (d = 3)

`swapped` is True when the cyclic-left normal form required exchanging the
factors (e.g. a left-acting polyhedral group).
"""

from dataclasses import dataclass
from math import gcd

from .errors import NotElliptic, NotFreeAction, Unrecognized


@dataclass(frozen=True)
class GroupTag:
    kind: str  # Trivial | Cyclic | Quaternionic | BinaryTetrahedral | ...
    n: int = 0

    @property
    def is_abelian(self):
        return self.kind in ("Trivial", "Cyclic")

    @property
    def is_binary_polyhedral(self):
        return self.kind in (
            "BinaryTetrahedral",
            "BinaryOctahedral",
            "BinaryIcosahedral",
        )

    def __str__(self):
        if self.kind == "Cyclic":
            return f"Cyclic({self.n})"
        if self.kind == "Quaternionic":
            return f"Quaternionic({self.n})"
        return self.kind


def recognize(factor_group):
    """Isomorphism type of a one-factor subgroup of the unit quaternions.

    The input is a SpinGroup whose pairs have one component equal to 1 (a
    projection); the tag describes the set of quaternions itself, +-1
    included, so e.g. the binary tetrahedral projection has 24 elements.
    Order collisions (24, 48, 120) are separated by the abelianization:
    Q_4n -> Z/4 (n odd) or Z/2 x Z/2 (n even), 2T -> Z/3, 2O -> Z/2,
    2I -> trivial.
    """
    elems = factor_group.elements
    on_left = all(e.right.is_one() for e in elems)
    on_right = all(e.left.is_one() for e in elems)
    if not (on_left or on_right):
        raise Unrecognized("input is not restricted to one factor")
    n = len(elems)
    if n <= 2:
        return GroupTag("Trivial")
    if factor_group.is_abelian():
        # a finite abelian subgroup of S^3 lies in a circle, hence is cyclic
        if factor_group.full_abelian_invariants() != (n,):
            raise Unrecognized(f"abelian but not cyclic of order {n}")
        return GroupTag("Cyclic", n)
    ab = factor_group.full_abelian_invariants()
    if ab == (3,) and n == 24:
        return GroupTag("BinaryTetrahedral")
    if ab == (2,) and n == 48:
        return GroupTag("BinaryOctahedral")
    if ab == () and n == 120:
        return GroupTag("BinaryIcosahedral")
    if ab == (4,) and n % 4 == 0 and (n // 4) % 2 == 1:
        return GroupTag("Quaternionic", n // 4)
    if ab == (2, 2) and n % 4 == 0 and (n // 4) % 2 == 0:
        return GroupTag("Quaternionic", n // 4)
    raise Unrecognized(f"order {n} with abelianization {ab}")


@dataclass(frozen=True)
class ClassificationResult:
    case: str  # Cy | Qt | T | O | I | Q2 | T2
    n: int
    m: int
    k: int
    swapped: bool
    left_tag: GroupTag
    right_tag: GroupTag
    index: int

    def to_json(self):
        return {
            "case": self.case,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "swapped": self.swapped,
            "index": self.index,
            "left": str(self.left_tag),
            "right": str(self.right_tag),
        }


def _split_power(c, p):
    """c = p^k * m with gcd(m, p) = 1; returns (k, m)."""
    k = 0
    while c % p == 0:
        c //= p
        k += 1
    return k, c


def _match_case(cyclic_order, poly_tag, index):
    """Case and parameters from the cyclic projection order, the nonabelian
    projection tag, and the measured projection index."""
    if poly_tag.kind == "Quaternionic":
        if index == 1:
            return "Qt", poly_tag.n, cyclic_order // 2, 0
        if index == 2:
            k, m = _split_power(cyclic_order, 2)
            return "Q2", poly_tag.n, m, k
    elif poly_tag.kind == "BinaryTetrahedral":
        if index == 1:
            return "T", 0, cyclic_order // 2, 1
        if index == 3:
            k, m = _split_power(cyclic_order // 2, 3)
            return "T2", 0, m, k
    elif poly_tag.kind == "BinaryOctahedral":
        if index == 1:
            return "O", 0, cyclic_order // 2, 0
    elif poly_tag.kind == "BinaryIcosahedral":
        if index == 1:
            return "I", 0, cyclic_order // 2, 0
    raise NotElliptic(
        f"no case matches: cyclic order {cyclic_order}, {poly_tag}, index {index}"
    )


def classify(group):
    """Classification of a free pm-closed SpinGroup; raises NotFreeAction or
    NotElliptic."""
    if group._cls_cache is not None:
        return group._cls_cache
    witness = group.fixed_point_witness()
    if witness is not None:
        raise NotFreeAction("group does not act freely", witness=witness)
    proj_l = group.project("left")
    proj_r = group.project("right")
    left_tag = recognize(proj_l)
    right_tag = recognize(proj_r)
    index = len(proj_l.elements) * len(proj_r.elements) // len(group)

    if left_tag.is_abelian and right_tag.is_abelian:
        if group.is_cyclic():
            res = ClassificationResult(
                "Cy", group.order, 0, 0, False, left_tag, right_tag, index
            )
            group._cls_cache = res
            return res
        # an abelian noncyclic group cannot act freely on S^3
        raise NotElliptic("both projections abelian but the group is not cyclic")
    if not left_tag.is_abelian and not right_tag.is_abelian:
        raise NotElliptic("both projections nonabelian: impossible for free actions")

    swapped = not left_tag.is_abelian
    cyclic_tag, poly_tag = (
        (right_tag, left_tag) if swapped else (left_tag, right_tag)
    )
    cyclic_order = 2 if cyclic_tag.kind == "Trivial" else cyclic_tag.n
    case, n, m, k = _match_case(cyclic_order, poly_tag, index)
    res = ClassificationResult(
        case, n, m, k, swapped, left_tag, right_tag, index
    )
    group._cls_cache = res
    return res


def validate_constraints(res):
    """Violated constraints of the matched case; empty when valid."""
    out = []
    if res.case == "Cy":
        return out
    if res.case == "Qt":
        if gcd(res.m, 4 * res.n) != 1:
            out.append(f"cyclic order must be coprime to |Q_4n| = {4 * res.n}")
    elif res.case == "T":
        if gcd(res.m, 24) != 1:
            out.append("cyclic order must be coprime to |T| = 24")
    elif res.case == "O":
        if gcd(res.m, 48) != 1:
            out.append("cyclic order must be coprime to |O| = 48")
    elif res.case == "I":
        if gcd(res.m, 120) != 1:
            out.append("cyclic order must be coprime to |I| = 120")
    elif res.case == "Q2":
        if res.m % 2 == 0:
            out.append("m must be odd")
        if res.n % 2 == 0:
            out.append("n must be odd")
        if gcd(res.m, res.n) != 1:
            out.append("n and m must be relatively prime")
        if res.k < 3:
            out.append("k must be at least 3")
    elif res.case == "T2":
        if res.m % 2 == 0:
            out.append("m must be odd")
        if res.k < 2:
            out.append("k must be at least 2")
    return out
