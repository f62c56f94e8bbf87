"""Homological invariants and theorem-level verdicts for quotients S^3/G.

Verdict logic, with G acting through pairs (l, r): x -> l x conj(r).

* The standard contact planes are preserved (up to co-orientation) exactly by
  elements whose right component lies in S^1 u j S^1.  Cyclic and
  quaternionic subgroups of S^3 are conjugate into S^1 u j S^1; the binary
  polyhedral groups are not.  So the plus orientation admits a universally
  tight positive structure iff the right projection is not binary polyhedral;
  the minus orientation applies the same test to the component-swapped group.
* The equivariant framing class lives in Z/<G> with <G> = |G| when
  H_1(M; Z/2) = 0 and |G|/2 otherwise.  A purely left-acting group preserves
  the left-invariant framing (value 0); a purely right-acting group gives the
  right-invariant framing (value 1, via the degree-one comparison map).  No
  general algorithm is known for mixed groups: the value is Undetermined.
"""

from dataclasses import dataclass

from .classify import classify, recognize
from .errors import NotFreeAction


def _require_free(group):
    witness = group.fixed_point_witness()
    if witness is not None:
        raise NotFreeAction("group does not act freely", witness=witness)


def h1_invariants(group):
    """(H_1(M) as AbelianGroup, mod-2 rank, |H^2(M)| = |H_1(M)|)."""
    _require_free(group)
    h1 = group.abelianization()
    return h1, h1.mod2_rank, h1.order


def framing_modulus(group):
    """<G> = |G| if H_1(M; Z/2) vanishes, else |G|/2."""
    _require_free(group)
    h1 = group.abelianization()
    return group.order if h1.mod2_rank == 0 else group.order // 2


@dataclass(frozen=True)
class FramingVerdict:
    modulus: int
    value: int | None  # None = Undetermined
    provenance: str

    @property
    def determined(self):
        return self.value is not None

    def to_json(self):
        return {
            "modulus": self.modulus,
            "value": self.value,
            "provenance": self.provenance,
        }


def _projection_is_trivial(group, side):
    return len(group.project(side).elements) <= 2


def framing_invariant(group):
    """Equivariant framing class for the group as oriented."""
    _require_free(group)
    modulus = framing_modulus(group)
    if _projection_is_trivial(group, "right"):
        return FramingVerdict(
            modulus, 0 % modulus,
            "left-acting group preserves the left-invariant framing",
        )
    if _projection_is_trivial(group, "left"):
        return FramingVerdict(
            modulus, 1 % modulus,
            "right-acting group preserves the right-invariant framing; "
            "the comparison map S^3 -> SO(3) lifts with degree one",
        )
    return FramingVerdict(
        modulus, None, "mixed group: no one-sided invariant framing available"
    )


def euler_trivial_verdict(group):
    """Whether a co-orientable universally tight positive structure with
    trivial Euler class exists: Yes / No for noncyclic groups, PartialCyclic
    for lens spaces (full classification out of scope)."""
    _require_free(group)
    if group.is_cyclic():
        return "PartialCyclic"
    if _projection_is_trivial(group, "right"):
        return "Yes"
    return "No"


@dataclass(frozen=True)
class OrientationVerdict:
    exists: bool
    provenance: str

    def to_json(self):
        return {
            "verdict": "Exists" if self.exists else "NotExists",
            "provenance": self.provenance,
        }


def _orientation_verdict(group):
    tag = recognize(group.project("right"))
    if tag.is_binary_polyhedral:
        return OrientationVerdict(
            False,
            f"right projection {tag} is binary polyhedral: the equivariant "
            "framing obstruction rules out a universally tight positive "
            "structure",
        )
    return OrientationVerdict(
        True,
        f"right projection {tag} is conjugate into S^1 u j S^1: the standard "
        "contact structure descends to the quotient",
    )


@dataclass(frozen=True)
class ContactReport:
    group_order: int
    plus_orientation: OrientationVerdict
    minus_orientation: OrientationVerdict
    euler_trivial_coorientable: str  # Yes | No | PartialCyclic
    h1: object
    h1_mod2_rank: int
    h2_order: int
    coorientable_forced: bool
    order4_element_exists: bool
    framing_plus: FramingVerdict
    framing_minus: FramingVerdict

    def to_json(self):
        return {
            "group_order": self.group_order,
            "plus": self.plus_orientation.to_json(),
            "minus": self.minus_orientation.to_json(),
            "euler_trivial": self.euler_trivial_coorientable,
            "h1": self.h1.to_json(),
            "h1_mod2_rank": self.h1_mod2_rank,
            "h2_order": self.h2_order,
            "coorientable_forced": self.coorientable_forced,
            "order4_element_exists": self.order4_element_exists,
            "framing_plus": self.framing_plus.to_json(),
            "framing_minus": self.framing_minus.to_json(),
        }


def contact_verdicts(group):
    """Per-orientation existence verdicts plus the homological bookkeeping."""
    classify(group)  # raises NotFreeAction / NotElliptic on bad input
    swapped = group.swap_orientation()
    plus = _orientation_verdict(group)
    minus = _orientation_verdict(swapped)
    h1, mod2_rank, h2_order = h1_invariants(group)
    report = ContactReport(
        group_order=group.order,
        plus_orientation=plus,
        minus_orientation=minus,
        euler_trivial_coorientable=euler_trivial_verdict(group),
        h1=h1,
        h1_mod2_rank=mod2_rank,
        h2_order=h2_order,
        coorientable_forced=(mod2_rank == 0),
        order4_element_exists=(group.has_element_of_order(4) is not None),
        framing_plus=framing_invariant(group),
        framing_minus=framing_invariant(swapped),
    )
    assert plus.exists or minus.exists, "some orientation always admits one"
    return report


def both_orientations_possible(result):
    """Isomorphism-type-level verdict: both orientations carry universally
    tight positive structures exactly in the cyclic, product-quaternionic and
    index-2 diagonal cases."""
    return result.case in ("Cy", "Qt", "Q2")
