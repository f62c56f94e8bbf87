"""spaceforms: exact finite isometry groups of the 3-sphere, their Hopf
classification, equivariant framing invariants, and contact-structure
existence verdicts, with a floating-point verification layer."""

from .abelian import AbelianGroup
from .classify import ClassificationResult, GroupTag, classify, recognize, validate_constraints
from .cyclotomic import FieldElement, cyclotomic_polynomial, embed, field_arith, zeta
from .families import (
    FamilySpec,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    build_family,
    cyclic,
    diagonal_q,
    diagonal_t,
    product_with_cyclic,
    quaternionic,
    validate_spec,
)
from .manifest import Manifest, parse_manifest
from .quaternions import UnitQuaternion, quat_conj, quat_mul, real_part, root_of_unity
from .spingroups import (
    SpinGroup,
    SpinPair,
    abelianization,
    act,
    closure,
    element_order,
    has_element_of_order,
    is_free,
    project,
    swap_orientation,
)
from .topology import (
    ContactReport,
    FramingVerdict,
    both_orientations_possible,
    contact_verdicts,
    euler_trivial_verdict,
    framing_invariant,
    framing_modulus,
    h1_invariants,
)

__version__ = "0.1.0"
