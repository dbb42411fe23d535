"""Finite commutative rings, their multiplicative monoids, and automorphisms
of products of such monoids."""

from .errors import *  # noqa: F401,F403
from .homs import (MonoidHom, Prop21Verdict, canonical_homs, compose, enumerate_automorphisms,
                   enumerate_homs, identity_hom, prop21_classify, trivial_hom)
from .matrix import (HomMatrix, ProductContext, identity_matrix, inverse_pair_check,
                     inverse_relations, make_matrix, odot, psi, psi_inv, unit_factor_check)
from .monoid import (FiniteMonoid, SubsetHandle, closure, commuting_images, generating_set,
                     mul_monoid_of, product_monoid, units_center_absorbing)
from .rigidity import (IndexAssignment, RigidityReport, find_nondiagonal_automorphisms,
                       locate_zero_indices, offdiagonal_report, verify_decomposition)
from .ring import (ElementProfile, FiniteRing, RingProfile, classify_element, construct_ring,
                   nilradical, ring_profile)
from .spec import PolyQuotient, Product, Zmod, format_spec, parse_spec

__version__ = "0.1.0"
