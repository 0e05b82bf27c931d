"""Exact-arithmetic toolkit for elliptic K3 fibrations and purely
non-symplectic order-8 automorphisms with all-rational fixed curves."""

from .automorphism import (
    BaseActionReport,
    MonomialAutomorphism,
    PointType,
    PreservationCertificate,
    TwoTorsionReport,
    base_action,
    check_preserves,
    form_multiplier,
    local_point_type,
    partner_type,
    riemann_hurwitz_genus,
    two_torsion_translate,
)
from .cyclotomic import Zeta8Element
from .enumerator import (
    EigenRankVector,
    FixedLocusDescriptor,
    FixedLocusProfile,
    InvolutionData,
    Order4Row,
    PointCounts,
    brute_force_classify,
    classify_order8,
    involution_fixed_locus,
    k_sigma2,
    lefschetz_check,
    ns_rank,
    power_invariants,
    rational_fix4_constraints,
)
from .kodaira import (
    FiberConfiguration,
    FiberEntry,
    FiberType,
    K3BudgetError,
    NON_MINIMAL,
    SMOOTH,
    WeierstrassModel,
    ZeroDiscriminantError,
    configuration,
    discriminant,
    fiber_type,
    shioda_tate_contribution,
)
from .polyring import (
    Place,
    RationalPolynomial,
    coprime_refinement,
    gcd,
    squarefree_decompose,
    vanishing_order,
)

__all__ = [
    "BaseActionReport",
    "EigenRankVector",
    "FiberConfiguration",
    "FiberEntry",
    "FiberType",
    "FixedLocusDescriptor",
    "FixedLocusProfile",
    "InvolutionData",
    "K3BudgetError",
    "MonomialAutomorphism",
    "NON_MINIMAL",
    "Order4Row",
    "Place",
    "PointCounts",
    "PointType",
    "PreservationCertificate",
    "RationalPolynomial",
    "SMOOTH",
    "TwoTorsionReport",
    "WeierstrassModel",
    "Zeta8Element",
    "ZeroDiscriminantError",
    "base_action",
    "brute_force_classify",
    "check_preserves",
    "classify_order8",
    "configuration",
    "coprime_refinement",
    "discriminant",
    "fiber_type",
    "form_multiplier",
    "gcd",
    "involution_fixed_locus",
    "k_sigma2",
    "lefschetz_check",
    "local_point_type",
    "ns_rank",
    "partner_type",
    "power_invariants",
    "rational_fix4_constraints",
    "riemann_hurwitz_genus",
    "shioda_tate_contribution",
    "squarefree_decompose",
    "two_torsion_translate",
    "vanishing_order",
]
__version__ = "0.1.0"
