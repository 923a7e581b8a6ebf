"""Circle weight vectors: normalization, orbit-type strata, Hilbert series,
Laurent coefficients and the single-vector obstruction predicates."""
from .hilbert import (
    GammaData,
    count_invariant_monomials,
    gamma_closed_form_n3,
    gamma_extracted,
    hilb_off_rational,
    hilb_off_series,
    hilb_on_rational,
    hilb_on_series,
    ray_denominator,
)
from .predicates import (
    FLAGS,
    PredicateRecord,
    codim1_chain_order,
    is_rational_homology_manifold,
    predicates,
    ratio_allowed,
)
from .strata import OrbitTypeNode, codim1_nodes, orbit_type_lattice, supported_by_audit
from .weights import NormalizationLog, WeightVector, gcd_all, is_normalized, normalize, shell_support

__all__ = [
    "FLAGS",
    "GammaData",
    "NormalizationLog",
    "OrbitTypeNode",
    "PredicateRecord",
    "WeightVector",
    "codim1_chain_order",
    "codim1_nodes",
    "count_invariant_monomials",
    "gamma_closed_form_n3",
    "gamma_extracted",
    "gcd_all",
    "hilb_off_rational",
    "hilb_off_series",
    "hilb_on_rational",
    "hilb_on_series",
    "is_normalized",
    "is_rational_homology_manifold",
    "normalize",
    "orbit_type_lattice",
    "predicates",
    "ratio_allowed",
    "ray_denominator",
    "shell_support",
    "supported_by_audit",
]
