"""Exact orbifold invariants for torsion quotients of parabolic moduli.

The moduli space of full-flag parabolic bundles (rank r, genus g, s marked
points) carries an action of the r-torsion subgroup of the Jacobian,
isomorphic to (Z/r)^{2g}.  This package computes, in exact arithmetic,
the combinatorial and cohomological data attached to that action:

* the order census of the acting group (`count_elements_of_order`),
* fixed-locus component structure per torsion element
  (`fixed_locus_components`, `compute_orbit_section`),
* degree-shift numbers and normal-bundle eigenvalue multiplicities
  (`degree_shift`, `eigenvalue_multiplicities`),
* Chen-Ruan graded dimensions and the orbifold Euler characteristic
  (`chen_ruan_table`, `orbifold_euler`),
* vanishing criteria for orbifold products and pairings
  (`product_support`, `pairing_support`, `intersection_support`),
* a flag-compatible eigenbasis extractor (`flag_compatible_eigenbasis`),
* independent brute-force oracles for all counting claims (`parorb.oracles`).

All rationals are `fractions.Fraction`; no floats appear anywhere.
"""

from .arith import divisors, format_rational, is_squarefree, mobius, parse_rational
from .chenruan import (
    BettiProvider,
    BettiTable,
    EulerReport,
    PairingSupport,
    PoincareSeries,
    ProductSupport,
    RationalGradedDimension,
    SectorReport,
    chen_ruan_table,
    chen_ruan_twisted_part,
    euler_vanishing_certificate,
    load_betti_tables,
    orbifold_euler,
    pairing_support,
    product_support,
    prym_poincare,
    small_rank_poincare,
    twisted_sector,
)
from .cli import RunConfig, main, run
from .eigenflag import FlaggedOperator, flag_compatible_eigenbasis
from .errors import (
    CapabilityMissing,
    FlagNotFull,
    FlagNotPreserved,
    GenusTooSmall,
    GuardrailExceeded,
    IdentityElement,
    IndexOutOfRange,
    ModeMismatch,
    ModulusMismatch,
    NotADivisor,
    NotDiagonalizable,
    ParorbError,
    ParseError,
    SpecError,
    TableMissing,
    WeightCountMismatch,
    WeightOutOfRange,
    WeightsNotStrictlyIncreasing,
)
from .fixed_loci import (
    ComponentReport,
    IntersectionSupport,
    fixed_locus_components,
    intersection_support,
)
from .model import (
    CapabilityFlags,
    ModuliSpec,
    load_spec,
    moduli_dimension,
    spec_to_mapping,
    validate_moduli_spec,
)
from .partitions import (
    OrbitSection,
    PointPartition,
    WeightPartition,
    compute_orbit_section,
    count_partitions,
    enumerate_partitions,
    galois_rotate,
    induced_weights,
    orbit_canonical,
)
from .shifts import (
    DegreeShift,
    EigenvalueMultiplicityTable,
    degree_shift,
    dominance_count,
    eigenvalue_multiplicities,
    fixed_component_dimension,
    total_codimension,
)
from .torsion import (
    DetTwist,
    SpectralCoverData,
    TorsionElement,
    canonical_element_of_order,
    count_elements_of_order,
    cyclic_subgroup_elements,
    cyclic_subgroup_equal,
    element_order,
    pushforward_det_twist,
    spectral_cover_data,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProvider",
    "BettiTable",
    "CapabilityFlags",
    "CapabilityMissing",
    "ComponentReport",
    "DegreeShift",
    "DetTwist",
    "EigenvalueMultiplicityTable",
    "EulerReport",
    "FlagNotFull",
    "FlagNotPreserved",
    "FlaggedOperator",
    "GenusTooSmall",
    "GuardrailExceeded",
    "IdentityElement",
    "IndexOutOfRange",
    "IntersectionSupport",
    "ModeMismatch",
    "ModuliSpec",
    "ModulusMismatch",
    "NotADivisor",
    "NotDiagonalizable",
    "OrbitSection",
    "PairingSupport",
    "ParorbError",
    "ParseError",
    "PoincareSeries",
    "PointPartition",
    "ProductSupport",
    "RationalGradedDimension",
    "RunConfig",
    "SectorReport",
    "SpecError",
    "SpectralCoverData",
    "TableMissing",
    "TorsionElement",
    "WeightCountMismatch",
    "WeightOutOfRange",
    "WeightPartition",
    "WeightsNotStrictlyIncreasing",
    "canonical_element_of_order",
    "chen_ruan_table",
    "chen_ruan_twisted_part",
    "compute_orbit_section",
    "count_elements_of_order",
    "count_partitions",
    "cyclic_subgroup_elements",
    "cyclic_subgroup_equal",
    "degree_shift",
    "divisors",
    "dominance_count",
    "element_order",
    "enumerate_partitions",
    "euler_vanishing_certificate",
    "fixed_component_dimension",
    "fixed_locus_components",
    "flag_compatible_eigenbasis",
    "format_rational",
    "galois_rotate",
    "induced_weights",
    "intersection_support",
    "is_squarefree",
    "load_betti_tables",
    "load_spec",
    "main",
    "mobius",
    "moduli_dimension",
    "orbifold_euler",
    "orbit_canonical",
    "pairing_support",
    "parse_rational",
    "product_support",
    "prym_poincare",
    "pushforward_det_twist",
    "run",
    "small_rank_poincare",
    "spec_to_mapping",
    "spectral_cover_data",
    "total_codimension",
    "twisted_sector",
    "validate_moduli_spec",
]
