"""Component structure of torsion fixed loci and the intersection-support test.

The fixed locus of a non-identity torsion element of order m breaks into one
piece per weight partition; each piece contributes m connected components,
and the count of partitions is |P(alpha)| = count_partitions(r, m, s).  A
distinguished order-m subgroup permutes the m components of each piece
freely and transitively (this needs squarefree rank, which gives
gcd(l, m) = 1), so the quotient has |P(alpha)| / m component classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arith import is_prime
from .errors import IdentityElement, ModulusMismatch
from .model import ModuliSpec
from .partitions import count_partitions
from .torsion import TorsionElement, cyclic_subgroup_equal, element_order


@dataclass(frozen=True)
class ComponentReport:
    """Component counts of one fixed locus and of its quotient.

    gamma_classes and free_transitive_subgroup_order are None when the rank
    is not squarefree: the quotient statement needs gcd(l, m) = 1, so the
    report withholds those fields rather than guessing.
    """

    eta_order: int
    partition_count: int
    components_per_partition: int
    total_components: int
    gamma_classes: Optional[int]
    free_transitive_subgroup_order: Optional[int]

    def to_mapping(self) -> dict:
        return {
            "eta_order": self.eta_order,
            "partition_count": self.partition_count,
            "components_per_partition": self.components_per_partition,
            "total_components": self.total_components,
            "gamma_classes": self.gamma_classes,
            "free_transitive_subgroup_order": self.free_transitive_subgroup_order,
        }


def fixed_locus_components(spec: ModuliSpec, eta: TorsionElement) -> ComponentReport:
    """Count the components of the fixed locus of eta and of its quotient.

    The count is mode-agnostic (the Higgs flag plays no role) and depends on
    eta only through its order m: the fixed locus has one component per
    weight partition (|P(alpha)| in total); the cover-side space attached to
    one partition has m components, permuted freely and transitively by a
    distinguished order-m subgroup; and the quotient of the fixed locus has
    |P(alpha)|/m component classes (rotation orbits on partitions).

    >>> from fractions import Fraction as F
    >>> spec = ModuliSpec(genus=3, rank=2, degree=1,
    ...                   weights=((F(1, 4), F(3, 4)),))
    >>> fixed_locus_components(spec, TorsionElement(2, (1, 0, 0, 0, 0, 0))).total_components
    2
    """
    if eta.modulus != spec.rank:
        raise ModulusMismatch(
            "torsion modulus %d does not match rank %d" % (eta.modulus, spec.rank)
        )
    if eta.is_identity:
        raise IdentityElement(
            "identity fixes everything; use the untwisted sector path"
        )
    m = element_order(eta)
    partition_count = count_partitions(spec.rank, m, spec.num_points)
    if spec.capabilities.squarefree_rank:
        gamma_classes: Optional[int] = partition_count // m
        subgroup_order: Optional[int] = m
    else:
        gamma_classes = None
        subgroup_order = None
    return ComponentReport(
        eta_order=m,
        partition_count=partition_count,
        components_per_partition=m,
        total_components=partition_count,
        gamma_classes=gamma_classes,
        free_transitive_subgroup_order=subgroup_order,
    )


class IntersectionSupport(enum.Enum):
    FORCED_EMPTY = "forced_empty"
    POSSIBLY_NONEMPTY = "possibly_nonempty"


def _member_of_cyclic(candidate: TorsionElement, generator: TorsionElement) -> bool:
    return any(
        generator.scale(k) == candidate for k in range(element_order(generator))
    )


def intersection_support(
    eta: TorsionElement, tau: TorsionElement
) -> IntersectionSupport:
    """Can the fixed loci of eta and tau meet?

    ForcedEmpty when both have the same order but generate different cyclic
    subgroups; for a prime modulus additionally whenever tau lies outside
    the subgroup generated by eta.  Everything else is PossiblyNonempty (no
    claim is made for unequal orders).  Symmetric in its arguments.
    """
    if eta.modulus != tau.modulus:
        raise ModulusMismatch(
            "moduli differ: %d vs %d" % (eta.modulus, tau.modulus)
        )
    if eta.is_identity or tau.is_identity:
        raise IdentityElement("intersection test needs non-identity elements")
    if element_order(eta) == element_order(tau) and not cyclic_subgroup_equal(eta, tau):
        return IntersectionSupport.FORCED_EMPTY
    if is_prime(eta.modulus) and not _member_of_cyclic(tau, eta):
        # prime modulus: membership is symmetric (both subgroups have prime
        # order), so this branch preserves symmetry of the classification
        return IntersectionSupport.FORCED_EMPTY
    return IntersectionSupport.POSSIBLY_NONEMPTY
