"""Twisted sectors, the rationally graded dimension table, Euler identity,
and the support rules for the orbifold pairing and product.

A twisted sector of a non-identity element of order m is assembled, one
rotation-orbit class of weight partitions at a time, as

    H^*(Prym) (x) H^*(small parabolic moduli on the cover)

shifted upward by twice the class's degree shift.  The Prym factor is a
complex torus, so every twisted sector has Euler characteristic zero and
the orbifold Euler characteristic equals the plain one — the certificate
records that identity divisor by divisor.

Betti tables for the small-rank factor (l > 1) are external inputs, keyed
by (genus, rank, points, chamber); the rank-1 factor is a point and is
built in.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Optional

from .arith import divisors, format_rational, is_prime
from .errors import IdentityElement, ModulusMismatch, ParseError, TableMissing
from .fixed_loci import fixed_locus_components
from .model import ModuliSpec, moduli_dimension
from .partitions import WeightPartition, compute_orbit_section
from .shifts import DegreeShift, degree_shift, _require_shift_hypotheses
from .torsion import (
    TorsionElement,
    canonical_element_of_order,
    count_elements_of_order,
    cyclic_subgroup_equal,
    element_order,
    spectral_cover_data,
)


# === graded carriers ========================================================

@dataclass(frozen=True)
class PoincareSeries:
    """Finitely supported integer grading: degree -> dimension (> 0 kept)."""

    coefficients: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cleaned = {}
        for degree, dim in self.coefficients:
            if degree < 0:
                raise ValueError("degrees must be non-negative, got %r" % (degree,))
            if dim < 0:
                raise ValueError("dimensions must be non-negative, got %r" % (dim,))
            if dim:
                cleaned[degree] = cleaned.get(degree, 0) + dim
        object.__setattr__(
            self, "coefficients", tuple(sorted(cleaned.items()))
        )

    @classmethod
    def from_list(cls, dims: Iterable[int]) -> "PoincareSeries":
        """Series from the dense coefficient list [b_0, b_1, ...]."""
        return cls(tuple((k, d) for k, d in enumerate(dims)))

    def coefficient(self, degree: int) -> int:
        for k, d in self.coefficients:
            if k == degree:
                return d
        return 0

    def to_list(self) -> list[int]:
        if not self.coefficients:
            return []
        top = self.coefficients[-1][0]
        dense = [0] * (top + 1)
        for k, d in self.coefficients:
            dense[k] = d
        return dense

    @property
    def top_degree(self) -> int:
        if not self.coefficients:
            raise ValueError("empty series has no top degree")
        return self.coefficients[-1][0]

    @property
    def total_dimension(self) -> int:
        return sum(d for _, d in self.coefficients)

    def euler_characteristic(self) -> int:
        """Evaluation at -1: the alternating sum of the coefficients."""
        return sum(d if k % 2 == 0 else -d for k, d in self.coefficients)

    def convolve(self, other: "PoincareSeries") -> "PoincareSeries":
        """Graded tensor product (Cauchy convolution of coefficients)."""
        acc: dict[int, int] = {}
        for k1, d1 in self.coefficients:
            for k2, d2 in other.coefficients:
                acc[k1 + k2] = acc.get(k1 + k2, 0) + d1 * d2
        return PoincareSeries(tuple(acc.items()))

    def is_palindromic(self) -> bool:
        """Symmetric about half the top degree (vacuously true when empty)."""
        if not self.coefficients:
            return True
        top = self.top_degree
        return all(self.coefficient(top - k) == d for k, d in self.coefficients)

    def shifted(self, offset: Fraction) -> "RationalGradedDimension":
        """Move every degree up by an exact rational offset."""
        offset = Fraction(offset)
        return RationalGradedDimension(
            tuple((Fraction(k) + offset, d) for k, d in self.coefficients)
        )


@dataclass(frozen=True)
class RationalGradedDimension:
    """Finitely supported rational grading: grade -> dimension (> 0 kept)."""

    entries: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        cleaned: dict[Fraction, int] = {}
        for grade, dim in self.entries:
            grade = Fraction(grade)
            if grade < 0:
                raise ValueError("grades must be non-negative, got %s" % (grade,))
            if dim < 0:
                raise ValueError("dimensions must be non-negative, got %r" % (dim,))
            if dim:
                cleaned[grade] = cleaned.get(grade, 0) + dim
        object.__setattr__(self, "entries", tuple(sorted(cleaned.items())))

    @classmethod
    def empty(cls) -> "RationalGradedDimension":
        return cls(())

    def dimension_at(self, grade) -> int:
        grade = Fraction(grade)
        for x, d in self.entries:
            if x == grade:
                return d
        return 0

    @property
    def total_dimension(self) -> int:
        return sum(d for _, d in self.entries)

    def add(self, other: "RationalGradedDimension") -> "RationalGradedDimension":
        return RationalGradedDimension(self.entries + other.entries)

    def scale(self, factor: int) -> "RationalGradedDimension":
        if factor < 0:
            raise ValueError("scaling factor must be non-negative")
        return RationalGradedDimension(
            tuple((x, factor * d) for x, d in self.entries)
        )

    def integer_rows(self) -> PoincareSeries:
        """The sub-table supported on integer grades, as a plain series."""
        return PoincareSeries(
            tuple(
                (int(x), d) for x, d in self.entries if x.denominator == 1
            )
        )

    def symmetric_about(self, center: Fraction) -> bool:
        center = Fraction(center)
        return all(self.dimension_at(2 * center - x) == d for x, d in self.entries)

    def to_rows(self) -> list[dict]:
        return [
            {"grade": format_rational(x), "dim": d} for x, d in self.entries
        ]


# === Betti-table provider ===================================================

@dataclass(frozen=True)
class BettiTable:
    """One externally supplied Betti series for a parabolic moduli space."""

    genus: int
    rank: int
    points: int
    chamber: str
    series: PoincareSeries

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if not self.series.coefficients:
            raise ValueError("series must be nonempty")

    @property
    def key(self) -> tuple[int, int, int, str]:
        return (self.genus, self.rank, self.points, self.chamber)

    @classmethod
    def from_mapping(cls, raw) -> "BettiTable":
        try:
            return cls(
                genus=raw["genus"],
                rank=raw["rank"],
                points=raw["points"],
                chamber=str(raw["chamber"]),
                series=PoincareSeries.from_list(list(raw["coefficients"])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad Betti table entry: %s" % (exc,)) from None


class BettiProvider:
    """Read-only lookup of Betti tables by (genus, rank, points, chamber).

    A lookup without an explicit chamber succeeds only when exactly one
    chamber is on file for the (genus, rank, points) triple — the provider
    never guesses between chambers and never interpolates.
    """

    def __init__(self, tables: Iterable[BettiTable] = ()):
        self._by_key: dict[tuple, BettiTable] = {}
        for table in tables:
            known = self._by_key.get(table.key)
            if known is not None and known.series != table.series:
                raise ParseError(
                    "conflicting Betti tables for key %r" % (table.key,)
                )
            self._by_key[table.key] = table

    def __len__(self) -> int:
        return len(self._by_key)

    def lookup(
        self, genus: int, rank: int, points: int, chamber: Optional[str] = None
    ) -> PoincareSeries:
        if chamber is not None:
            table = self._by_key.get((genus, rank, points, chamber))
            if table is None:
                raise TableMissing(
                    "no Betti table for (genus=%d, rank=%d, points=%d, "
                    "chamber=%r)" % (genus, rank, points, chamber)
                )
            return table.series
        matches = [
            table
            for table in self._by_key.values()
            if (table.genus, table.rank, table.points) == (genus, rank, points)
        ]
        if not matches:
            raise TableMissing(
                "no Betti table for (genus=%d, rank=%d, points=%d)"
                % (genus, rank, points)
            )
        if len(matches) > 1:
            raise TableMissing(
                "several chambers on file for (genus=%d, rank=%d, points=%d); "
                "pass an explicit chamber" % (genus, rank, points)
            )
        return matches[0].series


def load_betti_tables(path: str) -> list[BettiTable]:
    """Read a JSON array of {genus, rank, points, chamber, coefficients}."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise ParseError("cannot read Betti table file %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise ParseError(
            "malformed JSON in %s at line %d column %d: %s"
            % (path, exc.lineno, exc.colno, exc.msg)
        ) from None
    if not isinstance(raw, list):
        raise ParseError("Betti table file must hold a JSON array")
    return [BettiTable.from_mapping(entry) for entry in raw]


def _as_provider(provider) -> BettiProvider:
    if provider is None:
        return BettiProvider(())
    if isinstance(provider, BettiProvider):
        return provider
    return BettiProvider(provider)


# === sector assembly ========================================================

def prym_poincare(g: int, m: int) -> PoincareSeries:
    """Betti numbers C(2p, k) of the Prym torus, p = (m-1)(g-1).

    >>> prym_poincare(2, 2).to_list()
    [1, 2, 1]
    >>> prym_poincare(2, 1).to_list()
    [1]
    """
    if g < 2 or m < 1:
        raise ValueError("need g >= 2 and m >= 1")
    p = spectral_cover_data(g, m).prym_dimension
    return PoincareSeries.from_list([comb(2 * p, k) for k in range(2 * p + 1)])


def small_rank_poincare(
    provider, g_Y: int, l: int, points: int, chamber: Optional[str] = None
) -> PoincareSeries:
    """Betti series of the rank-l parabolic moduli on the cover.

    Rank 1 is built in (full flags on lines carry no data and the fixed
    determinant pins the bundle: a single point).  Anything else is an
    exact table lookup — no interpolation, TableMissing when absent.
    """
    if l < 1:
        raise ValueError("rank factor l must be at least 1")
    if l == 1:
        return PoincareSeries.from_list([1])
    return _as_provider(provider).lookup(g_Y, l, points, chamber)


@dataclass(frozen=True)
class SectorReport:
    """One twisted sector: per-orbit-class data plus the shifted total."""

    eta: TorsionElement
    per_orbit: tuple[tuple[WeightPartition, DegreeShift, PoincareSeries], ...]
    sector_graded: RationalGradedDimension

    @property
    def orbit_class_count(self) -> int:
        return len(self.per_orbit)

    def unshifted_euler(self) -> int:
        """Alternating sum over all orbit classes before shifting."""
        return sum(series.euler_characteristic() for _, _, series in self.per_orbit)


def twisted_sector(
    spec: ModuliSpec,
    eta: TorsionElement,
    provider=None,
    chamber: Optional[str] = None,
) -> SectorReport:
    """Assemble the twisted sector of a non-identity torsion element.

    Per rotation-orbit class of weight partitions: the class's series is
    prym (x) small-rank (one Betti lookup, shared across classes), shifted
    upward by twice the class's degree shift; sector_graded is the sum.
    """
    m = _require_shift_hypotheses(spec, eta)
    g, s = spec.genus, spec.num_points
    l = spec.rank // m
    cover = spectral_cover_data(g, m)
    series = prym_poincare(g, m).convolve(
        small_rank_poincare(provider, cover.cover_genus, l, s * m, chamber)
    )
    section = compute_orbit_section(spec, m)
    per_orbit = []
    accumulated: dict[Fraction, int] = {}
    for representative in section.representatives:
        shift = degree_shift(spec, eta, representative)
        per_orbit.append((representative, shift, series))
        offset = 2 * shift.value
        for k, d in series.coefficients:
            grade = k + offset
            accumulated[grade] = accumulated.get(grade, 0) + d
    report = SectorReport(
        eta=eta,
        per_orbit=tuple(per_orbit),
        sector_graded=RationalGradedDimension(tuple(accumulated.items())),
    )
    expected_classes = fixed_locus_components(spec, eta).gamma_classes
    if expected_classes is not None and report.orbit_class_count != expected_classes:
        raise AssertionError(
            "orbit classes (%d) disagree with the component count (%d)"
            % (report.orbit_class_count, expected_classes)
        )
    return report


def chen_ruan_twisted_part(
    spec: ModuliSpec, provider=None, chamber: Optional[str] = None
) -> RationalGradedDimension:
    """Sum of all twisted sectors, weighted by the order census.

    Counts and shifts depend on an element only through its order, so one
    sector per divisor m != 1 of r is computed and scaled by the number of
    elements of that exact order.
    """
    r, g = spec.rank, spec.genus
    total = RationalGradedDimension.empty()
    for m in divisors(r):
        if m == 1:
            continue
        sector = twisted_sector(
            spec, canonical_element_of_order(r, g, m), provider, chamber
        )
        multiplicity = count_elements_of_order(r, g, m)
        total = total.add(sector.sector_graded.scale(multiplicity))
    return total


def chen_ruan_table(
    spec: ModuliSpec,
    provider=None,
    untwisted: Optional[PoincareSeries] = None,
    chamber: Optional[str] = None,
) -> RationalGradedDimension:
    """Full rationally graded dimension table of the quotient orbifold.

    untwisted is the Betti series of the moduli itself (the quotient's
    ordinary cohomology agrees with it); passing None assembles the twisted
    part alone, which is complete except for the integer-graded untwisted
    row.
    """
    table = chen_ruan_twisted_part(spec, provider, chamber)
    if untwisted is not None:
        table = table.add(untwisted.shifted(Fraction(0)))
    return table


class _EulerCertificateRow(NamedTuple):
    order: int
    prym_dimension: int
    sector_euler: int

    def to_mapping(self) -> dict:
        return {
            "order": self.order,
            "prym_dimension": self.prym_dimension,
            "sector_euler": self.sector_euler,
            "vanishes": self.sector_euler == 0,
        }


def euler_vanishing_certificate(spec: ModuliSpec) -> list[_EulerCertificateRow]:
    """Per divisor m != 1 of r: the twisted sector's Euler characteristic.

    Each sector is a sum of orbit-class terms prym (x) small-rank, and the
    alternating sum factors: chi(prym) * chi(small).  chi(prym) =
    (1 + (-1))^(2p) = 0 because p = (m-1)(g-1) >= 1, so every row certifies
    an exact zero with no external input.
    """
    rows = []
    for m in divisors(spec.rank):
        if m == 1:
            continue
        prym = prym_poincare(spec.genus, m)
        chi = prym.euler_characteristic()
        rows.append(
            _EulerCertificateRow(
                order=m,
                prym_dimension=spectral_cover_data(spec.genus, m).prym_dimension,
                sector_euler=chi,
            )
        )
    if any(row.sector_euler != 0 for row in rows):
        raise AssertionError("a Prym factor has nonzero Euler characteristic")
    return rows


class EulerReport(NamedTuple):
    value: int
    certificate: list


def orbifold_euler(spec: ModuliSpec, provider) -> EulerReport:
    """Orbifold Euler characteristic: equals the plain one.

    The value is the alternating sum of the untwisted Betti series from the
    provider (key: genus, rank, points); every twisted sector contributes 0,
    which the certificate records.  Raises TableMissing for the value only —
    euler_vanishing_certificate needs nothing external.
    """
    certificate = euler_vanishing_certificate(spec)
    untwisted = _as_provider(provider).lookup(
        spec.genus, spec.rank, spec.num_points
    )
    return EulerReport(
        value=untwisted.euler_characteristic(), certificate=certificate
    )


# === pairing / product support rules ========================================

class PairingSupport(enum.Enum):
    FORCED_ZERO = "forced_zero"
    CANDIDATE = "candidate"


class ProductSupport(enum.Enum):
    FORCED_ZERO = "forced_zero"
    UNKNOWN = "unknown"


def pairing_support(
    n, eta: TorsionElement, tau: TorsionElement, spec: ModuliSpec
) -> PairingSupport:
    """Can the grade-n sector of eta pair nontrivially against tau?

    Candidate exactly when tau is the inverse of eta (componentwise
    negation) or both are the identity; everything else is forced to zero.
    A grade outside [0, 2 * moduli_dimension] is also forced zero: one side
    of the pairing is an empty graded piece.
    """
    if eta.modulus != tau.modulus:
        raise ModulusMismatch(
            "moduli differ: %d vs %d" % (eta.modulus, tau.modulus)
        )
    if isinstance(n, float):
        raise ValueError("grades must be exact rationals, not floats")
    grade = Fraction(n)
    if grade < 0 or grade > 2 * moduli_dimension(spec):
        return PairingSupport.FORCED_ZERO
    if eta.is_identity and tau.is_identity:
        return PairingSupport.CANDIDATE
    if tau == eta.inverse():
        return PairingSupport.CANDIDATE
    return PairingSupport.FORCED_ZERO


def product_support(eta1: TorsionElement, eta2: TorsionElement) -> ProductSupport:
    """Is the product of the two twisted sectors forced to vanish?

    ForcedZero when the orders agree but the cyclic subgroups differ, and —
    for a prime modulus — whenever eta1 lies outside the subgroup generated
    by eta2.  Unknown otherwise: only a partial description is available.
    """
    if eta1.modulus != eta2.modulus:
        raise ModulusMismatch(
            "moduli differ: %d vs %d" % (eta1.modulus, eta2.modulus)
        )
    if eta1.is_identity or eta2.is_identity:
        raise IdentityElement("product support rule needs non-identity elements")
    if element_order(eta1) == element_order(eta2) and not cyclic_subgroup_equal(
        eta1, eta2
    ):
        return ProductSupport.FORCED_ZERO
    if is_prime(eta1.modulus) and not any(
        eta2.scale(k) == eta1 for k in range(element_order(eta2))
    ):
        return ProductSupport.FORCED_ZERO
    return ProductSupport.UNKNOWN
