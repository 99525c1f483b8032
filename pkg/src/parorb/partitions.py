"""Ordered equal-block partitions of parabolic weights and their rotations.

For a rank r divisible by m, each marked point's r weights are split into an
ordered tuple of m blocks of size l = r/m.  A tuple of such splittings, one
per point, is a WeightPartition.  The cyclic rotation of block positions
(diagonally across all points) is a free action, so orbits have size exactly
m; compute_orbit_section picks the lexicographically least member of every
orbit as its representative.

Blocks are kept internally sorted, so comparisons and representatives are
deterministic: partitions compare by (point index, block index, block
contents).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Iterable, Iterator

from .errors import IndexOutOfRange, NotADivisor
from .model import ModuliSpec


@dataclass(frozen=True, order=True)
class PointPartition:
    """Ordered tuple of equal-size blocks covering one point's weights."""

    blocks: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(block)) for block in self.blocks)
        )
        if not self.blocks:
            raise ValueError("a point partition needs at least one block")
        size = len(self.blocks[0])
        if size == 0 or any(len(b) != size for b in self.blocks):
            raise ValueError("blocks must be nonempty and of equal size")

    def __hash__(self):
        try:
            return self._hash  # type: ignore[attr-defined]
        except AttributeError:
            h = hash(self.blocks)
            object.__setattr__(self, "_hash", h)
            return h

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


@dataclass(frozen=True, order=True)
class WeightPartition:
    """One PointPartition per marked point, all with the same block shape."""

    per_point: tuple[PointPartition, ...]

    def __post_init__(self):
        if not self.per_point:
            raise ValueError("a weight partition needs at least one point")
        m, l = self.per_point[0].m, self.per_point[0].block_size
        if any(p.m != m or p.block_size != l for p in self.per_point):
            raise ValueError("all points must share the same block shape")

    def __hash__(self):
        try:
            return self._hash  # type: ignore[attr-defined]
        except AttributeError:
            h = hash(self.per_point)
            object.__setattr__(self, "_hash", h)
            return h

    @property
    def m(self) -> int:
        return self.per_point[0].m

    @property
    def block_size(self) -> int:
        return self.per_point[0].block_size

    @property
    def num_points(self) -> int:
        return len(self.per_point)

    def to_mapping(self) -> list:
        from .arith import format_rational

        return [
            [[format_rational(w) for w in block] for block in point.blocks]
            for point in self.per_point
        ]


def count_partitions(r: int, m: int, s: int) -> int:
    """Number of weight partitions: (r! / (l!)^m)^s with l = r/m.

    Equivalently the product of binomials C(r,l)C(r-l,l)...C(l,l), once per
    point.

    >>> count_partitions(2, 2, 1)
    2
    >>> count_partitions(6, 3, 1)
    90
    >>> count_partitions(6, 6, 2)
    518400
    """
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    if m < 1 or r % m:
        raise NotADivisor("m = %r does not divide r = %r" % (m, r))
    l = r // m
    per_point = factorial(r) // factorial(l) ** m
    return per_point ** s


def _ordered_block_partitions(
    weights: Iterable[Fraction], m: int
) -> Iterator[tuple[tuple[Fraction, ...], ...]]:
    """Ordered partitions of distinct sorted weights into m equal blocks.

    Yields block tuples in lexicographic order (blocks themselves sorted);
    block order matters, so all m! arrangements of a given set partition
    appear.
    """
    items = tuple(weights)
    l = len(items) // m

    def rec(remaining: tuple[Fraction, ...]) -> Iterator[tuple]:
        if len(remaining) == l:
            yield (remaining,)
            return
        for first in combinations(remaining, l):
            chosen = set(first)
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest):
                yield (first,) + tail

    return rec(items)


def enumerate_partitions(spec: ModuliSpec, m: int) -> Iterator[WeightPartition]:
    """Stream every weight partition of spec's weights into m blocks per point.

    Deterministic ascending order, no duplicates, nothing materialized
    beyond one per-point table for the points after the first (the first
    point streams, so single-point instances use O(1) memory).
    """
    if m < 1 or spec.rank % m:
        raise NotADivisor("m = %r does not divide rank = %r" % (m, spec.rank))
    head_stream = (
        PointPartition(blocks) for blocks in _ordered_block_partitions(spec.weights[0], m)
    )
    tail_lists = [
        [PointPartition(blocks) for blocks in _ordered_block_partitions(point, m)]
        for point in spec.weights[1:]
    ]
    for head in head_stream:
        if not tail_lists:
            yield WeightPartition((head,))
        else:
            for tail in product(*tail_lists):
                yield WeightPartition((head,) + tail)


def induced_weights(t: WeightPartition, point_index: int) -> list[list[Fraction]]:
    """The m blocks at one point, each as a sorted list (ascending).

    These are the weight tuples the m sheets of the quotient construction
    carry over the chosen point.
    """
    if not 0 <= point_index < t.num_points:
        raise IndexOutOfRange(
            "point index %r outside 0..%d" % (point_index, t.num_points - 1)
        )
    return [list(block) for block in t.per_point[point_index].blocks]


def galois_rotate(t: WeightPartition, i: int) -> WeightPartition:
    """Rotate block positions by i: output block j holds input block j+i mod m.

    Rotating by m (or 0) returns an equal partition; rotations compose
    additively.
    """
    m = t.m
    i %= m
    if i == 0:
        return t
    return WeightPartition(
        tuple(
            PointPartition(tuple(point.blocks[(j + i) % m] for j in range(m)))
            for point in t.per_point
        )
    )


@lru_cache(maxsize=1 << 15)
def orbit_canonical(t: WeightPartition) -> tuple[WeightPartition, int]:
    """Lexicographically least rotation of t, plus the rotation amount that
    recovers t from it: galois_rotate(rep, amount) == t."""
    m = t.m
    best, best_i = t, 0
    for i in range(1, m):
        cand = galois_rotate(t, i)
        if cand < best:
            best, best_i = cand, i
    return best, (m - best_i) % m


@dataclass(frozen=True)
class OrbitSection:
    """One representative per rotation orbit, plus reverse lookup.

    representatives are the lexicographically least members of their orbits,
    listed ascending; every orbit has size exactly m (the action is free),
    so orbit_count * m == partition_count.
    """

    m: int
    partition_count: int
    representatives: tuple[WeightPartition, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "_rep_index",
            {rep: k for k, rep in enumerate(self.representatives)},
        )

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    def locate(self, t: WeightPartition) -> tuple[WeightPartition, int]:
        """(representative, rotation) with galois_rotate(rep, rotation) == t."""
        rep, amount = orbit_canonical(t)
        if rep not in self._rep_index:  # type: ignore[attr-defined]
            raise KeyError("partition does not belong to this family")
        return rep, amount

    def representative_index(self, rep: WeightPartition) -> int:
        return self._rep_index[rep]  # type: ignore[attr-defined]


def compute_orbit_section(spec: ModuliSpec, m: int) -> OrbitSection:
    """Enumerate all partitions, grouped into rotation orbits of size m.

    Works on integer indices into per-point partition tables (with
    precomputed rotation tables), so the full sweep costs O(total * m)
    small-tuple operations; WeightPartition objects are only built for the
    representatives.
    """
    if m < 1 or spec.rank % m:
        raise NotADivisor("m = %r does not divide rank = %r" % (m, spec.rank))

    point_tables = []  # per point: list of block tuples, ascending
    rotation_tables = []  # per point: rotation_tables[p][idx][i] = rotated idx
    for point in spec.weights:
        parts = list(_ordered_block_partitions(point, m))
        index = {blocks: k for k, blocks in enumerate(parts)}
        rots = [
            tuple(
                index[tuple(blocks[(j + i) % m] for j in range(m))]
                for i in range(m)
            )
            for blocks in parts
        ]
        point_tables.append(parts)
        rotation_tables.append(rots)

    reps: set[tuple[int, ...]] = set()
    total = 0
    for combo in product(*(range(len(parts)) for parts in point_tables)):
        total += 1
        rows = tuple(rotation_tables[p][idx] for p, idx in enumerate(combo))
        best = combo
        for i in range(1, m):
            cand = tuple(row[i] for row in rows)
            if cand < best:
                best = cand
        reps.add(best)

    if len(reps) * m != total:
        raise AssertionError(
            "rotation orbits are not all of size %d: %d reps, %d partitions"
            % (m, len(reps), total)
        )

    representatives = tuple(
        WeightPartition(
            tuple(
                PointPartition(point_tables[p][idx]) for p, idx in enumerate(combo)
            )
        )
        for combo in sorted(reps)
    )
    return OrbitSection(m=m, partition_count=total, representatives=representatives)
