"""Branched-cover counts by direct monodromy enumeration.

A degree-d cover of the sphere with n marked branch points is the same data
as an n-tuple of permutations in S_d with prescribed cycle types whose
ordered product is the identity; the cover is connected exactly when the
tuple acts transitively on the d sheets.  Counts are normalised by 1/d!
(equivalently: tuples are weighted by the reciprocal of the order of S_d),
so they are rationals, not integers.

Enumeration walks the first n-1 slots and solves for the last permutation,
so the raw search space is the product of the first n-1 conjugacy class
sizes.  A hard bound on that product guards against accidental explosions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _all_permutations
from typing import Sequence

__all__ = [
    "DEFAULT_MAX_TUPLES",
    "EnumerationBoundError",
    "Permutation",
    "CycleType",
    "BranchProfile",
    "cycle_type",
    "permutations_with_type",
    "is_transitive",
    "hurwitz_count",
    "p2",
    "p3_full",
    "p3_trans",
]

DEFAULT_MAX_TUPLES = 10**9


class EnumerationBoundError(RuntimeError):
    """Raw tuple space exceeds the configured enumeration bound."""


def _type_of_images(images: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle lengths of a 0-based permutation tuple, sorted descending."""
    d = len(images)
    seen = [False] * d
    parts = []
    for start in range(d):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1, ..., d}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> "CycleType":
        zero_based = tuple(j - 1 for j in self.images)
        return CycleType(_type_of_images(zero_based))


@dataclass(frozen=True)
class CycleType:
    """Partition recording the cycle lengths of a permutation."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"cycle lengths must be positive integers: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class BranchProfile:
    """Degree plus one cycle type per branch point."""

    degree: int
    profiles: tuple[CycleType, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        object.__setattr__(self, "profiles", tuple(self.profiles))
        for t in self.profiles:
            if t.degree != self.degree:
                raise ValueError(
                    f"cycle type {t.parts} does not partition {self.degree}"
                )


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type()


def permutations_with_type(d: int, t: CycleType) -> list[Permutation]:
    """All elements of S_d with the given cycle type (the conjugacy class)."""
    if t.degree != d:
        raise ValueError(f"cycle type {t.parts} does not partition {d}")
    out = []
    for images in _all_permutations(range(1, d + 1)):
        zero_based = tuple(j - 1 for j in images)
        if _type_of_images(zero_based) == t.parts:
            out.append(Permutation(images))
    return out


def is_transitive(perms: Sequence[Permutation], d: int) -> bool:
    """Whether the group generated by perms acts transitively on {1..d}."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    reached = {1}
    frontier = [1]
    while frontier:
        i = frontier.pop()
        for p in perms:
            j = p(i)
            if j not in reached:
                reached.add(j)
                frontier.append(j)
    return len(reached) == d


def _class_size(d: int, parts: tuple[int, ...]) -> int:
    """Number of permutations in S_d with the given cycle type."""
    centraliser = 1
    for length in set(parts):
        m = parts.count(length)
        centraliser *= length**m * math.factorial(m)
    return math.factorial(d) // centraliser


def _merge(part: tuple[int, ...], images: tuple[int, ...]) -> tuple[int, ...]:
    """Coarsen a set partition of {0..d-1} by the cycles of a permutation.

    Partitions are canonical tuples: index i maps to the least element of
    its block, so the single-block partition is all zeros.
    """
    d = len(part)
    parent = list(range(d))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra

    for i in range(d):
        union(i, part[i])
        union(i, images[i])
    return tuple(find(i) for i in range(d))


def hurwitz_count(
    profile: BranchProfile,
    connected: bool = True,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> Fraction:
    """Count monodromy tuples for the profile, weighted by 1/d!.

    With ``connected=True`` only transitive tuples are counted.  Raises
    EnumerationBoundError if the product of the first n-1 conjugacy class
    sizes exceeds ``max_tuples``.
    """
    d = profile.degree
    types = [t.parts for t in profile.profiles]
    n = len(types)
    weight = Fraction(1, math.factorial(d))

    if n == 0:
        # The empty tuple generates the trivial group: connected only for d=1.
        if connected and d > 1:
            return Fraction(0)
        return weight

    raw = 1
    for parts in types[:-1]:
        raw *= _class_size(d, parts)
    if raw > max_tuples:
        raise EnumerationBoundError(
            f"search space {raw} exceeds the bound {max_tuples}"
        )

    # 0-based image tuples, grouped per slot by conjugacy class.
    class_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for parts in set(types[:-1]):
        class_cache[parts] = [
            tuple(j - 1 for j in p.images)
            for p in permutations_with_type(d, CycleType(parts))
        ]
    slots = [class_cache[parts] for parts in types[:-1]]
    last_type = types[-1]

    identity = tuple(range(d))
    discrete = identity
    single_block = (0,) * d
    merge_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}

    def merged(part: tuple[int, ...], images: tuple[int, ...]) -> tuple[int, ...]:
        if part == single_block:
            return part
        key = (part, images)
        got = merge_cache.get(key)
        if got is None:
            got = _merge(part, images)
            merge_cache[key] = got
        return got

    def count_from(slot: int, product: tuple[int, ...], part: tuple[int, ...]) -> int:
        if slot == n - 1:
            # The last permutation is forced: product * last = identity.
            last = [0] * d
            for i, j in enumerate(product):
                last[j] = i
            last_images = tuple(last)
            if _type_of_images(last_images) != last_type:
                return 0
            if connected and merged(part, last_images) != single_block:
                return 0
            return 1
        total = 0
        for images in slots[slot]:
            composed = tuple(images[j] for j in product)
            total += count_from(slot + 1, composed, merged(part, images))
        return total

    start_part = single_block if not connected or d == 1 else discrete
    return weight * count_from(0, identity, start_part)


def _uniform_profile(d: int, parts: tuple[int, ...], n: int) -> BranchProfile:
    return BranchProfile(d, tuple(CycleType(parts) for _ in range(n)))


def p2(g: int, max_tuples: int = DEFAULT_MAX_TUPLES) -> Fraction:
    """Count of genus-g double covers of the line: 2g+2 simple branch points."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    profile = _uniform_profile(2, (2,), 2 * g + 2)
    return hurwitz_count(profile, connected=True, max_tuples=max_tuples)


def p3_full(g: int, max_tuples: int = DEFAULT_MAX_TUPLES) -> Fraction:
    """Connected degree-3 covers of the line with one point of full
    ramification and 2g+2 simple branch points."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    types = [CycleType((3,))] + [CycleType((2, 1))] * (2 * g + 2)
    profile = BranchProfile(3, tuple(types))
    return hurwitz_count(profile, connected=True, max_tuples=max_tuples)


def p3_trans(g: int, max_tuples: int = DEFAULT_MAX_TUPLES) -> Fraction:
    """Connected degree-3 covers of the line with 2g+4 simple branch points."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    profile = _uniform_profile(3, (2, 1), 2 * g + 4)
    return hurwitz_count(profile, connected=True, max_tuples=max_tuples)
