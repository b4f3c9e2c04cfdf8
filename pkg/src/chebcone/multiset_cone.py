"""Integer multiset calculus: sumsets, even-step intervals, and the
profile cone with its certificate decompositions.

A multiset here is a finitely supported multiplicity function from the
integers to the non-negative integers.  The cone R(c) collects the
multisets that decompose as singletons at or above the center c plus
even-step intervals symmetric about c; membership is equivalent to a
profile condition checked per parity class (see in_cone).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .tilde_ring import TildeElement


class IntegerMultiset:
    """Finite multiset of integers, stored as {value: multiplicity}.

    Multiplicities may be arbitrarily large (they are exact ints), so
    the representation never expands a multiset element by element
    unless asked to.
    """

    __slots__ = ("_mult",)

    def __init__(self, elements: Iterable[int] = ()) -> None:
        acc: dict[int, int] = {}
        for x in elements:
            acc[x] = acc.get(x, 0) + 1
        self._mult = acc

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "IntegerMultiset":
        m = cls()
        for x, c in counts.items():
            if c < 0:
                raise ValueError(f"negative multiplicity {c} at {x}")
            if c:
                m._mult[x] = c
        return m

    @staticmethod
    def empty() -> "IntegerMultiset":
        return IntegerMultiset()

    def mult(self, i: int) -> int:
        return self._mult.get(i, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._mult.items())

    def counts(self) -> list[tuple[int, int]]:
        """Sorted (value, multiplicity) pairs."""
        return sorted(self._mult.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._mult))

    def support_size(self) -> int:
        return len(self._mult)

    def size(self) -> int:
        """Total number of elements, multiplicity included."""
        return sum(self._mult.values())

    def is_empty(self) -> bool:
        return not self._mult

    def min_element(self) -> int | None:
        return min(self._mult) if self._mult else None

    def max_element(self) -> int | None:
        return max(self._mult) if self._mult else None

    def elements(self) -> list[int]:
        """Expanded element list; only sensible for small multisets."""
        out: list[int] = []
        for x, c in self.counts():
            out.extend([x] * c)
        return out

    def shifted(self, k: int) -> "IntegerMultiset":
        """Add k to every element."""
        return IntegerMultiset.from_counts({x + k: c for x, c in self._mult.items()})

    def __add__(self, other: "IntegerMultiset") -> "IntegerMultiset":
        return msum(self, other)

    def __or__(self, other: "IntegerMultiset") -> "IntegerMultiset":
        return munion(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMultiset):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self) -> int:
        return hash(frozenset(self._mult.items()))

    def __bool__(self) -> bool:
        return bool(self._mult)

    def __repr__(self) -> str:
        inner = ", ".join(f"{x}: {c}" for x, c in self.counts())
        return "IntegerMultiset{" + inner + "}"


def interval(a: int, b: int) -> IntegerMultiset:
    """The even-step multiset {a, a+2, ..., b}; a and b must share parity."""
    if a > b:
        raise ValueError(f"interval endpoints out of order: [{a}, {b}]")
    if (b - a) % 2 != 0:
        raise ValueError(f"interval endpoints differ in parity: [{a}, {b}]")
    return IntegerMultiset.from_counts({x: 1 for x in range(a, b + 1, 2)})


def msum(m1: IntegerMultiset, m2: IntegerMultiset) -> IntegerMultiset:
    """Multiset sum: all pairwise element sums, multiplicities convolved."""
    acc: dict[int, int] = {}
    for a, ca in m1.items():
        for b, cb in m2.items():
            acc[a + b] = acc.get(a + b, 0) + ca * cb
    return IntegerMultiset.from_counts(acc)


def munion(m1: IntegerMultiset, m2: IntegerMultiset) -> IntegerMultiset:
    """Multiset union: multiplicities add pointwise."""
    acc = dict(m1.items())
    for x, c in m2.items():
        acc[x] = acc.get(x, 0) + c
    return IntegerMultiset.from_counts(acc)


def interval_sum_decompose(a1: int, b1: int, a2: int, b2: int) -> list[tuple[int, int]]:
    """Write the sum of two even-step intervals as a union of intervals.

    Returns the endpoint pairs [a1+a2+2j, b1+b2-2j] for j from 0 up to
    half the shorter length; their union equals the multiset sum.
    """
    interval(a1, b1)
    interval(a2, b2)
    half = min(b1 - a1, b2 - a2) // 2
    return [(a1 + a2 + 2 * j, b1 + b2 - 2 * j) for j in range(half + 1)]


def _cone_violation(m: IntegerMultiset, c: int) -> tuple[int, str] | None:
    """First offset at which the cone profile fails, or None.

    The profile condition, per offset i >= 0 along each parity class:
    mult(c-i-2) <= mult(c-i) <= mult(c+i).  Offsets beyond the support
    hull carry only zero multiplicities, so a finite sweep suffices.
    """
    if m.is_empty():
        return None
    bound = max(abs(x - c) for x in m.support()) + 2
    for i in range(bound + 1):
        left_outer = m.mult(c - i - 2)
        left_inner = m.mult(c - i)
        right = m.mult(c + i)
        if left_outer > left_inner:
            return (i, f"mult({c - i - 2})={left_outer} > mult({c - i})={left_inner}")
        if left_inner > right:
            return (i, f"mult({c - i})={left_inner} > mult({c + i})={right}")
    return None


def in_cone(m: IntegerMultiset, c: int) -> bool:
    """Membership in the cone centered at c.

    True iff for every i >= 0 the multiplicity at c-i-2 is at most the
    multiplicity at c-i, which is at most the multiplicity at c+i.
    Equivalently, m is a union of singletons at or above c and even-step
    intervals [c-n, c+n]; decompose_cone produces that form.
    """
    return _cone_violation(m, c) is None


class ConeMembershipError(ValueError):
    """Raised when a multiset is not in the cone a caller asserted."""

    def __init__(self, center: int, offset: int, detail: str) -> None:
        super().__init__(f"not in cone R({center}): at offset {offset}, {detail}")
        self.center = center
        self.offset = offset
        self.detail = detail


def cone_subset_check(c: int, m: IntegerMultiset) -> bool:
    """Given membership at center c+1, confirm membership at center c."""
    violation = _cone_violation(m, c + 1)
    if violation is not None:
        raise ConeMembershipError(c + 1, violation[0], "precondition: " + violation[1])
    return in_cone(m, c)


@dataclass(frozen=True)
class ConeDecomposition:
    """Certificate that a multiset lies in the cone centered at `center`.

    Parts are stored with multiplicities since counts can be astronomically
    large: `singletons` holds (value, count) pairs with value >= center,
    `radii` holds (radius, count) pairs with radius >= 1.  Recomposition
    unions count copies of {value} and of [center-radius, center+radius].
    """

    center: int
    singletons: tuple[tuple[int, int], ...]
    radii: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for v, cnt in self.singletons:
            if v < self.center:
                raise ValueError(f"singleton {v} below center {self.center}")
            if cnt <= 0:
                raise ValueError(f"non-positive singleton count {cnt}")
        for r, cnt in self.radii:
            if r < 1:
                raise ValueError(f"interval radius must be >= 1, got {r}")
            if cnt <= 0:
                raise ValueError(f"non-positive radius count {cnt}")

    def num_singletons(self) -> int:
        return sum(cnt for _, cnt in self.singletons)

    def num_intervals(self) -> int:
        return sum(cnt for _, cnt in self.radii)

    def recompose(self) -> IntegerMultiset:
        acc: dict[int, int] = {}
        for v, cnt in self.singletons:
            acc[v] = acc.get(v, 0) + cnt
        for r, cnt in self.radii:
            for x in range(self.center - r, self.center + r + 1, 2):
                acc[x] = acc.get(x, 0) + cnt
        return IntegerMultiset.from_counts(acc)


def decompose_cone(m: IntegerMultiset, c: int) -> ConeDecomposition:
    """Canonical cone certificate for m at center c.

    Radii are read off the left profile: the number of intervals with
    radius >= k equals mult(c-k), so an exact radius-k count is
    mult(c-k) - mult(c-k-2).  Intervals are the only parts reaching
    below c, which makes this decomposition unique; whatever remains
    after removing them sits at or above c and becomes the singleton
    list.  Raises ConeMembershipError with a witness offset if m is not
    a member.
    """
    violation = _cone_violation(m, c)
    if violation is not None:
        raise ConeMembershipError(c, violation[0], violation[1])

    residue = {x: cnt for x, cnt in m.items()}
    radii: list[tuple[int, int]] = []
    lo = m.min_element()
    k_max = c - lo if (lo is not None and lo < c) else 0
    for k in range(1, k_max + 1):
        exact = m.mult(c - k) - m.mult(c - k - 2)
        if exact:
            radii.append((k, exact))
            for x in range(c - k, c + k + 1, 2):
                residue[x] = residue.get(x, 0) - exact

    singles = []
    for x in sorted(residue):
        cnt = residue[x]
        if cnt < 0 or (cnt > 0 and x < c):
            # cannot happen once the profile check passed
            raise ConeMembershipError(c, abs(x - c), f"residue {cnt} at {x}")
        if cnt > 0:
            singles.append((x, cnt))
    return ConeDecomposition(center=c, singletons=tuple(singles), radii=tuple(radii))


def to_tilde(m: IntegerMultiset) -> TildeElement:
    """Multiplicity function read as coefficients of h~ basis symbols."""
    return TildeElement(dict(m.items()))


def random_cone_member(
    rng: random.Random,
    c: int,
    max_singletons: int = 4,
    max_intervals: int = 4,
    singleton_span: int = 10,
    max_radius: int = 6,
) -> IntegerMultiset:
    """Seeded random cone member, valid by construction.

    Draws up to max_singletons values in [c, c+singleton_span] and up to
    max_intervals radii in [1, max_radius], then recomposes.
    """
    singles: dict[int, int] = {}
    for _ in range(rng.randint(0, max_singletons)):
        v = rng.randint(c, c + singleton_span)
        singles[v] = singles.get(v, 0) + 1
    radii: dict[int, int] = {}
    for _ in range(rng.randint(0, max_intervals)):
        r = rng.randint(1, max_radius)
        radii[r] = radii.get(r, 0) + 1
    decomp = ConeDecomposition(
        center=c,
        singletons=tuple(sorted(singles.items())),
        radii=tuple(sorted(radii.items())),
    )
    return decomp.recompose()
