"""Sparse exact arithmetic for the shift-basis module and its folded image.

Elements are finitely supported integer combinations of basis symbols
h~[j], with j ranging over all integers.  The companion type ChElement
holds combinations of h[i] with i >= 0 only.  The fold map sends h~[i]
to h[i] for i >= 0, kills h~[-1], and sends h~[i] to -h[-i-2] for
i < -1.  The product on the h~ side is defined by folding the left
factor and letting each h[i] act as the operator sum of the index
shifts by -i, -i+2, ..., i; it is linear in both slots and, although
nothing here relies on it, empirically associative.

All coefficients are plain Python ints, so arithmetic is exact at any
magnitude.
"""

from __future__ import annotations

import random
from typing import Iterator, Mapping


def _render(coeffs: Mapping[int, int], symbol: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for j in sorted(coeffs):
        c = coeffs[j]
        mag = f"{symbol}[{j}]" if abs(c) == 1 else f"{abs(c)}*{symbol}[{j}]"
        if not parts:
            parts.append(mag if c > 0 else f"-{mag}")
        else:
            parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return " ".join(parts)


class TildeElement:
    """Integer combination of h~[j] symbols, stored as {index: coefficient}.

    Instances are immutable values: every operation returns a fresh
    element, zero coefficients are dropped at construction, and equality
    and hashing are structural on the canonical mapping.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        data: dict[int, int] = {}
        if coeffs:
            for j, c in coeffs.items():
                if c:
                    data[j] = c
        self._coeffs = data

    @staticmethod
    def zero() -> "TildeElement":
        return TildeElement()

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def terms(self) -> list[tuple[int, int]]:
        """Sorted (index, coefficient) pairs."""
        return sorted(self._coeffs.items())

    def coeff(self, j: int) -> int:
        return self._coeffs.get(j, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def support_size(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_index(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def max_index(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def mass(self) -> int:
        """Sum of absolute coefficient values."""
        return sum(abs(c) for c in self._coeffs.values())

    def shift(self, k: int) -> "TildeElement":
        """Translate every basis index by k."""
        return TildeElement({j + k: c for j, c in self._coeffs.items()})

    def fold(self) -> "ChElement":
        return fold_L(self)

    def scale(self, a: int) -> "TildeElement":
        return TildeElement({j: a * c for j, c in self._coeffs.items()})

    def __add__(self, other: "TildeElement") -> "TildeElement":
        if not isinstance(other, TildeElement):
            return NotImplemented
        acc = dict(self._coeffs)
        for j, c in other._coeffs.items():
            acc[j] = acc.get(j, 0) + c
        return TildeElement(acc)

    def __sub__(self, other: "TildeElement") -> "TildeElement":
        if not isinstance(other, TildeElement):
            return NotImplemented
        acc = dict(self._coeffs)
        for j, c in other._coeffs.items():
            acc[j] = acc.get(j, 0) - c
        return TildeElement(acc)

    def __neg__(self) -> "TildeElement":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TildeElement):
            return mul(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TildeElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        return _render(self._coeffs, "h~")

    def __repr__(self) -> str:
        return f"TildeElement({dict(sorted(self._coeffs.items()))!r})"


class ChElement:
    """Integer combination of h[i] symbols with i >= 0 only.

    Same canonical-form discipline as TildeElement.  Construction rejects
    negative indices; use fold_L to land here from the h~ side.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        data: dict[int, int] = {}
        if coeffs:
            for i, c in coeffs.items():
                if i < 0:
                    raise ValueError(f"negative index {i} not allowed in folded element")
                if c:
                    data[i] = c
        self._coeffs = data

    @staticmethod
    def zero() -> "ChElement":
        return ChElement()

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def coeff(self, i: int) -> int:
        return self._coeffs.get(i, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_index(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def max_index(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def mass(self) -> int:
        return sum(abs(c) for c in self._coeffs.values())

    def all_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def lift(self) -> TildeElement:
        """Re-embed h[i] as h~[i]."""
        return TildeElement(dict(self._coeffs))

    def __add__(self, other: "ChElement") -> "ChElement":
        if not isinstance(other, ChElement):
            return NotImplemented
        acc = dict(self._coeffs)
        for i, c in other._coeffs.items():
            acc[i] = acc.get(i, 0) + c
        return ChElement(acc)

    def __sub__(self, other: "ChElement") -> "ChElement":
        if not isinstance(other, ChElement):
            return NotImplemented
        acc = dict(self._coeffs)
        for i, c in other._coeffs.items():
            acc[i] = acc.get(i, 0) - c
        return ChElement(acc)

    def __neg__(self) -> "ChElement":
        return ChElement({i: -c for i, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        return _render(self._coeffs, "h")

    def __repr__(self) -> str:
        return f"ChElement({dict(sorted(self._coeffs.items()))!r})"


def basis(j: int) -> TildeElement:
    """The basis element h~[j]."""
    return TildeElement({j: 1})


def shift(g: TildeElement, k: int) -> TildeElement:
    return g.shift(k)


def fold_L(g: TildeElement) -> ChElement:
    """Fold onto non-negative indices.

    h~[i] maps to h[i] for i >= 0, to zero for i == -1, and to -h[-i-2]
    for i < -1; extended linearly.
    """
    acc: dict[int, int] = {}
    for j, c in g.items():
        if j >= 0:
            acc[j] = acc.get(j, 0) + c
        elif j == -1:
            continue
        else:
            acc[-j - 2] = acc.get(-j - 2, 0) - c
    return ChElement(acc)


def left_mul_h(i: int, g: TildeElement) -> TildeElement:
    """Act by h[i] on the left: the sum of shifts of g by -i, -i+2, ..., i."""
    if i < 0:
        raise ValueError(f"left multiplier index must be >= 0, got {i}")
    acc: dict[int, int] = {}
    for k in range(-i, i + 1, 2):
        for j, c in g.items():
            acc[j + k] = acc.get(j + k, 0) + c
    return TildeElement(acc)


def mul(g1: TildeElement, g2: TildeElement) -> TildeElement:
    """Module product: fold the left factor, then act termwise on the right."""
    acc: dict[int, int] = {}
    for i, c in fold_L(g1).items():
        for k in range(-i, i + 1, 2):
            for j, d in g2.items():
                acc[j + k] = acc.get(j + k, 0) + c * d
    return TildeElement(acc)


def ch_left_mul(i: int, x: ChElement) -> ChElement:
    """Product h[i] * x inside the folded algebra.

    Uses the closed interval rule h[i] h[j] = h[|i-j|] + h[|i-j|+2]
    + ... + h[i+j]; independent of the h~ machinery by design, so the
    two routes can be checked against each other.
    """
    if i < 0:
        raise ValueError(f"left multiplier index must be >= 0, got {i}")
    acc: dict[int, int] = {}
    for j, c in x.items():
        for m in range(abs(i - j), i + j + 1, 2):
            acc[m] = acc.get(m, 0) + c
    return ChElement(acc)


def w0(g1: TildeElement, g2: TildeElement, g3: TildeElement) -> TildeElement:
    """Trilinear form g2 * (g1*g3 - shift(g1,-1)*shift(g3,-1))."""
    inner = mul(g1, g3) - mul(g1.shift(-1), g3.shift(-1))
    return mul(g2, inner)


def w1(g1: TildeElement, g2: TildeElement, g3: TildeElement) -> TildeElement:
    """Companion trilinear form; equals w0 followed by a downward shift.

    The subtracted term carries an extra h~[1] left factor: without it
    the identity w1 = shift(w0, -1) fails already on basis triples.
    Unparenthesised products group right to left throughout.
    """
    s1 = g1.shift(-1)
    s3 = g3.shift(-1)
    a = mul(s1, mul(g2, g3))
    b = mul(g1, mul(g2, s3))
    c = mul(s1, mul(basis(1), mul(g2, s3)))
    return a + b - c


def random_element(
    rng: random.Random,
    span: int = 6,
    coeff_bound: int = 3,
    density: float = 0.4,
) -> TildeElement:
    """Seeded random element with support in [-span, span].

    Each index independently receives a coefficient in
    [-coeff_bound, coeff_bound] with the given density, else zero.
    """
    acc = {}
    for j in range(-span, span + 1):
        if rng.random() < density:
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                acc[j] = c
    return TildeElement(acc)
