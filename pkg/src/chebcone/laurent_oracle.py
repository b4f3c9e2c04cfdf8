"""Independent evaluation oracle over integer Laurent polynomials.

Basis symbols map to the classical one-variable images U(i) with
U(i) = t^i + t^(i-2) + ... + t^-i for i >= 0, U(-1) = 0 and
U(i) = -U(-i-2) below that.  The oracle algebra is commutative and its
product is a plain convolution, computed by a code path that shares
nothing with the formal kernel; agreement between the two is the
argument that neither hides a matching bug.  Evaluation has a kernel
(for instance h~[0] + h~[-2] maps to zero), so oracle agreement is
necessary but not sufficient: the formal checks stay primary.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .tilde_ring import TildeElement, mul


class LaurentPoly:
    """Sparse integer Laurent polynomial in one variable t."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        data: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    data[e] = c
        self._coeffs = data

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def mirror(self) -> "LaurentPoly":
        """Substitute 1/t for t."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_palindromic(self) -> bool:
        return self.mirror() == self

    def at_one(self) -> int:
        """Value at t = 1: the plain coefficient sum."""
        return sum(self._coeffs.values())

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) - c
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return lmul(self, other)
        if isinstance(other, int):
            return LaurentPoly({e: other * c for e, c in self._coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "LaurentPoly(0)"
        body = " + ".join(f"{c}*t^{e}" for e, c in self.terms())
        return f"LaurentPoly({body})"


def lmul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Convolution product; commutative and associative."""
    acc: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(acc)


def eval_basis(i: int) -> LaurentPoly:
    """Image of the basis symbol with index i."""
    if i >= 0:
        return LaurentPoly({i - 2 * k: 1 for k in range(i + 1)})
    if i == -1:
        return LaurentPoly.zero()
    m = -i - 2
    return LaurentPoly({m - 2 * k: -1 for k in range(m + 1)})


def evaluate(g: TildeElement) -> LaurentPoly:
    """Linear extension of eval_basis to whole elements."""
    acc = LaurentPoly.zero()
    for j, c in g.items():
        acc = acc + c * eval_basis(j)
    return acc


def weighted_mass(g: TildeElement) -> int:
    """Sum of coefficient times (index + 1); equals evaluate(g) at t = 1."""
    return sum(c * (j + 1) for j, c in g.items())


def cross_check(g1: TildeElement, g2: TildeElement) -> bool:
    """Evaluation must turn the module product into the convolution product."""
    return evaluate(mul(g1, g2)) == lmul(evaluate(g1), evaluate(g2))
