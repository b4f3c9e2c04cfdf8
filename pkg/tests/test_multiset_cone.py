"""Unit tests for the multiset calculus and the cone machinery."""

import random

import pytest

from chebcone.multiset_cone import (
    ConeDecomposition,
    ConeMembershipError,
    IntegerMultiset,
    cone_subset_check,
    decompose_cone,
    in_cone,
    interval,
    interval_sum_decompose,
    msum,
    munion,
    random_cone_member,
    to_tilde,
)
from chebcone.tilde_ring import TildeElement, basis, left_mul_h


def ms(*elements):
    return IntegerMultiset(elements)


def test_interval():
    assert interval(-2, 2) == ms(-2, 0, 2)
    assert interval(4, 4) == ms(4)
    assert interval(2, 6) == ms(2, 4, 6)
    with pytest.raises(ValueError):
        interval(3, 1)
    with pytest.raises(ValueError):
        interval(0, 3)


def test_msum():
    assert msum(ms(2, 4, 6), ms(2, 4, 6)) == ms(4, 6, 6, 8, 8, 8, 10, 10, 12)
    m = ms(-1, 3, 3, 7)
    assert msum(m, ms(0)) == m
    assert msum(ms(0, 2), ms(0, 2, 4)) == ms(0, 2, 2, 4, 4, 6)
    assert msum(m, IntegerMultiset()) == IntegerMultiset()


def test_munion():
    assert munion(ms(1), ms(1)) == IntegerMultiset.from_counts({1: 2})
    m = ms(0, 5, 5)
    assert munion(m, IntegerMultiset()) == m
    assert munion(interval(0, 6), interval(2, 4)) == ms(0, 2, 2, 4, 4, 6)


def test_multiset_counts_and_elements():
    m = IntegerMultiset.from_counts({3: 2, -1: 1})
    assert m.size() == 3
    assert m.support() == (-1, 3)
    assert m.elements() == [-1, 3, 3]
    assert m.mult(3) == 2 and m.mult(7) == 0
    with pytest.raises(ValueError):
        IntegerMultiset.from_counts({0: -1})


def test_shifted():
    assert ms(2, 4).shifted(-1) == ms(1, 3)
    assert msum(ms(2, 4), ms(-1)) == ms(1, 3)


def test_interval_sum_decompose():
    assert interval_sum_decompose(0, 2, 0, 4) == [(0, 6), (2, 4)]
    assert interval_sum_decompose(0, 0, -3, 5) == [(-3, 5)]
    assert interval_sum_decompose(-2, 2, -2, 2) == [(-4, 4), (-2, 2), (0, 0)]


def test_interval_sum_decompose_matches_brute_force():
    rng = random.Random(11)
    for _ in range(100):
        a1 = rng.randint(-8, 8)
        b1 = a1 + 2 * rng.randint(0, 5)
        a2 = rng.randint(-8, 8)
        b2 = a2 + 2 * rng.randint(0, 5)
        rebuilt = IntegerMultiset()
        for lo, hi in interval_sum_decompose(a1, b1, a2, b2):
            rebuilt = munion(rebuilt, interval(lo, hi))
        assert rebuilt == msum(interval(a1, b1), interval(a2, b2))


def test_in_cone_examples():
    assert in_cone(ms(2), 2)
    assert in_cone(ms(2, 4, 6), 4)
    assert not in_cone(ms(0, 3), 2)
    assert in_cone(IntegerMultiset(), 123)
    # a singleton strictly below the center is never a member
    assert not in_cone(ms(1), 2)


def test_in_cone_interval_members():
    for c in range(-3, 4):
        for n in range(1, 5):
            assert in_cone(interval(c - n, c + n), c)


def test_cone_subset_check():
    m = ms(2, 4, 6)  # member at center 4
    for c in (3, 2, 1, 0):
        assert in_cone(m, c)
    assert cone_subset_check(3, m)
    assert cone_subset_check(-1, ms(0))
    assert cone_subset_check(0, interval(-1, 3))  # radius 2 interval at center 1
    with pytest.raises(ConeMembershipError):
        cone_subset_check(5, m)  # m is not a member at center 6


def test_decompose_cone_examples():
    d = decompose_cone(ms(2, 4, 6), 4)
    assert d.singletons == () and d.radii == ((2, 1),)
    d = decompose_cone(ms(7), 7)
    assert d.singletons == ((7, 1),) and d.radii == ()
    d = decompose_cone(ms(1, 3, 5), 3)
    assert d.radii == ((2, 1),) and d.singletons == ()


def test_decompose_cone_mixed():
    m = munion(interval(-1, 3), munion(interval(0, 2), ms(5, 5, 1)))
    d = decompose_cone(m, 1)
    assert d.recompose() == m
    assert d.radii == ((1, 1), (2, 1))
    assert d.singletons == ((1, 1), (5, 2))


def test_decompose_cone_rejects_nonmembers():
    with pytest.raises(ConeMembershipError) as err:
        decompose_cone(ms(0, 3), 2)
    assert err.value.center == 2
    assert "mult(" in str(err.value)


def test_decompose_recompose_roundtrip():
    rng = random.Random(12)
    for _ in range(150):
        c = rng.randint(-4, 6)
        m = random_cone_member(rng, c)
        d = decompose_cone(m, c)
        assert d.recompose() == m
        # canonical decomposition is a fixed point
        assert decompose_cone(d.recompose(), c) == d


def test_cone_decomposition_validation():
    with pytest.raises(ValueError):
        ConeDecomposition(center=3, singletons=((2, 1),), radii=())
    with pytest.raises(ValueError):
        ConeDecomposition(center=3, singletons=(), radii=((0, 1),))
    with pytest.raises(ValueError):
        ConeDecomposition(center=3, singletons=((3, 0),), radii=())


def test_sum_of_cone_members_stays_in_cone():
    rng = random.Random(13)
    for _ in range(100):
        c1, c2 = rng.randint(-3, 5), rng.randint(-3, 5)
        m1, m2 = random_cone_member(rng, c1), random_cone_member(rng, c2)
        assert in_cone(msum(m1, m2), c1 + c2)


def test_left_action_matches_interval_sum():
    rng = random.Random(14)
    for _ in range(100):
        c = rng.randint(-3, 5)
        i = rng.randint(0, 6)
        m = random_cone_member(rng, c)
        summed = msum(interval(-i, i), m)
        assert to_tilde(summed) == left_mul_h(i, to_tilde(m))
        assert in_cone(summed, c)


def test_fold_of_cone_member_is_nonnegative():
    rng = random.Random(15)
    for _ in range(100):
        c = rng.randint(0, 6)
        m = random_cone_member(rng, c)
        assert to_tilde(m).fold().all_nonnegative()
        lo = m.min_element()
        bound = 0 if lo is None or lo >= 0 else -lo
        for i in range(bound + 2):
            assert m.mult(i) >= m.mult(-i - 2)


def test_to_tilde():
    assert to_tilde(ms(2, 4, 6)) == basis(2) + basis(4) + basis(6)
    assert to_tilde(IntegerMultiset()) == TildeElement.zero()
    assert to_tilde(ms(0, 0)) == 2 * basis(0)
