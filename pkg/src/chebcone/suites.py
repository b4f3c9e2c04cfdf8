"""Named verification suites behind the `verify` command.

Every suite returns a list of CheckResult records; nothing raises on a
failed identity, so a run always produces the full report.  Randomized
suites draw from a Random seeded with the user seed plus the suite
label, which makes reports byte-reproducible.
"""

from __future__ import annotations

import random

from . import laurent_oracle as oracle
from . import multiset_cone as mc
from . import recurrence_engine as engine
from .certifier import certify_pair
from .recurrence_engine import CheckResult
from .tilde_ring import TildeElement, basis, left_mul_h, mul, random_element, w0, w1

SUITE_NAMES = (
    "lemmas",
    "w-theorem",
    "multiset",
    "cone",
    "shift",
    "positivity",
    "cross",
    "oracle",
)

DEFAULT_DEPTH = 3
DEFAULT_TRIALS = 200
DEFAULT_CROSS_TRIALS = 500
DEFAULT_PAIR_BOUND = 8
DEFAULT_TRIPLE_BOUND = 6


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def _exhaustive(name: str, failures: list, total: int, scope: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)} of {total} failed, first at {failures[0]}")
    return CheckResult(name, True, f"{scope}, {total} cases")


def suite_lemmas(pair_bound: int = DEFAULT_PAIR_BOUND,
                 triple_bound: int = DEFAULT_TRIPLE_BOUND) -> list[CheckResult]:
    """Exhaustive two- and three-factor product identities on basis symbols."""
    results = []

    span = range(-pair_bound, pair_bound + 1)
    bad_sum, bad_diff = [], []
    for a in span:
        for b in span:
            if mul(basis(a), basis(b)) - mul(basis(a - 1), basis(b - 1)) != basis(a + b):
                bad_sum.append((a, b))
            if mul(basis(a), basis(b)) - mul(basis(a - 1), basis(b + 1)) != basis(b - a):
                bad_diff.append((a, b))
    total = len(span) ** 2
    scope = f"A,B in [{-pair_bound},{pair_bound}]"
    results.append(_exhaustive("lemmas/pair-sum", bad_sum, total, scope))
    results.append(_exhaustive("lemmas/pair-diff", bad_diff, total, scope))

    span3 = range(-triple_bound, triple_bound + 1)
    bad_t_sum, bad_t_mixed = [], []
    h1 = basis(1)
    for b in span3:
        hb = basis(b)
        for a1 in span3:
            for a2 in span3:
                # products grouped left to right, as displayed
                lhs = mul(mul(hb, basis(a1)), basis(a2)) - mul(
                    mul(hb, basis(a1 - 1)), basis(a2 - 1)
                )
                if lhs != mul(hb, basis(a1 + a2)):
                    bad_t_sum.append((a1, a2, b))
                lhs2 = (
                    mul(mul(basis(a1), hb), basis(a2 - 1))
                    + mul(mul(basis(a1 - 1), hb), basis(a2))
                    - mul(mul(mul(basis(a1 - 1), h1), hb), basis(a2 - 1))
                )
                if lhs2 != mul(hb, basis(a1 + a2 - 1)):
                    bad_t_mixed.append((a1, a2, b))
    total3 = len(span3) ** 3
    scope3 = f"A1,A2,B in [{-triple_bound},{triple_bound}]"
    results.append(_exhaustive("lemmas/triple-sum", bad_t_sum, total3, scope3))
    results.append(_exhaustive("lemmas/triple-mixed", bad_t_mixed, total3, scope3))
    return results


def suite_w_theorem(trials: int = DEFAULT_TRIALS, seed: int = 0) -> list[CheckResult]:
    """w1 equals the downward shift of w0 on seeded random triples."""
    rng = _rng(seed, "w-theorem")
    bad_shift, bad_assoc = [], []
    for t in range(trials):
        g1, g2, g3 = (random_element(rng) for _ in range(3))
        if w1(g1, g2, g3) != w0(g1, g2, g3).shift(-1):
            bad_shift.append(t)
        if mul(mul(g1, g2), g3) != mul(g1, mul(g2, g3)):
            bad_assoc.append(t)
    return [
        _exhaustive("w-theorem/shift-identity", bad_shift, trials, "random triples"),
        _exhaustive(
            "w-theorem/associativity-empirical", bad_assoc, trials, "random triples"
        ),
    ]


def suite_multiset(depth: int = DEFAULT_DEPTH, trials: int = DEFAULT_TRIALS,
                   seed: int = 0) -> list[CheckResult]:
    """Multiset-calculus lemmas on seeded random instances, plus the
    raw-versus-closed agreement of the recurrence families."""
    results = []
    rng = _rng(seed, "multiset")

    bad = []
    for t in range(trials):
        a1 = rng.randint(-8, 8)
        b1 = a1 + 2 * rng.randint(0, 6)
        a2 = rng.randint(-8, 8)
        b2 = a2 + 2 * rng.randint(0, 6)
        parts = mc.interval_sum_decompose(a1, b1, a2, b2)
        rebuilt = mc.IntegerMultiset()
        for lo, hi in parts:
            rebuilt = mc.munion(rebuilt, mc.interval(lo, hi))
        if rebuilt != mc.msum(mc.interval(a1, b1), mc.interval(a2, b2)):
            bad.append((t, (a1, b1, a2, b2)))
    results.append(_exhaustive("multiset/interval-sum-decompose", bad, trials, "random interval pairs"))

    bad = []
    for t in range(trials):
        c1, c2 = rng.randint(-3, 6), rng.randint(-3, 6)
        m1 = mc.random_cone_member(rng, c1)
        m2 = mc.random_cone_member(rng, c2)
        if not mc.in_cone(mc.msum(m1, m2), c1 + c2):
            bad.append((t, (c1, c2)))
    results.append(_exhaustive("multiset/cone-sum", bad, trials, "random cone pairs"))

    bad = []
    for t in range(trials):
        c = rng.randint(-3, 6)
        m = mc.random_cone_member(rng, c + 1)
        if not mc.cone_subset_check(c, m):
            bad.append((t, c))
    results.append(_exhaustive("multiset/cone-subset", bad, trials, "random members"))

    bad = []
    for t in range(trials):
        c = rng.randint(-3, 6)
        i = rng.randint(0, 6)
        m = mc.random_cone_member(rng, c)
        summed = mc.msum(mc.interval(-i, i), m)
        if mc.to_tilde(summed) != left_mul_h(i, mc.to_tilde(m)):
            bad.append((t, (i, c)))
        elif m and not mc.in_cone(summed, c):
            bad.append((t, (i, c)))
    results.append(_exhaustive("multiset/left-action", bad, trials, "random members"))

    bad = []
    for t in range(trials):
        c = rng.randint(0, 6)
        m = mc.random_cone_member(rng, c)
        folded = mc.to_tilde(m).fold()
        profile_ok = all(
            m.mult(i) >= m.mult(-i - 2) for i in range(0, abs(min(m.min_element() or 0, 0)) + 3)
        )
        if not folded.all_nonnegative() or not profile_ok:
            bad.append((t, c))
    results.append(_exhaustive("multiset/fold-positivity", bad, trials, "random members, c >= 0"))

    bad = []
    for t in range(trials):
        c = rng.randint(-3, 6)
        m = mc.random_cone_member(rng, c)
        d = mc.decompose_cone(m, c)
        if d.recompose() != m or mc.decompose_cone(d.recompose(), c) != d:
            bad.append((t, c))
    results.append(_exhaustive("multiset/decompose-roundtrip", bad, trials, "random members"))

    report = engine.check_structure(depth)
    results.extend(r for r in report.results if r.name.startswith("closed/"))
    return results


def suite_cone(depth: int = DEFAULT_DEPTH) -> list[CheckResult]:
    """Cone membership of both witness families, with recomposing certificates."""
    report = engine.check_structure(depth)
    return [r for r in report.results if r.name.startswith("cone/")]


def suite_shift(depth: int = DEFAULT_DEPTH) -> list[CheckResult]:
    """Shift-ladder identities between slots, plus the vanishing extra term."""
    report = engine.check_structure(depth)
    return [r for r in report.results if r.name.startswith("shift/")]


def suite_positivity(depth: int = DEFAULT_DEPTH) -> list[CheckResult]:
    """Every folded coefficient of every family element is non-negative."""
    results = []
    for n in range(depth + 1):
        for j in engine.VALID_J:
            cone_cert, pos_certs = certify_pair(n, j)
            for pc in pos_certs:
                results.append(
                    CheckResult(
                        f"positivity/nonnegative(n={n},i={pc.i},j={j})",
                        pc.all_nonnegative,
                        f"{len(pc.coefficients)} coefficients, cone bound {pc.cone_bound}",
                    )
                )
            results.append(
                CheckResult(
                    f"positivity/cone-implication(n={n},j={j})",
                    cone_cert.recomposition_ok,
                    f"center {cone_cert.center}",
                )
            )
    return results


def suite_cross(trials: int = DEFAULT_CROSS_TRIALS, seed: int = 0) -> list[CheckResult]:
    """Evaluation is multiplicative on seeded random element pairs."""
    rng = _rng(seed, "cross")
    bad = [t for t in range(trials)
           if not oracle.cross_check(random_element(rng), random_element(rng))]
    return [_exhaustive("cross/multiplicative", bad, trials, "random pairs")]


def suite_oracle(depth: int = DEFAULT_DEPTH, trials: int = DEFAULT_TRIALS,
                 seed: int = 0,
                 pair_bound: int = DEFAULT_PAIR_BOUND,
                 triple_bound: int = DEFAULT_TRIPLE_BOUND) -> list[CheckResult]:
    """Re-verification of the product identities inside the commutative
    oracle algebra, plus palindromicity, the t = 1 mass identity and the
    max-index growth law."""
    results = []
    U = oracle.eval_basis
    lm = oracle.lmul

    span = range(-pair_bound, pair_bound + 1)
    bad_sum, bad_diff = [], []
    for a in span:
        for b in span:
            if lm(U(a), U(b)) - lm(U(a - 1), U(b - 1)) != U(a + b):
                bad_sum.append((a, b))
            if lm(U(a), U(b)) - lm(U(a - 1), U(b + 1)) != U(b - a):
                bad_diff.append((a, b))
    total = len(span) ** 2
    scope = f"A,B in [{-pair_bound},{pair_bound}]"
    results.append(_exhaustive("oracle/pair-sum", bad_sum, total, scope))
    results.append(_exhaustive("oracle/pair-diff", bad_diff, total, scope))

    span3 = range(-triple_bound, triple_bound + 1)
    bad_t_sum, bad_t_mixed = [], []
    for b in span3:
        for a1 in span3:
            for a2 in span3:
                ub = U(b)
                if lm(lm(ub, U(a1)), U(a2)) - lm(lm(ub, U(a1 - 1)), U(a2 - 1)) != lm(ub, U(a1 + a2)):
                    bad_t_sum.append((a1, a2, b))
                lhs = (
                    lm(lm(U(a1), ub), U(a2 - 1))
                    + lm(lm(U(a1 - 1), ub), U(a2))
                    - lm(lm(lm(U(a1 - 1), U(1)), ub), U(a2 - 1))
                )
                if lhs != lm(ub, U(a1 + a2 - 1)):
                    bad_t_mixed.append((a1, a2, b))
    total3 = len(span3) ** 3
    scope3 = f"A1,A2,B in [{-triple_bound},{triple_bound}]"
    results.append(_exhaustive("oracle/triple-sum", bad_t_sum, total3, scope3))
    results.append(_exhaustive("oracle/triple-mixed", bad_t_mixed, total3, scope3))

    rng = _rng(seed, "oracle")
    bad_w, bad_pal = [], []
    for t in range(trials):
        g1, g2, g3 = (random_element(rng) for _ in range(3))
        lhs = oracle.evaluate(w1(g1, g2, g3))
        rhs = oracle.evaluate(w0(g1, g2, g3).shift(-1))
        if lhs != rhs:
            bad_w.append(t)
        if not oracle.evaluate(g1).is_palindromic():
            bad_pal.append(t)
    results.append(_exhaustive("oracle/w-shift-evaluated", bad_w, trials, "random triples"))

    for n in range(depth + 1):
        for j in engine.VALID_J:
            if not oracle.evaluate(engine.raw_element(n, 0, j)).is_palindromic():
                bad_pal.append(f"family(n={n},j={j})")
    results.append(
        _exhaustive("oracle/palindromic", bad_pal, trials, "random and family elements")
    )

    bad_mass = []
    for n in range(min(depth, 3) + 1):
        g = engine.e0_raw(n, 0)
        if oracle.evaluate(g).at_one() != oracle.weighted_mass(g):
            bad_mass.append(n)
    results.append(
        _exhaustive("oracle/weighted-mass-at-one", bad_mass, min(depth, 3) + 1, "leading family")
    )

    bad_max = []
    for n in range(1, depth + 1):
        if engine.e0_closed(n).M.max_element() != 2 * 3**n:
            bad_max.append(n)
    results.append(
        _exhaustive("oracle/max-index-law", bad_max, depth, "max index equals 2*3^n")
    )
    return results


def run_suites(names: list[str], depth: int | None, trials: int | None,
               seed: int = 0) -> list[tuple[str, list[CheckResult]]]:
    """Run the named suites with shared defaults and return (name, results) pairs."""
    d = DEFAULT_DEPTH if depth is None else depth
    out: list[tuple[str, list[CheckResult]]] = []
    for name in names:
        if name == "lemmas":
            pair_bound = DEFAULT_PAIR_BOUND if depth is None else depth
            triple_bound = min(DEFAULT_TRIPLE_BOUND, pair_bound)
            res = suite_lemmas(pair_bound, triple_bound)
        elif name == "w-theorem":
            res = suite_w_theorem(DEFAULT_TRIALS if trials is None else trials, seed)
        elif name == "multiset":
            res = suite_multiset(d, DEFAULT_TRIALS if trials is None else trials, seed)
        elif name == "cone":
            res = suite_cone(d)
        elif name == "shift":
            res = suite_shift(d)
        elif name == "positivity":
            res = suite_positivity(d)
        elif name == "cross":
            res = suite_cross(DEFAULT_CROSS_TRIALS if trials is None else trials, seed)
        elif name == "oracle":
            res = suite_oracle(d, DEFAULT_TRIALS if trials is None else trials, seed)
        else:
            raise ValueError(f"unknown suite {name!r}")
        out.append((name, res))
    return out
