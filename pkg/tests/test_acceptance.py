"""Acceptance suite: twelve end-to-end criteria, one test each.

Every test prints a single PASS/FAIL line (visible under pytest -s or when
running this file directly) and enforces both exact equality and a wall-clock
budget.  All arithmetic is exact; there are no tolerances anywhere.
"""

import random
import time
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from macmahon.arith import (
    CHI_3_2,
    CHI_4_2,
    eulerian_polynomial,
    stirling_first_unsigned,
)
from macmahon.cyclotomic import I_SQRT3, ZETA3, ZETA6
from macmahon.decompose import (
    SymmetricNumerator,
    decompose_a0,
    decompose_a1,
    decompose_a2,
    decompose_am1,
    decompose_ukk,
    partial_fractions,
    stirling_transform,
    verify_decomposition,
)
from macmahon.eisenstein import (
    Generator,
    QmfExpression,
    expression_series,
    f_series,
    g_chi_series,
)
from macmahon.identities import (
    CongruenceClaim,
    binomial_identity_check,
    congruence_scan,
    exp_identity_check,
    explicit_identity_check,
    generating_function_check,
    isobaric_check,
    jacobi_triple_product_check,
    limit_check,
    limit_product,
    general_limit_check,
)
from macmahon.polynomials import Polynomial, X
from macmahon.quasishuffle import ShuffleSum, evaluate, quasi_shuffle
from macmahon.series import TruncatedSeries
from macmahon.sums import u_series

A_GRID = (-2, -1, 0, 1, 2)


def _finish(number, description, budget, started, failures):
    elapsed = time.monotonic() - started
    ok = not failures and elapsed < budget
    print(f"ACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'}: "
          f"{description} [{elapsed:.2f}s / {budget}s]")
    assert not failures, f"criterion {number}: {failures[:5]}"
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"


def _reference_k2_decomposition(a):
    """The four frozen weight-two reference decompositions."""
    table = {
        0: (Fraction(-1, 8), [(1, (2, "trivial", 2)), (-4, (2, "trivial", 4))]),
        2: (Fraction(-1, 32), [(Fraction(1, 6), (2, "trivial", 1)),
                               (Fraction(-2, 3), (2, "trivial", 2)),
                               (Fraction(-1, 6), (4, "trivial", 1)),
                               (Fraction(8, 3), (4, "trivial", 2))]),
        1: (Fraction(-1, 18), [(Fraction(1, 3), (2, "trivial", 1)),
                               (-3, (2, "trivial", 3)),
                               (Fraction(-1, 3), (1, "chi_3_2", 1))]),
        -1: (Fraction(-1, 2), [(Fraction(-1, 3), (2, "trivial", 1)),
                               (Fraction(4, 3), (2, "trivial", 2)),
                               (3, (2, "trivial", 3)),
                               (-12, (2, "trivial", 6)),
                               (Fraction(1, 3), (1, "chi_3_2", 1)),
                               (Fraction(2, 3), (1, "chi_3_2", 2))]),
    }
    constant, terms = table[a]
    return QmfExpression(constant, [(c, Generator(*g)) for c, g in terms])


def test_criterion_01_reference_identities():
    started = time.monotonic()
    failures = []
    order = 100

    for k in (1, 2):
        for a in A_GRID:
            single = u_series(1, k, k, a, order)
            lhs = u_series(2, k, k, a, order)
            rhs = single * single * Fraction(1, 2) \
                - u_series(1, 2 * k, 2 * k, a, order) * Fraction(1, 2)
            if lhs != rhs:
                failures.append(f"square formula k={k} a={a}")

    for a in (0, 2, 1, -1):
        expr = decompose_ukk(a, 2)
        if expr != _reference_k2_decomposition(a):
            failures.append(f"a={a} expression differs from the reference")
        elif expression_series(expr, order) != u_series(1, 2, 2, a, order):
            failures.append(f"a={a} expression fails the series oracle")

    _finish(1, "five reference identities hold to order 100", 5, started, failures)


def test_criterion_02_a0_family():
    started = time.monotonic()
    failures = []
    order = 64
    for k in range(1, 9):
        expr = decompose_a0(k)
        if expression_series(expr, order) != u_series(1, k, k, 0, order):
            failures.append(f"k={k} series mismatch")
        if expr.constant != Fraction(-1, 2 ** (k + 1)):
            failures.append(f"k={k} constant")
        if k % 2 and any(g.character == "trivial" for _, g in expr.terms):
            failures.append(f"k={k} odd case contains a trivial-character term")
    _finish(2, "a=0 decompositions k=1..8 verified to order 64", 10, started, failures)


def test_criterion_03_a2_family():
    started = time.monotonic()
    failures = []
    order = 64
    for k in range(1, 6):
        expr = decompose_a2(k)
        if expression_series(expr, order) != u_series(1, k, k, 2, order):
            failures.append(f"k={k} series mismatch")
        if expr.constant != Fraction(-1, 2 ** (2 * k + 1)):
            failures.append(f"k={k} constant")
    _finish(3, "a=2 decompositions k=1..5 verified to order 64", 10, started, failures)


def test_criterion_04_pole_pair_families():
    started = time.monotonic()
    failures = []
    order = 48
    for k in range(1, 7):
        numerators = [SymmetricNumerator.power(k)]
        numerators += [SymmetricNumerator.pair(k, r) for r in range(1, k)]
        for sn in numerators:
            q_one = sn.poly(1)
            for a, decomposer, zeta, constant in (
                (1, decompose_a1, ZETA3, Fraction(-q_one, 2 * 3**k)),
                (-1, decompose_am1, ZETA6, Fraction(-q_one, 2)),
            ):
                expr = decomposer(sn)
                report = verify_decomposition(expr, a, k, numerator=sn, order=order)
                if not report.equal:
                    failures.append(f"a={a} k={k} Q={sn.poly!r} oracle mismatch")
                if expr.constant != constant:
                    failures.append(f"a={a} k={k} Q={sn.poly!r} constant")
                top = stirling_transform(partial_fractions(sn, a))[k - 1]
                closed = (zeta**k * sn.poly(zeta.inverse())
                          * (I_SQRT3**k).inverse() * Fraction(1, factorial(k - 1)))
                if top != closed:
                    failures.append(f"a={a} k={k} Q={sn.poly!r} top weight")
    _finish(4, "pole-pair decompositions k=1..6 with power and pair numerators, "
               "order 48, constants and top weights", 60, started, failures)


def test_criterion_05_exponential_identity():
    started = time.monotonic()
    failures = []
    for k, r in ((1, 1), (2, 2), (2, 1), (3, 2)):
        for a in A_GRID:
            if not exp_identity_check(k, r, a, 6, 40).ok:
                failures.append(f"k={k} r={r} a={a}")
    _finish(5, "exponential identity to X^6, q-order 40, on the 4x5 grid",
            30, started, failures)


def test_criterion_06_isobaric_reconstruction():
    started = time.monotonic()
    failures = []
    for t in range(1, 7):
        for k in (1, 2):
            for a in A_GRID:
                if not isobaric_check(t, k, k, a, 40).ok:
                    failures.append(f"t={t} k={k} a={a}")
    _finish(6, "isobaric reconstruction t<=6, k<=2, five a values, order 40",
            30, started, failures)


def test_criterion_07_limit_agreement():
    started = time.monotonic()
    failures = []
    for t in range(1, 7):
        for k in range(1, 4):
            for r in range(1, 4):
                for a in A_GRID:
                    if not limit_check(t, k, r, a).ok:
                        failures.append(f"t={t} k={k} r={r} a={a}")

    displays = {
        0: [1, 1, 1, 2, 3, 4, 5, 7, 10],
        1: [1, 0, 0, 1, 0, 0, 2, 0, 0, 3, 0, 0, 5, 0, 0, 7, 0, 0, 11, 0, 0,
            15, 0, 0, 22],
        -1: [1, 2, 4, 7, 12, 20, 32, 50],
        2: [1, -1, 1, -2, 3, -4, 5, -7, 10, -13],
    }
    for a, expect in displays.items():
        got = limit_product(a, 1, 1, len(expect))
        if got.coeffs != expect:
            failures.append(f"display product a={a}")
    _finish(7, "limit agreement for t<=6, k<=3, r<=3, five a values, plus the "
               "four printed products", 60, started, failures)


def test_criterion_08_general_limit_branches():
    started = time.monotonic()
    failures = []
    p_polys = (
        ("x", X),
        ("2x", Polynomial([0, 2])),
        ("3x", Polynomial([0, 3])),
        ("x^2", X * X),
        ("x^2+x", X * X + X),
    )
    q_polys = (
        ("x", X),
        ("-2x+x^2", Polynomial([0, -2, 1])),
        ("x+x^3", X + Polynomial.monomial(1, 3)),
    )
    for p_text, p in p_polys:
        for q_text, q in q_polys:
            for k in (1, 2):
                for t in range(1, 5):
                    if not general_limit_check(p, q, t, k).ok:
                        failures.append(f"P={p_text} Q={q_text} k={k} t={t}")
    _finish(8, "generalized limits: linear and superlinear exponent branches "
               "over the full polynomial grid", 60, started, failures)


def test_criterion_09_explicit_identity():
    started = time.monotonic()
    failures = []
    order = 30
    for a in A_GRID:
        for t in range(1, 5):
            if not explicit_identity_check(a, t, order).ok:
                failures.append(f"a={a} t={t}")
    for t in range(1, 5):
        if not explicit_identity_check(-2, t, order, use_central_binomial=True).ok:
            failures.append(f"central t={t}")
    if not binomial_identity_check(12).ok:
        failures.append("binomial identity m<=12")
    _finish(9, "explicit tail identity to order 30 with the central-binomial "
               "route and the weight identity", 30, started, failures)


def test_criterion_10_generating_function_ingredients():
    started = time.monotonic()
    failures = []
    for a in A_GRID:
        if not generating_function_check(a, 4, 15).ok:
            failures.append(f"genfun a={a}")
    if not jacobi_triple_product_check(20, 5).ok:
        failures.append("triple product")
    _finish(10, "generating function to X^8, q^15, five a values; triple "
                "product to q^20, window 5", 20, started, failures)


def test_criterion_11_congruence_families():
    started = time.monotonic()
    failures = []
    families = []
    # t = 3m+1 +/- 1 for m = 1..3, weight-two chains, both parameter values
    progression_ts = [3 * m + 1 + s for m in (1, 2, 3) for s in (-1, 1)]
    families.append(("family-1", [(t, 2, 2, 1, 3, 3, 2) for t in progression_ts]))
    families.append(("family-2", [(t, 2, 2, -2, 3, 3, 2) for t in progression_ts]))
    families.append(("family-3", [(5, 2, 2, -2, 3, 3, 2)]))
    families.append(("family-4", [(2, 1, 1, 1, 4, 4, 1)]))
    families.append(("family-5", [(2, 1, 1, -1, 4, 4, 1)]))
    families.append(("family-6", [(2, 1, 1, 1, 8, 8, 5)]))
    families.append(("family-7", [(1, 3, 1, -2, 3, 9, 4)]))
    families.append(("family-8", [(1, 3, 1, -2, 7, 7, 2)]))
    families.append(("family-9", [(1, 3, 1, -2, 7, 8, 4)]))
    for label, members in families:
        for t, k, r, a, mod, step, residue in members:
            claim = CongruenceClaim(t, k, r, a, mod, step, residue)
            report = congruence_scan(claim, 300)
            if not report.ok:
                failures.append(f"{label}: {claim.claim} at n={report.witness['n']}")
    _finish(11, "nine congruence families hold for all arguments <= 300",
            120, started, failures)


def _random_shuffle_sum(rng):
    total = ShuffleSum.zero()
    for _ in range(rng.randint(1, 3)):
        w = tuple((rng.randint(1, 3), rng.randint(1, 3))
                  for _ in range(rng.randint(0, 3)))
        total = total + ShuffleSum.from_word(
            w, Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return total


def test_criterion_12_property_suites():
    started = time.monotonic()
    failures = []
    rng = random.Random(20260822)

    for i in range(200):
        u, v, w = (_random_shuffle_sum(rng) for _ in range(3))
        if quasi_shuffle(u, v) != quasi_shuffle(v, u):
            failures.append(f"commutativity case {i}")
        if quasi_shuffle(quasi_shuffle(u, v), w) != quasi_shuffle(u, quasi_shuffle(v, w)):
            failures.append(f"associativity case {i}")

    for i in range(50):
        u, v = _random_shuffle_sum(rng), _random_shuffle_sum(rng)
        a = A_GRID[i % len(A_GRID)]
        if evaluate(quasi_shuffle(u, v), a, 30) != evaluate(u, a, 30) * evaluate(v, a, 30):
            failures.append(f"homomorphism case {i}")

    order = 201
    for weight in (2, 4, 6, 8):
        series = f_series(weight, order)
        for n in range(1, order):
            expect = sum(d ** (weight - 1) for d in range(1, n + 1) if n % d == 0)
            if series.coeff(n) != expect:
                failures.append(f"divisor oracle weight {weight} n={n}")
                break
    for char in (CHI_3_2, CHI_4_2):
        for weight in (1, 3, 5):
            series = g_chi_series(char, weight, order)
            for n in range(1, order):
                expect = sum(char(d) * d ** (weight - 1)
                             for d in range(1, n + 1) if n % d == 0)
                if series.coeff(n) != expect:
                    failures.append(f"twisted oracle {char.name} weight {weight} n={n}")
                    break

    for n in range(1, 7):
        counts = [0] * n
        for perm in permutations(range(n)):
            counts[sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])] += 1
        poly = eulerian_polynomial(n)
        if [poly.coeff(j) for j in range(n)] != counts:
            failures.append(f"descent counts n={n}")
    for r in range(1, 11):
        total = Polynomial([])
        for k in range(1, r + 1):
            total = total + (eulerian_polynomial(k - 1)
                             * (Polynomial([1]) - X) ** (r - k)
                             * stirling_first_unsigned(r - 1, k - 1))
        if total != Polynomial([factorial(r - 1)]):
            failures.append(f"inversion identity r={r}")

    squares = u_series(1, 1, 1, 0, 201)
    counts = [0] * 201
    for x in range(-15, 16):
        for y in range(-15, 16):
            m = x * x + y * y
            if 0 < m <= 200:
                counts[m] += 1
    for n in range(1, 201):
        if squares.coeff(n) * 4 != counts[n]:
            failures.append(f"square count n={n}")
            break

    _finish(12, "randomized algebra laws, evaluation homomorphism, divisor "
                "oracles, permutation statistics, square counts", 60,
            started, failures)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            fn()
