"""Number-theoretic scalars: Bernoulli and L-values, characters, Stirling
and Eulerian numbers.

Every family is pinned twice: a handful of frozen literals, and an
independent combinatorial or generating-function oracle over a range.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from macmahon.arith import (
    CHARACTERS,
    CHI_3_2,
    CHI_4_2,
    TRIVIAL,
    bernoulli,
    character_value,
    eulerian_polynomial,
    generalized_bernoulli,
    l_nonpositive,
    stirling_first_unsigned,
    stirling_second,
    zeta_nonpositive,
)
from macmahon.polynomials import Polynomial
from macmahon.series import TruncatedSeries


def set_partitions(items):
    """All partitions of a list into nonempty blocks."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def bernoulli_polynomial(k, x):
    return sum(comb(k, j) * bernoulli(j) * x ** (k - j) for j in range(k + 1))


class TestBernoulli:
    def test_first_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_values_vanish(self):
        for n in range(3, 21, 2):
            assert bernoulli(n) == 0

    def test_against_stirling_formula(self):
        # B_n = sum_k (-1)^k k! S(n,k) / (k+1), valid with B_1 = -1/2
        for n in range(21):
            expect = sum(
                Fraction((-1) ** k * factorial(k) * stirling_second(n, k), k + 1)
                for k in range(n + 1)
            )
            assert bernoulli(n) == expect


class TestZeta:
    def test_literals(self):
        assert zeta_nonpositive(1) == Fraction(-1, 2)   # zeta(0)
        assert zeta_nonpositive(2) == Fraction(-1, 12)  # zeta(-1)
        assert zeta_nonpositive(4) == Fraction(1, 120)  # zeta(-3)

    def test_trivial_zeros(self):
        for k in (3, 5, 7, 9):
            assert zeta_nonpositive(k) == 0

    def test_rejects_nonpositive_k(self):
        with pytest.raises(ValueError):
            zeta_nonpositive(0)


class TestCharacters:
    def test_value_tables(self):
        assert [CHI_3_2(m) for m in range(7)] == [0, 1, -1, 0, 1, -1, 0]
        assert [CHI_4_2(m) for m in range(9)] == [0, 1, 0, -1, 0, 1, 0, -1, 0]
        assert all(TRIVIAL(m) == 1 for m in range(-5, 6))

    def test_periodicity(self):
        for char in (CHI_3_2, CHI_4_2):
            for m in range(-30, 30):
                assert char(m) == char(m + char.modulus)

    def test_complete_multiplicativity(self):
        for char in (CHI_3_2, CHI_4_2, TRIVIAL):
            for m in range(1, 25):
                for n in range(1, 25):
                    assert char(m * n) == char(m) * char(n)

    def test_both_nontrivial_characters_are_odd(self):
        assert CHI_3_2.is_odd
        assert CHI_4_2.is_odd
        assert not TRIVIAL.is_odd

    def test_registry(self):
        assert set(CHARACTERS) == {"trivial", "chi_3_2", "chi_4_2"}
        assert CHARACTERS["chi_3_2"] is CHI_3_2
        assert character_value(CHI_4_2, 7) == -1


class TestLValues:
    def test_literals(self):
        assert l_nonpositive(CHI_4_2, 1) == Fraction(1, 2)   # L(chi_4, 0)
        assert l_nonpositive(CHI_3_2, 1) == Fraction(1, 3)   # L(chi_3, 0)
        assert l_nonpositive(CHI_4_2, 3) == Fraction(-1, 2)  # L(chi_4, -2)

    def test_generalized_bernoulli_against_polynomial_oracle(self):
        # B_{k,chi} = N^(k-1) sum_a chi(a) B_k(a/N)
        for char in (CHI_3_2, CHI_4_2):
            N = char.modulus
            for k in range(1, 13):
                expect = N ** (k - 1) * sum(
                    char(a) * bernoulli_polynomial(k, Fraction(a, N))
                    for a in range(1, N + 1)
                )
                assert generalized_bernoulli(char, k) == expect

    def test_even_k_vanishes_for_odd_characters(self):
        for char in (CHI_3_2, CHI_4_2):
            for k in range(2, 13, 2):
                assert generalized_bernoulli(char, k) == 0
                assert l_nonpositive(char, k) == 0

    def test_rejects_trivial_character(self):
        with pytest.raises(ValueError):
            l_nonpositive(TRIVIAL, 1)
        with pytest.raises(ValueError):
            generalized_bernoulli(TRIVIAL, 2)

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            generalized_bernoulli(CHI_3_2, 0)


class TestStirling:
    def test_second_kind_literals(self):
        assert stirling_second(3, 2) == 3
        assert stirling_second(4, 2) == 7
        assert stirling_second(5, 5) == 1
        assert stirling_second(5, 0) == 0

    def test_first_kind_literals(self):
        assert stirling_first_unsigned(4, 2) == 11
        for n in range(1, 9):
            assert stirling_first_unsigned(n, 1) == factorial(n - 1)

    def test_first_kind_row_sums(self):
        for n in range(1, 9):
            assert sum(stirling_first_unsigned(n, r) for r in range(n + 1)) == factorial(n)

    def test_second_kind_by_block_enumeration(self):
        for n in range(7):
            counts = {}
            for part in set_partitions(list(range(n))):
                counts[len(part)] = counts.get(len(part), 0) + 1
            for r in range(n + 2):
                assert stirling_second(n, r) == counts.get(r, 0)

    def test_first_kind_by_cycle_enumeration(self):
        for n in range(7):
            counts = {}
            for perm in permutations(range(n)):
                c = cycle_count(perm)
                counts[c] = counts.get(c, 0) + 1
            if n == 0:
                counts[0] = 1
            for r in range(n + 2):
                assert stirling_first_unsigned(n, r) == counts.get(r, 0)


def descents(perm):
    return sum(1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


class TestEulerian:
    def test_small_polynomials(self):
        assert eulerian_polynomial(0) == Polynomial([1])
        assert eulerian_polynomial(1) == Polynomial([1])
        assert eulerian_polynomial(2) == Polynomial([1, 1])
        assert eulerian_polynomial(3) == Polynomial([1, 4, 1])
        assert eulerian_polynomial(5) == Polynomial([1, 26, 66, 26, 1])

    def test_by_descent_enumeration(self):
        for n in range(1, 7):
            counts = [0] * n
            for perm in permutations(range(n)):
                counts[descents(perm)] += 1
            poly = eulerian_polynomial(n)
            for j in range(n):
                assert poly.coeff(j) == counts[j]

    def test_row_sums_and_symmetry(self):
        for n in range(1, 21):
            coeffs = eulerian_polynomial(n).coeffs
            assert sum(coeffs) == factorial(n)
            assert list(coeffs) == list(reversed(coeffs))

    def test_power_sum_generating_function(self):
        # sum_{m>=1} m^n t^m = t P_n(t) / (1-t)^(n+1), compared to order 50
        order = 50
        one_minus_t = TruncatedSeries([1, -1], order)
        for n in range(9):
            poly = eulerian_polynomial(n)
            rhs = TruncatedSeries(poly.coeffs, order).shift(1) * (
                one_minus_t ** (n + 1)
            ).invert()
            lhs = TruncatedSeries([m**n for m in range(order)], order)
            if n == 0:
                # m^0 = 1 for every m >= 1 but the m=0 term is absent
                lhs = TruncatedSeries([0] + [1] * (order - 1), order)
            assert lhs == rhs

    def test_stirling_eulerian_inversion(self):
        # (r-1)! = sum_k [r-1, k-1] P_{k-1}(t) (1-t)^(r-k), exactly in t
        t = Polynomial([0, 1])
        for r in range(1, 13):
            total = Polynomial([])
            for k in range(1, r + 1):
                total = total + (
                    eulerian_polynomial(k - 1)
                    * (Polynomial([1]) - t) ** (r - k)
                    * stirling_first_unsigned(r - 1, k - 1)
                )
            assert total == Polynomial([factorial(r - 1)])
