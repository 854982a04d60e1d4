"""Exact arithmetic in the degree-4 cyclotomic field Q[z]/(z^4 - z^2 + 1)."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macmahon.cyclotomic import (
    Cyclotomic12,
    I_SQRT3,
    ONE,
    Z,
    ZERO,
    ZETA3,
    ZETA4,
    ZETA6,
    cyclotomic_inverse,
)


def rat(p, q=1):
    return Cyclotomic12.from_rational(Fraction(p, q))


class TestEmbeddedRoots:
    """The named constants must satisfy their defining equations."""

    def test_z_is_a_primitive_twelfth_root(self):
        assert Z**6 == rat(-1)
        assert Z**12 == ONE
        # no smaller power of z returns to 1
        for n in range(1, 12):
            assert Z**n != ONE

    def test_zeta3_is_a_primitive_cube_root(self):
        assert ZETA3**3 == ONE
        assert ZETA3 != ONE
        assert ZETA3**2 != ONE

    def test_zeta4_squares_to_minus_one(self):
        assert ZETA4**2 == rat(-1)

    def test_zeta6_is_a_primitive_sixth_root(self):
        assert ZETA6**6 == ONE
        assert ZETA6**3 == rat(-1)
        assert ZETA6**2 == ZETA3

    def test_i_sqrt3_squares_to_minus_three(self):
        assert I_SQRT3**2 == rat(-3)
        assert I_SQRT3 == ZETA6 * 2 - ONE

    def test_cube_roots_of_unity_sum_to_zero(self):
        assert ONE + ZETA3 + ZETA3**2 == ZERO

    def test_i_sqrt3_is_zeta4_times_sqrt3(self):
        # (i*sqrt3) / i should square to 3
        root3 = I_SQRT3 * ZETA4.inverse()
        assert root3**2 == rat(3)


class TestInverses:
    def test_inverse_of_z(self):
        assert Z.inverse() == Z - Z**3
        assert Z * Z.inverse() == ONE

    def test_inverse_of_i_sqrt3(self):
        inv = I_SQRT3.inverse()
        assert inv == Cyclotomic12(Fraction(1, 3), 0, Fraction(-2, 3), 0)
        assert inv * I_SQRT3 == ONE

    def test_inverse_of_named_constants(self):
        for x in (ONE, Z, ZETA3, ZETA4, ZETA6, I_SQRT3, rat(-7, 3)):
            assert x * x.inverse() == ONE
            assert cyclotomic_inverse(x) == x.inverse()

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_zeta_inverses_match_conjugate_powers(self):
        # 1/zeta3 = zeta3^2 = -z^2 and 1/zeta6 = zeta6^5 = 1 - z^2
        assert ZETA3.inverse() == Cyclotomic12(0, 0, -1, 0)
        assert ZETA6.inverse() == Cyclotomic12(1, 0, -1, 0)

    def test_negative_powers(self):
        assert Z**-1 == Z.inverse()
        assert ZETA3**-2 == ZETA3
        assert I_SQRT3**-2 == rat(-1, 3)

    def test_division(self):
        assert (ZETA3 / ZETA6) == ZETA3 * ZETA6.inverse()
        assert (rat(1) / I_SQRT3) * I_SQRT3 == ONE


class TestConjugation:
    """conj sends z to 1/z, the restriction of complex conjugation."""

    def test_fixes_rationals(self):
        assert rat(5, 7).conj() == rat(5, 7)

    def test_is_an_involution(self):
        x = Cyclotomic12(1, Fraction(2, 3), -4, Fraction(5, 11))
        assert x.conj().conj() == x

    def test_swaps_zeta3_with_its_inverse(self):
        assert ZETA3.conj() == ZETA3.inverse()
        assert ZETA6.conj() == ZETA6.inverse()
        assert ZETA4.conj() == -ZETA4

    def test_negates_i_sqrt3(self):
        assert I_SQRT3.conj() == -I_SQRT3

    def test_is_multiplicative(self):
        x = Cyclotomic12(1, 2, 3, 4)
        y = Cyclotomic12(Fraction(-1, 2), 0, 5, 1)
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()

    def test_norm_to_the_real_subfield_is_real(self):
        x = Cyclotomic12(1, 1, 0, -2)
        n = x * x.conj()
        assert n.conj() == n


class TestScalarInterop:
    def test_equality_with_plain_numbers(self):
        assert ONE == 1
        assert rat(3, 2) == Fraction(3, 2)
        assert Z != 1
        assert ZERO == 0

    def test_hash_agrees_with_equal_rationals(self):
        assert hash(rat(7)) == hash(Cyclotomic12(Fraction(14, 2)))

    def test_mixed_arithmetic_with_ints_and_fractions(self):
        assert 1 + ZETA3 + ZETA3**2 == 0
        assert (2 * Z) - Z == Z
        assert Z * Fraction(1, 2) + Z * Fraction(1, 2) == Z
        assert 1 - ZETA6 == ZETA6.conj()

    def test_one_minus_zeta6_value(self):
        assert ONE - ZETA6 == Cyclotomic12(1, 0, -1, 0)

    def test_as_rational(self):
        assert rat(9, 4).as_rational() == Fraction(9, 4)
        assert Z.as_rational() is None
        assert I_SQRT3.as_rational() is None

    def test_bool(self):
        assert not ZERO
        assert Z
        assert rat(0, 5) == ZERO


class TestSerialization:
    def test_to_string_format(self):
        x = Cyclotomic12(Fraction(1, 3), 0, Fraction(-2, 3), 0)
        assert x.to_string() == "1/3 + 0*z + -2/3*z^2 + 0*z^3"

    def test_round_trip(self):
        for x in (ZERO, ONE, Z, ZETA3, I_SQRT3,
                  Cyclotomic12(Fraction(-5, 7), 2, Fraction(1, 9), -3)):
            assert Cyclotomic12.parse(x.to_string()) == x

    def test_parse_bare_rational(self):
        assert Cyclotomic12.parse("-3/4") == rat(-3, 4)
        assert Cyclotomic12.parse("2") == rat(2)

    def test_parse_rejects_malformed(self):
        with pytest.raises(ValueError):
            Cyclotomic12.parse("1 + 2*z + 3*z^2")
        with pytest.raises(ValueError):
            Cyclotomic12.parse("1 + 2*w + 3*w^2 + 4*w^3")


rationals = st.fractions(min_value=-40, max_value=40, max_denominator=12)
elements = st.builds(Cyclotomic12, rationals, rationals, rationals, rationals)


class TestFieldAxioms:
    @given(elements, elements, elements)
    def test_multiplication_associative(self, x, y, w):
        assert (x * y) * w == x * (y * w)

    @given(elements, elements)
    def test_multiplication_commutative(self, x, y):
        assert x * y == y * x

    @given(elements, elements, elements)
    def test_distributive(self, x, y, w):
        assert x * (y + w) == x * y + x * w

    @given(elements)
    def test_additive_inverse(self, x):
        assert x + (-x) == ZERO
        assert x - x == ZERO

    @given(elements)
    def test_multiplicative_inverse(self, x):
        if x != ZERO:
            assert x * x.inverse() == ONE

    @given(elements)
    def test_conjugation_commutes_with_inverse(self, x):
        if x != ZERO:
            assert x.inverse().conj() == x.conj().inverse()
