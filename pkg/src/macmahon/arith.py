"""Exact number-theoretic scalars: Bernoulli numbers, zeta and Dirichlet
L-values at nonpositive integers, Stirling numbers, Eulerian polynomials,
and the two real primitive characters the decompositions use.

Conventions that matter downstream:

* bernoulli(1) = -1/2 (the convention under which the recurrence
  sum_{j<=k} C(k+1, j) B_j = 0 holds for k >= 1).
* zeta_nonpositive(k) returns zeta(1-k): -B_k/k for k >= 2 and the
  special value zeta(0) = -1/2 at k = 1.
* l_nonpositive(chi, k) returns L(chi, 1-k) = -B_{k,chi}/k, with the
  generalized Bernoulli number computed by exact truncated-series
  division of sum_a chi(a) t e^{at} by e^{Nt} - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .polynomials import Polynomial
from .series import TruncatedSeries

__all__ = [
    "DirichletCharacter",
    "TRIVIAL",
    "CHI_3_2",
    "CHI_4_2",
    "CHARACTERS",
    "character_value",
    "bernoulli",
    "zeta_nonpositive",
    "generalized_bernoulli",
    "l_nonpositive",
    "stirling_second",
    "stirling_first_unsigned",
    "eulerian_polynomial",
]


@dataclass(frozen=True)
class DirichletCharacter:
    """A real Dirichlet character given by its period of values."""

    name: str
    modulus: int
    values: tuple
    primitive: bool

    def __call__(self, m: int) -> int:
        return self.values[m % self.modulus]

    @property
    def is_odd(self) -> bool:
        return self(-1) == -1


TRIVIAL = DirichletCharacter("trivial", 1, (1,), False)
CHI_3_2 = DirichletCharacter("chi_3_2", 3, (0, 1, -1), True)
CHI_4_2 = DirichletCharacter("chi_4_2", 4, (0, 1, 0, -1), True)

CHARACTERS = {c.name: c for c in (TRIVIAL, CHI_3_2, CHI_4_2)}


def character_value(char: DirichletCharacter, m: int) -> int:
    """chi(m), by periodic table lookup."""
    return char(m)


_BERNOULLI = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """The k-th Bernoulli number, with B_1 = -1/2."""
    if k < 0:
        raise ValueError("bernoulli is defined for k >= 0")
    while len(_BERNOULLI) <= k:
        n = len(_BERNOULLI)
        s = sum(comb(n + 1, j) * _BERNOULLI[j] for j in range(n))
        _BERNOULLI.append(Fraction(-s, n + 1))
    return _BERNOULLI[k]


def zeta_nonpositive(k: int) -> Fraction:
    """zeta(1-k) for k >= 1; zero at the trivial zeros (odd k >= 3)."""
    if k < 1:
        raise ValueError("zeta_nonpositive is defined for k >= 1")
    if k == 1:
        return Fraction(-1, 2)
    return -bernoulli(k) / k


def generalized_bernoulli(char: DirichletCharacter, k: int) -> Fraction:
    """B_{k,chi} from the generating function sum_a chi(a) t e^{at} / (e^{Nt}-1).

    Both numerator and denominator vanish to first order in t, so the
    quotient is formed after cancelling one factor of t, with everything
    truncated at t-order k+2.
    """
    if not char.primitive or char.modulus < 2:
        raise ValueError("generalized Bernoulli numbers need a primitive character of modulus > 1")
    if k < 1:
        raise ValueError("generalized_bernoulli is defined for k >= 1")
    modulus = char.modulus
    length = k + 2
    # Coefficients of (numerator / t): sum_a chi(a) a^j / j!
    num = [
        Fraction(sum(char(a) * a**j for a in range(1, modulus + 1)), factorial(j))
        for j in range(length)
    ]
    # Coefficients of (e^{Nt} - 1) / t.
    den = [Fraction(modulus ** (j + 1), factorial(j + 1)) for j in range(length)]
    quotient = TruncatedSeries(num, length) * TruncatedSeries(den, length).invert()
    return quotient.coeff(k) * factorial(k)


_L_CACHE: dict = {}


def l_nonpositive(char: DirichletCharacter, k: int) -> Fraction:
    """L(chi, 1-k) = -B_{k,chi}/k for a primitive character of modulus > 1."""
    key = (char.name, k)
    if key not in _L_CACHE:
        _L_CACHE[key] = -generalized_bernoulli(char, k) / k
    return _L_CACHE[key]


_STIRLING2 = {(0, 0): 1}
_STIRLING1 = {(0, 0): 1}


def stirling_second(n: int, r: int) -> int:
    """Stirling number of the second kind {n, r} (set partitions into r blocks)."""
    if n < 0 or r < 0:
        raise ValueError("stirling_second needs n, r >= 0")
    if r > n:
        return 0
    if (n, r) not in _STIRLING2:
        if n == 0 or r == 0:
            _STIRLING2[(n, r)] = 0
        else:
            _STIRLING2[(n, r)] = r * stirling_second(n - 1, r) + stirling_second(n - 1, r - 1)
    return _STIRLING2[(n, r)]


def stirling_first_unsigned(n: int, r: int) -> int:
    """Unsigned Stirling number of the first kind [n, r] (permutations with r cycles)."""
    if n < 0 or r < 0:
        raise ValueError("stirling_first_unsigned needs n, r >= 0")
    if r > n:
        return 0
    if (n, r) not in _STIRLING1:
        if n == 0 or r == 0:
            _STIRLING1[(n, r)] = 0
        else:
            _STIRLING1[(n, r)] = (n - 1) * stirling_first_unsigned(
                n - 1, r
            ) + stirling_first_unsigned(n - 1, r - 1)
    return _STIRLING1[(n, r)]


def eulerian_polynomial(n: int) -> Polynomial:
    """The n-th Eulerian polynomial via its Frobenius expansion
    P_n(t) = sum_r r! {n, r} (t-1)^(n-r); P_0 = P_1 = 1."""
    if n < 0:
        raise ValueError("eulerian_polynomial is defined for n >= 0")
    if n == 0:
        return Polynomial((1,))
    t_minus_1 = Polynomial((-1, 1))
    total = Polynomial()
    for r in range(1, n + 1):
        total = total + factorial(r) * stirling_second(n, r) * t_minus_1 ** (n - r)
    return total
