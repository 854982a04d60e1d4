"""Dense univariate polynomials over an exact coefficient ring.

Coefficients may be ints, Fractions, or Cyclotomic12 elements; they only
need +, * and truthiness.  Instances are immutable and hashable so they
can key caches.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Polynomial", "X"]

NEG_INFINITY = float("-inf")


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.coeffs = coeffs[:n]

    @classmethod
    def monomial(cls, coeff, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self):
        """Degree, with float('-inf') marking the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(tuple(fn(c) for c in self.coeffs))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            return Polynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])
        return NotImplemented

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Polynomial()
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            out[i + j] += ai * bj
            return Polynomial(out)
        if isinstance(other, (int, Fraction)) or other.__class__.__name__ == "Cyclotomic12":
            return Polynomial(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer")
        out = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ----------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(x == y for x, y in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial()"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return "Polynomial[" + " + ".join(terms) + "]"


X = Polynomial((0, 1))
