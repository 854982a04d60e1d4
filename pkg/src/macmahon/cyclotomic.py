"""Exact arithmetic in Q[z]/(z^4 - z^2 + 1).

z is a primitive twelfth root of unity, so this degree-4 field contains
every root of unity the decompositions need, together with sqrt(-3):

    zeta3 = z^2 - 1      zeta4 = z^3      zeta6 = z^2      i*sqrt(3) = 2*z^2 - 1

An element is stored as the coefficient 4-tuple (c0, c1, c2, c3) of
c0 + c1*z + c2*z^2 + c3*z^3.  Reduction uses z^4 = z^2 - 1 (hence
z^5 = z^3 - z and z^6 = -1).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Cyclotomic12",
    "cyclotomic_inverse",
    "ZERO",
    "ONE",
    "Z",
    "ZETA3",
    "ZETA4",
    "ZETA6",
    "I_SQRT3",
]

_MODULUS = (Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1))


def _ptrim(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return p[:n]


def _pdivmod(a, b):
    # Little-endian polynomial division over Q; b must be nonzero.
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _ptrim(a)


def _pmulsub(a, q, b):
    # a - q*b with list coefficients.
    out = list(a) + [Fraction(0)] * max(len(q) + len(b) - 1 - len(a), 0)
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                out[i + j] -= qi * bj
    return _ptrim(out)


class Cyclotomic12:
    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (c0, c1, c2, c3)

    @classmethod
    def from_rational(cls, x) -> "Cyclotomic12":
        return cls(x, 0, 0, 0)

    def as_rational(self):
        """The element as a Fraction, or None if it is irrational."""
        c0, c1, c2, c3 = self.c
        if c1 or c2 or c3:
            return None
        return Fraction(c0)

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Cyclotomic12):
            a, b = self.c, other.c
            return Cyclotomic12(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])
        if isinstance(other, (int, Fraction)):
            a = self.c
            return Cyclotomic12(a[0] + other, a[1], a[2], a[3])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Cyclotomic12(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other):
        if isinstance(other, (Cyclotomic12, int, Fraction)):
            return self + (-other if isinstance(other, Cyclotomic12) else -other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Cyclotomic12):
            a, b = self.c, other.c
            p0 = a[0] * b[0]
            p1 = a[0] * b[1] + a[1] * b[0]
            p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
            p3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
            p4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
            p5 = a[2] * b[3] + a[3] * b[2]
            p6 = a[3] * b[3]
            # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
            return Cyclotomic12(p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5)
        if isinstance(other, (int, Fraction)):
            a = self.c
            return Cyclotomic12(a[0] * other, a[1] * other, a[2] * other, a[3] * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic12":
        """Multiplicative inverse via the extended gcd with z^4 - z^2 + 1."""
        poly = _ptrim([Fraction(x) for x in self.c])
        if not poly:
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        r0, r1 = list(_MODULUS), poly
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _pmulsub(t0, q, t1)
        # r0 is a nonzero constant: the gcd (the modulus is irreducible over Q).
        scale = Fraction(1) / r0[0]
        t0 = [x * scale for x in t0]
        t0 += [Fraction(0)] * (4 - len(t0))
        return Cyclotomic12(t0[0], t0[1], t0[2], t0[3])

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic12):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = ONE
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Cyclotomic12":
        """Complex conjugation, the field automorphism z -> z - z^3."""
        c0, c1, c2, c3 = self.c
        return Cyclotomic12(c0 + c2, c1, -c2, -c1 - c3)

    # -- comparisons ----------------------------------------------------

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic12):
            return self.c[0] == other.c[0] and self.c[1:] == other.c[1:]
        if isinstance(other, (int, Fraction)):
            c0, c1, c2, c3 = self.c
            return not (c1 or c2 or c3) and c0 == other
        return NotImplemented

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash(("cyc12",) + tuple(Fraction(x) for x in self.c))

    # -- serialization --------------------------------------------------

    def to_string(self) -> str:
        """Canonical form "c0 + c1*z + c2*z^2 + c3*z^3" with reduced fractions."""
        c0, c1, c2, c3 = (Fraction(x) for x in self.c)
        return f"{c0} + {c1}*z + {c2}*z^2 + {c3}*z^3"

    @classmethod
    def parse(cls, s: str) -> "Cyclotomic12":
        parts = s.split(" + ")
        if len(parts) == 1:
            return cls(Fraction(parts[0]))
        if len(parts) != 4:
            raise ValueError(f"malformed Cyclotomic12 string: {s!r}")
        suffixes = ("", "*z", "*z^2", "*z^3")
        coeffs = []
        for part, suffix in zip(parts, suffixes):
            if suffix and not part.endswith(suffix):
                raise ValueError(f"malformed Cyclotomic12 string: {s!r}")
            coeffs.append(Fraction(part[: len(part) - len(suffix)] if suffix else part))
        return cls(*coeffs)

    __str__ = to_string

    def __repr__(self):
        return f"Cyclotomic12({self.c[0]!r}, {self.c[1]!r}, {self.c[2]!r}, {self.c[3]!r})"


def cyclotomic_inverse(x: Cyclotomic12) -> Cyclotomic12:
    """Inverse of a nonzero element; raises ZeroDivisionError at zero."""
    return x.inverse()


ZERO = Cyclotomic12()
ONE = Cyclotomic12(1)
Z = Cyclotomic12(0, 1)
ZETA3 = Cyclotomic12(-1, 0, 1, 0)
ZETA4 = Cyclotomic12(0, 0, 0, 1)
ZETA6 = Cyclotomic12(0, 0, 1, 0)
I_SQRT3 = Cyclotomic12(-1, 0, 2, 0)
