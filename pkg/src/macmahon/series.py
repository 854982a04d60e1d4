"""Truncated formal power series with exact coefficients.

A TruncatedSeries stores the coefficients of q^0 .. q^(order-1) in a
dense list.  Binary operations truncate to the smaller order, so
arithmetic never claims more precision than its inputs carry.
Coefficients are ints, Fractions, or Cyclotomic12 elements; ints and
Fractions mix freely, while promotion of a whole series into Q(zeta_12)
is spelled out with map_coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from .cyclotomic import Cyclotomic12

__all__ = [
    "TruncatedSeries",
    "as_exact_scalar",
    "denominator_term",
    "product_over_n",
]

_SCALARS = (int, Fraction, Cyclotomic12)


def as_exact_scalar(a):
    """Normalize a Rational parameter: integral values become plain ints."""
    if isinstance(a, int):
        return a
    if isinstance(a, Fraction):
        return int(a) if a.denominator == 1 else a
    raise TypeError(f"expected an exact rational, got {type(a).__name__}")


def _scalar_inverse(c):
    if isinstance(c, Cyclotomic12):
        return c.inverse()
    if c == 1:
        return 1
    if c == -1:
        return -1
    if not c:
        raise ZeroDivisionError("series constant term is not invertible")
    return Fraction(1) / Fraction(c)


def _mul_lists(a, b, length):
    out = [0] * length
    for i, ai in enumerate(a):
        if not ai:
            continue
        if i >= length:
            break
        lim = min(len(b), length - i)
        if ai == 1:
            for j in range(lim):
                bj = b[j]
                if bj:
                    out[i + j] += bj
        else:
            for j in range(lim):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _inv_list(a, length):
    inv0 = _scalar_inverse(a[0] if a else 0)
    out = [0] * length
    if length == 0:
        return out
    out[0] = inv0
    span = len(a)
    for n in range(1, length):
        s = 0
        for i in range(1, min(n, span - 1) + 1):
            ai = a[i]
            if ai:
                s += ai * out[n - i]
        if s:
            out[n] = -s if inv0 == 1 else -(inv0 * s)
    return out


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=(), order: Optional[int] = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order:
            coeffs += [0] * (order - len(coeffs))
        elif len(coeffs) > order:
            del coeffs[order:]
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff, exponent: int, order: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        s = cls([], order)
        if exponent < order:
            s.coeffs[exponent] = coeff
        return s

    def coeff(self, n: int):
        if not 0 <= n < self.order:
            raise ValueError(f"coefficient of q^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return TruncatedSeries(
                [x + y for x, y in zip(self.coeffs[:order], other.coeffs[:order])], order
            )
        if isinstance(other, _SCALARS):
            if self.order == 0:
                raise ValueError("cannot add a constant to a zero-precision series")
            out = self.coeffs[:]
            out[0] = out[0] + other
            return TruncatedSeries(out, self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c if c else 0 for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, *_SCALARS)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _SCALARS):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return TruncatedSeries(_mul_lists(self.coeffs, other.coeffs, order), order)
        if isinstance(other, _SCALARS):
            if not other:
                return TruncatedSeries.zero(self.order)
            return TruncatedSeries([other * c if c else 0 for c in self.coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers need a nonnegative integer")
        out = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        if self.order == 0:
            raise ValueError("cannot invert a zero-precision series")
        return TruncatedSeries(_inv_list(self.coeffs, self.order), self.order)

    def dilate(self, ell: int) -> "TruncatedSeries":
        """Substitute q -> q^ell.  Precision grows to ell*order."""
        if not isinstance(ell, int) or ell < 1:
            raise ValueError("dilation factor must be a positive integer")
        if ell == 1:
            return TruncatedSeries(self.coeffs[:], self.order)
        out = [0] * (self.order * ell)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * ell] = c
        return TruncatedSeries(out, self.order * ell)

    def shift(self, s: int) -> "TruncatedSeries":
        """Multiply by q^s; negative s requires the dropped coefficients to vanish."""
        if s >= 0:
            return TruncatedSeries([0] * s + self.coeffs, self.order + s)
        s = -s
        if s > self.order:
            raise ValueError("shift exceeds truncation order")
        if any(self.coeffs[:s]):
            raise ValueError("cannot shift down past nonzero coefficients")
        return TruncatedSeries(self.coeffs[s:], self.order - s)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("truncation cannot extend precision")
        return TruncatedSeries(self.coeffs[:order], order)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    # -- comparisons ----------------------------------------------------

    def first_difference(self, other: "TruncatedSeries") -> Optional[int]:
        """Smallest exponent where the two series disagree, through the common order."""
        order = min(self.order, other.order)
        for n in range(order):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and all(
                x == y for x, y in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    # -- serialization --------------------------------------------------

    def to_text(self, var: str = "q") -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if isinstance(c, Cyclotomic12):
                mag, neg = f"({c})", False
            else:
                neg = c < 0
                mag = str(-c if neg else c)
            if n == 0:
                term = mag
            else:
                power = var if n == 1 else f"{var}^{n}"
                term = power if mag == "1" else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        if not parts:
            parts.append("0")
        return " ".join(parts) + f" + O({var}^{self.order})"

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "TruncatedSeries":
        return cls([Fraction(c) for c in d["coeffs"]], d["order"])

    def __repr__(self):
        return f"TruncatedSeries<{self.to_text()}>"


# -- expansion helpers for the quadratic-denominator terms ---------------

_DENOM_CACHE: dict = {}


def _denominator_inverse(a, k: int, length: int):
    """Coefficients of (1 + a*x + x^2)^(-k) through x^(length-1).

    Cached per (a, k) and extended on demand; callers must not mutate the
    returned list.
    """
    a = as_exact_scalar(a)
    key = (a, k)
    cached = _DENOM_CACHE.get(key)
    if cached is None or len(cached) < length:
        base = _inv_list([1, a, 1], length)
        out = [1] + [0] * (length - 1)
        n = k
        while n:
            if n & 1:
                out = _mul_lists(out, base, length)
            base = _mul_lists(base, base, length)
            n >>= 1
        _DENOM_CACHE[key] = cached = out
    return cached if len(cached) == length else cached[:length]


def denominator_term(a, k: int, r: int, n: int, order: int) -> TruncatedSeries:
    """Exact expansion of q^(r*n) / (1 + a*q^n + q^(2n))^k to the given order."""
    if n < 1 or k < 1 or r < 1:
        raise ValueError("denominator_term needs n >= 1, k >= 1, r >= 1")
    shift = r * n
    out = [0] * order
    if shift < order:
        w = _denominator_inverse(a, k, 1 + (order - 1 - shift) // n)
        for m, wm in enumerate(w):
            if wm:
                out[shift + n * m] = wm
    return TruncatedSeries(out, order)


def product_over_n(factors: Callable[[int], TruncatedSeries], order: int) -> TruncatedSeries:
    """Product of factors(n) over n = 1..order-1, truncated to the given order.

    Every factor must carry at least the requested precision and have
    constant term 1.
    """
    result = TruncatedSeries.one(order)
    for n in range(1, order):
        f = factors(n)
        if f.order < order:
            raise ValueError(f"factor at n={n} has order {f.order} < {order}")
        if f.order > order:
            f = f.truncate(order)
        if f.coeffs[0] != 1:
            raise ValueError(f"factor at n={n} must have constant term 1")
        result = result * f
    return result
