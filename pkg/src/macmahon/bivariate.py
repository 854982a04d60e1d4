"""Truncated polynomials in a formal variable X over an arbitrary exact ring.

Used with TruncatedSeries coefficients (generating functions in X whose
coefficients are q-series) and with ShuffleSum coefficients (formal
exponentials in the quasi-shuffle algebra).  Ring elements only need
+, scalar * by Fraction, and ring *.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["xpoly_mul", "xpoly_exp"]


def xpoly_mul(p, q, x_order: int, zero):
    """Product of coefficient lists p, q truncated to X-degree x_order."""
    out = [zero] * (x_order + 1)
    for i, pi in enumerate(p):
        if i > x_order or not pi:
            continue
        for j, qj in enumerate(q):
            if i + j > x_order:
                break
            if qj:
                out[i + j] = out[i + j] + pi * qj
    return out


def xpoly_exp(arg, x_order: int, one, zero):
    """exp of an X-polynomial with vanishing constant coefficient.

    Returns sum_{j <= x_order} arg^j / j! as a coefficient list; the sum
    is exact because arg has no X^0 term.
    """
    if len(arg) > 0 and arg[0]:
        raise ValueError("exponential needs a vanishing constant coefficient")
    total = [one] + [zero] * x_order
    power = [one] + [zero] * x_order
    for j in range(1, x_order + 1):
        power = xpoly_mul(power, arg, x_order, zero)
        scale = Fraction(1, j)
        power = [c * scale for c in power]
        total = [a + b for a, b in zip(total, power)]
    return total
