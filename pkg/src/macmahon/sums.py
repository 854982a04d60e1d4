"""Nested q-series sums over strictly increasing index chains.

h_series realizes the t-fold sum over n_1 < n_2 < ... < n_t of
prod_i q^(r_i n_i) / (1 + a q^(n_i) + q^(2 n_i))^(k_i); u_series is the
constant-exponent case (all k_i = k, r_i = r), and u_general_series
replaces r*n by an arbitrary polynomial exponent P(n) and the quadratic
denominator by 1 + Q(q^n).

The truncation is computed by a descending-index dynamic program:
with T_j(n) the partial sum over chains n <= n_j < ... < n_t,

    T_j(n) = T_j(n+1) + q^(r_j n) D_{k_j}(q^n) T_{j+1}(n+1),

which needs O(order * t) sparse multiplies.  Per-denominator expansions
are cached (see series._denominator_inverse), and each D(q^n) is
supported on exponents that are multiples of n, so the total work stays
near order^2 * H(order) coefficient operations per chain position.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Polynomial
from .series import (
    TruncatedSeries,
    _denominator_inverse,
    _inv_list,
    _mul_lists,
    as_exact_scalar,
)

__all__ = [
    "h_series",
    "u_series",
    "m_coefficient",
    "u_general_series",
    "poly_denominator_sum",
]


def _accumulate(dst, src, window, base, step, order):
    # dst += q^base * window(q^step) * src, all truncated at the order.
    for m, wm in enumerate(window):
        if not wm:
            continue
        lo = base + step * m
        lim = order - lo
        if lim <= 0:
            break
        if wm == 1:
            for i in range(lim):
                si = src[i]
                if si:
                    dst[lo + i] += si
        else:
            for i in range(lim):
                si = src[i]
                if si:
                    dst[lo + i] += wm * si
    return dst


def h_series(ks, rs, a, order: int) -> TruncatedSeries:
    """Nested sum for per-position exponents rs and denominator powers ks.

    The empty chain (t = 0) gives the constant series 1.
    """
    ks = [int(k) for k in ks]
    rs = [int(r) for r in rs]
    if len(ks) != len(rs):
        raise ValueError("ks and rs must have equal length")
    if any(k < 1 for k in ks) or any(r < 1 for r in rs):
        raise ValueError("all entries of ks and rs must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    a = as_exact_scalar(a)
    t = len(ks)
    if t == 0:
        return TruncatedSeries.one(order)
    levels = [[0] * order for _ in range(t + 1)]
    levels.append([1] + [0] * (order - 1))
    for n in range(order - 1, 0, -1):
        for j in range(1, t + 1):
            shift = rs[j - 1] * n
            if shift >= order:
                continue
            window = _denominator_inverse(a, ks[j - 1], 1 + (order - 1 - shift) // n)
            _accumulate(levels[j], levels[j + 1], window, shift, n, order)
    return TruncatedSeries(levels[1], order)


def u_series(t: int, k: int, r: int, a, order: int) -> TruncatedSeries:
    """The t-fold sum with constant denominator power k and exponent weight r."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return h_series([k] * t, [r] * t, a, order)


def m_coefficient(t: int, k: int, r: int, a, n: int):
    """Coefficient of q^n in u_series(t, k, r, a); an int whenever a is integral."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return u_series(t, k, r, a, n + 1).coeff(n)


_GENERAL_DENOM_CACHE: dict = {}


def _general_denominator(q_coeffs, k: int, length: int):
    # Coefficients of (1 + Q(x))^(-k) through x^(length-1), cached per (Q, k).
    key = (q_coeffs, k)
    cached = _GENERAL_DENOM_CACHE.get(key)
    if cached is None or len(cached) < length:
        one_plus_q = [1] + list(q_coeffs[1:])
        if k >= 0:
            base = _inv_list(one_plus_q, length)
            n = k
        else:
            base = one_plus_q[:length] + [0] * max(length - len(one_plus_q), 0)
            n = -k
        out = [1] + [0] * (length - 1)
        while n:
            if n & 1:
                out = _mul_lists(out, base, length)
            base = _mul_lists(base, base, length)
            n >>= 1
        _GENERAL_DENOM_CACHE[key] = cached = out
    return cached if len(cached) == length else cached[:length]


def _validate_exponent_poly(P: Polynomial) -> Polynomial:
    if P.degree == float("-inf") or P.degree < 1:
        raise ValueError("exponent polynomial must have degree >= 1")
    if P.coeff(0):
        raise ValueError("exponent polynomial must vanish at 0")
    if any(not isinstance(c, int) or c < 0 for c in P.coeffs):
        raise ValueError("exponent polynomial needs nonnegative integer coefficients")
    return P


def _validate_denominator_poly(Q: Polynomial) -> Polynomial:
    if Q.degree == float("-inf") or Q.degree < 1:
        raise ValueError("denominator polynomial must have degree >= 1")
    if Q.coeff(0):
        raise ValueError("denominator polynomial must vanish at 0")
    if any(not isinstance(c, int) for c in Q.coeffs):
        raise ValueError("denominator polynomial needs integer coefficients")
    return Q


def u_general_series(P: Polynomial, Q: Polynomial, t: int, k: int, order: int) -> TruncatedSeries:
    """Sum over n_1 < ... < n_t of q^(sum P(n_i)) / prod (1 + Q(q^(n_i)))^k.

    P must lie in x*N[x] and Q in x*Z[x]; k may be any integer (negative k
    multiplies by powers of 1 + Q(q^n) instead of dividing).
    """
    _validate_exponent_poly(P)
    _validate_denominator_poly(Q)
    if t < 0:
        raise ValueError("t must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    if t == 0:
        return TruncatedSeries.one(order)
    levels = [[0] * order for _ in range(t + 1)]
    levels.append([1] + [0] * (order - 1))
    for n in range(order - 1, 0, -1):
        shift = P(n)
        if shift >= order:
            continue
        window = _general_denominator(Q.coeffs, k, 1 + (order - 1 - shift) // n)
        for j in range(1, t + 1):
            _accumulate(levels[j], levels[j + 1], window, shift, n, order)
    return TruncatedSeries(levels[1], order)


def poly_denominator_sum(Q: Polynomial, a, k: int, order: int) -> TruncatedSeries:
    """Single sum over n >= 1 of Q(q^n) / (1 + a q^n + q^(2n))^k.

    Q must vanish at 0 so every summand is a power series without
    constant term.  This is the direct oracle the decomposition
    routines are checked against: Q = x^k gives u_series(1, k, k, a).
    """
    if Q.coeff(0):
        raise ValueError("numerator polynomial must vanish at 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    a = as_exact_scalar(a)
    out = [0] * order
    q_coeffs = list(Q.coeffs)
    for n in range(1, order):
        length = 1 + (order - 1) // n
        window = _mul_lists(q_coeffs, _denominator_inverse(a, k, length), length)
        for m in range(1, length):
            wm = window[m]
            if wm:
                out[n * m] += wm
    return TruncatedSeries(out, order)
