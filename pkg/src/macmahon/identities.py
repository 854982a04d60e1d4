"""Machine checks for the series identities: each check recomputes both
sides of an identity with exact arithmetic through an explicit cutoff
and reports either verification or a concrete witness of disagreement.

A CheckReport never extrapolates: "verified" always means "verified
through the recorded cutoff", and a counterexample pins down the first
failing coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .bivariate import xpoly_exp
from .cyclotomic import Cyclotomic12
from .polynomials import Polynomial
from .quasishuffle import isobaric_reconstruction
from .series import (
    TruncatedSeries,
    _denominator_inverse,
    _mul_lists,
    as_exact_scalar,
    product_over_n,
)
from .sums import _general_denominator, u_general_series, u_series

__all__ = [
    "CheckReport",
    "limit_product",
    "limit_check",
    "general_limit_product",
    "general_limit_check",
    "explicit_weight",
    "explicit_identity_check",
    "binomial_identity_check",
    "generating_function_check",
    "jacobi_triple_product_check",
    "CongruenceClaim",
    "congruence_scan",
    "exp_identity_check",
    "isobaric_check",
]


def _scalar_json(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, Cyclotomic12):
        return x.to_string()
    return str(x)


@dataclass(frozen=True)
class CheckReport:
    claim: str
    checked_through: int
    status: str
    witness: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "checked_through": self.checked_through,
            "status": self.status,
            "witness": self.witness,
        }


def _verified(claim: str, through: int) -> CheckReport:
    return CheckReport(claim=claim, checked_through=through, status="verified")


def _counterexample(claim: str, through: int, witness: dict) -> CheckReport:
    return CheckReport(claim=claim, checked_through=through,
                       status="counterexample", witness=witness)


def _poly_text(p: Polynomial, var: str = "x") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        if i == 0:
            parts.append(f"{c}")
        else:
            head = var if i == 1 else f"{var}^{i}"
            parts.append(head if c == 1 else f"{c}*{head}")
    return " + ".join(parts)


def _geometric_factor(step: int, order: int) -> TruncatedSeries:
    # 1 / (1 - q^step)
    out = [0] * order
    for e in range(0, order, step):
        out[e] = 1
    return TruncatedSeries(out, order)


def _denominator_factor(a, k: int, n: int, order: int) -> TruncatedSeries:
    # (1 + a q^n + q^(2n))^(-k)
    out = [0] * order
    for m, wm in enumerate(_denominator_inverse(a, k, 1 + (order - 1) // n)):
        out[m * n] = wm
    return TruncatedSeries(out, order)


def limit_product(a, k: int, r: int, order: int) -> TruncatedSeries:
    """The infinite product prod_n 1/((1 - q^(rn)) (1 + a q^n + q^(2n))^k)."""
    if k < 1 or r < 1:
        raise ValueError("limit_product needs k >= 1 and r >= 1")
    a = as_exact_scalar(a)
    return product_over_n(
        lambda n: _geometric_factor(r * n, order) * _denominator_factor(a, k, n, order),
        order,
    )


def limit_check(t: int, k: int, r: int, a, extra: int = 2) -> CheckReport:
    """The t-fold sum, shifted down by its least exponent, matches the
    infinite product through q^t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    a = as_exact_scalar(a)
    shift = r * t * (t + 1) // 2
    window = t + 1 + max(extra, 0)
    lhs = u_series(t, k, r, a, shift + window).shift(-shift).truncate(t + 1)
    rhs = limit_product(a, k, r, window).truncate(t + 1)
    claim = (
        f"q^(-{shift}) U(t={t},k={k},r={r};a={a}) = "
        f"prod_n 1/((1-q^({r}n))(1+({a})q^n+q^(2n))^{k}) + O(q^{t + 1})"
    )
    diff = lhs.first_difference(rhs)
    if diff is None:
        return _verified(claim, t)
    return _counterexample(claim, t, {
        "q_exponent": diff,
        "lhs": _scalar_json(lhs.coeff(diff)),
        "rhs": _scalar_json(rhs.coeff(diff)),
    })


def general_limit_product(P: Polynomial, Q: Polynomial, k: int, order: int) -> TruncatedSeries:
    """Limit product for polynomial data: prod_n (1 + Q(q^n))^(-k), with an
    extra geometric factor 1/(1 - q^(alpha n)) when P = alpha*x."""
    def factor(n: int) -> TruncatedSeries:
        out = [0] * order
        for m, wm in enumerate(_general_denominator(Q.coeffs, k, 1 + (order - 1) // n)):
            out[m * n] = wm
        f = TruncatedSeries(out, order)
        if P.degree == 1:
            f = f * _geometric_factor(P.coeff(1) * n, order)
        return f

    return product_over_n(factor, order)


def general_limit_check(P: Polynomial, Q: Polynomial, t: int, k: int,
                        extra: int = 2) -> CheckReport:
    """Limit behaviour of the polynomial-data sum: after shifting by
    sum_{j<=t} P(j), it matches the limit product through q^t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    shift = sum(P(j) for j in range(1, t + 1))
    window = t + 1 + max(extra, 0)
    lhs = u_general_series(P, Q, t, k, shift + window).shift(-shift).truncate(t + 1)
    rhs = general_limit_product(P, Q, k, window).truncate(t + 1)
    tail = f"1/(1-q^({P.coeff(1)}n)) * " if P.degree == 1 else ""
    claim = (
        f"q^(-{shift}) U(P={_poly_text(P)},Q={_poly_text(Q)},t={t},k={k}) = "
        f"prod_n {tail}(1+Q(q^n))^(-{k}) + O(q^{t + 1})"
    )
    diff = lhs.first_difference(rhs)
    if diff is None:
        return _verified(claim, t)
    return _counterexample(claim, t, {
        "q_exponent": diff,
        "lhs": _scalar_json(lhs.coeff(diff)),
        "rhs": _scalar_json(rhs.coeff(diff)),
    })


def explicit_weight(m: int, t: int, a):
    """Expansion weight w(m, t) = sum_g C(m,g) C(m-g, floor((m-g-t)/2)) (-a)^g."""
    if m < 0 or t < 0:
        raise ValueError("m and t must be >= 0")
    a = as_exact_scalar(a)
    total = 0
    for g in range(m - t + 1):
        total += comb(m, g) * comb(m - g, (m - g - t) // 2) * (-a) ** g
    return total


def explicit_identity_check(a, t: int, order: int,
                            use_central_binomial: bool = False) -> CheckReport:
    """The weighted sum over chain lengths m of the m-fold series times
    w(m, t) reproduces q^(t(t+1)/2) * prod_n 1/((1-q^n)(1+a q^n+q^(2n))).

    With use_central_binomial (a = -2 only) the weights are replaced by
    the closed form C(2m+1, m+t+1).
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    a = as_exact_scalar(a)
    if use_central_binomial and a != -2:
        raise ValueError("the central-binomial weights require a = -2")
    base = t * (t + 1) // 2
    ceiling = order - 1 + base
    m_top = t
    while (m_top + 1) * (m_top + 2) // 2 <= ceiling:
        m_top += 1
    big = order + base
    total = TruncatedSeries.zero(big)
    for m in range(t, m_top + 1):
        w = comb(2 * m + 1, m + t + 1) if use_central_binomial else explicit_weight(m, t, a)
        if w:
            total = total + u_series(m, 1, 1, a, big) * w
    lhs = total.shift(-base)
    rhs = limit_product(a, 1, 1, order)
    weight_text = "C(2m+1, m+t+1)" if use_central_binomial else "w(m,t)"
    claim = (
        f"sum_m U_m(a={a}) {weight_text} = "
        f"q^({base}) prod_n 1/((1-q^n)(1+({a})q^n+q^(2n))) at t={t}, through q^{order - 1}"
    )
    diff = lhs.first_difference(rhs)
    if diff is None:
        return _verified(claim, order - 1)
    return _counterexample(claim, order - 1, {
        "q_exponent": diff,
        "lhs": _scalar_json(lhs.coeff(diff)),
        "rhs": _scalar_json(rhs.coeff(diff)),
    })


def binomial_identity_check(m_max: int) -> CheckReport:
    """C(2m+1, m+t+1) agrees with the doubling-weight sum for 0 <= t <= m <= m_max."""
    claim = (
        "C(2m+1, m+t+1) = sum_g C(m,g) C(m-g, floor((m-g-t)/2)) 2^g "
        f"for 0 <= t <= m <= {m_max}"
    )
    for m in range(m_max + 1):
        for t in range(m + 1):
            lhs = comb(2 * m + 1, m + t + 1)
            rhs = explicit_weight(m, t, -2)
            if lhs != rhs:
                return _counterexample(claim, m_max, {
                    "m": m, "t": t, "lhs": lhs, "rhs": rhs,
                })
    return _verified(claim, m_max)


def generating_function_check(a, t_max: int, order: int) -> CheckReport:
    """The x^(2m) coefficients of prod_n (1 + x^2 q^n/(1+a q^n+q^(2n)))
    are the m-fold series, checked for m <= t_max through q^(order-1)."""
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    a = as_exact_scalar(a)
    zero = TruncatedSeries.zero(order)
    slots = [TruncatedSeries.one(order)] + [zero] * t_max
    reached = 0
    for n in range(1, order):
        term = [0] * order
        for m, wm in enumerate(_denominator_inverse(a, 1, 1 + (order - 1 - n) // n)):
            if wm:
                term[n + m * n] = wm
        d = TruncatedSeries(term, order)
        reached = min(reached + 1, t_max)
        for j in range(reached, 0, -1):
            slots[j] = slots[j] + slots[j - 1] * d
    claim = (
        f"prod_n (1 + x^2 q^n/(1+({a})q^n+q^(2n))) = sum_m U_m(a={a}) x^(2m) "
        f"for m <= {t_max}, through q^{order - 1}"
    )
    for m in range(t_max + 1):
        expected = u_series(m, 1, 1, a, order)
        diff = slots[m].first_difference(expected)
        if diff is not None:
            return _counterexample(claim, t_max, {
                "x_power": 2 * m,
                "q_exponent": diff,
                "lhs": _scalar_json(slots[m].coeff(diff)),
                "rhs": _scalar_json(expected.coeff(diff)),
            })
    return _verified(claim, t_max)


def jacobi_triple_product_check(order: int, window: int) -> CheckReport:
    """Triple-product identity: sum_{j in Z} q^(j(j+1)/2) z^j equals
    (1 + 1/z) prod_n (1-q^n)(1+q^n/z)(1+q^n z), compared on z-exponents
    |j| <= window through q^(order-1)."""
    if order < 1 or window < 0:
        raise ValueError("order must be >= 1 and window >= 0")
    d_top = 0
    while (d_top + 1) * (d_top + 2) // 2 <= order - 1:
        d_top += 1
    cap = window + d_top + 1

    state = {0: [1] + [0] * (order - 1)}
    for n in range(1, order):
        new: dict = {}

        def add(e, lst, shift):
            if abs(e) > cap:
                return
            dst = new.get(e)
            if dst is None:
                dst = new[e] = [0] * order
            for i in range(order - shift):
                if lst[i]:
                    dst[i + shift] += lst[i]

        for e, lst in state.items():
            # (1 + z q^n)(1 + q^n/z) = 1 + (z + 1/z) q^n + q^(2n)
            add(e, lst, 0)
            add(e + 1, lst, n)
            add(e - 1, lst, n)
            add(e, lst, 2 * n)
        state = new

    poch = [1] + [0] * (order - 1)
    for n in range(1, order):
        for i in range(order - 1, n - 1, -1):
            poch[i] -= poch[i - n]
    zero = [0] * order
    combined = {e: _mul_lists(lst, poch, order) for e, lst in state.items()}
    final = {}
    for e in range(-cap - 1, cap + 1):
        upper = combined.get(e + 1, zero)
        lower = combined.get(e, zero)
        final[e] = [x + y for x, y in zip(lower, upper)]

    claim = (
        "sum_{j in Z} q^(j(j+1)/2) z^j = (1+1/z) prod_n (1-q^n)(1+q^n/z)(1+q^n z), "
        f"|j| <= {window}, through q^{order - 1}"
    )
    for e in range(-window, window + 1):
        expected = [0] * order
        exponent = e * (e + 1) // 2
        if 0 <= exponent < order:
            expected[exponent] = 1
        got = final.get(e, zero)
        for i in range(order):
            if got[i] != expected[i]:
                return _counterexample(claim, order - 1, {
                    "z_power": e,
                    "q_exponent": i,
                    "lhs": _scalar_json(expected[i]),
                    "rhs": _scalar_json(got[i]),
                })
    return _verified(claim, order - 1)


@dataclass(frozen=True)
class CongruenceClaim:
    """Coefficients of the (t, k, r) series at a fixed a, along the
    arithmetic progression step*n + residue, vanish mod the modulus."""

    t: int
    k: int
    r: int
    a: int
    modulus: int
    step: int
    residue: int

    def __post_init__(self):
        if self.t < 1 or self.k < 1 or self.r < 1:
            raise ValueError("t, k, r must all be >= 1")
        if not isinstance(self.a, int):
            raise ValueError("congruence claims need an integer a")
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if not 0 <= self.residue < self.step:
            raise ValueError("residue must satisfy 0 <= residue < step")

    @property
    def claim(self) -> str:
        return (
            f"M_{{{self.t},{self.k},{self.r}}}({self.a}; "
            f"{self.step}n+{self.residue}) == 0 mod {self.modulus}"
        )


def congruence_scan(claim: CongruenceClaim, n_max: int) -> CheckReport:
    """Scan the progression through n_max for a violation of the congruence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    series = u_series(claim.t, claim.k, claim.r, claim.a, n_max + 1)
    for n in range(claim.residue, n_max + 1, claim.step):
        value = series.coeff(n)
        if value % claim.modulus:
            return _counterexample(claim.claim, n_max, {
                "n": n,
                "coefficient": _scalar_json(value),
                "modulus": claim.modulus,
            })
    return _verified(claim.claim, n_max)


def exp_identity_check(k: int, r: int, a, x_order: int, order: int) -> CheckReport:
    """exp(sum_n ((-1)^(n+1)/n) U_1(nk, nr) X^n) = sum_j U_j(k, r) X^j
    through X^x_order, coefficients compared through q^(order-1)."""
    if x_order < 1:
        raise ValueError("x_order must be >= 1")
    a = as_exact_scalar(a)
    zero = TruncatedSeries.zero(order)
    arg = [zero] + [
        u_series(1, n * k, n * r, a, order) * Fraction((-1) ** (n + 1), n)
        for n in range(1, x_order + 1)
    ]
    lhs = xpoly_exp(arg, x_order, TruncatedSeries.one(order), zero)
    claim = (
        f"exp(sum_n (-1)^(n+1)/n U(t=1,k={k}n,r={r}n;a={a}) X^n) = "
        f"sum_j U(t=j,k={k},r={r};a={a}) X^j through X^{x_order}, q^{order - 1}"
    )
    for j in range(x_order + 1):
        expected = u_series(j, k, r, a, order)
        diff = lhs[j].first_difference(expected)
        if diff is not None:
            return _counterexample(claim, x_order, {
                "x_power": j,
                "q_exponent": diff,
                "lhs": _scalar_json(lhs[j].coeff(diff)),
                "rhs": _scalar_json(expected.coeff(diff)),
            })
    return _verified(claim, x_order)


def isobaric_check(t: int, k: int, r: int, a, order: int) -> CheckReport:
    """The t-fold series assembled from single sums by the partition
    formula agrees with the direct nested computation."""
    direct = u_series(t, k, r, a, order)
    assembled = isobaric_reconstruction(t, k, r, a, order)
    claim = (
        f"U(t={t},k={k},r={r};a={a}) = "
        f"sum_{{partitions of {t}}} prod_s (1/m_s!) ((-1)^(s+1) U_1(sk,sr)/s)^(m_s) "
        f"through q^{order - 1}"
    )
    diff = direct.first_difference(assembled)
    if diff is None:
        return _verified(claim, order - 1)
    return _counterexample(claim, order - 1, {
        "q_exponent": diff,
        "lhs": _scalar_json(direct.coeff(diff)),
        "rhs": _scalar_json(assembled.coeff(diff)),
    })
