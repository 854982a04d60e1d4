"""Eisenstein-type q-expansions and rational combinations of them.

The normalizations are definitional for this package:

    g_series(k):  zeta(1-k)/2 + sum_{r>=1} sigma_{k-1}(r) q^r          (k even >= 2)
    f_series(k):  the same sum without its constant term               (any k >= 1)
    g_chi_series(chi, k):  L(chi, 1-k)/2 + sum_n sigma_{k-1}(chi; n) q^n

with sigma_{k-1}(chi; n) = sum_{d | n} chi(d) d^(k-1).  A Generator is a
(weight, character, dilation) triple whose parity is forced to satisfy
chi(-1) = (-1)^weight at construction, and a QmfExpression is a constant
plus a combination of generators with Cyclotomic12 coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import CHARACTERS, CHI_3_2, CHI_4_2, DirichletCharacter, l_nonpositive, zeta_nonpositive
from .cyclotomic import Cyclotomic12
from .series import TruncatedSeries

__all__ = [
    "Generator",
    "QmfExpression",
    "f_series",
    "g_series",
    "g_chi_series",
    "generator_series",
    "generator_constant",
    "expression_series",
]


def f_series(k: int, order: int) -> TruncatedSeries:
    """sum_{n>=1} sigma_{k-1}(n) q^n: the constant-free Eisenstein sum."""
    if k < 1:
        raise ValueError("f_series needs k >= 1")
    out = [0] * order
    for d in range(1, order):
        w = d ** (k - 1)
        for e in range(d, order, d):
            out[e] += w
    return TruncatedSeries(out, order)


def g_series(k: int, order: int) -> TruncatedSeries:
    """Weight-k Eisenstein expansion zeta(1-k)/2 + sum sigma_{k-1}(n) q^n."""
    if k < 2 or k % 2:
        raise ValueError("g_series needs an even weight k >= 2")
    s = f_series(k, order)
    s.coeffs[0] = zeta_nonpositive(k) / 2
    return s


def g_chi_series(char: DirichletCharacter, k: int, order: int) -> TruncatedSeries:
    """Character Eisenstein expansion L(chi,1-k)/2 + sum sigma_{k-1}(chi;n) q^n."""
    if not char.primitive or char.modulus < 2:
        raise ValueError("g_chi_series needs a primitive character of modulus > 1")
    if char(-1) != (-1) ** k:
        raise ValueError(
            f"weight {k} violates the parity chi(-1) = (-1)^k for {char.name}"
        )
    out = [0] * order
    out[0] = l_nonpositive(char, k) / 2
    for d in range(1, order):
        c = char(d)
        if not c:
            continue
        w = c * d ** (k - 1)
        for e in range(d, order, d):
            out[e] += w
    return TruncatedSeries(out, order)


@dataclass(frozen=True)
class Generator:
    """A dilated Eisenstein expansion, identified by (weight, character, dilation)."""

    weight: int
    character: str = "trivial"
    dilation: int = 1

    def __post_init__(self):
        if self.character not in CHARACTERS:
            raise ValueError(f"unknown character {self.character!r}")
        if self.weight < 1:
            raise ValueError("generator weight must be >= 1")
        if self.dilation < 1:
            raise ValueError("generator dilation must be >= 1")
        char = CHARACTERS[self.character]
        if char(-1) != (-1) ** self.weight:
            raise ValueError(
                f"weight {self.weight} violates the parity chi(-1) = (-1)^k "
                f"for character {self.character}"
            )


def generator_constant(gen: Generator) -> Fraction:
    """Constant term of the generator's expansion (dilation leaves it fixed)."""
    if gen.character == "trivial":
        return zeta_nonpositive(gen.weight) / 2
    return l_nonpositive(CHARACTERS[gen.character], gen.weight) / 2


def generator_series(gen: Generator, order: int) -> TruncatedSeries:
    """The generator's q-expansion (constant included) to the given order."""
    base_order = (order + gen.dilation - 1) // gen.dilation
    if gen.character == "trivial":
        base = g_series(gen.weight, base_order)
    else:
        base = g_chi_series(CHARACTERS[gen.character], gen.weight, base_order)
    return base.dilate(gen.dilation).truncate(order)


def _to_cyclotomic(x):
    if isinstance(x, Cyclotomic12):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic12.from_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an expression coefficient")


class QmfExpression:
    """constant + sum of coeff * Generator, with Cyclotomic12 coefficients.

    Terms are merged, zero-coefficient terms dropped, and the remainder kept
    in the canonical (character, weight, dilation) order, so equal
    expressions compare equal structurally.
    """

    __slots__ = ("constant", "terms")

    def __init__(self, constant=0, terms=()):
        merged: dict = {}
        for coeff, gen in terms:
            if not isinstance(gen, Generator):
                raise TypeError("terms must pair coefficients with Generators")
            c = merged.get(gen)
            merged[gen] = _to_cyclotomic(coeff) if c is None else c + _to_cyclotomic(coeff)
        self.constant = _to_cyclotomic(constant)
        self.terms = tuple(
            (merged[gen], gen)
            for gen in sorted(merged, key=lambda g: (g.character, g.weight, g.dilation))
            if merged[gen]
        )

    # -- metadata -------------------------------------------------------

    @property
    def highest_weight(self) -> int:
        return max((gen.weight for _, gen in self.terms), default=0)

    @property
    def level(self) -> int:
        """Bookkeeping level: lcm over terms of dilation * character modulus."""
        return lcm(*(gen.dilation * CHARACTERS[gen.character].modulus
                     for _, gen in self.terms)) if self.terms else 1

    @property
    def quasimodular(self) -> bool:
        """True when a weight-2 trivial-character term is present."""
        return any(gen.weight == 2 and gen.character == "trivial" for _, gen in self.terms)

    # -- algebra --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QmfExpression):
            return QmfExpression(
                self.constant + other.constant,
                tuple(self.terms) + tuple(other.terms),
            )
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, Cyclotomic12)):
            return QmfExpression(
                self.constant * scalar,
                tuple((c * scalar, g) for c, g in self.terms),
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QmfExpression):
            return self.constant == other.constant and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.constant, self.terms))

    def __repr__(self):
        parts = [str(self.constant.as_rational() if self.constant.as_rational() is not None
                     else self.constant)]
        for c, g in self.terms:
            r = c.as_rational()
            parts.append(f"({r if r is not None else c})*{g.character}[w={g.weight},V{g.dilation}]")
        return "QmfExpression<" + " + ".join(parts) + ">"

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "constant": self.constant.to_string(),
            "terms": [
                {
                    "coeff": c.to_string(),
                    "weight": g.weight,
                    "character": g.character,
                    "dilation": g.dilation,
                }
                for c, g in self.terms
            ],
            "highest_weight": self.highest_weight,
            "level": self.level,
            "quasimodular": self.quasimodular,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "QmfExpression":
        return cls(
            Cyclotomic12.parse(d["constant"]),
            tuple(
                (Cyclotomic12.parse(t["coeff"]),
                 Generator(t["weight"], t["character"], t["dilation"]))
                for t in d["terms"]
            ),
        )


def expression_series(expr: QmfExpression, order: int) -> TruncatedSeries:
    """q-expansion of a QmfExpression.

    Rational-coefficient expressions are expanded entirely over Fractions;
    otherwise the computation runs in Q(zeta_12) and the result is demoted
    back to rational coefficients when every imaginary part cancels.
    """
    rats = [expr.constant.as_rational()] + [c.as_rational() for c, _ in expr.terms]
    if all(r is not None for r in rats):
        total = TruncatedSeries([rats[0]], order)
        for r, (_, gen) in zip(rats[1:], expr.terms):
            total = total + generator_series(gen, order) * r
        return total
    total = TruncatedSeries([expr.constant], order)
    for c, gen in expr.terms:
        total = total + generator_series(gen, order) * c
    if all(x.as_rational() is not None for x in total.coeffs if isinstance(x, Cyclotomic12)):
        return total.map_coefficients(
            lambda x: x.as_rational() if isinstance(x, Cyclotomic12) else x
        )
    return total
