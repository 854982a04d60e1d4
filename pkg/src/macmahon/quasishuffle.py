"""The quasi-shuffle algebra on words over the alphabet of index pairs.

A Letter is a pair (k, r) of positive ints, a Word a tuple of Letters,
and a ShuffleSum a finite rational combination of Words.  The product
interleaves two words while allowing adjacent letters to merge by
componentwise addition:

    (a w1) * (b w2) = a (w1 * b w2) + b (a w1 * w2) + (a+b) (w1 * w2)

with the empty word as unit.  evaluate() sends a word to its nested
q-series, and is a ring homomorphism onto series multiplication, which
is what makes the formal exponential identity checkable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from .bivariate import xpoly_exp
from .series import TruncatedSeries
from .sums import h_series

__all__ = [
    "Letter",
    "Word",
    "ShuffleSum",
    "quasi_shuffle",
    "exp_letter",
    "evaluate",
    "word_to_string",
    "parse_word",
    "partitions",
    "partition_multiplicities",
    "isobaric_expansion",
    "isobaric_reconstruction",
]

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


def _check_word(w) -> Word:
    w = tuple((int(k), int(r)) for k, r in w)
    if any(k < 1 or r < 1 for k, r in w):
        raise ValueError("letters must be pairs of positive integers")
    return w


@lru_cache(maxsize=None)
def _word_mul(w1: Word, w2: Word) -> Tuple[Tuple[Word, int], ...]:
    # Structure constants of the product of two words; coefficients are
    # nonnegative integers.
    if not w1:
        return ((w2, 1),)
    if not w2:
        return ((w1, 1),)
    a, b = w1[0], w2[0]
    merged = (a[0] + b[0], a[1] + b[1])
    acc: Dict[Word, int] = {}
    for prefix, tail in ((a, _word_mul(w1[1:], w2)), (b, _word_mul(w1, w2[1:])),
                         (merged, _word_mul(w1[1:], w2[1:]))):
        for word, c in tail:
            key = (prefix,) + word
            acc[key] = acc.get(key, 0) + c
    return tuple(sorted(acc.items()))


class ShuffleSum:
    """A finite rational linear combination of words, kept zero-free."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, Fraction] = ()):
        cleaned = {}
        for word, c in dict(terms).items():
            if c:
                cleaned[_check_word(word)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "ShuffleSum":
        return cls({})

    @classmethod
    def one(cls) -> "ShuffleSum":
        return cls({(): Fraction(1)})

    @classmethod
    def from_word(cls, word, coeff=1) -> "ShuffleSum":
        return cls({tuple(word): Fraction(coeff)})

    def __add__(self, other):
        if isinstance(other, ShuffleSum):
            out = dict(self.terms)
            for word, c in other.terms.items():
                s = out.get(word, 0) + c
                if s:
                    out[word] = s
                elif word in out:
                    del out[word]
            return ShuffleSum(out)
        return NotImplemented

    def __neg__(self):
        return ShuffleSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, ShuffleSum):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ShuffleSum):
            out: Dict[Word, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    c = c1 * c2
                    for word, mult in _word_mul(w1, w2):
                        s = out.get(word, 0) + c * mult
                        if s:
                            out[word] = s
                        elif word in out:
                            del out[word]
            return ShuffleSum(out)
        if isinstance(other, (int, Fraction)):
            return ShuffleSum({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ShuffleSum):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "ShuffleSum<0>"
        parts = [f"{c}*{word_to_string(w)}" for w, c in sorted(self.terms.items())]
        return "ShuffleSum<" + " + ".join(parts) + ">"


def quasi_shuffle(u, v) -> ShuffleSum:
    """Product in the quasi-shuffle algebra; accepts words or sums."""
    if not isinstance(u, ShuffleSum):
        u = ShuffleSum.from_word(u)
    if not isinstance(v, ShuffleSum):
        v = ShuffleSum.from_word(v)
    return u * v


def word_to_string(w: Word) -> str:
    """Serialize a word as "(k1,r1)(k2,r2)..."; the empty word is ""."""
    return "".join(f"({k},{r})" for k, r in w)


def parse_word(s: str) -> Word:
    s = s.strip()
    if not s:
        return ()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed word: {s!r}")
    letters = []
    for chunk in s[1:-1].split(")("):
        k, r = chunk.split(",")
        letters.append((int(k), int(r)))
    return _check_word(letters)


def exp_letter(letter: Letter, x_order: int):
    """X-coefficients of exp applied to the alternating single-letter sum.

    The argument is sum_{n>=1} ((-1)^(n+1)/n) (n*k, n*r) X^n, with the
    n-fold merged letter; the exponential is expanded honestly (powers
    and factorials), not read off from the claimed closed form.
    """
    k, r = _check_word([letter])[0]
    arg = [ShuffleSum.zero()]
    for n in range(1, x_order + 1):
        arg.append(ShuffleSum.from_word(((n * k, n * r),), Fraction((-1) ** (n + 1), n)))
    return xpoly_exp(arg, x_order, ShuffleSum.one(), ShuffleSum.zero())


def evaluate(s, a, order: int) -> TruncatedSeries:
    """Evaluate a word or ShuffleSum into its nested q-series at parameter a."""
    if not isinstance(s, ShuffleSum):
        s = ShuffleSum.from_word(s)
    total = TruncatedSeries.zero(order)
    for word, c in sorted(s.terms.items()):
        ks = [k for k, _ in word]
        rs = [r for _, r in word]
        total = total + h_series(ks, rs, a, order) * c
    return total


# -- integer partitions and the isobaric expansion -----------------------


def partitions(n: int, max_part: int = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, in decreasing lex order."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_multiplicities(part: Tuple[int, ...]) -> Dict[int, int]:
    mult: Dict[int, int] = {}
    for s in part:
        mult[s] = mult.get(s, 0) + 1
    return mult


def isobaric_expansion(t: int) -> Dict[Tuple[int, ...], Fraction]:
    """Coefficients c_lambda with  U_t = sum_lambda c_lambda prod_s U^(m_s)
    over partitions lambda of t, where U^(m_s) abbreviates the m_s-th power
    of the single sum with merged indices (s*k, s*r):

        c_lambda = prod_s (1/m_s!) * ((-1)^(s+1)/s)^(m_s).
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    out = {}
    for part in partitions(t):
        c = Fraction(1)
        for s, m in partition_multiplicities(part).items():
            c *= Fraction((-1) ** (s + 1), s) ** m
            for i in range(1, m + 1):
                c /= i
        out[part] = c
    return out


def isobaric_reconstruction(t: int, k: int, r: int, a, order: int) -> TruncatedSeries:
    """Assemble the t-fold sum from single sums via the isobaric expansion."""
    atoms = {
        s: h_series([s * k], [s * r], a, order)
        for s in range(1, t + 1)
    }
    total = TruncatedSeries.zero(order)
    for part, c in isobaric_expansion(t).items():
        prod = TruncatedSeries.one(order)
        for s in part:
            prod = prod * atoms[s]
        total = total + prod * c
    return total
