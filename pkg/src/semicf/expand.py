"""Expansion algorithms producing Tietze-valid sequences from exact rationals.

Three classical finite expansions (regular/Euclidean, negative, and
nearest-integer) plus a seeded random generator for property tests.  Every
output validates and folds back to its input exactly.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import RationalLike, SemiRegularCF, Term

#: Denominator bound for random non-integer partial denominators.
_DENOM_BOUND = 12


class ExpansionAlgo(enum.Enum):
    REGULAR = "regular"
    NEGATIVE = "negative"
    NEAREST_INTEGER = "nearest"


def regular_expand(x: RationalLike) -> SemiRegularCF:
    """Euclidean expansion: all numerators +1, integer denominators >= 1."""
    x = Fraction(x)
    b0 = math.floor(x)
    r = x - b0
    terms = []
    while r:
        y = 1 / r
        b = math.floor(y)
        terms.append(Term(1, Fraction(b)))
        r = y - b
    return SemiRegularCF(Fraction(b0), tuple(terms))


def negative_expand(x: RationalLike) -> SemiRegularCF:
    """Ceiling expansion: all numerators -1, integer denominators >= 2.

    Integers expand to no terms (the minimal form) rather than a trailing
    chain of 2s.
    """
    x = Fraction(x)
    b0 = math.ceil(x)
    r = b0 - x  # in [0, 1)
    terms = []
    while r:
        y = 1 / r  # > 1
        b = math.ceil(y)  # >= 2
        terms.append(Term(-1, Fraction(b)))
        r = b - y
    return SemiRegularCF(Fraction(b0), tuple(terms))


def _nearest_away(x: Fraction) -> int:
    # round to nearest, ties away from zero
    if x >= 0:
        return math.floor(x + Fraction(1, 2))
    return -math.floor(-x + Fraction(1, 2))


def nearest_int_expand(x: RationalLike) -> SemiRegularCF:
    """Nearest-integer expansion: signed numerators, integer denominators >= 2.

    Ties at half-integers round away from zero, so the remainder becomes -1/2
    and the next denominator stays >= 2; outputs are reproducible.
    """
    x = Fraction(x)
    b0 = _nearest_away(x)
    r = x - b0  # in [-1/2, 1/2]
    terms = []
    while r:
        a = 1 if r > 0 else -1
        y = 1 / abs(r)  # >= 2
        b = _nearest_away(y)  # >= 2
        terms.append(Term(a, Fraction(b)))
        r = y - b
    return SemiRegularCF(Fraction(b0), tuple(terms))


def expand(x: RationalLike, algo: ExpansionAlgo) -> SemiRegularCF:
    if algo is ExpansionAlgo.REGULAR:
        return regular_expand(x)
    if algo is ExpansionAlgo.NEGATIVE:
        return negative_expand(x)
    if algo is ExpansionAlgo.NEAREST_INTEGER:
        return nearest_int_expand(x)
    raise ValueError(f"unknown expansion algorithm {algo!r}")


@dataclass(frozen=True)
class RandomSpec:
    """Parameters for the seeded random sequence generator."""

    seed: int
    length: int
    b_max: Fraction = Fraction(8)
    minus_probability: Fraction = Fraction(1, 3)
    integer_only: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.length < 1:
            raise ValueError("length must be >= 1")
        object.__setattr__(self, "b_max", Fraction(self.b_max))
        object.__setattr__(
            self, "minus_probability", Fraction(self.minus_probability)
        )
        if self.b_max < 2:
            raise ValueError("b_max must be >= 2 so minus numerators stay reachable")
        if not 0 <= self.minus_probability <= 1:
            raise ValueError("minus_probability must lie in [0, 1]")


def _draw_rational(
    rng: random.Random, lo: Fraction, hi: Fraction, integer_only: bool
) -> Fraction:
    if integer_only:
        return Fraction(rng.randint(math.ceil(lo), math.floor(hi)))
    d = rng.randint(1, _DENOM_BOUND)
    return Fraction(rng.randint(math.ceil(lo * d), math.floor(hi * d)), d)


def random_tietze(spec: RandomSpec) -> SemiRegularCF:
    """A seeded random Tietze-valid sequence; deterministic in the seed.

    Numerator signs are drawn first; each b_n is drawn from [2, b_max] when
    the next numerator is -1 and from [1, b_max] otherwise, so validity holds
    by construction.
    """
    rng = random.Random(spec.seed)
    signs = [
        -1 if rng.random() < spec.minus_probability else 1
        for _ in range(spec.length)
    ]
    b0 = _draw_rational(rng, Fraction(0), spec.b_max, spec.integer_only)
    terms = []
    for i in range(spec.length):
        needs_two = i + 1 < spec.length and signs[i + 1] == -1
        lo = Fraction(2) if needs_two else Fraction(1)
        terms.append(Term(signs[i], _draw_rational(rng, lo, spec.b_max, spec.integer_only)))
    return SemiRegularCF(b0, tuple(terms))
