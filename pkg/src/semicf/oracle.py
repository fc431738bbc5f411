"""Brute-force nested evaluation, kept independent of the recurrence engine.

This module deliberately shares no code with core's convergent recurrences:
it folds the nested fraction directly so that agreement between the two
paths is evidence, not tautology.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .core import SemiRegularCF
from .errors import InsufficientTerms, ZeroDenominator


def fold_eval(cf: SemiRegularCF, n: Optional[int] = None) -> Fraction:
    """Evaluate b0 + a1/(b1 + a2/(b2 + ... + an/bn)) by one backward pass.

    A zero intermediate denominator is possible only for invalid sequences
    and is reported as ZeroDenominator rather than asserted away.
    """
    if n is None:
        n = len(cf)
    if n > len(cf):
        raise InsufficientTerms(f"requested {n} of {len(cf)} terms")
    acc = Fraction(0)
    for i in range(n, 0, -1):
        den = cf.b(i) + acc
        if den == 0:
            raise ZeroDenominator(i)
        acc = cf.a(i) / den
    return cf.b0 + acc
