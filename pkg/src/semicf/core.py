"""Semi-regular continued fractions: terms, validation, convergent recurrences.

A semi-regular continued fraction is b0 + a1/(b1 + a2/(b2 + ...)) with each
partial numerator a_n in {-1, +1} and each partial denominator b_n >= 1,
subject to the gap condition b_n + a_{n+1} >= 1 (so a minus numerator may
only follow a denominator of at least 2).  Sequences satisfying these
conditions are called Tietze-valid here; every convergent p_n/q_n of such a
sequence is well defined and the sequence of convergents converges.

All arithmetic is exact: values are `fractions.Fraction`, always reduced to
lowest terms with positive denominator, so equality is canonical-form
equality.  All types are immutable; operations return new values.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union

from .errors import IdentityViolation, InsufficientTerms, TietzeViolation

RationalLike = Union[int, str, Fraction]

#: Violation reasons reported by validate().
B_TOO_SMALL = "BTooSmall"
GAP_VIOLATION = "GapViolation"


def rational(x: RationalLike) -> Fraction:
    """Coerce to a reduced Fraction."""
    return Fraction(x)


@dataclass(frozen=True)
class Term:
    """One partial fraction: a numerator sign and a positive denominator.

    The denominator is *not* required to be >= 1 at construction time so that
    invalid sequences remain representable (validation reports them as data).
    """

    a: int
    b: Fraction

    def __post_init__(self) -> None:
        if self.a is True or self.a is False or self.a not in (1, -1):
            raise ValueError(f"numerator sign must be +1 or -1, got {self.a!r}")
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b <= 0:
            raise ValueError(f"partial denominator must be positive, got {self.b}")


@dataclass(frozen=True)
class SemiRegularCF:
    """A finite sequence b0; (a1, b1), (a2, b2), ... with 1-based term indices."""

    b0: Fraction
    terms: Tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "b0", Fraction(self.b0))
        object.__setattr__(self, "terms", tuple(self.terms))

    @classmethod
    def from_pairs(
        cls, b0: RationalLike, pairs: Iterable[Tuple[int, RationalLike]]
    ) -> "SemiRegularCF":
        return cls(Fraction(b0), tuple(Term(a, Fraction(b)) for a, b in pairs))

    @classmethod
    def periodic(
        cls,
        b0: RationalLike,
        pairs: Iterable[Tuple[int, RationalLike]],
        length: int,
    ) -> "SemiRegularCF":
        """Unroll a periodic term list to `length` terms."""
        period = tuple(Term(a, Fraction(b)) for a, b in pairs)
        if not period:
            raise ValueError("periodic continuation needs a nonempty period")
        if length < 0:
            raise ValueError("length must be nonnegative")
        terms = tuple(period[i % len(period)] for i in range(length))
        return cls(Fraction(b0), terms)

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, n: int) -> Term:
        """The n-th term, 1-based."""
        if not 1 <= n <= len(self.terms):
            raise InsufficientTerms(f"term index {n} outside 1..{len(self.terms)}")
        return self.terms[n - 1]

    def a(self, n: int) -> int:
        return self.term(n).a

    def b(self, n: int) -> Fraction:
        return self.term(n).b

    def prefix(self, n: int) -> "SemiRegularCF":
        """The sub-sequence keeping only terms 1..n."""
        if not 0 <= n <= len(self.terms):
            raise InsufficientTerms(f"prefix length {n} outside 0..{len(self.terms)}")
        return SemiRegularCF(self.b0, self.terms[:n])


def _cf_cached_hash(self: SemiRegularCF) -> int:
    h = self.__dict__.get("_hash_cache")
    if h is None:
        h = hash((self.b0, self.terms))
        object.__setattr__(self, "_hash_cache", h)
    return h


# Hashing term-by-term on every memoized lookup dominates runtime for long
# sequences; instances are immutable, so the hash can be computed once.
SemiRegularCF.__hash__ = _cf_cached_hash  # type: ignore[method-assign]


@dataclass(frozen=True)
class Violation:
    index: int
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    first_violation: Optional[Violation] = None


def validate(cf: SemiRegularCF, upto: Optional[int] = None) -> ValidationReport:
    """Check b_n >= 1 and b_n + a_{n+1} >= 1 through index `upto`.

    The gap condition is checked wherever the successor term exists in the
    full sequence; the final available term is exempt.  Violations are data,
    not errors.
    """
    available = len(cf)
    if upto is None:
        upto = available
    if upto > available:
        raise InsufficientTerms(f"requested {upto} of {available} terms")
    for n in range(1, upto + 1):
        t = cf.term(n)
        if t.b < 1:
            return ValidationReport(False, Violation(n, B_TOO_SMALL))
        if n < available and t.b + cf.a(n + 1) < 1:
            return ValidationReport(False, Violation(n, GAP_VIOLATION))
    return ValidationReport(True, None)


@dataclass(frozen=True)
class ConvergentState:
    """Sliding window of the convergent recurrence.

    Holds (n, p_{n-1}, p_n, q_{n-1}, q_n), the running product of the
    numerator signs a_1..a_n (+1 at n = 0), and the last partial denominator
    so that checked stepping can enforce the gap condition.
    """

    n: int
    p_prev: Fraction
    p_cur: Fraction
    q_prev: Fraction
    q_cur: Fraction
    det_product: int = 1
    last_b: Optional[Fraction] = None

    @property
    def value(self) -> Fraction:
        """The convergent p_n / q_n."""
        return self.p_cur / self.q_cur


def init_state(b0: RationalLike) -> ConvergentState:
    """The n = 0 window: p_{-1}=1, p_0=b0, q_{-1}=0, q_0=1."""
    return ConvergentState(0, Fraction(1), Fraction(b0), Fraction(0), Fraction(1))


def step(s: ConvergentState, t: Term, *, checked: bool = True) -> ConvergentState:
    """Advance the window by one term: p_new = b*p_n + a*p_{n-1}, same for q.

    With checked=True (the default) the term must keep the sequence
    Tietze-valid against the previously appended term; pass checked=False to
    probe invalid sequences.
    """
    if checked:
        if t.b < 1:
            raise TietzeViolation(
                f"b_{s.n + 1} = {t.b} < 1"
            )
        if s.last_b is not None and s.last_b + t.a < 1:
            raise TietzeViolation(
                f"b_{s.n} + a_{s.n + 1} = {s.last_b} + ({t.a}) < 1"
            )
    return ConvergentState(
        s.n + 1,
        s.p_cur,
        t.b * s.p_cur + t.a * s.p_prev,
        s.q_cur,
        t.b * s.q_cur + t.a * s.q_prev,
        s.det_product * t.a,
        t.b,
    )


def iter_states(
    cf: SemiRegularCF, upto: Optional[int] = None, *, checked: bool = False
) -> Iterator[ConvergentState]:
    """Yield the states for n = 0 .. upto (default: the whole sequence)."""
    if upto is None:
        upto = len(cf)
    if upto > len(cf):
        raise InsufficientTerms(f"requested {upto} of {len(cf)} terms")
    s = init_state(cf.b0)
    yield s
    for n in range(1, upto + 1):
        s = step(s, cf.term(n), checked=checked)
        yield s


@functools.lru_cache(maxsize=64)
def _states(cf: SemiRegularCF) -> Tuple[ConvergentState, ...]:
    # Sequences are immutable, so the full state table can be cached.
    return tuple(iter_states(cf))


def state_at(cf: SemiRegularCF, n: int) -> ConvergentState:
    """The recurrence window after consuming terms 1..n."""
    if n < 0 or n > len(cf):
        raise InsufficientTerms(f"state index {n} outside 0..{len(cf)}")
    return _states(cf)[n]


def convergent(cf: SemiRegularCF, n: int) -> Fraction:
    """The convergent p_n / q_n, equal to the depth-n truncation of cf."""
    return state_at(cf, n).value


def determinant_check(s: ConvergentState) -> int:
    """Return (-1)^{n-1} a_1...a_n and verify the cross-product identity.

    p_n q_{n-1} - p_{n-1} q_n equals that sign exactly for every valid
    sequence; a mismatch means the recurrence was driven with inconsistent
    data and raises IdentityViolation.
    """
    if s.n < 1:
        raise ValueError("determinant identity needs n >= 1")
    expected = s.det_product if s.n % 2 == 1 else -s.det_product
    actual = s.p_cur * s.q_prev - s.p_prev * s.q_cur
    if actual != expected:
        raise IdentityViolation(
            f"p_n q_(n-1) - p_(n-1) q_n = {actual}, expected {expected} at n={s.n}"
        )
    return expected


def series_partial_sum(cf: SemiRegularCF, n: int) -> Fraction:
    """b0 plus the telescoped series of convergent differences through n.

    Each term is (-1)^{k-1} a_1...a_k / (q_{k-1} q_k); the partial sum equals
    convergent(cf, n) exactly.
    """
    states = _states(cf)
    if n > len(cf):
        raise InsufficientTerms(f"requested {n} of {len(cf)} terms")
    total = cf.b0
    prod = 1
    for k in range(1, n + 1):
        prod *= cf.a(k)
        num = prod if k % 2 == 1 else -prod
        total += Fraction(num) / (states[k - 1].q_cur * states[k].q_cur)
    return total


def gap(s: ConvergentState, a_next: int) -> Fraction:
    """q_n + a_{n+1} q_{n-1}; at least 1 for every valid sequence."""
    if a_next not in (1, -1):
        raise ValueError(f"numerator sign must be +1 or -1, got {a_next!r}")
    return s.q_cur + a_next * s.q_prev
