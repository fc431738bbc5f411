from fractions import Fraction

import pytest

from semicf import SemiRegularCF, ZeroDenominator, convergent, fold_eval, shift_check
from semicf.errors import InsufficientTerms

from conftest import corpus_cf, golden


def test_direct_substitution():
    cf = SemiRegularCF.from_pairs(2, [(1, 3)])
    assert fold_eval(cf, 1) == Fraction(7, 3)


def test_no_fold_at_zero():
    assert fold_eval(golden(4), 0) == 1
    assert fold_eval(SemiRegularCF.from_pairs(Fraction(7, 3), []), 0) == Fraction(7, 3)


def test_golden_depth_two():
    assert fold_eval(golden(4), 2) == Fraction(3, 2)


def test_matches_recurrence_on_random_sequences():
    for seed in range(30):
        cf = corpus_cf(seed, max_len=25)
        for n in range(len(cf) + 1):
            assert fold_eval(cf, n) == convergent(cf, n)


def test_tail_consistency():
    cf = corpus_cf(9, max_len=20)
    for n in range(len(cf)):
        for k in range(1, len(cf) - n + 1):
            assert fold_eval(cf, n + k) == shift_check(cf, n, k)


def test_zero_denominator_reported():
    # invalid sequence: inner fold produces b1 + (-1) = 0
    cf = SemiRegularCF.from_pairs(0, [(1, 1), (-1, 1)])
    with pytest.raises(ZeroDenominator) as exc:
        fold_eval(cf, 2)
    assert exc.value.index == 1


def test_insufficient_terms():
    with pytest.raises(InsufficientTerms):
        fold_eval(golden(2), 3)
