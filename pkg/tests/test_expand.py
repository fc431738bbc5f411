from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semicf import (
    ExpansionAlgo,
    RandomSpec,
    expand,
    fold_eval,
    iter_states,
    nearest_int_expand,
    negative_expand,
    random_tietze,
    regular_expand,
    validate,
)

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=999
)


def pairs(cf):
    return [(t.a, t.b) for t in cf.terms]


class TestRegular:
    def test_seven_thirds(self):
        cf = regular_expand(Fraction(7, 3))
        assert cf.b0 == 2
        assert pairs(cf) == [(1, 3)]

    def test_integer(self):
        cf = regular_expand(5)
        assert cf.b0 == 5 and not cf.terms

    def test_pi_approx(self):
        cf = regular_expand(Fraction(355, 113))
        assert cf.b0 == 3
        assert pairs(cf) == [(1, 7), (1, 16)]


class TestNegative:
    def test_seven_thirds(self):
        cf = negative_expand(Fraction(7, 3))
        assert cf.b0 == 3
        assert pairs(cf) == [(-1, 2), (-1, 2)]

    def test_integer(self):
        cf = negative_expand(5)
        assert cf.b0 == 5 and not cf.terms

    def test_half(self):
        cf = negative_expand(Fraction(1, 2))
        assert cf.b0 == 1
        assert pairs(cf) == [(-1, 2)]

    def test_feeds_linear_growth(self):
        # all-minus expansions satisfy q_n >= n + 1
        cf = negative_expand(Fraction(617, 513))
        for s in iter_states(cf):
            assert s.q_cur >= s.n + 1


class TestNearestInteger:
    def test_seven_thirds(self):
        cf = nearest_int_expand(Fraction(7, 3))
        assert cf.b0 == 2
        assert pairs(cf) == [(1, 3)]

    def test_five_thirds(self):
        cf = nearest_int_expand(Fraction(5, 3))
        assert cf.b0 == 2
        assert pairs(cf) == [(-1, 3)]

    def test_tie_rounds_away_from_zero(self):
        cf = nearest_int_expand(Fraction(3, 2))
        assert cf.b0 == 2
        assert pairs(cf) == [(-1, 2)]
        cf = nearest_int_expand(Fraction(-3, 2))
        assert cf.b0 == -2
        assert pairs(cf) == [(1, 2)]

    def test_denominators_at_least_two(self):
        for num in range(-40, 40):
            cf = nearest_int_expand(Fraction(num, 7))
            assert all(t.b >= 2 for t in cf.terms)


@settings(deadline=None, max_examples=150)
@given(x=rationals, algo=st.sampled_from(list(ExpansionAlgo)))
def test_round_trip_and_validity(x, algo):
    cf = expand(x, algo)
    assert validate(cf).valid
    assert fold_eval(cf) == x


class TestRandomTietze:
    def test_deterministic(self):
        spec = RandomSpec(seed=42, length=30)
        assert random_tietze(spec) == random_tietze(spec)

    def test_no_minus(self):
        cf = random_tietze(RandomSpec(seed=7, length=40, minus_probability=0))
        assert all(t.a == 1 for t in cf.terms)

    def test_all_minus(self):
        cf = random_tietze(RandomSpec(seed=7, length=40, minus_probability=1))
        assert all(t.a == -1 for t in cf.terms)
        assert all(t.b >= 2 for t in cf.terms[:-1])

    @pytest.mark.parametrize("seed", range(0, 40, 7))
    def test_always_valid(self, seed):
        for integer_only in (False, True):
            spec = RandomSpec(
                seed=seed,
                length=seed % 20 + 1,
                minus_probability=Fraction(1, 2),
                integer_only=integer_only,
            )
            assert validate(random_tietze(spec)).valid

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            RandomSpec(seed=1, length=0)
        with pytest.raises(ValueError):
            RandomSpec(seed=1, length=5, b_max=Fraction(3, 2))
        with pytest.raises(ValueError):
            RandomSpec(seed=-1, length=5)
        with pytest.raises(ValueError):
            RandomSpec(seed=1, length=5, minus_probability=2)
