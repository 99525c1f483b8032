"""Number-theoretic helpers, checked against naive definitions."""

from fractions import Fraction

import pytest

from parorb.arith import (
    divisors,
    format_rational,
    is_prime,
    is_squarefree,
    mobius,
    parse_rational,
    prime_factors,
)
from parorb.errors import ParseError


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_mobius(n):
    # count square-free factorizations directly
    factors = []
    d, left = 2, n
    while d * d <= left:
        while left % d == 0:
            factors.append(d)
            left //= d
        d += 1
    if left > 1:
        factors.append(left)
    if len(set(factors)) != len(factors):
        return 0
    return -1 if len(factors) % 2 else 1


def test_divisors_match_trial_division():
    for n in range(1, 200):
        assert divisors(n) == naive_divisors(n), n


def test_divisors_are_sorted():
    for n in (12, 60, 97, 720):
        ds = divisors(n)
        assert ds == sorted(ds)


def test_mobius_against_naive():
    for n in range(1, 300):
        assert mobius(n) == naive_mobius(n), n


def test_mobius_divisor_sum_is_indicator():
    # sum_{d | n} mu(d) is 1 at n=1 and 0 otherwise
    for n in range(1, 150):
        total = sum(mobius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0), n


def test_prime_factors_squarefree_prime():
    assert prime_factors(60) == {2: 2, 3: 1, 5: 1}
    assert is_squarefree(30) and not is_squarefree(12)
    assert [p for p in range(2, 30) if is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
    ]
    assert not is_prime(1) and not is_prime(0)


def test_parse_rational_accepts_fractions_and_integers():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("5") == Fraction(5)
    assert parse_rational("-7/2") == Fraction(-7, 2)


@pytest.mark.parametrize("bad", ["", "x", "1/0", "3.5.1", "1//2"])
def test_parse_rational_rejects_garbage(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_round_trips_parse():
    for value in (Fraction(3, 4), Fraction(-1, 6), Fraction(5), Fraction(0)):
        assert parse_rational(format_rational(value)) == value
