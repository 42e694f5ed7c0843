import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nblab.arith import MoebiusTable, lcm, sieve_moebius, verify_recurrence
from nblab.errors import CapacityError, DomainError


def _mu_reference(n: int) -> int:
    """Trial-division Moebius, independent of the sieve."""
    if n == 1:
        return 1
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            count += 1
        d += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


class TestSieve:
    def test_small_values(self):
        t = sieve_moebius(30)
        assert t.mu[1] == 1
        assert t.mu[2] == -1
        assert t.mu[4] == 0
        assert t.mu[6] == 1
        assert t.mu[12] == 0
        assert t.mu[30] == -1

    def test_against_trial_division(self):
        t = sieve_moebius(10_000)
        for n in range(1, 10_001):
            assert t.mu[n] == _mu_reference(n), n

    def test_squarefree_flag(self):
        t = sieve_moebius(10_000)
        for n in range(1, 10_001):
            assert bool(t.squarefree[n]) == (_mu_reference(n) != 0)

    def test_recurrence_exact(self):
        # sum over divisors of mu is the delta at 1
        t = sieve_moebius(10_000)
        assert verify_recurrence(t, 10_000)
        for n in (1, 2, 360, 9973, 10_000):
            total = sum(int(t.mu[d]) for d in t.divisors(n))
            assert total == (1 if n == 1 else 0)

    def test_multiplicative_on_coprime_pairs(self):
        t = sieve_moebius(1_000_000)
        rng = random.Random(7)
        done = 0
        while done < 200:
            a = rng.randrange(1, 1000)
            b = rng.randrange(1, 1000)
            if math.gcd(a, b) != 1:
                continue
            assert t.mu[a * b] == t.mu[a] * t.mu[b]
            done += 1

    def test_divisors(self):
        t = sieve_moebius(100)
        assert sorted(t.divisors(12)) == [1, 2, 3, 4, 6, 12]
        assert t.divisors(1) == [1]
        assert sorted(t.divisors(97)) == [1, 97]

    def test_out_of_range_divisors(self):
        t = sieve_moebius(10)
        with pytest.raises(DomainError):
            t.divisors(11)
        with pytest.raises(DomainError):
            t.divisors(0)

    def test_rejects_bad_limit(self):
        with pytest.raises(DomainError):
            sieve_moebius(0)

    @given(st.integers(min_value=1, max_value=9999))
    @settings(max_examples=300, deadline=None)
    def test_mu_matches_reference_property(self, n):
        t = sieve_moebius(10_000)
        assert t.mu[n] == _mu_reference(n)


class TestLcm:
    def test_examples(self):
        assert lcm(4, 6) == 12
        assert lcm(1, 9) == 9
        assert lcm(7, 7) == 7
        assert lcm(299, 300) == 299 * 300

    def test_capacity_guard(self):
        big = 2**40
        with pytest.raises(CapacityError):
            lcm(big, big - 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            lcm(0, 3)

    @given(st.integers(1, 10_000), st.integers(1, 10_000))
    @settings(max_examples=200, deadline=None)
    def test_lcm_gcd_identity(self, a, b):
        assert lcm(a, b) * math.gcd(a, b) == a * b
