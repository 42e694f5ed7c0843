"""Moebius function tables via a linear sieve.

The sieve tracks the smallest prime factor of every integer up to the limit,
which yields mu and the square-free flags in a single O(n) pass. Divisor
enumeration reuses the stored smallest-prime-factor chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import CapacityError, DomainError

# lcm results must fit the unsigned 64-bit index fields of the Gram cache.
_U64_MAX = 2**63 - 1


@dataclass(frozen=True)
class MoebiusTable:
    """Moebius values and square-free flags for 1..limit.

    Attributes:
        limit: Largest argument covered by the table.
        mu: int8 array of length limit+1; mu[n] is the Moebius value of n.
            Index 0 is unused and set to 0.
        squarefree: Bool array of length limit+1; squarefree[n] iff n has no
            squared prime factor. Equivalent to mu[n] != 0.
        spf: Smallest prime factor of each n >= 2 (int64, index 0 and 1
            unused). Kept for divisor enumeration.
    """

    limit: int
    mu: np.ndarray
    squarefree: np.ndarray
    spf: np.ndarray = field(repr=False)

    def divisors(self, n: int) -> list[int]:
        """Enumerate all positive divisors of n (requires n <= limit).

        Factorizes n through the smallest-prime-factor chain, then expands
        the divisor set prime by prime. Output is sorted.
        """
        if not 1 <= n <= self.limit:
            raise DomainError(f"divisors: n={n} outside 1..{self.limit}")
        divs = [1]
        m = n
        while m > 1:
            p = int(self.spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def sieve_moebius(limit: int) -> MoebiusTable:
    """Build a MoebiusTable for 1..limit with a linear sieve.

    Args:
        limit: Inclusive upper bound, must be >= 1.

    Returns:
        MoebiusTable with mu, squarefree flags, and smallest prime factors.

    Raises:
        DomainError: If limit < 1.
    """
    if limit < 1:
        raise DomainError(f"sieve_moebius: limit must be >= 1, got {limit}")
    mu = np.zeros(limit + 1, dtype=np.int8)
    spf = np.zeros(limit + 1, dtype=np.int64)
    mu[1] = 1
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            mu[i] = -1
            primes.append(i)
        si = spf[i]
        for p in primes:
            ip = i * p
            if p > si or ip > limit:
                break
            spf[ip] = p
            # p == spf[i] means p^2 | ip, killing the Moebius value.
            mu[ip] = 0 if p == si else -mu[i]
    squarefree = mu != 0
    squarefree[0] = False
    return MoebiusTable(limit=limit, mu=mu, squarefree=squarefree, spf=spf)


def verify_recurrence(table: MoebiusTable, n_max: int) -> bool:
    """Check sum_{l | n} mu(l) == (1 if n == 1 else 0) for all n <= n_max.

    The divisor sums are accumulated sieve-style (for each l, add mu[l] to
    every multiple of l), so the check is independent of the table's own
    factorization data.
    """
    if not 1 <= n_max <= table.limit:
        raise DomainError(f"verify_recurrence: n_max={n_max} outside 1..{table.limit}")
    acc = np.zeros(n_max + 1, dtype=np.int64)
    for l in range(1, n_max + 1):
        acc[l::l] += table.mu[l]
    return acc[1] == 1 and not acc[2:].any()


def lcm(l: int, m: int) -> int:
    """Least common multiple with an explicit 64-bit capacity check.

    Gram cache records store sequence indices as u64, so any lcm that
    overflows 63 bits is rejected rather than silently widened.
    """
    if l < 1 or m < 1:
        raise DomainError(f"lcm: arguments must be positive, got ({l}, {m})")
    value = l // gcd(l, m) * m
    if value > _U64_MAX:
        raise CapacityError(f"lcm({l}, {m}) = {value} exceeds the 64-bit cache field")
    return value
