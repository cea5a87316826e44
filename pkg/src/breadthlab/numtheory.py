"""Integer utilities: trial-division factorization, divisor lists, Euler's totient.

Everything here is deliberately elementary.  Inputs stay well below 2^64 and
trial division is fast enough at that scale, so there is no probabilistic
primality machinery.
"""

from __future__ import annotations

import math
from functools import lru_cache

Factorization = list[tuple[int, int]]


def factorize(n: int) -> Factorization:
    """Return the prime factorization of n as (prime, exponent) pairs, ascending.

    factorize(1) == [].
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: Factorization = []
    m = n
    for p in _small_trial_primes(m):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return out


def _small_trial_primes(m):
    yield 2
    yield 3
    k = 5
    while k * k <= m:
        yield k
        yield k + 2
        k += 6


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n, sorted ascending (always contains 1 and n)."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    """Euler's totient, computed multiplicatively from the factorization."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, m) with n == p**m if n is a prime power, else None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) == 1:
        return f[0]
    return None


def primes_up_to(limit: int) -> list[int]:
    """Simple sieve; used for the symbolic inequality sweeps."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def prime_powers_up_to(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, m) with q = p**m <= limit, m >= 1, sorted by q."""
    out = []
    for p in primes_up_to(limit):
        q, m = p, 1
        while q <= limit:
            out.append((q, p, m))
            q *= p
            m += 1
    out.sort()
    return out
