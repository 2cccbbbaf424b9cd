"""Exact integer arithmetic: factorization, primality, group-order helpers.

Everything in this package runs on plain Python integers and
``fractions.Fraction``; no floating point is used anywhere.  The magnitudes
are small (parameters of graphs with at most a few million vertices), so
trial division backed by a deterministic Miller-Rabin test is plenty.
"""

import math

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Return True if n is prime (deterministic for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out.append((2, e))
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_set(n: int) -> frozenset[int]:
    """The set of prime divisors of n >= 1."""
    return frozenset(p for p, _ in factorize(n))


def primes_upto(n: int) -> list[int]:
    """All primes <= n, via a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


def prime_power_base(n: int) -> tuple[int, int] | None:
    """Return (t, e) with t prime and t**e == n, or None if n is not a prime power."""
    if n < 2:
        raise ValueError(f"prime_power_base requires n >= 2, got {n}")
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


def exact_sqrt(n: int) -> int | None:
    """Return d with d*d == n when n is a perfect square, else None."""
    if n < 0:
        raise ValueError(f"exact_sqrt requires n >= 0, got {n}")
    d = math.isqrt(n)
    return d if d * d == n else None


def gl_order(e: int, t: int) -> int:
    """Order of the group of invertible e x e matrices over the t-element field.

    Equals the product of (t**e - t**i) for i in 0..e-1; t must be prime.
    """
    if e < 1:
        raise ValueError(f"gl_order requires e >= 1, got {e}")
    if not is_prime(t):
        raise ValueError(f"gl_order requires prime t, got {t}")
    q = t**e
    out = 1
    for i in range(e):
        out *= q - t**i
    return out


def _carmichael(n: int) -> int:
    # Exponent of the unit group mod n; mult_order uses it as a starting bound.
    lam = 1
    for p, e in factorize(n):
        if p == 2 and e >= 3:
            block = 2 ** (e - 2)
        else:
            block = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, block)
    return lam


def mult_order(t: int, s: int) -> int:
    """Least e >= 1 with t**e congruent to 1 mod s; requires gcd(t, s) == 1."""
    if s < 2:
        raise ValueError(f"mult_order requires s >= 2, got {s}")
    if math.gcd(t, s) != 1:
        raise ValueError(f"mult_order requires gcd(t, s) = 1, got t={t}, s={s}")
    k = _carmichael(s)
    for q in sorted(prime_set(k)):
        while k % q == 0 and pow(t, k // q, s) == 1:
            k //= q
    return k
