import pytest
from hypothesis import given, strategies as st

from at4tools.exactnum import (
    divisors,
    exact_sqrt,
    factorize,
    gl_order,
    is_prime,
    mult_order,
    prime_power_base,
    prime_set,
    primes_upto,
)


def _trial_division(n):
    """Independent factorization oracle: plain trial division."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(3432) == [(2, 3), (3, 1), (11, 1), (13, 1)]
    assert factorize(3432) == _trial_division(3432)
    assert factorize(167) == [(167, 1)]


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-5)


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_reconstructs(n):
    prod = 1
    prev = 0
    for p, e in factorize(n):
        assert p > prev and e >= 1 and is_prime(p)
        prev = p
        prod *= p**e
    assert prod == n


def test_prime_set():
    assert prime_set(1) == frozenset()
    assert prime_set(180) == frozenset({2, 3, 5})
    assert prime_set(1008) == frozenset({2, 3, 7})


def test_prime_power_base():
    assert prime_power_base(27) == (3, 3)
    assert prime_power_base(12) is None
    assert prime_power_base(11) == (11, 1)
    with pytest.raises(ValueError):
        prime_power_base(1)


def test_exact_sqrt_examples():
    assert exact_sqrt(0) == 0
    assert exact_sqrt(9) == 3
    assert exact_sqrt(8) is None
    with pytest.raises(ValueError):
        exact_sqrt(-1)


def test_exact_sqrt_all_small_squares():
    for d in range(100001):
        assert exact_sqrt(d * d) == d


def test_gl_order():
    assert gl_order(1, 3) == 2
    assert gl_order(2, 3) == 48
    assert gl_order(2, 13) == 26208
    with pytest.raises(ValueError):
        gl_order(0, 3)
    with pytest.raises(ValueError):
        gl_order(2, 4)


def test_gl_order_subgroup_divisibility():
    # the order of the (e-1)-dimensional group divides the e-dimensional one
    for t in (2, 3, 5, 13):
        for e in range(2, 6):
            assert gl_order(e, t) % gl_order(e - 1, t) == 0


def test_mult_order_examples():
    assert mult_order(1, 7) == 1
    assert mult_order(3, 23) == 11
    with pytest.raises(ValueError):
        mult_order(6, 9)


def test_mult_order_against_divisor_oracle():
    # smallest divisor d of 166 with 13^d = 1 mod 167
    oracle = min(d for d in divisors(166) if pow(13, d, 167) == 1)
    assert mult_order(13, 167) == oracle


@given(
    st.sampled_from([p for p in primes_upto(2000) if p > 2]),
    st.integers(min_value=2, max_value=10**6),
)
def test_mult_order_divides_group_order(s, t):
    if t % s == 0:
        t += 1
    e = mult_order(t, s)
    assert (s - 1) % e == 0
    assert pow(t, e, s) == 1
    # minimality against every proper divisor
    for d in divisors(e)[:-1]:
        assert pow(t, d, s) != 1


def test_primes_upto():
    assert primes_upto(1) == []
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(56) == [1, 2, 4, 7, 8, 14, 28, 56]
    assert divisors(115) == [1, 5, 23, 115]


def test_is_prime_spot_checks():
    assert is_prime(2) and is_prime(167) and is_prime(839)
    assert not is_prime(1) and not is_prime(119) and not is_prime(34)
