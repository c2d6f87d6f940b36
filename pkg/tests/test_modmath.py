from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gcd_scan_units, order_by_successive_powers, trial_division_is_prime
from powbands.errors import ModulusTooLarge, ModulusTooSmall, NotCoprime, NotInvertible
from powbands.modmath import (
    MAX_MODULUS,
    euler_phi,
    factorize,
    is_prime,
    mod_inverse,
    mod_pow,
    multiplicative_order,
    units,
)

PRIMES_TO_10K = [n for n in range(2, 10_001) if trial_division_is_prime(n)]


@pytest.mark.parametrize("args, expected", [((2, 0, 7), 1), ((2, 13, 13), 2), ((2, 11, 5), 3)])
def test_mod_pow_examples(args, expected):
    assert mod_pow(*args) == expected


def test_mod_pow_modulus_bounds():
    with pytest.raises(ModulusTooSmall):
        mod_pow(2, 3, 1)
    with pytest.raises(ModulusTooLarge):
        mod_pow(2, 3, MAX_MODULUS)
    assert mod_pow(3, 5, MAX_MODULUS - 1) == 243


@given(
    st.integers(0, 2**64),
    st.integers(0, 2**64),
    st.integers(2, MAX_MODULUS - 1),
)
def test_mod_pow_matches_bigint(b, e, m):
    # square-and-multiply on python ints, reduced only at the end for small e
    if e < 64:
        assert mod_pow(b, e, m) == b**e % m
    else:
        acc, base, k = 1, b % m, e
        while k:
            if k & 1:
                acc = acc * base % m
            base = base * base % m
            k >>= 1
        assert mod_pow(b, e, m) == acc


@pytest.mark.parametrize("a, m, expected", [(8, 13, 5), (1, 97, 1), (4, 5, 4)])
def test_mod_inverse_examples(a, m, expected):
    assert mod_inverse(a, m) == expected
    assert [u for u in range(1, m) if a * u % m == 1] == [expected]


def test_mod_inverse_not_invertible():
    with pytest.raises(NotInvertible):
        mod_inverse(6, 9)


@given(st.integers(2, 10**12), st.integers(1, 10**12))
def test_mod_inverse_property(m, a):
    if gcd(a, m) != 1:
        return
    u = mod_inverse(a, m)
    assert 0 < u < m or m == 1
    assert a * u % m == 1


@pytest.mark.parametrize("b, q, expected", [(2, 13, 12), (1, 13, 1), (6, 7, 2)])
def test_order_examples(b, q, expected):
    assert multiplicative_order(b, q) == expected


def test_order_not_coprime():
    with pytest.raises(NotCoprime):
        multiplicative_order(26, 13)


def test_order_divides_q_minus_1_and_matches_powers():
    for q in PRIMES_TO_10K[1:200]:
        for b in range(2, min(q, 40)):
            d = multiplicative_order(b, q)
            assert (q - 1) % d == 0
            assert d == order_by_successive_powers(b, q)


@st.composite
def prime_and_base(draw):
    q = draw(st.sampled_from(PRIMES_TO_10K[1:]))
    return q, draw(st.integers(2, q - 1))


@settings(max_examples=300)
@given(prime_and_base())
def test_order_divides_q_minus_1_random(qb):
    q, b = qb
    assert (q - 1) % multiplicative_order(b, q) == 0


def test_fermat_little_theorem():
    for q in PRIMES_TO_10K:
        for b in (2, 3, 10, q - 1, q + 1):
            if b % q:
                assert mod_pow(b, q - 1, q) == 1


@pytest.mark.parametrize("n, expected", [(12, 4), (1, 1), (13, 12), (97, 96)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize(
    "n, expected", [(12, [1, 5, 7, 11]), (2, [1]), (20, [1, 3, 7, 9, 11, 13, 17, 19]), (1, [0])]
)
def test_units_examples(n, expected):
    assert units(n) == expected


def test_units_cardinality_is_phi():
    for n in range(1, 10_001):
        assert len(units(n)) == euler_phi(n)
    for n in (20, 156, 1000, 9999):
        assert units(n) == gcd_scan_units(n)


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_phi_multiplicative(m, n):
    if gcd(m, n) == 1:
        assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)


@given(st.integers(1, 10**9))
def test_factorize_reassembles(n):
    f = factorize(n)
    prod = 1
    for p, e in f.items():
        assert trial_division_is_prime(p)
        prod *= p**e
    assert prod == n


@pytest.mark.parametrize("n, expected", [(13, True), (1, False), (2203, True), (0, False), (2, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(20_000) if is_prime(n)] == [
        n for n in range(20_000) if trial_division_is_prime(n)
    ]


@pytest.mark.parametrize(
    "n, expected",
    [
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases 2..23
        (318665857834031151167461, False),  # strong pseudoprime to bases 2..37
        ((1 << 61) - 1, True),
        ((1 << 63) - 25, True),
        ((1 << 63) - 1, False),
        (3317044064679887385961981, False),  # first composite passing bases 2..41
        ((1 << 89) - 1, True),
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected
