"""Exact modular arithmetic on naturals below 2**63.

Residues are plain ints in ``[0, modulus)``. Python ints never overflow, so
the 63-bit ceiling is a contract on inputs, not an implementation limit:
it keeps every modulus q*p and exponent q*p inside one machine word for
anyone porting the numbers elsewhere.
"""

from __future__ import annotations

from math import gcd

import sympy

from .errors import ModulusTooLarge, ModulusTooSmall, NotCoprime, NotInvertible, NotPrime

MAX_MODULUS = 1 << 63

# Strong-pseudoprime bases proven sufficient for n < 3317044064679887385961981
# (Sorenson & Webster 2015), which covers the whole 63-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _check_modulus(modulus: int) -> None:
    if modulus < 2:
        raise ModulusTooSmall(f"modulus must be >= 2, got {modulus}")
    if modulus >= MAX_MODULUS:
        raise ModulusTooLarge(f"modulus must be < 2**63, got {modulus}")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return ``base**exponent % modulus`` exactly."""
    _check_modulus(modulus)
    if base < 0 or exponent < 0:
        raise ValueError("base and exponent must be natural numbers")
    return pow(base, exponent, modulus)


def mod_inverse(a: int, modulus: int) -> int:
    """Return u in (0, modulus) with a*u = 1 (mod modulus)."""
    _check_modulus(modulus)
    if gcd(a, modulus) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {modulus}")
    return pow(a, -1, modulus)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def multiplicative_order(b: int, q: int) -> int:
    """Least d >= 1 with b**d = 1 (mod q), for a prime q not dividing b.

    Only the divisors of q - 1 are tried, which is exactly right for prime q.
    """
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if b % q == 0:
        raise NotCoprime(f"q={q} divides b={b}")
    for d in divisors(q - 1):
        if mod_pow(b, d, q) == 1:
            return d
    raise AssertionError("unreachable for prime q")  # pragma: no cover


def units(n: int) -> list[int]:
    """Ascending list of the unit group Z*[n]; units(1) == [0] by convention."""
    if n < 1:
        raise ValueError(f"units needs n >= 1, got {n}")
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def is_prime(n: int) -> bool:
    """Primality verdict, deterministic for every n below 2**63 and well beyond.

    Above the proven Miller-Rabin bound the check is delegated to sympy's
    BPSW test; only the interval-witness search ever goes that high.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_LIMIT:
        return bool(sympy.isprime(n))
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
