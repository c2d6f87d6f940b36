"""Prime streams: dense (segmented sieve) and along a residue class."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

import numpy as np

from .errors import InvalidProgression, RangeExceeded, SearchBudgetExhausted
from .modmath import is_prime

PRIME_LIMIT = 1 << 32
PI_PRIME_LIMIT = 203_280_221  # number of primes below 2**32
DEFAULT_SEGMENT = 1 << 18
DEFAULT_MAX_CANDIDATES = 10**8


def _small_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def iter_primes(stop: int, segment: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Yield every prime p < stop in ascending order."""
    if stop <= 2:
        return
    base = _small_sieve(isqrt(stop - 1) + 1)
    for lo in range(0, stop, segment):
        hi = min(lo + segment, stop)
        flags = np.ones(hi - lo, dtype=bool)
        if lo < 2:
            flags[: 2 - lo] = False
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            flags[start - lo :: p] = False
        for i in np.flatnonzero(flags):
            yield lo + int(i)


def primes_below(stop: int) -> list[int]:
    return list(iter_primes(stop))


def first_n_primes(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > PI_PRIME_LIMIT:
        raise RangeExceeded(f"the {n}th prime exceeds 2**32")
    if n < 6:
        bound = 14
    else:
        # Rosser's bound p_n < n(ln n + ln ln n), valid for n >= 6.
        bound = int(n * (math.log(n) + math.log(math.log(n)))) + 2
    bound = min(bound, PRIME_LIMIT)
    out = []
    for p in iter_primes(bound):
        out.append(p)
        if len(out) == n:
            return out
    raise AssertionError("prime bound too small")  # pragma: no cover


@dataclass(frozen=True)
class ProgressionSpec:
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidProgression(f"modulus must be >= 2, got {self.modulus}")
        if not 0 < self.residue < self.modulus:
            raise InvalidProgression(f"residue must lie in (0, {self.modulus}), got {self.residue}")
        if gcd(self.residue, self.modulus) != 1:
            raise InvalidProgression(
                f"gcd({self.residue}, {self.modulus}) != 1; the class holds at most one prime"
            )


def primes_in_ap(
    spec: ProgressionSpec,
    count: int,
    min_bound: int = 2,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[int]:
    """First ``count`` primes p >= min_bound with p = residue (mod modulus)."""
    m = spec.modulus
    t = max(min_bound, spec.residue)
    t += (spec.residue - t) % m
    out: list[int] = []
    for _ in range(max_candidates):
        if len(out) == count:
            return out
        if is_prime(t):
            out.append(t)
        t += m
    if len(out) == count:
        return out
    raise SearchBudgetExhausted(
        f"only {len(out)} of {count} primes found for {spec.residue} mod {m} "
        f"above {min_bound} within {max_candidates} candidates"
    )
