"""Bijection between Z*[N(N-1)] and Z*[N-1] x Z*[N].

Every unit x modulo N(N-1) is written uniquely as

    x = alpha*N + beta*(N-1)  (mod N(N-1))

with alpha a unit mod N-1 and beta a unit mod N.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidDecomposition, NotAUnit


@dataclass(frozen=True)
class UnitDecomposition:
    N: int
    alpha: int
    beta: int

    def __post_init__(self):
        N, alpha, beta = self.N, self.alpha, self.beta
        if N < 3:
            raise InvalidDecomposition(f"N must be >= 3, got {N}")
        if not 1 <= alpha < N - 1 or gcd(alpha, N - 1) != 1:
            raise InvalidDecomposition(f"alpha={alpha} is not a unit mod {N - 1}")
        if not 1 <= beta < N or gcd(beta, N) != 1:
            raise InvalidDecomposition(f"beta={beta} is not a unit mod {N}")

    @property
    def modulus(self) -> int:
        return self.N * (self.N - 1)


def compose(d: UnitDecomposition) -> int:
    N = d.N
    return (d.alpha * N + d.beta * (N - 1)) % (N * (N - 1))


def decompose(x: int, N: int) -> UnitDecomposition:
    """Recover (alpha, beta) for a canonical unit ``0 < x < N(N-1)``.

    beta is read off first as N - (x mod N); then N divides x + beta and
    alpha = (x + beta)/N - beta reduced mod N-1.
    """
    if N < 3:
        raise InvalidDecomposition(f"N must be >= 3, got {N}")
    M = N * (N - 1)
    if not 0 < x < M or gcd(x, M) != 1:
        raise NotAUnit(f"x={x} is not a canonical unit mod {M}")
    beta = N - x % N
    alpha = ((x + beta) // N - beta) % (N - 1)
    return UnitDecomposition(N, alpha, beta)
