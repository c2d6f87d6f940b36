"""Solution sets Z_k = {x in Z*[q(q-1)] : b**x = k*x + b (mod q)}.

Two independent routes are provided. :func:`zk_bruteforce` scans the unit
group and tests the congruence directly; :func:`zk_structural` builds each
set from the (alpha, beta) decomposition of its elements, where alpha runs
over units mod q-1 and the set

    n_set = {alpha in Z*[q-1] : alpha = 1 (mod delta)},   delta = ord_q(b)

decides which alphas feed Z_0 and which feed every Z_k with k >= 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

import numpy as np

from .decomp import UnitDecomposition, compose
from .errors import AlphaInNSet, NotAUnit, NotPrime, QDividesB, QTooSmall
from .modmath import euler_phi, is_prime, mod_inverse, mod_pow, multiplicative_order, units


class Dichotomy(enum.Enum):
    FULL_LADDER = "FullLadder"
    ZERO_ONLY = "ZeroOnly"


@dataclass(frozen=True)
class ModContext:
    b: int
    q: int
    delta: int
    n_set: tuple[int, ...]
    m_b: int
    phi_qm1: int

    @property
    def modulus(self) -> int:
        """q(q-1); the Z_k partition the units modulo this number."""
        return self.q * (self.q - 1)

    @property
    def b_pow_q(self) -> int:
        return self.b**self.q


def _validate(b: int, q: int) -> None:
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    if q == 2:
        raise QTooSmall("q must be an odd prime")
    if not is_prime(q):
        raise NotPrime(f"q must be an odd prime, got {q}")
    if b % q == 0:
        raise QDividesB(f"q={q} divides b={b}")


def make_context(b: int, q: int) -> ModContext:
    _validate(b, q)
    delta = multiplicative_order(b, q)
    n_set = tuple(a for a in units(q - 1) if a % delta == 1 % delta)
    return ModContext(b, q, delta, n_set, len(n_set), euler_phi(q - 1))


def _unit_powers(ctx: ModContext) -> tuple[np.ndarray, np.ndarray]:
    xs = units(ctx.modulus)
    lhs = [pow(ctx.b, x, ctx.q) for x in xs]
    return np.array(xs, dtype=np.int64), np.array(lhs, dtype=np.int64)


def _check_k(ctx: ModContext, k: int) -> None:
    if not 0 <= k < ctx.q:
        raise ValueError(f"k must lie in [0, {ctx.q}), got {k}")


def _satisfying(ctx: ModContext, xs: np.ndarray, lhs: np.ndarray, k: int) -> list[int]:
    return xs[lhs == (k * xs + ctx.b % ctx.q) % ctx.q].tolist()


def zk_bruteforce(ctx: ModContext, k: int) -> list[int]:
    _check_k(ctx, k)
    return _satisfying(ctx, *_unit_powers(ctx), k)


def beta_k(ctx: ModContext, k: int, alpha: int) -> int:
    """The unique unit beta mod q with b - k*beta = b**(alpha mod delta) (mod q)."""
    q = ctx.q
    if not 1 <= k < q:
        raise ValueError(f"k must lie in [1, {q}), got {k}")
    if not 1 <= alpha < q - 1 or gcd(alpha, q - 1) != 1:
        raise NotAUnit(f"alpha={alpha} is not a unit mod {q - 1}")
    if alpha % ctx.delta == 1 % ctx.delta:
        raise AlphaInNSet(f"alpha={alpha} = 1 (mod {ctx.delta}); the equation forces k*beta = 0")
    rhs = mod_pow(ctx.b, alpha % ctx.delta, q)
    return mod_inverse(k, q) * (ctx.b - rhs) % q


def zk_structural(ctx: ModContext, k: int) -> list[int]:
    _check_k(ctx, k)
    q = ctx.q
    if k == 0:
        return sorted(
            compose(UnitDecomposition(q, a, beta)) for a in ctx.n_set for beta in range(1, q)
        )
    in_n = set(ctx.n_set)
    return sorted(
        compose(UnitDecomposition(q, a, beta_k(ctx, k, a)))
        for a in units(q - 1)
        if a not in in_n
    )


def classify_x(ctx: ModContext, x: int) -> int:
    """Index k of the solution set containing the unit x, as (b**x - b) * x**-1 mod q."""
    if gcd(x, ctx.modulus) != 1:
        raise NotAUnit(f"x={x} is not a unit mod {ctx.modulus}")
    q = ctx.q
    return (pow(ctx.b, x, q) - ctx.b) * mod_inverse(x % q, q) % q


def counts(ctx: ModContext) -> tuple[int, int]:
    """(|Z_0|, |Z_k| for k >= 1)."""
    return (ctx.q - 1) * ctx.m_b, ctx.phi_qm1 - ctx.m_b


def dichotomy(b: int, q: int) -> Dichotomy:
    _validate(b, q)
    if b * b % q == 1:
        return Dichotomy.ZERO_ONLY
    return Dichotomy.FULL_LADDER


@dataclass(frozen=True)
class SolutionSets:
    context: ModContext
    sets: tuple[tuple[int, ...], ...]

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.sets[k]

    def __len__(self) -> int:
        return len(self.sets)


def all_zsets(ctx: ModContext, method: str = "structural") -> SolutionSets:
    if method == "structural":
        sets = [zk_structural(ctx, k) for k in range(ctx.q)]
    elif method == "bruteforce":
        xs, lhs = _unit_powers(ctx)
        sets = [_satisfying(ctx, xs, lhs, k) for k in range(ctx.q)]
    else:
        raise ValueError(f"unknown method {method!r}; use 'structural' or 'bruteforce'")
    return SolutionSets(ctx, tuple(tuple(s) for s in sets))
