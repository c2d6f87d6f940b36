"""Terms b**(qp) mod qp / qp over primes p, and their limiting bands k/q.

For a prime p whose class x = p mod q(q-1) is a unit lying in Z_k, the
residue satisfies b**(qp) = b**q + k*p (mod qp). Once p is large enough
that b**q + k*p < q*p this is an equality of integers, so the term is
exactly k/q + b**q/(q*p) and the band distance is known in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from . import primes as _primes
from .errors import DegenerateInterval, NotPrime, RangeExceeded
from .modmath import MAX_MODULUS, is_prime, mod_pow
from .zsets import Dichotomy, ModContext, classify_x, dichotomy, make_context, zk_structural


@dataclass(frozen=True)
class SamplePoint:
    p: int
    n: int
    residue: int
    value: Fraction
    predicted_k: Optional[int]
    exact_regime: bool
    index: Optional[int] = None

    @property
    def value_float(self) -> float:
        return float(self.value)


def predict_band(ctx: ModContext, p: int) -> Optional[int]:
    x = p % ctx.modulus
    if gcd(x, ctx.modulus) != 1:
        return None
    return classify_x(ctx, x)


def in_exact_regime(ctx: ModContext, p: int, k: Optional[int]) -> bool:
    return k is not None and ctx.b_pow_q + k * p < ctx.q * p


def sample(ctx: ModContext, p: int, index: Optional[int] = None) -> SamplePoint:
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    n = ctx.q * p
    if n >= MAX_MODULUS:
        raise RangeExceeded(f"q*p = {n} does not fit below 2**63")
    residue = mod_pow(ctx.b, n, n)
    k = predict_band(ctx, p)
    return SamplePoint(p, n, residue, Fraction(residue, n), k, in_exact_regime(ctx, p, k), index)


def figure_series(ctx: ModContext, count: int) -> list[SamplePoint]:
    """The first ``count`` terms in prime order, indexed from 1."""
    return [sample(ctx, p, i) for i, p in enumerate(_primes.first_n_primes(count), start=1)]


@dataclass(frozen=True)
class ExactLawResult:
    passed: bool
    checked: int
    counterexample: Optional[SamplePoint] = None


def verify_exact_law(ctx: ModContext, primes: Iterable[int]) -> ExactLawResult:
    checked = 0
    for p in primes:
        pt = sample(ctx, p)
        if not pt.exact_regime:
            continue
        checked += 1
        if pt.residue != ctx.b_pow_q + pt.predicted_k * p:
            return ExactLawResult(False, checked, pt)
    return ExactLawResult(True, checked)


@dataclass(frozen=True)
class BandRecord:
    k: int
    target: Fraction
    samples_seen: int
    min_distance: float
    attained: bool


@dataclass(frozen=True)
class VerificationReport:
    b: int
    q: int
    horizon: int
    tol: float
    regime: Dichotomy
    bands: tuple[BandRecord, ...]
    exact_regime_samples: int
    stray_bound: Optional[Fraction]
    strays: int
    overall_pass: bool

    @property
    def attained_count(self) -> int:
        return sum(band.attained for band in self.bands)


def predicted_bands(ctx: ModContext) -> list[int]:
    if dichotomy(ctx.b, ctx.q) is Dichotomy.ZERO_ONLY:
        return [0]
    return list(range(ctx.q))


def verify_derived_set(ctx: ModContext, horizon: int, tol: float) -> VerificationReport:
    """Sweep every prime p <= horizon and check the predicted limit points.

    A band k counts as attained when some sample predicted to lie in it comes
    within ``tol`` of k/q. Separately, every sample with p > b**q (exact regime
    for all bands at once) must sit within b**q/(q*p0) + tol of its band, p0
    being the first such prime seen.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    q, bq = ctx.q, ctx.b_pow_q
    wanted = predicted_bands(ctx)
    best: dict[int, Fraction] = {}
    seen = dict.fromkeys(wanted, 0)
    tail: list[tuple[int, Fraction]] = []
    for p in _primes.iter_primes(horizon + 1):
        pt = sample(ctx, p)
        k = pt.predicted_k
        if k is None:
            continue
        # |r/(qp) - k/q| = |r - kp| / (qp)
        dist = Fraction(abs(pt.residue - k * p), pt.n)
        if k in seen:
            seen[k] += 1
            if k not in best or dist < best[k]:
                best[k] = dist
        if p > bq:
            tail.append((p, dist))

    bands = []
    for k in wanted:
        d = float(best[k]) if k in best else math.inf
        bands.append(BandRecord(k, Fraction(k, q), seen[k], d, d <= tol))

    stray_bound = None
    strays = 0
    if tail:
        stray_bound = Fraction(bq, q * tail[0][0]) + Fraction(tol)
        strays = sum(1 for _, dist in tail if dist > stray_bound)
    ok = all(band.attained for band in bands) and strays == 0
    return VerificationReport(
        ctx.b, q, horizon, tol, dichotomy(ctx.b, q), tuple(bands), len(tail), stray_bound, strays, ok
    )


@dataclass(frozen=True)
class IntervalWitness:
    b: int
    q: int
    k: int
    x: int
    p: int
    n: int
    residue: int
    value: Fraction = field(repr=False)


def _least_ladder_prime(b: int, length: Fraction) -> int:
    q = b * b + 1
    while True:
        if Fraction(1, q) < length and is_prime(q):
            return q
        q += 1


def find_in_interval(b: int, lo: Fraction, hi: Fraction, max_tries: int = 64) -> IntervalWitness:
    """A modulus n = q*p whose term b**n mod n / n lies strictly inside (lo, hi).

    q is the least prime above b**2 with 1/q < hi - lo, k/q is the first grid
    point above lo, and p is the first prime in the class of min(Z_k) that is
    large enough for the term to land below hi. Moduli here may exceed the
    63-bit range used elsewhere; the arithmetic is exact regardless.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not hi > lo:
        raise DegenerateInterval(f"empty interval ({lo}, {hi})")
    if lo < 0 or hi > 1:
        raise ValueError(f"interval ({lo}, {hi}) is not inside [0, 1]")
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    q = _least_ladder_prime(b, hi - lo)
    ctx = make_context(b, q)
    k = math.floor(lo * q) + 1
    gap = hi - Fraction(k, q)
    bq = ctx.b_pow_q
    # exact regime needs p > b^q/(q-k); landing below hi needs p > b^q/(q*gap)
    need = max(Fraction(bq, q - k), bq / (q * gap))
    min_bound = math.floor(need) + 1
    x = zk_structural(ctx, k)[0]
    spec = _primes.ProgressionSpec(x, ctx.modulus)
    for _ in range(max_tries):
        (p,) = _primes.primes_in_ap(spec, 1, min_bound)
        n = q * p
        residue = pow(b, n, n)
        value = Fraction(residue, n)
        if lo < value < hi:
            return IntervalWitness(b, q, k, x, p, n, residue, value)
        min_bound = p + 1
    raise RuntimeError(f"no witness for ({lo}, {hi}) among {max_tries} primes")  # pragma: no cover
