#!/usr/bin/env python3
"""Cross-check the structural and brute-force solution sets over a (b, q) grid.

    python scripts/oracle_sweep.py --q-max 200 --bases 2 3 5 6 7 10 11
"""

import argparse
import time
from dataclasses import dataclass, field

from powbands import Dichotomy, all_zsets, counts, dichotomy, is_prime, make_context


@dataclass
class SweepConfig:
    q_max: int = 200
    bases: list[int] = field(default_factory=lambda: [2, 3, 5, 6, 7, 10, 11])


def run(cfg: SweepConfig) -> int:
    failures = 0
    t0 = time.perf_counter()
    for q in range(3, cfg.q_max + 1):
        if not is_prime(q):
            continue
        for b in cfg.bases:
            if b % q == 0:
                continue
            ctx = make_context(b, q)
            s = all_zsets(ctx, "structural").sets
            ok = s == all_zsets(ctx, "bruteforce").sets
            z0, zk = counts(ctx)
            ok &= len(s[0]) == z0 and all(len(z) == zk for z in s[1:])
            tag = "zero-only" if dichotomy(b, q) is Dichotomy.ZERO_ONLY else ""
            print(f"b={b:<3} q={q:<4} delta={ctx.delta:<4} m_b={ctx.m_b:<3} |Z_0|={z0:<6} |Z_k|={zk:<4} "
                  f"{'ok' if ok else 'MISMATCH'} {tag}")
            failures += not ok
    print(f"{failures} mismatches, {time.perf_counter() - t0:.1f} s")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--q-max", type=int, default=SweepConfig.q_max)
    ap.add_argument("--bases", type=int, nargs="+", default=SweepConfig().bases)
    args = ap.parse_args()
    raise SystemExit(1 if run(SweepConfig(args.q_max, args.bases)) else 0)
