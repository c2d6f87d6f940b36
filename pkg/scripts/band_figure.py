#!/usr/bin/env python3
"""Write the scatter data for b^(qp) mod qp / qp and summarise how it clusters.

    python scripts/band_figure.py --b 2 --q 13 --count 5000 --out fig_2_13.csv
"""

import argparse
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from powbands import figure_series, make_context
from powbands.cli import format_figure_csv


@dataclass
class FigureConfig:
    b: int = 2
    q: int = 13
    count: int = 5000
    out: str = "fig_2_13.csv"


def run(cfg: FigureConfig) -> None:
    ctx = make_context(cfg.b, cfg.q)
    points = figure_series(ctx, cfg.count)
    with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_figure_csv(points))

    per_band = Counter(pt.predicted_k for pt in points if pt.predicted_k is not None)
    print(f"{len(points)} points -> {cfg.out}")
    print(" k  target    points  median |value - k/q| (last half)")
    tail = points[len(points) // 2 :]
    for k in range(cfg.q):
        d = sorted(abs(pt.value - Fraction(k, cfg.q)) for pt in tail if pt.predicted_k == k)
        med = float(d[len(d) // 2]) if d else float("nan")
        print(f"{k:>2}  {k / cfg.q:.5f}  {per_band[k]:>6}  {med:.3g}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    for name, default in vars(FigureConfig()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    run(FigureConfig(**vars(ap.parse_args())))
