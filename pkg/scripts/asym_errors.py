#!/usr/bin/env python3
"""Sweep the relative log-errors of the three saddle-point sequence
approximations over a geometric ladder, and print the Stirling
regime-boundary gaps that motivate the dispatch thresholds.

Usage: python scripts/asym_errors.py [--top 400]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from bellnum.asymptotic import (
    bell_asym,
    beta_asym,
    log_int,
    stirling_overlap_check,
    tilde_bell_asym,
    tilde_bell_exact,
)
from bellnum.exact import bell_numbers, beta_numbers


@dataclass
class SweepConfig:
    top: int = 400
    start: int = 10

    def ladder(self) -> list[int]:
        ns, n = [], self.start
        while n < self.top:
            ns.append(n)
            n *= 2
        ns.append(self.top)
        return sorted(set(ns))


def run(cfg: SweepConfig) -> None:
    ladder = cfg.ladder()
    top = max(ladder)
    series = {
        "beta": (beta_numbers(top), beta_asym),
        "bell": (bell_numbers(top), bell_asym),
        "tilde-bell": (tilde_bell_exact(top), tilde_bell_asym),
    }
    print(f"{'n':>6}" + "".join(f" {name:>12}" for name in series))
    for n in ladder:
        row = f"{n:>6}"
        for name, (values, approx) in series.items():
            le = log_int(values[n])
            row += f" {abs(approx(n).log_value - le) / le:12.3e}"
        print(row)
    print("\nStirling regime-boundary gaps (|ratio - 1| of adjacent formulas):")
    for n in (30, 60, 100, 200):
        samples = stirling_overlap_check(n)
        gaps = "  ".join(f"k={k} {b}: {g:.1%}" for k, b, g in samples)
        print(f"  n={n}: {gaps}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=400)
    args = ap.parse_args()
    run(SweepConfig(top=args.top))


if __name__ == "__main__":
    main()
