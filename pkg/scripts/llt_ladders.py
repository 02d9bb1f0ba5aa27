#!/usr/bin/env python3
"""Sweep the lattice Gaussian deviation of every family over a ladder
of n, print the per-rung deviations and the fitted decay exponent next
to the family's claimed rate.

Usage: python scripts/llt_ladders.py [--points 6] [--start 20] [--factor 1.5]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from bellnum.distributions import FAMILIES, decay_exponent, llt_report


@dataclass
class LadderConfig:
    start: int = 20
    factor: float = 1.5
    points: int = 6
    centering: str = "exact"
    families: list[str] = field(default_factory=lambda: sorted(FAMILIES))

    def ladder(self) -> list[int]:
        ns = []
        n = float(self.start)
        for _ in range(self.points):
            ns.append(round(n))
            n *= self.factor
        return ns


def run(cfg: LadderConfig) -> None:
    ladder = cfg.ladder()
    print(f"ladder: {ladder}  (centering: {cfg.centering})")
    header = f"{'family':20s} " + " ".join(f"{n:>9d}" for n in ladder) + "   slope  claimed"
    print(header)
    print("-" * len(header))
    for name in cfg.families:
        fam = FAMILIES[name]
        sups = []
        for n in ladder:
            rep = llt_report(fam.build(n), fam, n, centering=cfg.centering)
            sups.append(rep.sup_deviation)
        slope = decay_exponent(ladder, sups)
        row = f"{name:20s} " + " ".join(f"{s:9.5f}" for s in sups)
        print(f"{row}  {slope:+.3f}  {fam.rate_tag}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=6)
    ap.add_argument("--start", type=int, default=20)
    ap.add_argument("--factor", type=float, default=1.5)
    ap.add_argument("--centering", choices=("exact", "asym"), default="exact")
    args = ap.parse_args()
    run(LadderConfig(start=args.start, factor=args.factor,
                     points=args.points, centering=args.centering))


if __name__ == "__main__":
    main()
