#!/usr/bin/env python3
"""Dynamical indeterminacy demo: seed a circle, bin the destinations.

For the dissipative five-fold set the seeds sit between the stable radial
limit cycle and the saddle ring; forward orbits split between the cycle
and the five peripheral spirals, with the five basins finely interleaved
around the circle.
"""

import argparse

from meander.field import ModelParams
from meander.equilibria import origin_analysis, peripheral_equilibria
from meander.integrator import IntegrateOptions, destination_census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r0", type=float, default=0.85)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--max-time", type=float, default=300.0)
    args = ap.parse_args()

    p = ModelParams(n=5, eps1=0.005, eps2=1.0, a1=(-0.01,), a2=(-1.0,), b1=0.1)
    eqs = [origin_analysis(p)] + peripheral_equilibria(p)
    print("equilibria:")
    for e in eqs:
        print(f"  {e.eq_id:6s} r={e.r:.4f} phi={e.phi:.4f} {e.kind}")

    res = destination_census(p, (args.r0, args.count), eqs,
                             IntegrateOptions(max_time=args.max_time,
                                              escape_radius=500.0,
                                              rtol=1e-8, atol=1e-10))
    print(f"\nforward bins:  {dict(sorted(res.forward.items()))}")
    print(f"backward bins: {dict(sorted(res.backward.items()))}")
    runs = []
    prev = None
    for seed in res.seeds:
        lab = seed["forward"]
        if lab != prev:
            runs.append(lab)
            prev = lab
    print(f"\nforward destination changes around the circle: {len(runs)}")
    print("sequence:", " ".join(runs))


if __name__ == "__main__":
    main()
