#!/usr/bin/env python3
"""Reproduce the two analytic bifurcation boundaries by parameter sweeps.

n = 4: sweeping the resonant amplitude b across |a2_1| flips the portrait
between centroid-only, flower-ring and spider-net regimes (boundaries
b = +-a2_1).  n = 5: sweeping a2_1 across (-27*eps2*b^2/4)^(1/3) births the
flower ring (cubic boundary 27*eps2*b^2 + 4*a2_1^3 = 0).
"""

from meander.field import ModelParams
from meander.patterns import boundary_c_threshold
from meander.reports import scan_1d


def report(title, res, analytic):
    print(f"\n{title}")
    print(f"  analytic boundary: {analytic:.6f}")
    for tr in res["transitions"]:
        inside = "contains it" if tr["lo"] <= analytic <= tr["hi"] else "elsewhere"
        print(f"  transition ({tr['lo']:.4f}, {tr['hi']:.4f}) "
              f"[{', '.join(tr['changed'])}] -> {inside}")


def main():
    for a2 in (1.0, -1.0):
        p = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(a2,), b1=0.0)
        res = scan_1d(p, "b1", 0.0, 2.0, 40)
        report(f"n=4, a2_1={a2}: sweep b in [0, 2]", res, abs(a2))

    p5 = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(0.0,), b1=3.0)
    astar = boundary_c_threshold(-4.0, 3.0)
    res = scan_1d(p5, "a2_1", -2.0, 8.0, 50)
    report("n=5, eps2=-4, b=3: sweep a2_1 in [-2, 8]", res, astar)


if __name__ == "__main__":
    main()
