#!/usr/bin/env python3
"""Render every preset to SVG under out/gallery/.

Degenerate presets (exact bifurcation boundaries) are rendered without a
pattern report; everything else gets classified first so the run doubles
as a smoke test of the full pipeline.
"""

import argparse
import pathlib
import time

from meander import presets
from meander.patterns import PortraitOptions, build_portrait, classify_patterns
from meander.portrait_io import RenderStyle, to_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="out/gallery")
    ap.add_argument("--only", nargs="*", help="subset of preset names")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    names = args.only or presets.names()
    for name in names:
        pr = presets.get(name)
        t0 = time.time()
        pt = build_portrait(pr.params, PortraitOptions())
        label = ""
        if pt.degenerate:
            label = " [degenerate: " + "; ".join(pt.degenerate) + "]"
        else:
            rep = classify_patterns(pt)
            label = (f" rings={rep.flower_rings['count']}"
                     f" cycles={len(rep.n_cycles)}"
                     f" spider={rep.spider_net['present']}")
        svg = to_svg(pt, RenderStyle(window=pr.window))
        path = out / f"{name}.svg"
        path.write_text(svg, encoding="utf-8")
        print(f"{name:14s} {time.time() - t0:6.2f}s -> {path}{label}")


if __name__ == "__main__":
    main()
