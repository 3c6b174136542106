"""Command line entry point: analyze | portrait | scan | presets | serve.

Exit codes: 0 ok, 1 usage or IO error, 2 degenerate-boundary analysis.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .field import ModelParams
from .patterns import PortraitOptions, build_portrait, classify_patterns
from .portrait_io import RenderStyle, to_json, to_svg
from .reports import analyze_params, scan_1d, scan_2d
from . import presets

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2


class CliError(Exception):
    pass


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise CliError(f"expected a comma-separated float list, got {text!r}")


def params_from_args(args) -> ModelParams:
    """Assemble coefficients from a preset and/or explicit flags.

    Explicit flags override preset fields.  Coefficient lists must match
    s = floor(n/2) - 1 exactly; silent zero-padding would corrupt the
    documented presets.
    """
    base = presets.get(args.preset).params if args.preset else None
    n = args.n if args.n is not None else (base.n if base else None)
    if n is None:
        raise CliError("--n is required when no --preset is given")
    s = n // 2 - 1

    def pick(flag, preset_val, default):
        return flag if flag is not None else (preset_val if base is not None else default)

    a1 = _parse_floats(args.a1) if args.a1 is not None else None
    a2 = _parse_floats(args.a2) if args.a2 is not None else None
    if a1 is not None and len(a1) != s:
        raise CliError(f"--a1 needs exactly s={s} values for n={n}, got {len(a1)}")
    if a2 is not None and len(a2) != s:
        raise CliError(f"--a2 needs exactly s={s} values for n={n}, got {len(a2)}")
    if base is not None and base.n != n:
        base = None  # changing n invalidates preset coefficient lists
    try:
        return ModelParams(
            n=n,
            eps1=pick(args.eps1, base.eps1 if base else None, 0.0),
            eps2=pick(args.eps2, base.eps2 if base else None, 0.0),
            a1=a1 if a1 is not None else (base.a1 if base else (0.0,) * s),
            a2=a2 if a2 is not None else (base.a2 if base else (0.0,) * s),
            b1=pick(args.b1, base.b1 if base else None, 0.0),
            b2=pick(args.b2, base.b2 if base else None, 0.0),
        )
    except ValueError as exc:
        raise CliError(str(exc))


def _add_param_flags(sub):
    sub.add_argument("--preset", help="named coefficient preset")
    sub.add_argument("--n", type=int, help="resonance order (>= 4)")
    sub.add_argument("--eps1", type=float)
    sub.add_argument("--eps2", type=float)
    sub.add_argument("--a1", help="comma-separated list, s entries")
    sub.add_argument("--a2", help="comma-separated list, s entries")
    sub.add_argument("--b1", "--b", type=float, dest="b1")
    sub.add_argument("--b2", type=float)


def _format_analysis_text(doc: dict) -> str:
    lines = []
    pr = doc["params"]
    lines.append(f"n = {pr['n']}  eps = {pr['eps1']} + {pr['eps2']}i  "
                 f"b = {pr['b1']} (beta = {pr['beta']:.6g})")
    lines.append(f"hamiltonian: {doc['hamiltonian']}")
    for tag, coeffs in doc["polynomials"].items():
        terms = " + ".join(f"{c:g}*r^{k}" for k, c in enumerate(coeffs) if c != 0.0) or "0"
        lines.append(f"  {tag}(r) = {terms}")
    for tag, roots in doc["roots"].items():
        pretty = ", ".join(f"{r:.12g}" + (f" (x{m})" if m > 1 else "") for r, m in roots)
        lines.append(f"  roots {tag}: {{{pretty}}}" if roots else f"  roots {tag}: none")
    if doc["radius_classes"]:
        lines.append("peripheral equilibria (radius classes, n copies each):")
        for c in doc["radius_classes"]:
            lines.append(f"  r = {c['r']:.12g}  ray={c['ray']}  kind={c['kind']}")
    else:
        lines.append("no peripheral equilibria")
    lines.append(f"origin: {doc['origin']['kind']}")
    if doc["quasi_equilibrium_radii"]:
        lines.append("quasi-equilibrium radii: " +
                     ", ".join(f"{r:.12g}" for r in doc["quasi_equilibrium_radii"]))
    if doc["limit_cycles"]:
        lines.append("radial limit cycles: " +
                     ", ".join(f"{c['r']:.12g} ({c['stability']})" for c in doc["limit_cycles"]))
    eq = doc["equator"]
    lines.append(f"equator nodes: {len(eq['nodes'])}  spider-net possible: {eq['spider_net_possible']}")
    for name, chk in doc["theorem_checks"].items():
        lines.append(f"check {name}: {chk}")
    if doc["regime"]:
        lines.append(f"regime: {doc['regime']}")
    if doc["degenerate"]:
        lines.append("DEGENERATE: " + "; ".join(doc["degenerate"]))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    p = params_from_args(args)
    doc = analyze_params(p)
    if args.format == "json":
        out = json.dumps(doc, sort_keys=True, indent=2)
    else:
        out = _format_analysis_text(doc)
    if args.out:
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)
    return EXIT_DEGENERATE if doc["degenerate"] else EXIT_OK


def cmd_portrait(args) -> int:
    p = params_from_args(args)
    census = None
    if args.census:
        r0_s, count_s = args.census.split(",")
        census = (float(r0_s), int(count_s))
    opts = PortraitOptions(seed_count=args.seed_count, census=census)
    pt = build_portrait(p, opts)
    report = None
    rc = EXIT_OK
    if pt.degenerate:
        rc = EXIT_DEGENERATE
    else:
        report = classify_patterns(pt)
    if args.format == "json":
        out = to_json(pt, report)
    else:
        out = to_svg(pt, RenderStyle(window=args.window))
    if args.out:
        try:
            Path(args.out).write_text(out, encoding="utf-8")
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        print(out)
    return rc


def cmd_scan(args) -> int:
    p = params_from_args(args)
    try:
        if args.axis2:
            result = scan_2d(p, args.axis, args.min, args.max, args.cells,
                             args.axis2, args.min2, args.max2, args.cells2)
        else:
            result = scan_1d(p, args.axis, args.min, args.max, args.cells)
    except ValueError as exc:
        raise CliError(str(exc))
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        manifest = {k: v for k, v in result.items() if k not in ("nodes", "grid")}
        (out_dir / "manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, indent=2), encoding="utf-8")
        if "nodes" in result:
            for i, node in enumerate(result["nodes"]):
                (out_dir / f"cell_{i:04d}.json").write_text(
                    json.dumps(node, sort_keys=True, indent=2), encoding="utf-8")
        else:
            (out_dir / "grid.json").write_text(
                json.dumps(result["grid"], sort_keys=True, indent=2), encoding="utf-8")
        (out_dir / "transitions.json").write_text(
            json.dumps(result["transitions"], sort_keys=True, indent=2), encoding="utf-8")
    except OSError as exc:
        print(f"cannot write scan output to {out_dir}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    n_tr = len(result["transitions"])
    print(f"scan {args.axis}: {n_tr} transition(s); results in {out_dir}")
    for tr in result["transitions"]:
        if "lo" in tr:
            print(f"  ({tr['lo']:.6g}, {tr['hi']:.6g}): {', '.join(tr['changed'])}")
    return EXIT_OK


def cmd_presets(args) -> int:
    rows = []
    for name in presets.names():
        pr = presets.get(name)
        p = pr.params
        rows.append(f"{name:14s} n={p.n:<3d} {pr.note}")
    print("\n".join(rows))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn
    from .server import app

    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except SystemExit as exc:  # uvicorn raises on bind failure
        return EXIT_USAGE if exc.code else EXIT_OK
    except OSError as exc:
        print(f"cannot serve on port {args.port}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="meander",
                                 description="Phase portraits of the planar weak-resonance field")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="roots, equilibria, bounds and regime")
    _add_param_flags(a)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--out")
    a.set_defaults(fn=cmd_analyze)

    q = sub.add_parser("portrait", help="render a portrait to SVG or JSON")
    _add_param_flags(q)
    q.add_argument("--format", choices=("svg", "json"), default="svg")
    q.add_argument("--out")
    q.add_argument("--window", type=float, default=None, help="half-width of the square window")
    q.add_argument("--seed-count", type=int, default=3, help="sample orbits per annulus")
    q.add_argument("--census", help="R0,COUNT destination census on a seed circle")
    q.set_defaults(fn=cmd_portrait)

    s = sub.add_parser("scan", help="parameter sweep with transition detection")
    _add_param_flags(s)
    s.add_argument("--axis", required=True, help="eps1|eps2|b1|b2|a1_k|a2_k")
    s.add_argument("--min", type=float, required=True)
    s.add_argument("--max", type=float, required=True)
    s.add_argument("--cells", type=int, default=40)
    s.add_argument("--axis2")
    s.add_argument("--min2", type=float)
    s.add_argument("--max2", type=float)
    s.add_argument("--cells2", type=int, default=40)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(fn=cmd_scan)

    pl = sub.add_parser("presets", help="list the preset catalog")
    pl.set_defaults(fn=cmd_presets)

    sv = sub.add_parser("serve", help="run the JSON/HTTP service")
    sv.add_argument("--port", type=int, default=8707)
    sv.add_argument("--host", default="127.0.0.1")
    sv.set_defaults(fn=cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
