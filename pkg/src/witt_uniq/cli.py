"""Command-line entry point: ``witt-uniq run|design|scheme|report``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import designs, pipeline, scheme

EXIT_CODES = {"pass": 0, "fail": 1, "partial": 3}


def _cmd_run(args) -> int:
    cfg = pipeline.PipelineConfig(stage=args.stage, threads=args.threads, cache_dir=args.cache)
    cert = pipeline.run_pipeline(cfg)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "certificate.json").write_text(pipeline.render_report(cert, "json"))
        (out / "report.txt").write_text(pipeline.render_report(cert, "text"))
    sys.stdout.write(pipeline.render_report(cert, args.format))
    return EXIT_CODES[cert.verdict]


def _cmd_design(args) -> int:
    inst = designs.build_witt_instance()
    if args.count:
        n = designs.exact_cover_solve(inst, "count", args.heuristic)
        print(n)
        return 0
    if args.enumerate:
        sols = designs.exact_cover_solve(inst, "enumerate", args.heuristic)
        texts = [designs.format_design(designs.witt_design_from_solution(s)) for s in sols]
        sys.stdout.write("\n".join(texts))
        return 0
    (sol,) = designs.exact_cover_solve(inst, "first", args.heuristic)
    d = designs.witt_design_from_solution(sol)
    if args.out:
        designs.write_design(d, args.out)
    else:
        sys.stdout.write(designs.format_design(d))
    return 0


def _cmd_scheme(args) -> int:
    d = designs.read_design(args.design_file)
    s = scheme.scheme_from_design(d)
    sp = scheme.scheme_parameters(s)
    data = {
        "n": s.n,
        "L": [scheme.intersection_matrix(sp.p, i).to_strings() for i in range(s.d + 1)],
        "P": sp.P.to_strings(),
        "Q": sp.Q.to_strings(),
        "multiplicities": list(sp.multiplicities),
        "krein_nonnegative": scheme.krein_nonnegative(sp.krein),
        "q_polynomial": scheme.is_q_polynomial(sp.krein),
        "angle_set": [str(a) for a in scheme.angle_set(sp.Q)],
    }
    if args.format == "json":
        print(json.dumps(data, indent=1, sort_keys=True))
        return 0
    print(f"n = {s.n}, classes = {s.d}, t=4 lambda = {designs.verify_t_design(d, 4)}")
    for name in ("L", "P", "Q"):
        mats = data[name] if name == "L" else [data[name]]
        for i, m in enumerate(mats):
            label = f"L{i}" if name == "L" else name
            if label == "L0":
                continue
            print(f"{label}:")
            w = max(len(x) for r in m for x in r) + 1
            for r in m:
                print("  " + "".join(x.rjust(w) for x in r))
    print("multiplicities:", data["multiplicities"])
    print("Krein parameters nonnegative:", data["krein_nonnegative"])
    print("Q-polynomial (E0, E1, E2, E3):", data["q_polynomial"])
    print("angle set:", ", ".join(data["angle_set"]))
    return 0


def _cmd_report(args) -> int:
    cert = pipeline.Certificate.from_json(json.loads(Path(args.certificate).read_text()))
    sys.stdout.write(pipeline.render_report(cert, args.format))
    return EXIT_CODES[cert.verdict]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="witt-uniq", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run the staged uniqueness proof")
    r.add_argument("--stage", type=int, choices=range(1, 8), metavar="K",
                   help="run only stage K (prerequisites come from the cache or are recomputed)")
    r.add_argument("--threads", type=int, default=1, metavar="N")
    r.add_argument("--out", metavar="DIR", help="write certificate.json and report.txt here")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--cache", metavar="DIR",
                   help=f"stage cache directory (default: ${pipeline.CACHE_ENV}, else no cache)")
    r.set_defaults(func=_cmd_run)

    d = sub.add_parser("design", help="construct the 4-(11,5,1) design by exact cover")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--enumerate", action="store_true", help="print every solution")
    g.add_argument("--count", action="store_true", help="print the number of solutions")
    d.add_argument("--heuristic", choices=("min-size", "leftmost"), default="min-size")
    d.add_argument("--out", metavar="FILE")
    d.set_defaults(func=_cmd_design)

    s = sub.add_parser("scheme", help="scheme parameters of a design file")
    s.add_argument("design_file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=_cmd_scheme)

    p = sub.add_parser("report", help="render a certificate")
    p.add_argument("certificate")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        build_parser().error("--threads must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
