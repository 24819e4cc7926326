"""``gft`` command line: verify, list, transform, norm, check, falsify.

Exit codes: 0 all checks pass, 1 a check fails, 2 usage/configuration error,
3 numerical-engine error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

import numpy as np

from ..analysis import ClassSpec, membership_margin, norm_estimate, univalence_falsify
from ..catalog import CATALOG_NAMES, catalog_build
from ..errors import CatalogError, DomainError, GFTError
from ..transforms import OPERATORS, apply_operator
from .config import load_config
from .report import EXIT_ENGINE, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, combined_exit, jsonable, render_csv, render_json, render_table
from .scenarios import REGISTRY, list_scenarios, run_many


class UsageError(Exception):
    pass


_COMPLEX_I = re.compile(r"(?<![0-9.])([ij])")


def parse_complex(text):
    """Accept ``0.5``, ``1-2i``, ``0.5+0.25j``, ``i``, ``-i``."""
    s = text.strip().replace(" ", "")
    s = _COMPLEX_I.sub(r"1\1", s).replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _config_flags(p):
    g = p.add_argument_group("grid and run configuration")
    g.add_argument("--degree", type=int)
    g.add_argument("--rmax", type=float)
    g.add_argument("--radii", type=int)
    g.add_argument("--angles", type=int)
    g.add_argument("--refine", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--parallel", action="store_true", default=None)
    g.add_argument("--workers", type=int)
    g.add_argument("--tol-overrides", dest="tol_overrides", metavar="FILE")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--csv", action="store_true")


def _fn_flags(p):
    g = p.add_argument_group("function selection")
    g.add_argument("--fn", default="koebe_order", help=f"catalog entry: {', '.join(CATALOG_NAMES)}")
    g.add_argument("--lambda", dest="lam", type=float)
    g.add_argument("--alpha", type=float)
    g.add_argument("--mu", type=parse_complex)
    g.add_argument("--op", choices=sorted(OPERATORS))
    g.add_argument("--gamma", type=parse_complex)
    g.add_argument("--beta", type=float)
    g.add_argument("--with", dest="other", help="second catalog entry for hornich-add (default params)")


def build_parser():
    parser = argparse.ArgumentParser(prog="gft", description="Geometric function theory verification harness")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="run a scenario, or 'all'")
    p.add_argument("scenario")
    p.add_argument("--lambdas", type=_float_list)
    p.add_argument("--alphas", type=_float_list)
    p.add_argument("--betas", type=_float_list)
    _config_flags(p)

    p = sub.add_parser("list", help="list registered scenarios")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("transform", help="Taylor coefficients and sampled values of a (transformed) catalog entry")
    _fn_flags(p)
    p.add_argument("--at", type=parse_complex, action="append", default=[], help="sample point (repeatable)")
    _config_flags(p)

    p = sub.add_parser("norm", help="pre-Schwarzian norm estimate")
    _fn_flags(p)
    _config_flags(p)

    p = sub.add_parser("check", help="membership margin for a geometric class")
    _fn_flags(p)
    p.add_argument("--class", dest="family", required=True, choices=["spirallike", "starlike", "convex", "kaplan"])
    p.add_argument("--class-alpha", type=float, default=0.0)
    p.add_argument("--order", type=float, default=0.0)
    _config_flags(p)

    p = sub.add_parser("falsify", help="search for a collision f(z1) = f(z2)")
    _fn_flags(p)
    _config_flags(p)
    return parser


def _config(args):
    flags = {k: getattr(args, k, None) for k in
             ("degree", "rmax", "radii", "angles", "refine", "seed", "parallel", "workers", "tol_overrides",
              "lambdas", "alphas", "betas")}
    try:
        return load_config(**flags)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _function(args):
    params = {}
    if args.lam is not None:
        params["lam"] = args.lam
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.mu is not None:
        params["mu"] = args.mu
    try:
        f = catalog_build(args.fn, **params)
        if args.op is None:
            return f
        other = catalog_build(args.other) if args.other else None
        return apply_operator(args.op, f, gamma=args.gamma, beta=args.beta, other=other)
    except (CatalogError, DomainError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _label(args):
    return {"fn": args.fn, "lam": args.lam, "alpha": args.alpha, "mu": args.mu, "op": args.op,
            "gamma": args.gamma, "beta": args.beta, "with": args.other}


def _emit_doc(doc, args, rows=None, header=None):
    if args.json:
        print(json.dumps(jsonable(doc), indent=2, sort_keys=True))
    elif args.csv and rows is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for k, v in jsonable(doc).items():
            print(f"{k:>12s}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")


def cmd_verify(args):
    cfg = _config(args)
    ids = list(REGISTRY) if args.scenario == "all" else [args.scenario]
    if args.scenario != "all" and args.scenario not in REGISTRY:
        raise UsageError(f"unknown scenario {args.scenario!r}; see 'gft list'")
    reports = run_many(ids, cfg)
    if args.json:
        print(render_json(reports))
    elif args.csv:
        sys.stdout.write(render_csv(reports))
    else:
        print(render_table(reports))
    return combined_exit(reports)


def cmd_list(args):
    items = list_scenarios()
    if args.json:
        print(json.dumps(items, indent=2))
    else:
        for it in items:
            print(f"{it['id']:32s} {it['description']}")
            print(f"{'':32s}   anchor: {it['provenance']}")
    return EXIT_PASS


def cmd_transform(args):
    cfg = _config(args)
    f = _function(args)
    poly = f.series(cfg.degree)
    values = []
    if args.at:
        z = np.array(args.at, dtype=complex)
        values = [{"z": zi, "f": fi, "series": si} for zi, fi, si in zip(z, f.eval_f(z), poly(z))]
    doc = {"function": _label(args), "degree": cfg.degree, "coefficients": poly.to_json(), "values": values}
    rows = [[k, c.real, c.imag] for k, c in enumerate(poly.coeffs)]
    if args.json or args.csv:
        _emit_doc(doc, args, rows, ["k", "re", "im"])
    else:
        for k, c in enumerate(poly.coeffs):
            print(f"{k:4d}  {c.real: .16g}  {c.imag: .16g}")
        for v in values:
            print(f"f({v['z']}) = {v['f']}   series: {v['series']}")
    return EXIT_PASS


def cmd_norm(args):
    cfg = _config(args)
    est = norm_estimate(_function(args), cfg.grid, cfg.workers)
    doc = {"function": _label(args), **est.to_json()}
    _emit_doc(doc, args, [[est.value, est.argmax_z.real, est.argmax_z.imag, est.skipped]],
              ["norm", "argmax_re", "argmax_im", "skipped"])
    return EXIT_PASS


def cmd_check(args):
    cfg = _config(args)
    family = {
        "spirallike": lambda: ClassSpec.spirallike(args.class_alpha, args.order),
        "starlike": lambda: ClassSpec.starlike(args.order),
        "convex": lambda: ClassSpec.convex(args.order),
        "kaplan": ClassSpec.kaplan,
    }[args.family]()
    rep = membership_margin(_function(args), family, cfg.grid, workers=cfg.workers)
    doc = {"function": _label(args), **rep.to_json()}
    _emit_doc(doc, args, [[family.label(), rep.margin, rep.witness_z.real, rep.witness_z.imag, rep.verdict]],
              ["family", "margin", "witness_re", "witness_im", "member"])
    return EXIT_PASS if rep.verdict else EXIT_FAIL


def cmd_falsify(args):
    cfg = _config(args)
    hit = univalence_falsify(_function(args), cfg.grid)
    doc = {"function": _label(args), "collision": None if hit is None else hit.to_json()}
    row = [[]] if hit is None else [[hit.z1.real, hit.z1.imag, hit.z2.real, hit.z2.imag, hit.residual, hit.polished]]
    _emit_doc(doc, args, row, ["z1_re", "z1_im", "z2_re", "z2_im", "residual", "polished"])
    # a polished collision falsifies univalence
    return EXIT_FAIL if hit is not None and hit.polished else EXIT_PASS


COMMANDS = {
    "verify": cmd_verify,
    "list": cmd_list,
    "transform": cmd_transform,
    "norm": cmd_norm,
    "check": cmd_check,
    "falsify": cmd_falsify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"gft: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, DomainError) as exc:
        print(f"gft: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GFTError as exc:
        print(f"gft: numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
