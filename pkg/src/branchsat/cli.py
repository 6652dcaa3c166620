"""Command line interface.

Exit codes: 0 verified/saturated, 2 incomplete (gated or unresolved),
1 error or counterexample.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .branching import CACHE_ENV, branch_multiplicity, set_cache_dir
from .embeddings import CATALOG_FAMILIES, builtin_pair, register_catalog_file
from .exceptions import BranchSatError
from .levimov import render_inequality
from .pipeline import (
    check_saturation,
    compute_cone,
    cone_to_dict,
    cone_to_text,
    saturation_to_dict,
    saturation_to_text,
    to_json,
)
from .polycone import write_matrix
from .render import pair_eps


def _vec(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    return tuple(int(x) for x in text.replace(",", " ").split()) if text else ()


def _congruence(text: str):
    coeffs, _, mod = text.partition(":")
    if not mod:
        raise argparse.ArgumentTypeError("congruence must look like 'c1,c2,...:m'")
    return (_vec(coeffs), int(mod))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="run seed for Levi-element draws")
    common.add_argument("--allow-long", action="store_true", help="enable long-running steps")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--coords", choices=("fw", "eps"), default="fw")
    common.add_argument("--export-matrix", metavar="FILE", help="write the main matrix in 'rows cols' text format")
    common.add_argument("--cache-dir", metavar="PATH", help=f"character cache directory (default ${CACHE_ENV})")
    common.add_argument("--catalog", metavar="FILE", action="append", default=[], help="extra pair catalog file")
    common.add_argument("--max-attempts", type=int, default=5)

    p = argparse.ArgumentParser(prog="branchsat", description="Branching cones and saturation for G in Ghat.")
    p.add_argument("--version", action="version", version=f"branchsat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("pairs", parents=[common], help="list catalog pairs")
    for name, hlp in (
        ("cone", "full cone report"),
        ("ineqs", "irredundant inequalities"),
        ("rays", "extremal rays"),
    ):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("pair")
    for name, hlp in (("hilbert", "Hilbert basis"), ("check", "saturation check")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("pair")
        sp.add_argument("--congruence", type=_congruence, help="restrict the lattice by c.x = 0 mod m")
    sp = sub.add_parser("branch", parents=[common], help="branching multiplicity of (nu, nuhat)")
    sp.add_argument("pair")
    sp.add_argument("nu", type=_vec)
    sp.add_argument("nuhat", type=_vec)
    return p


def _emit(args, text: str, data: dict) -> None:
    sys.stdout.write(to_json(data) if args.format == "structured" else text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cache_dir:
            set_cache_dir(args.cache_dir)
        for path in args.catalog:
            register_catalog_file(path)
        return _run(args)
    except BranchSatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _run(args) -> int:
    if args.command == "pairs":
        text = "\n".join(f"{k:15s} {v}" for k, v in CATALOG_FAMILIES.items()) + "\n"
        _emit(args, text, {"pairs": CATALOG_FAMILIES})
        return 0
    pair = builtin_pair(args.pair)
    if args.command == "branch":
        m = branch_multiplicity(pair, args.nu, args.nuhat)
        _emit(args, f"{m}\n", {"pair": pair.name, "nu": list(args.nu), "nuhat": list(args.nuhat), "multiplicity": m})
        return 0
    if args.command in ("cone", "ineqs", "rays"):
        rep = compute_cone(pair, args.seed, args.max_attempts, allow_long=args.allow_long)
        data = cone_to_dict(pair, rep, args.coords)
        if args.command == "cone":
            text = cone_to_text(pair, rep, args.coords)
            matrix = [f.coeffs for f in rep.facets]
        elif args.command == "ineqs":
            text = "".join(render_inequality(pair, f.coeffs, args.coords) + "\n" for f in rep.facets)
            matrix = [f.coeffs for f in rep.facets]
        else:
            shown = [pair_eps(pair, r) if args.coords == "eps" else r for r in rep.rays]
            text = "".join(" ".join(str(x) for x in r) + "\n" for r in shown)
            matrix = rep.rays
        if args.export_matrix:
            write_matrix(args.export_matrix, matrix)
        _emit(args, text, data)
        return 0 if rep.verified else 2
    rep = check_saturation(pair, args.seed, args.allow_long, args.max_attempts, congruence=args.congruence)
    data = saturation_to_dict(pair, rep, args.coords)
    if args.command == "hilbert":
        shown = [pair_eps(pair, h) if args.coords == "eps" else h for h in rep.hilbert]
        text = "".join(" ".join(str(x) for x in h) + "\n" for h in shown)
        if rep.verdict == "incomplete":
            text += f"# incomplete: {rep.detail}\n"
    else:
        text = saturation_to_text(pair, rep, args.coords)
    if args.export_matrix and rep.hilbert:
        write_matrix(args.export_matrix, rep.hilbert)
    _emit(args, text, data)
    return {"saturated": 0, "incomplete": 2}.get(rep.verdict, 1)


if __name__ == "__main__":
    sys.exit(main())
