"""Command-line interface: ``fusionkit {build,check,verify,catalog,graph}``.

Exit status: 0 on success, 1 when ``verify`` finds a failing theorem check,
2 on bad input or exceeded bounds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify.report import build_report
from .classify.sparse import is_constrained, sparseness
from .errors import FusionKitError
from .fusion.construct import from_group
from .fusion.dot import to_dot
from .fusion.io import dump_system
from .fusion.saturation import check_saturation
from .fusion.subgroups import essential_rank
from .group.catalog import NAMES, catalog
from .group.homs import is_slim
from .group.ops import is_prime
from .group.perm import load_group_file
from .group.table import closure

PROPERTIES = ("saturated", "sparse", "extremely-sparse", "constrained", "slim", "essential-rank")


class UsageError(Exception):
    pass


def _source_parser() -> argparse.ArgumentParser:
    sp = argparse.ArgumentParser(add_help=False)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="NAME", help="catalog group, e.g. s4 or cp_wr_cp(3)")
    src.add_argument("--file", metavar="PATH", help='JSON {"degree": n, "generators": [...]}')
    sp.add_argument("-p", "--prime", type=int, required=True, help="the prime p")
    sp.add_argument("--strict-sparse", action="store_true",
                    help="quantify sparseness over all closed sub-tables, not only saturated ones")
    sp.add_argument("--max-order", type=int, metavar="N", help="closure order bound")
    sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    sp.add_argument("--format", choices=("json", "dot", "text"), default=None)
    return sp


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionkit", description="Fusion systems of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    src = _source_parser()
    sub.add_parser("build", parents=[src], help="write the fusion-system dump (JSON)")
    chk = sub.add_parser("check", parents=[src], help="print one verdict")
    chk.add_argument("property", choices=PROPERTIES)
    sub.add_parser("verify", parents=[src], help="run the theorem suite; exit 1 on failure")
    sub.add_parser("graph", parents=[src], help="DOT rendering of the lattice and its fusion")
    cat = sub.add_parser("catalog", help="list catalog group names")
    cat.add_argument("--out", metavar="PATH")
    cat.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _system(args):
    if not is_prime(args.prime):
        raise UsageError(f"{args.prime} is not prime")
    if args.catalog:
        gens, label = catalog(args.catalog), args.catalog
    else:
        _, gens = load_group_file(args.file)
        label = Path(args.file).stem
    G = closure(gens, name=label, max_order=args.max_order)
    return from_group(G, args.prime, name=f"{label}/p{args.prime}")


def _check(F, prop: str, strict: bool):
    if prop == "saturated":
        return check_saturation(F).saturated
    if prop in ("sparse", "extremely-sparse"):
        sp = sparseness(F, strict=strict)
        return sp.sparse if prop == "sparse" else sp.extremely_sparse
    if prop == "constrained":
        return is_constrained(F).constrained
    if prop == "slim":
        return is_slim(F.subgroup(F.support), F.p)
    return essential_rank(F)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def run(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            _emit(_dumps(list(NAMES)) if args.format == "json" else "\n".join(NAMES) + "\n", args.out)
            return 0
        F = _system(args)
        if args.command == "build":
            _emit(_dumps(dump_system(F)), args.out)
            return 0
        if args.command == "check":
            value = _check(F, args.property, args.strict_sparse)
            if args.format == "json":
                _emit(_dumps({"system": F.name, "property": args.property, "value": value,
                              "strict": args.strict_sparse}), args.out)
            else:
                text = str(value).lower() if isinstance(value, bool) else str(value)
                _emit(text + "\n", args.out)
            return 0
        if args.command == "verify":
            report = build_report(F, F.name)
            _emit(_dumps(report), args.out)
            return 1 if report["failing_theorems"] else 0
        if args.command == "graph":
            if args.format == "json":
                raise UsageError("graph only supports --format dot")
            _emit(to_dot(F), args.out)
            return 0
    except (FusionKitError, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"fusionkit: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
