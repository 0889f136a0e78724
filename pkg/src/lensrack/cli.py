"""Command line interface: ``lensrack <subcommand> ...``.

Exit status is 0 on success, 1 for invalid input or an exceeded search
budget, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .diagram import DiagramError, parse_diagram
from .invariants import (
    ClosureConflict,
    format_table,
    integral_invariant,
    symmetry_invariant,
    writhe_enhanced_invariant,
    writhe_symmetry_invariant,
)
from .rack import (
    RackError,
    enumerate_racks,
    format_rack,
    is_quandle,
    operator_classes,
    parse_rack,
)
from .solver import LEVEL_MODES, SearchSpaceTooLarge, enumerate_homomorphisms, oracle_enumerate_homomorphisms


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _rack(args):
    return parse_rack(_read(args.rack), transposed=args.transposed)


def _diagram(args):
    return parse_diagram(_read(args.diagram))


def cmd_validate_rack(args, out):
    T = _rack(args)
    out.append(f"valid rack: order {T.order}, rank {T.rank}")


def cmd_rack_info(args, out):
    T = _rack(args)
    out.append(f"order {T.order}, rank {T.rank}, quandle: {'yes' if is_quandle(T) else 'no'}")
    classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in operator_classes(T))
    out.append(f"operator classes: {classes}")


def cmd_enum_racks(args, out):
    racks = enumerate_racks(args.n, up_to_iso=args.up_to_iso)
    out.append(f"count {len(racks)}")
    for T in racks:
        out.append("")
        out.append(format_rack(T).rstrip("\n"))


def cmd_homs(args, out):
    T, D = _rack(args), _diagram(args)
    enumerate_ = oracle_enumerate_homomorphisms if args.oracle else enumerate_homomorphisms
    homs = enumerate_(D, T, args.levels)
    out.append(f"count {len(homs)}")
    if args.list:
        for f in homs:
            out.append(" | ".join(" ".join(map(str, level)) for level in f.levels))


_KINDS = {
    "z": ("phi_Z", integral_invariant),
    "w": ("phi_W", writhe_enhanced_invariant),
    "sym": ("phi_Sym", symmetry_invariant),
    "wsym": ("phi_WSym", writhe_symmetry_invariant),
}


def cmd_invariant(args, out):
    T, D = _rack(args), _diagram(args)
    key, fn = _KINDS[args.kind]
    value = fn(D, T, levels=args.levels, oracle=args.oracle)
    if args.table and not isinstance(value, int):
        out.append(f"{key}")
        out.append(format_table(value).rstrip("\n"))
    else:
        out.append(f"{key} = {value}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lensrack", description="Rack counting invariants of links in L(p,1).")
    parser.add_argument("--transposed", action="store_true", help="read rack matrices as M[i][j] = j ▷ i")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_rack(p):
        p.add_argument("-r", "--rack", required=True, help="rack file")

    def with_diagram(p):
        p.add_argument("-d", "--diagram", required=True, help="diagram file")
        p.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
        p.add_argument("--levels", choices=LEVEL_MODES, default="independent",
                       help="'uniform' restricts to equal colorings on every level (reproduction convention)")

    p = sub.add_parser("validate-rack", help="check a rack file")
    with_rack(p)
    p.set_defaults(func=cmd_validate_rack)

    p = sub.add_parser("rack-info", help="order, rank and operator classes of a rack")
    with_rack(p)
    p.set_defaults(func=cmd_rack_info)

    p = sub.add_parser("enum-racks", help="list all racks of a small order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.set_defaults(func=cmd_enum_racks)

    p = sub.add_parser("homs", help="count or list homomorphisms to a rack")
    with_rack(p)
    with_diagram(p)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("invariant", help="compute a counting invariant")
    with_rack(p)
    with_diagram(p)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--table", action="store_true", help="print polynomials as exponent/coefficient rows")
    p.set_defaults(func=cmd_invariant)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        args.func(args, out)
    except (DomainError, RackError, DiagramError, SearchSpaceTooLarge, ClosureConflict) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write("\n".join(out) + "\n")
    return 0


def main() -> None:
    sys.exit(run())
