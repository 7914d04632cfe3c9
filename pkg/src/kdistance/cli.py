"""Command line interface: ``kdistance <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 when ``verify`` reports a
mismatch row.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Sequence

from . import verify as verify_mod
from .benzenoid import build_system, parse_hexes, rhombic, zigzag
from .errors import KDistanceError
from .graph import format_edge_list, k_degree_profile, parse_edge_list
from .indices import LEAP_KINDS, IndexKind, compute_index, compute_polynomial, edge_partition


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _quantities(text: str) -> list[IndexKind]:
    try:
        return [IndexKind.parse(t) for t in text.split(",") if t.strip()]
    except KDistanceError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_source(p: argparse.ArgumentParser, allow_input: bool = True) -> None:
    p.add_argument("--family", choices=("zigzag", "rhombic"))
    p.add_argument("--p", type=_positive_int, help="family size parameter")
    p.add_argument("--hexes", type=Path, help="file with one 'q r' hexagon per line")
    if allow_input:
        p.add_argument("--input", type=Path, help="edge-list file")


def _add_k(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=_positive_int, default=2, help="distance (default 2)")


def _load_graph(args):
    sources = [args.family is not None, args.hexes is not None, getattr(args, "input", None) is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --family/--p, --hexes" + (", --input" if hasattr(args, "input") else ""))
    if args.family is not None:
        if args.p is None:
            raise UsageError("--family requires --p")
        return zigzag(args.p) if args.family == "zigzag" else rhombic(args.p)
    if args.p is not None:
        raise UsageError("--p only applies with --family")
    if args.hexes is not None:
        return build_system(parse_hexes(_read(args.hexes)))[0]
    return parse_edge_list(_read(args.input))


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _fmt_real(value: float) -> str:
    return f"{value:.6g}"


def _fmt_value(value) -> str:
    return _fmt_real(value) if isinstance(value, float) else str(value)


def cmd_generate(args) -> int:
    _emit(format_edge_list(_load_graph(args)), args.out)
    return 0


def cmd_indices(args) -> int:
    g = _load_graph(args)
    profile = k_degree_profile(g, args.k)
    lines = [f"{kind.token} {_fmt_value(compute_index(g, profile, kind))}" for kind in args.quantities]
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def cmd_partition(args) -> int:
    g = _load_graph(args)
    part = edge_partition(g, k_degree_profile(g, args.k))
    lines = [f"deg_u deg_v frequency"]
    lines += [f"{a} {b} {f}" for (a, b), f in part.sorted_items()]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_poly(args) -> int:
    g = _load_graph(args)
    poly = compute_polynomial(g, k_degree_profile(g, args.k), args.kind)
    sys.stdout.write(f"{poly}\n")
    return 0


def cmd_verify(args) -> int:
    if args.p_min > args.p_max:
        raise UsageError("--p-min must not exceed --p-max")
    families = ("rhombic", "zigzag") if args.family == "both" else (args.family,)
    report = verify_mod.combine(verify_mod.verify_range(f, args.p_min, args.p_max) for f in families)
    sys.stdout.write(verify_mod.FORMATTERS[args.format](report))
    return report.exit_code


def sweep_rows(family: str, p_min: int, p_max: int, k: int, kinds: Sequence[IndexKind]) -> list[list]:
    rows = []
    for p in range(p_min, p_max + 1):
        g = zigzag(p) if family == "zigzag" else rhombic(p)
        profile = k_degree_profile(g, k)
        rows.append([p] + [compute_index(g, profile, kind) for kind in kinds])
    return rows


def cmd_sweep(args) -> int:
    if args.p_min > args.p_max:
        raise UsageError("--p-min must not exceed --p-max")
    rows = sweep_rows(args.family, args.p_min, args.p_max, args.k, args.quantities)
    header = ["p"] + [kind.token for kind in args.quantities]
    body = [[str(row[0])] + [_fmt_value(v) for v in row[1:]] for row in rows]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        text = buf.getvalue()
    else:
        table = [header] + body
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        text = "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in table)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kdistance", description="k-distance degree indices of benzenoid systems")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("generate", help="write a benzenoid graph as an edge list")
    _add_source(p, allow_input=False)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("indices", help="print index values")
    _add_source(p)
    _add_k(p)
    p.add_argument("--quantities", type=_quantities, default=list(LEAP_KINDS),
                   help="comma-separated tokens, e.g. lm1,hlm2 (default: all leap indices)")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("partition", help="print the edge partition by endpoint k-degrees")
    _add_source(p)
    _add_k(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("poly", help="print an index polynomial")
    _add_source(p)
    _add_k(p)
    p.add_argument("--kind", required=True, choices=("lm1", "lm2", "hlm1", "hlm2"))
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="compare BFS values with closed forms and tables")
    p.add_argument("--family", choices=("zigzag", "rhombic", "both"), required=True)
    p.add_argument("--p-min", type=int, default=2)
    p.add_argument("--p-max", type=int, default=10)
    p.add_argument("--format", choices=tuple(verify_mod.FORMATTERS), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="one row of index values per p")
    p.add_argument("--family", choices=("zigzag", "rhombic"), required=True)
    p.add_argument("--p-min", type=_positive_int, required=True)
    p.add_argument("--p-max", type=_positive_int, required=True)
    _add_k(p)
    p.add_argument("--quantities", type=_quantities, default=list(LEAP_KINDS))
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except KDistanceError as exc:
        print(f"kdistance: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
