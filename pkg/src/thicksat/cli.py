"""Command line for thicksat.

Exit codes: 0 success or valid, 1 invalid input or refused request,
2 document parse error, 3 inconclusive search.
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from thicksat import __version__
from thicksat.config import EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK, EXIT_PARSE_ERROR
from thicksat.convex import bounds, build_zigzag
from thicksat.document import load_document, save_document
from thicksat.drawing import is_convex, validate
from thicksat.errors import ERROR_INCONCLUSIVE, ERROR_PARSE, ThicksatError
from thicksat.extension import cells, extend_edges, extension_report, saturate_drawing
from thicksat.oracle import enumerate_saturated
from thicksat.render import render_arrangement, render_drawing, write_svg
from thicksat.saturation import SaturationMode, SearchBudget, k_colorable


def _exit_code(error: ThicksatError) -> int:
    if error.code == ERROR_PARSE:
        return EXIT_PARSE_ERROR
    if error.code == ERROR_INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_INVALID


def _report_error(error: ThicksatError) -> int:
    where = ""
    if "field" in error.details:
        where = f" (at {error.details['field']})"
    elif "line" in error.details:
        where = f" (line {error.details['line']}, column {error.details['column']})"
    print(f"error [{error.code}]: {error.message}{where}", file=sys.stderr)
    return _exit_code(error)


def _budget(args: argparse.Namespace) -> SearchBudget | None:
    return SearchBudget(args.budget) if getattr(args, "budget", None) else None


def _cmd_validate(args: argparse.Namespace) -> int:
    drawing, coloring = load_document(args.file)
    if args.k is not None:
        drawing = drawing.with_k(args.k)
    if coloring is None:
        found = k_colorable(drawing)
        if found is None:
            print(f"invalid: no {drawing.k}-coloring without monochromatic crossings exists")
            return EXIT_INVALID
        print(f"uncolored document; found a certifying {drawing.k}-coloring")
        coloring = found
    report = validate(drawing, coloring)
    if report.ok:
        print(f"valid: n={drawing.n} edges={len(drawing.edges)} k={drawing.k}")
        return EXIT_OK
    print(f"invalid: {len(report.defects)} defect(s)")
    for defect in report.defects:
        print(f"  {defect.kind}: {defect.message}")
    return EXIT_INVALID


def _cmd_zigzag(args: argparse.Namespace) -> int:
    drawing, coloring = build_zigzag(args.n, args.k)
    save_document(args.out, drawing, coloring)
    if args.svg:
        write_svg(args.svg, render_drawing(drawing, coloring))
    print(f"zigzag n={args.n} k={args.k}: {len(drawing.edges)} edges written to {args.out}")
    return EXIT_OK


def _cmd_saturate(args: argparse.Namespace) -> int:
    drawing, coloring = load_document(args.file)
    mode = SaturationMode(args.mode)
    result, result_coloring = saturate_drawing(drawing, coloring, mode, _budget(args))
    save_document(args.out, result, result_coloring)
    before, after = len(drawing.edges), len(result.edges)
    if before == after:
        print(f"already saturated ({mode.value}): {after} edges")
    else:
        print(f"edges: {before} -> {after} ({mode.value})")
    if drawing.n >= 3:
        table = bounds(drawing.n, drawing.k)
        bound = table.lower_bound_for(is_convex(drawing), mode is SaturationMode.FREE)
        if bound is None:
            print("bound: no closed-form lower bound applies")
        else:
            print(f"bound: at least {bound[1]} edges ({bound[0]})")
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    mode = SaturationMode(args.mode)
    result = enumerate_saturated(args.n, args.k, mode, _budget(args), args.cap)
    rows = [
        ("n", result.n),
        ("k", result.k),
        ("mode", result.mode.value),
        ("min edges", result.min_edges),
        ("max edges", result.max_edges),
        ("instances examined", result.instances_examined),
        ("distinct up to symmetry", result.distinct_instances),
        ("min witness", sorted(result.witness_min.chords)),
    ]
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        print(f"{label:<{width}}  {value}")
    if args.witness_out:
        save_document(
            args.witness_out, result.witness_min.to_drawing(args.k), result.coloring_min
        )
    return EXIT_OK


def _cmd_extend(args: argparse.Namespace) -> int:
    drawing, coloring = load_document(args.file)
    if drawing.k != 2:
        print(f"error: extensions need k = 2, document has k = {drawing.k}", file=sys.stderr)
        return EXIT_INVALID
    if coloring is None:
        print("error: extensions need a full blue/red coloring", file=sys.stderr)
        return EXIT_INVALID
    arr = extend_edges(drawing, coloring)
    cell_list = cells(arr)
    report = extension_report(arr)
    write_svg(args.out_svg, render_arrangement(arr, cell_list))
    identity = report.identity
    print(f"red inner edges: {report.red_edges}")
    print(f"cells: {report.cell_count} (expected {report.red_edges + 1})")
    print(f"cell sizes: {list(report.cell_sizes)}")
    print(f"incidences: {'ok' if report.incidences_ok else 'FAILED'}")
    print(
        f"counting identity: {identity.lhs} = {identity.rhs} "
        f"{'ok' if identity.holds else 'FAILED'}; "
        f">= n' - 3 = {identity.hull_vertices - 3} "
        f"{'ok' if identity.lower_bound_holds else 'FAILED'}"
    )
    print(f"red cell diagonals: {report.added_diagonals} added of {report.expected_diagonals}")
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_bounds(args: argparse.Namespace) -> int:
    table = bounds(args.n, args.k)
    for name, value in table.to_dict().items():
        print(f"{name:<22}{'-' if value is None else value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thicksat",
        description="Construct, saturate, check and enumerate drawings of bounded geometric thickness.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("validate", help="Check a document's thickness certificate")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None, help="Override the document's k")
    p.set_defaults(handler=_cmd_validate)

    p = commands.add_parser("zigzag", help="Write the precolored zigzag drawing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg", default=None)
    p.set_defaults(handler=_cmd_zigzag)

    p = commands.add_parser("saturate", help="Add edges until the drawing is saturated")
    p.add_argument("file")
    p.add_argument("--mode", choices=[m.value for m in SaturationMode], required=True)
    p.add_argument("--budget", type=int, default=None, help="Search node limit")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_saturate)

    p = commands.add_parser("enumerate", help="Min and max saturated convex drawings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in SaturationMode], required=True)
    p.add_argument("--cap", type=int, default=None, help="Largest admissible n")
    p.add_argument("--budget", type=int, default=None, help="Search node limit")
    p.add_argument("--witness-out", default=None, help="Write the min witness here")
    p.set_defaults(handler=_cmd_enumerate)

    p = commands.add_parser("extend", help="Render edge extensions and check cell counts")
    p.add_argument("file")
    p.add_argument("--out-svg", required=True)
    p.set_defaults(handler=_cmd_extend)

    p = commands.add_parser("bounds", help="Print the closed-form edge bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_bounds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    try:
        return int(args.handler(args))
    except ThicksatError as e:
        return _report_error(e)
