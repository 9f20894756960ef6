"""Command-line front end.

Exit status: 0 success, 1 a geometric or combinatorial validation failure,
2 an unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from .algebra import format_rational
from .coords import CartographicSystem, ChordalSystem, CoordinateSystem, interpolate
from .decomposition import (
    DEFAULT_MAX_N,
    ChordalDecomposition,
    cds,
    enumerate_decompositions,
    format_cds,
    orbits,
    parse_cds,
    validate_decomposition,
)
from .errors import PointOutsideError, PolyCoordsError
from .formats import (
    InputFormatError,
    decomposition_from_json,
    decomposition_to_json,
    dumps,
    load_json,
    parse_chord_list,
    point_from_json,
    point_to_json,
    points_from_json,
    polygon_from_json,
    polygon_to_json,
    system_from_json,
    table_to_json,
    tree_to_json,
    vector_to_json,
)
from .geometry import Point2, Polygon
from .locator import Locator

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2


class CommandFailed(Exception):
    def __init__(self, doc: dict[str, Any], code: int):
        super().__init__(doc.get("message", ""))
        self.doc = doc
        self.code = code


def _error_doc(exc: Exception) -> dict[str, Any]:
    doc: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        doc["witness"] = list(witness)
    return doc


def _load_polygon(args: argparse.Namespace) -> Polygon:
    return polygon_from_json(load_json(args.polygon))


def _load_decomposition(args: argparse.Namespace, poly: Polygon) -> ChordalDecomposition | None:
    if args.decomposition is not None:
        return decomposition_from_json(load_json(args.decomposition), n=poly.n)
    if args.chords is not None:
        return validate_decomposition(poly.n, parse_chord_list(args.chords))
    return None


def _require_decomposition(args: argparse.Namespace, poly: Polygon) -> ChordalDecomposition:
    d = _load_decomposition(args, poly)
    if d is None:
        raise InputFormatError("give a decomposition with --decomposition FILE or --chords LIST")
    return d


def _load_points(args: argparse.Namespace) -> list[Point2]:
    pts: list[Point2] = []
    if args.points is not None:
        pts.extend(points_from_json(load_json(args.points)))
    for text in args.point or []:
        pts.append(point_from_json(text.split(",")))
    if not pts:
        raise InputFormatError("give query points with --points FILE or --point X,Y")
    return pts


def _load_system(args: argparse.Namespace, poly: Polygon) -> CoordinateSystem:
    given = [x for x in (args.system, args.chords, args.cartographic) if x is not None]
    if len(given) != 1:
        raise InputFormatError("give exactly one of --system, --chords, --cartographic")
    if args.system is not None:
        return system_from_json(load_json(args.system), poly)
    if args.chords is not None:
        return ChordalSystem(poly, validate_decomposition(poly.n, parse_chord_list(args.chords)))
    return CartographicSystem(poly, validate_decomposition(poly.n, parse_chord_list(args.cartographic)))


def cmd_validate(args: argparse.Namespace) -> dict[str, Any]:
    poly = _load_polygon(args)
    doc: dict[str, Any] = {
        "valid": True,
        "polygon": polygon_to_json(poly),
        "n": poly.n,
        "area": format_rational(poly.area),
    }
    d = _load_decomposition(args, poly)
    if d is not None:
        doc["decomposition"] = decomposition_to_json(d)
    return doc


def cmd_triangulations(args: argparse.Namespace) -> Any:
    n = args.n
    if not 3 <= n <= args.max_n:
        raise PolyCoordsError(f"n must be within 3..{args.max_n}, got {n}")
    wanted = parse_cds(args.cds) if args.cds is not None else None
    if wanted is not None and (sum(wanted) != 2 * (n - 3) or any(k > n - 3 for k in wanted)):
        raise PolyCoordsError(f"{args.cds!r} is not a chordal degree sequence for n={n}")
    if args.orbits:
        out = []
        for orb in orbits(n, max_n=args.max_n):
            seq = cds(next(iter(orb)))
            if wanted is not None and seq != wanted:
                continue
            out.append(
                {
                    "cds": format_cds(seq),
                    "degree_sequence": list(seq),
                    "size": len(orb),
                    "members": [
                        {"chords": img.pairs(), "multiplicity": mult} for img, mult in orb.items()
                    ],
                }
            )
        return out
    return [
        decomposition_to_json(d)
        for d in enumerate_decompositions(n, max_n=args.max_n)
        if wanted is None or cds(d) == wanted
    ]


def cmd_locate(args: argparse.Namespace) -> dict[str, Any]:
    poly = _load_polygon(args)
    loc = Locator(poly, _require_decomposition(args, poly))
    results: list[dict[str, Any]] = []
    failed = False
    for p in _load_points(args):
        try:
            found = loc.locate(p)
        except PointOutsideError as exc:
            failed = True
            results.append({"point": point_to_json(p), **_error_doc(exc)})
            continue
        results.append(
            {
                "point": point_to_json(p),
                "signs": list(loc.signs(p)),
                "codes": [loc.table.codes[i] for i in found],
                "regions": [loc.table.paths[i] for i in found],
                "triangles": [list(loc.table.triangles[i]) for i in found],
            }
        )
    doc = {"chords": [[c.a, c.b] for c in loc.table.chords], "results": results}
    if failed:
        raise CommandFailed(doc, EXIT_INVALID)
    return doc


def cmd_tree(args: argparse.Namespace) -> dict[str, Any]:
    poly = _load_polygon(args)
    loc = Locator(poly, _require_decomposition(args, poly))
    return {"tree": tree_to_json(loc.tree), "table": table_to_json(loc.table)}


def _per_point(points: Sequence[Point2], fn) -> tuple[list[dict[str, Any]], bool]:
    results: list[dict[str, Any]] = []
    failed = False
    for p in points:
        try:
            results.append(fn(p))
        except PointOutsideError as exc:
            failed = True
            results.append({"point": point_to_json(p), **_error_doc(exc)})
    return results, failed


def cmd_coords(args: argparse.Namespace) -> dict[str, Any]:
    poly = _load_polygon(args)
    system = _load_system(args, poly)
    results, failed = _per_point(_load_points(args), lambda p: vector_to_json(p, system(p)))
    doc = {"system": system.descriptor(), "results": results}
    if failed:
        raise CommandFailed(doc, EXIT_INVALID)
    return doc


def _values_from_json(obj: Any, n: int) -> tuple[list[list[Any]], bool]:
    if isinstance(obj, dict) and "values" in obj:
        obj = obj["values"]
    if isinstance(obj, dict):
        try:
            keyed = {int(k): v for k, v in obj.items()}
        except ValueError as exc:
            raise InputFormatError("value keys must be vertex labels") from exc
        missing = [v for v in range(1, n + 1) if v not in keyed]
        if missing:
            raise PolyCoordsError(f"no value for vertices {missing}")
        rows = [keyed[v] for v in range(1, n + 1)]
    elif isinstance(obj, list):
        rows = obj
    else:
        raise InputFormatError('values document is a list, a label map, or {"values": ...}')
    scalar = all(not isinstance(r, list) for r in rows)
    if scalar:
        rows = [[r] for r in rows]
    elif not all(isinstance(r, list) for r in rows):
        raise PolyCoordsError("vertex values mix scalars and vectors")
    for r in rows:
        for c in r:
            if isinstance(c, float):
                raise InputFormatError(f"float {c!r} not allowed; write rationals as strings")
    return rows, scalar


def cmd_interpolate(args: argparse.Namespace) -> dict[str, Any]:
    poly = _load_polygon(args)
    system = _load_system(args, poly)
    rows, scalar = _values_from_json(load_json(args.values), poly.n)

    def one(p: Point2) -> dict[str, Any]:
        value = [format_rational(c) for c in interpolate(p, system, rows)]
        return {"point": point_to_json(p), "value": value[0] if scalar else value}

    results, failed = _per_point(_load_points(args), one)
    doc = {"system": system.descriptor(), "results": results}
    if failed:
        raise CommandFailed(doc, EXIT_INVALID)
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent JSON output")

    parser = argparse.ArgumentParser(
        prog="polycoords", description="Exact chordal and cartographic coordinates on convex polygons."
    )
    parser.add_argument("--output", "-o", default=None, help="write JSON here instead of stdout")
    parser.add_argument("--pretty", action="store_true", default=False, help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def decomposition_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--decomposition", "-d", help="decomposition JSON file")
        p.add_argument("--chords", "-c", help='chord list such as "13,15,35" or "1-3 1-5 3-5"')

    def system_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--system", "-s", help="system descriptor JSON file")
        p.add_argument("--chords", "-c", help="chordal system from a chord list")
        p.add_argument("--cartographic", help="cartographic system from a representative chord list")

    def point_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--points", "-p", help="points JSON file")
        p.add_argument("--point", action="append", metavar="X,Y", help="query point; repeatable")

    p = sub.add_parser("validate", parents=[common], help="check a polygon and optional decomposition")
    p.add_argument("polygon")
    decomposition_opts(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("triangulations", parents=[common], help="enumerate chordal decompositions")
    p.add_argument("n", type=int)
    p.add_argument("--cds", help='keep only this degree sequence, e.g. "1^2 2^2"')
    p.add_argument("--orbits", action="store_true", help="group into dihedral orbits")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_triangulations)

    p = sub.add_parser("locate", parents=[common], help="find the region(s) holding each point")
    p.add_argument("polygon")
    decomposition_opts(p)
    point_opts(p)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("tree", parents=[common], help="parsing tree and sign-code table")
    p.add_argument("polygon")
    decomposition_opts(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("coords", parents=[common], help="coordinate vectors of points")
    p.add_argument("polygon")
    system_opts(p)
    point_opts(p)
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("interpolate", parents=[common], help="interpolate vertex data at points")
    p.add_argument("polygon")
    system_opts(p)
    p.add_argument("--values", "-v", required=True, help="per-vertex values JSON file")
    point_opts(p)
    p.set_defaults(func=cmd_interpolate)
    return parser


def _emit(doc: Any, args: argparse.Namespace) -> None:
    text = dumps(doc, pretty=args.pretty)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except CommandFailed as exc:
        _emit(exc.doc, args)
        return exc.code
    except InputFormatError as exc:
        _emit({"valid": False, **_error_doc(exc)}, args)
        print(f"polycoords: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PolyCoordsError as exc:
        _emit({"valid": False, **_error_doc(exc)}, args)
        print(f"polycoords: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(doc, args)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
