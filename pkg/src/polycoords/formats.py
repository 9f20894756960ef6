"""JSON documents for polygons, decompositions, points and coordinate systems.

Rationals are always strings in files: integers and ``"p/q"`` are accepted on
input, canonical lowest terms are written on output.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .algebra import as_rational, format_rational
from .coords import CartographicSystem, ChordalSystem, CoordinateSystem, MixtureSystem
from .decomposition import ChordalDecomposition, cds, format_cds, validate_decomposition
from .errors import PolyCoordsError
from .geometry import Point2, Polygon, point, validate_polygon
from .locator import ParsingTree, SignCodeTable


class InputFormatError(PolyCoordsError):
    """A file or option could not be parsed into the expected document."""


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc


def dumps(doc: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _rational(value: Any) -> Fraction:
    if isinstance(value, float):
        raise InputFormatError(f"float {value!r} not allowed; write rationals as strings")
    try:
        return as_rational(value)
    except (TypeError, PolyCoordsError) as exc:
        raise InputFormatError(str(exc)) from exc


def point_to_json(p: Sequence[Fraction]) -> list[str]:
    return [format_rational(c) for c in p]


def point_from_json(obj: Any) -> Point2:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise InputFormatError(f"a point is a pair of rationals, got {obj!r}")
    return point(_rational(obj[0]), _rational(obj[1]))


def polygon_to_json(poly: Polygon) -> dict[str, Any]:
    return {"vertices": [point_to_json(v) for v in poly.vertices]}


def polygon_from_json(obj: Any) -> Polygon:
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list):
        raise InputFormatError('polygon document needs a "vertices" list')
    return validate_polygon(point_from_json(v) for v in obj["vertices"])


def decomposition_to_json(d: ChordalDecomposition) -> dict[str, Any]:
    seq = cds(d)
    return {"n": d.n, "chords": d.pairs(), "cds": format_cds(seq), "degree_sequence": list(seq)}


def _chord_pairs(obj: Any) -> list[tuple[int, int]]:
    if not isinstance(obj, list):
        raise InputFormatError(f"chords must be a list of pairs, got {obj!r}")
    out = []
    for c in obj:
        if (
            not isinstance(c, (list, tuple))
            or len(c) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in c)
        ):
            raise InputFormatError(f"a chord is a pair of vertex labels, got {c!r}")
        out.append((c[0], c[1]))
    return out


def decomposition_from_json(obj: Any, n: int | None = None) -> ChordalDecomposition:
    if not isinstance(obj, dict) or "chords" not in obj:
        raise InputFormatError('decomposition document needs "chords"')
    size = obj.get("n", n)
    if not isinstance(size, int):
        raise InputFormatError('decomposition document needs an integer "n"')
    if n is not None and size != n:
        raise PolyCoordsError(f"decomposition has n={size}, polygon has {n} vertices")
    return validate_decomposition(size, _chord_pairs(obj["chords"]))


_CHORD_TOKEN = re.compile(r"^(\d+)[-^](\d+)$|^(\d)(\d)$")


def parse_chord_list(text: str) -> list[tuple[int, int]]:
    """``"13,15,35"`` or ``"1-3 1-5 3-5"``; the dash form is needed past 9."""
    out = []
    for token in text.replace(",", " ").split():
        m = _CHORD_TOKEN.match(token)
        if m is None:
            raise InputFormatError(f"bad chord {token!r}")
        a, b = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
        out.append((int(a), int(b)))
    return out


def points_from_json(obj: Any) -> list[Point2]:
    if isinstance(obj, dict):
        obj = obj.get("points")
    if not isinstance(obj, list):
        raise InputFormatError('points document is a list or {"points": [...]}')
    return [point_from_json(p) for p in obj]


def system_from_json(obj: Any, poly: Polygon) -> CoordinateSystem:
    if not isinstance(obj, dict):
        raise InputFormatError("system descriptor must be an object")
    kind = obj.get("kind")
    if kind == "chordal":
        return ChordalSystem(poly, validate_decomposition(poly.n, _chord_pairs(obj.get("chords"))))
    if kind == "cartographic":
        rep = validate_decomposition(poly.n, _chord_pairs(obj.get("representative")))
        return CartographicSystem(poly, rep)
    if kind == "mixture":
        parts = obj.get("parts")
        if not isinstance(parts, list) or not parts:
            raise InputFormatError('mixture descriptor needs a non-empty "parts" list')
        built = []
        for part in parts:
            if not isinstance(part, dict) or "weight" not in part or "system" not in part:
                raise InputFormatError('mixture part needs "weight" and "system"')
            built.append((system_from_json(part["system"], poly), _rational(part["weight"])))
        return MixtureSystem(built)
    raise InputFormatError(f"unknown system kind {kind!r}")


def vector_to_json(a: Sequence[Fraction], weights: Sequence[Fraction]) -> dict[str, Any]:
    return {"point": point_to_json(a), "weights": [format_rational(w) for w in weights]}


def tree_to_json(tree: ParsingTree) -> dict[str, Any]:
    return {
        "n": tree.n,
        "chords": tree.decomposition.pairs(),
        "nodes": {
            nd.path: {
                "triangle": list(nd.triangle),
                "base": list(nd.base),
                "apex": nd.apex,
                "case": nd.case,
                "frame": list(nd.frame),
            }
            for nd in tree.nodes
        },
        "leaves": [{"path": lf.path, "segment": list(lf.segment)} for lf in tree.leaves],
    }


def table_to_json(table: SignCodeTable) -> dict[str, Any]:
    return {
        "chords": [[c.a, c.b] for c in table.chords],
        "regions": [
            {"path": p, "triangle": list(t), "code": code}
            for p, t, code in zip(table.paths, table.triangles, table.codes)
        ],
    }
