"""JSON input documents describing a colored divisorial fan.

Layout::

    {
      "lattice_rank": 2,
      "colors": [{"name": "D1", "rho": [1, 0]}, ...],
      "flag_model": {"name": "SL3/B", "color_order": ["D1", "D2"]},
      "elements": [
        {
          "tail": [[-1, 0], [0, 1]],
          "marked": ["D1"],
          "coefficients": [
            {"point": [0, 1], "vertices": [["-1/2", "1/2"]]},
            {"point": [1, 0], "empty": true}
          ]
        }
      ],
      "rays_override": [[0, 1], [0, -1]]
    }

Rationals are integers or strings ``"p/q"``.  A coefficient without
``"rays"`` uses the element's tail.  ``"rays_override"``, ``"comment"`` and
``"schema_version"`` are optional; any other key is rejected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .coxring import FlagModel, flag_catalog
from .divfan import ProjPoint, polyhedral_divisor
from .horospherical import Color, ColoredDivisorialFan, ColoredPolyhedralDivisor
from .polyhedra import MAX_RANK, canonicalize, cone, empty_polyhedron

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class DocumentError(ValueError):
    """Parse failure, positioned by a JSON path or a line/column."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass(frozen=True)
class CoefficientDoc:
    point: ProjPoint
    vertices: Tuple[Tuple[Fraction, ...], ...] = ()
    rays: Optional[Tuple[Tuple[int, ...], ...]] = None
    empty: bool = False


@dataclass(frozen=True)
class ElementDoc:
    tail: Tuple[Tuple[int, ...], ...]
    coefficients: Tuple[CoefficientDoc, ...] = ()
    marked: Tuple[str, ...] = ()


@dataclass(frozen=True)
class InputDocument:
    lattice_rank: int
    colors: Tuple[Tuple[str, Tuple[int, ...]], ...]
    flag_name: str
    color_order: Tuple[str, ...]
    elements: Tuple[ElementDoc, ...]
    rays_override: Optional[Tuple[Tuple[int, ...], ...]] = None
    comment: str = ""


def _keys(obj, where, required, optional=()):
    if not isinstance(obj, dict):
        raise DocumentError(where, "expected an object")
    for k in obj:
        if k not in required and k not in optional:
            raise DocumentError(f"{where}.{k}" if where else k, "unknown field")
    for k in required:
        if k not in obj:
            raise DocumentError(where or "document", f"missing field {k!r}")


def _int(x, where) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(where, f"expected an integer, got {x!r}")
    return x


def _rational(x, where) -> Fraction:
    if isinstance(x, bool):
        raise DocumentError(where, f"malformed rational {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x.strip()):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise DocumentError(where, f"malformed rational {x!r} (zero denominator)") from None
    raise DocumentError(where, f"malformed rational {x!r}")


def _vector(x, rank, where, parse=_int) -> tuple:
    if not isinstance(x, list):
        raise DocumentError(where, "expected a list")
    if len(x) != rank:
        raise DocumentError(where, f"expected {rank} coordinates, got {len(x)}")
    return tuple(parse(c, f"{where}[{i}]") for i, c in enumerate(x))


def _vectors(x, rank, where, parse=_int) -> tuple:
    if not isinstance(x, list):
        raise DocumentError(where, "expected a list")
    return tuple(_vector(v, rank, f"{where}[{i}]", parse) for i, v in enumerate(x))


def _point(x, where) -> ProjPoint:
    a, b = _vector(x, 2, where)
    if a == 0 and b == 0:
        raise DocumentError(where, "[0, 0] is not a point of P^1")
    return ProjPoint(a, b)


def _names(x, where) -> Tuple[str, ...]:
    if not isinstance(x, list) or not all(isinstance(n, str) for n in x):
        raise DocumentError(where, "expected a list of names")
    return tuple(x)


def from_data(data) -> InputDocument:
    _keys(data, "", ("lattice_rank", "colors", "flag_model", "elements"), ("rays_override", "comment", "schema_version"))
    if "schema_version" in data and data["schema_version"] != 1:
        raise DocumentError("schema_version", "only version 1 is supported")
    rank = _int(data["lattice_rank"], "lattice_rank")
    if rank < 1:
        raise DocumentError("lattice_rank", "must be positive")
    if rank > MAX_RANK:
        raise DocumentError("lattice_rank", f"unsupported rank {rank} (at most {MAX_RANK})")

    if not isinstance(data["colors"], list):
        raise DocumentError("colors", "expected a list")
    colors = []
    for i, c in enumerate(data["colors"]):
        where = f"colors[{i}]"
        _keys(c, where, ("name", "rho"))
        if not isinstance(c["name"], str) or not c["name"]:
            raise DocumentError(f"{where}.name", "expected a non-empty string")
        if any(c["name"] == n for n, _ in colors):
            raise DocumentError(f"{where}.name", f"duplicate color name {c['name']!r}")
        colors.append((c["name"], _vector(c["rho"], rank, f"{where}.rho")))

    fm = data["flag_model"]
    _keys(fm, "flag_model", ("name",), ("color_order",))
    if not isinstance(fm["name"], str):
        raise DocumentError("flag_model.name", "expected a string")
    color_order = _names(fm.get("color_order", [n for n, _ in colors]), "flag_model.color_order")

    if not isinstance(data["elements"], list):
        raise DocumentError("elements", "expected a list")
    elements = []
    for i, e in enumerate(data["elements"]):
        where = f"elements[{i}]"
        _keys(e, where, ("tail",), ("coefficients", "marked"))
        tail = _vectors(e["tail"], rank, f"{where}.tail")
        marked = _names(e.get("marked", []), f"{where}.marked")
        coeffs = []
        raw = e.get("coefficients", [])
        if not isinstance(raw, list):
            raise DocumentError(f"{where}.coefficients", "expected a list")
        seen = set()
        for j, c in enumerate(raw):
            cw = f"{where}.coefficients[{j}]"
            _keys(c, cw, ("point",), ("vertices", "rays", "empty"))
            point = _point(c["point"], f"{cw}.point")
            if point in seen:
                raise DocumentError(f"{cw}.point", f"point {point} listed twice")
            seen.add(point)
            empty = c.get("empty", False)
            if not isinstance(empty, bool):
                raise DocumentError(f"{cw}.empty", "expected true or false")
            vertices = _vectors(c.get("vertices", []), rank, f"{cw}.vertices", _rational)
            rays = _vectors(c["rays"], rank, f"{cw}.rays") if "rays" in c else None
            if empty and (vertices or rays):
                raise DocumentError(cw, "an empty coefficient has no vertices or rays")
            if not empty and not vertices:
                raise DocumentError(cw, "a non-empty coefficient needs at least one vertex")
            coeffs.append(CoefficientDoc(point, vertices, rays, empty))
        elements.append(ElementDoc(tail, tuple(coeffs), marked))

    override = None
    if data.get("rays_override") is not None:
        override = _vectors(data["rays_override"], rank, "rays_override")
    comment = data.get("comment", "")
    if not isinstance(comment, str):
        raise DocumentError("comment", "expected a string")
    return InputDocument(rank, tuple(colors), fm["name"], color_order, tuple(elements), override, comment)


def parse(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_data(data)


def _rat(x: Fraction) -> str:
    return str(x)


def to_data(doc: InputDocument) -> dict:
    data = {"schema_version": 1}
    if doc.comment:
        data["comment"] = doc.comment
    data["lattice_rank"] = doc.lattice_rank
    data["colors"] = [{"name": n, "rho": list(r)} for n, r in doc.colors]
    data["flag_model"] = {"name": doc.flag_name, "color_order": list(doc.color_order)}
    elements = []
    for e in doc.elements:
        coeffs = []
        for c in e.coefficients:
            entry = {"point": [c.point.alpha, c.point.beta]}
            if c.empty:
                entry["empty"] = True
            else:
                entry["vertices"] = [[_rat(x) for x in v] for v in c.vertices]
                if c.rays is not None:
                    entry["rays"] = [list(r) for r in c.rays]
            coeffs.append(entry)
        elements.append({"tail": [list(r) for r in e.tail], "marked": list(e.marked), "coefficients": coeffs})
    data["elements"] = elements
    if doc.rays_override is not None:
        data["rays_override"] = [list(r) for r in doc.rays_override]
    return data


def _scalar(x) -> bool:
    return not isinstance(x, (list, dict))


def _flat(x: list) -> bool:
    # a list of scalars or of scalar lists fits on one line
    return all(_scalar(y) or (isinstance(y, list) and all(map(_scalar, y))) for y in x)


def _render(x, level: int) -> str:
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(x, list) and _flat(x):
        return json.dumps(x)
    if isinstance(x, list):
        return "[\n" + ",\n".join(inner + _render(y, level + 1) for y in x) + "\n" + pad + "]"
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = (inner + json.dumps(k) + ": " + _render(v, level + 1) for k, v in x.items())
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    return json.dumps(x)


def dump(doc: InputDocument) -> str:
    """Indented JSON with coordinate lists kept on one line."""
    return _render(to_data(doc), 0) + "\n"


def from_fan(E: ColoredDivisorialFan, flag: FlagModel, comment: str = "") -> InputDocument:
    """Document describing ``E``; every coefficient is written out explicitly."""
    elements = []
    for e in E.elements:
        D = e.divisor
        coeffs = tuple(
            CoefficientDoc(y, p.vertices, None if p.empty or p.rays == D.tail.generators else p.rays, p.empty)
            for y, p in D.coefficients
        )
        elements.append(ElementDoc(D.tail.generators, coeffs, tuple(sorted(e.marked))))
    return InputDocument(
        E.ambient_rank,
        tuple((c.name, tuple(c.rho)) for c in E.colors),
        flag.id,
        tuple(flag.color_slots),
        tuple(elements),
        None if E.ray_override is None else tuple(tuple(r) for r in E.ray_override),
        comment,
    )


def build(doc: InputDocument) -> Tuple[ColoredDivisorialFan, FlagModel]:
    """Turn a parsed document into the fan and the bound flag model."""
    rank = doc.lattice_rank
    elements = []
    for i, e in enumerate(doc.elements):
        tail = cone(e.tail, rank)
        coeffs = {}
        for c in e.coefficients:
            if c.empty:
                coeffs[c.point] = empty_polyhedron(rank)
            else:
                rays = c.rays if c.rays is not None else e.tail
                coeffs[c.point] = canonicalize(c.vertices, rays, rank)
        elements.append(ColoredPolyhedralDivisor(polyhedral_divisor(tail, coeffs), frozenset(e.marked)))
    colors = tuple(Color(n, r) for n, r in doc.colors)
    E = ColoredDivisorialFan(rank, colors, tuple(elements), doc.rays_override)
    try:
        flag = flag_catalog(doc.flag_name).bind(doc.color_order)
    except ValueError as exc:
        raise DocumentError("flag_model", str(exc)) from None
    if sorted(doc.color_order) != sorted(n for n, _ in doc.colors):
        raise DocumentError("flag_model.color_order", "must list every declared color exactly once")
    return E, flag


def load(text: str) -> Tuple[ColoredDivisorialFan, FlagModel]:
    return build(parse(text))
