"""Colored divisorial fans of complexity-one horospherical varieties.

A colored divisorial fan is a divisorial fan over P^1 together with the
colors of the variety (each mapped to a lattice vector ``rho`` of ``N``) and,
for each polyhedral divisor, the subset of colors it contains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .abelian import primitive_generator
from .divfan import Diagnostic, DivisorialFan, PolyhedralDivisor, support, validate
from .polyhedra import LatticeVector, Polyhedron, empty_polyhedron, format_vector, from_cone, translate

IDENTITY_LABELS = frozenset({"e", "1", "id"})


@dataclass(frozen=True)
class Color:
    name: str
    rho: LatticeVector


@dataclass(frozen=True)
class ColoredPolyhedralDivisor:
    divisor: PolyhedralDivisor
    marked: FrozenSet[str] = frozenset()


@dataclass(frozen=True)
class ColoredDivisorialFan:
    ambient_rank: int
    colors: Tuple[Color, ...]
    elements: Tuple[ColoredPolyhedralDivisor, ...]
    ray_override: Optional[Tuple[LatticeVector, ...]] = None

    @property
    def fan(self) -> DivisorialFan:
        return DivisorialFan(self.ambient_rank, tuple(e.divisor for e in self.elements))

    @property
    def color_names(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.colors)

    def color(self, name: str) -> Color:
        for c in self.colors:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def marked_colors(self) -> FrozenSet[str]:
        return frozenset().union(*(e.marked for e in self.elements))


def tail_rays(E: ColoredDivisorialFan) -> List[LatticeVector]:
    """All primitive extremal rays of tails of elements of ``E``."""
    return sorted({r for e in E.elements for r in e.divisor.tail.rays})


def _ray_order(rays):
    # descending lexicographic, which lists (0,1), (0,-1), (-1,0) in that order
    return sorted(set(rays), reverse=True)


def rays(E: ColoredDivisorialFan) -> List[LatticeVector]:
    """The rays indexing the non-vertex invariant prime divisors.

    With an explicit override the override is returned verbatim.  Otherwise
    every extremal tail ray is kept except those spanned by ``rho(D)`` for a
    color ``D`` marked in some element.
    """
    candidates = set(tail_rays(E))
    if E.ray_override is not None:
        for r in E.ray_override:
            if any(r) and primitive_generator(r) != tuple(r):
                raise ValueError(f"override ray {format_vector(r)} is not primitive")
            if tuple(r) not in candidates:
                raise ValueError(f"override ray {format_vector(r)} is not an extremal ray of a tail")
        return [tuple(r) for r in E.ray_override]
    excluded = {primitive_generator(E.color(n).rho) for n in E.marked_colors if any(E.color(n).rho)}
    return _ray_order(candidates - excluded)


@dataclass(frozen=True, order=True)
class Label:
    """Prime divisor of ``P^1 x G/P`` carrying a coefficient.

    ``kind`` is ``"point"`` (``Z_y``), ``"color"`` (``Z_D``) or ``"wcolor"``
    (the Weyl translate ``w . Z_D``).
    """

    kind: str
    key: str
    weyl: str = ""

    def __str__(self):
        if self.kind == "point":
            return f"Z_{self.key}"
        if self.kind == "color":
            return f"Z_{self.key}"
        return f"{self.weyl}.Z_{self.key}"


@dataclass(frozen=True)
class QDivisor:
    weyl_label: str
    element_index: int
    coefficients: Tuple[Tuple[Label, Polyhedron], ...] = ()

    def coefficient(self, label: Label) -> Polyhedron:
        return dict(self.coefficients)[label]

    @property
    def is_identity(self) -> bool:
        return self.weyl_label in IDENTITY_LABELS

    def resolved(self) -> Dict[str, Polyhedron]:
        """Coefficients per actual prime divisor.

        For the identity label ``w . Z_D`` is ``Z_D`` itself, and the empty
        coefficient wins over ``rho(D) + sigma``.
        """
        out: Dict[str, Polyhedron] = {}
        for label, p in self.coefficients:
            if label.kind == "wcolor" and self.is_identity:
                out[f"Z_{label.key}"] = p
            elif str(label) not in out:
                out[str(label)] = p
        return out


def build_q_divisor(E: ColoredDivisorialFan, element_index: int, weyl_label: str = "e") -> QDivisor:
    """Polyhedral divisor on ``P^1 x G/P`` describing one chart as a torus variety."""
    element = E.elements[element_index]
    D = element.divisor
    sigma = from_cone(D.tail)
    coeffs: List[Tuple[Label, Polyhedron]] = []
    for c in E.colors:
        coeffs.append((Label("color", c.name), translate(sigma, c.rho)))
    points = sorted(set(support(E.fan)) | set(D.points))
    for y in points:
        coeffs.append((Label("point", str(y)), D.coefficient(y)))
    for c in E.colors:
        if c.name not in element.marked:
            coeffs.append((Label("wcolor", c.name, weyl_label), empty_polyhedron(E.ambient_rank)))
    return QDivisor(weyl_label, element_index, tuple(coeffs))


def validate_colored(E: ColoredDivisorialFan) -> List[Diagnostic]:
    out = list(validate(E.fan))
    names = [c.name for c in E.colors]
    seen = set()
    for n in names:
        if n in seen:
            out.append(Diagnostic("error", f"duplicate color name {n!r}"))
        seen.add(n)
    for c in E.colors:
        if len(c.rho) != E.ambient_rank:
            out.append(Diagnostic("error", f"color {c.name!r} has rho of rank {len(c.rho)}"))
    for i, e in enumerate(E.elements):
        for n in sorted(e.marked - seen):
            out.append(Diagnostic("error", f"element {i} marks unknown color {n!r}"))
    if E.ray_override is not None:
        candidates = set(tail_rays(E))
        for r in E.ray_override:
            r = tuple(r)
            if not any(r) or primitive_generator(r) != r:
                out.append(Diagnostic("error", f"override ray {format_vector(r)} is not primitive"))
            elif r not in candidates:
                out.append(Diagnostic("error", f"override ray {format_vector(r)} is not an extremal ray of a tail"))
    marked = E.marked_colors
    by_ray: Dict[LatticeVector, List[str]] = {}
    for c in E.colors:
        if any(c.rho) and len(c.rho) == E.ambient_rank:
            by_ray.setdefault(primitive_generator(c.rho), []).append(c.name)
    for r, group in sorted(by_ray.items()):
        flags = {n in marked for n in group}
        if len(group) > 1 and len(flags) > 1:
            out.append(
                Diagnostic("warning", f"colors {', '.join(group)} share the ray {format_vector(r)} but only some are marked")
            )
    return out
