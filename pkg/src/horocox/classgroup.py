"""Divisor class group and the grading of the Cox ring.

Generators of the divisor group, in this order: one per ray, one per
``(point, vertex)`` pair, one per color and one for a general fiber of the
quotient map to P^1.  Principal divisors give two families of relations:

* for each basis character ``m = e_j``: ``<prim(rho), m>`` on rays,
  ``mu(v) <v, m>`` on vertices, ``<rho(D), m>`` on colors;
* for each support point ``y``: the special fiber ``sum_v mu(v) [y, v]``
  minus the general fiber.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Sequence, Tuple

from .abelian import dot, hermite_normal_form, smith_normal_form, transpose
from .coxring import CoxPresentation
from .divfan import support, vert
from .horospherical import ColoredDivisorialFan, rays

Element = Tuple[int, ...]


@dataclass(frozen=True)
class DivisorGenerator:
    kind: str  # ray | vertex | color | fiber
    origin: object
    label: str


def divisor_generators(E: ColoredDivisorialFan) -> List[DivisorGenerator]:
    out = [DivisorGenerator("ray", r, f"ray{r}") for r in rays(E)]
    out += [DivisorGenerator("vertex", d, str(d)) for d in vert(E.fan)]
    out += [DivisorGenerator("color", c.name, c.name) for c in E.colors]
    out.append(DivisorGenerator("fiber", None, "fiber"))
    return out


def relation_matrix(E: ColoredDivisorialFan) -> List[List[int]]:
    gens = divisor_generators(E)
    rows = []
    for j in range(E.ambient_rank):
        m = [int(i == j) for i in range(E.ambient_rank)]
        row = []
        for g in gens:
            if g.kind == "ray":
                row.append(dot(g.origin, m))
            elif g.kind == "vertex":
                row.append(int(g.origin.multiplicity * dot(g.origin.vertex, m)))
            elif g.kind == "color":
                row.append(dot(E.color(g.origin).rho, m))
            else:
                row.append(0)
        rows.append(row)
    for y in support(E.fan):
        row = []
        for g in gens:
            if g.kind == "vertex" and g.origin.point == y:
                row.append(g.origin.multiplicity)
            elif g.kind == "fiber":
                row.append(-1)
            else:
                row.append(0)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank x Z/d_1 x ... x Z/d_k`` with a projection from ``Z^n``.

    ``projection[k][i]`` is coordinate ``k`` of the image of the ``i``-th
    generator; free coordinates come first, then one coordinate per torsion
    factor (reduced modulo that factor).
    """

    free_rank: int
    torsion: Tuple[int, ...]
    projection: Tuple[Tuple[int, ...], ...]
    ngens: int

    @classmethod
    def from_relations(cls, relations: Sequence[Sequence[int]], ngens: int) -> "AbelianGroup":
        snf = smith_normal_form(relations, ngens)
        diag = snf.diagonal
        r = snf.rank
        tors_cols = [j for j in range(r) if diag[j] > 1]
        free_cols = list(range(r, ngens))
        V = snf.V
        free_block = [[V[i][j] for j in free_cols] for i in range(ngens)]
        if free_cols:
            # canonical free coordinates: Hermite form of the free block
            H, _, _ = hermite_normal_form(transpose(free_block, len(free_cols)), ngens)
            free_rows = [tuple(H[k]) for k in range(len(free_cols))]
        else:
            free_rows = []
        torsion = tuple(diag[j] for j in tors_cols)
        tors_rows = [tuple(V[i][j] % diag[j] for i in range(ngens)) for j in tors_cols]
        return cls(len(free_cols), torsion, tuple(free_rows + tors_rows), ngens)

    def reduce(self, x: Sequence[int]) -> Element:
        f = self.free_rank
        return tuple(x[:f]) + tuple(v % d for v, d in zip(x[f:], self.torsion))

    def project(self, x: Sequence[int]) -> Element:
        return self.reduce([dot(row, x) for row in self.projection])

    def generator(self, i: int) -> Element:
        return self.reduce([row[i] for row in self.projection])

    def add(self, *elements: Element) -> Element:
        total = [0] * (self.free_rank + len(self.torsion))
        for e in elements:
            total = [a + b for a, b in zip(total, e)]
        return self.reduce(total)

    def scale(self, k: int, e: Element) -> Element:
        return self.reduce([k * x for x in e])

    @property
    def zero(self) -> Element:
        return (0,) * (self.free_rank + len(self.torsion))

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/({d})" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def format_element(self, e: Element) -> str:
        free = ", ".join(str(x) for x in e[: self.free_rank])
        tors = ", ".join(str(x) for x in e[self.free_rank:])
        return f"({free}{'; ' + tors if tors else ''})"


def class_group(E: ColoredDivisorialFan) -> AbelianGroup:
    R = relation_matrix(E)
    return AbelianGroup.from_relations(R, len(divisor_generators(E)))


def variable_degrees(E: ColoredDivisorialFan, presentation: CoxPresentation, group: AbelianGroup | None = None):
    """Class-group degree of every variable of ``presentation``.

    For a symbolic flag factor the entries ``flag:<color>`` carry the
    degree of each color slot.
    """
    group = group or class_group(E)
    gens = divisor_generators(E)
    index = {}
    for i, g in enumerate(gens):
        if g.kind == "ray":
            index[("ray", g.origin)] = i
        elif g.kind == "vertex":
            index[("vertex", g.origin)] = i
        elif g.kind == "color":
            index[("color", g.origin)] = i
        else:
            index[("fiber", None)] = i
    out: Dict[str, tuple] = {}
    for v in presentation.variables:
        if v.kind in ("t0", "t1"):
            key = ("fiber", None)
        elif v.kind == "flag":
            key = ("color", v.origin)
        else:
            key = (v.kind, v.origin)
        out[v.name] = group.generator(index[key])
    if presentation.flag.symbolic_flag:
        for slot in presentation.flag.color_slots:
            out[f"flag:{slot}"] = group.generator(index[("color", slot)])
    return out


def assign_degrees(E: ColoredDivisorialFan, presentation: CoxPresentation) -> CoxPresentation:
    group = class_group(E)
    return replace(presentation, degrees=variable_degrees(E, presentation, group), group=group)


def monomial_degree(group: AbelianGroup, degrees: Dict[str, tuple], monomial) -> tuple:
    return group.add(group.zero, *(group.scale(e, degrees[v]) for v, e in monomial))


def check_homogeneity(presentation: CoxPresentation) -> bool:
    """Every monomial of every relation has the same class-group degree."""
    if presentation.degrees is None or presentation.group is None:
        raise ValueError("presentation has no degrees; call assign_degrees first")
    group, degrees = presentation.group, presentation.degrees
    for rel in presentation.relations:
        degs = {monomial_degree(group, degrees, m) for m in rel.monomials}
        if len(degs) > 1:
            return False
    return True
