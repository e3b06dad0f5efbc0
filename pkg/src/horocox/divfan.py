"""Polyhedral divisors and divisorial fans over the projective line."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .abelian import dot, mu
from .polyhedra import (
    Cone,
    Polyhedron,
    contains_polyhedron,
    covers_space,
    empty_polyhedron,
    format_vector,
    from_cone,
    intersect_is_face,
    min_pairing,
    minkowski_sum,
    tail_cone,
)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Rational point ``[alpha : beta]`` of P^1.

    Normalized to coprime coordinates with ``beta > 0``, or ``[1 : 0]``.
    Ordering is lexicographic on ``(alpha, beta)``.
    """

    alpha: int
    beta: int

    def __post_init__(self):
        a, b = int(self.alpha), int(self.beta)
        if a == 0 and b == 0:
            raise ValueError("[0:0] is not a point of P^1")
        g = gcd(a, b)
        a, b = a // g, b // g
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def __str__(self):
        return f"[{self.alpha}:{self.beta}]"

    def __repr__(self):
        return f"ProjPoint{self}"


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" or "warning"
    message: str

    def __str__(self):
        return f"{self.level}: {self.message}"


def errors(diagnostics: Iterable[Diagnostic]) -> List[Diagnostic]:
    return [d for d in diagnostics if d.level == "error"]


@dataclass(frozen=True)
class PolyhedralDivisor:
    """``sum_y D_y . [y]`` with common tail; unlisted points carry the tail."""

    tail: Cone
    coefficients: Tuple[Tuple[ProjPoint, Polyhedron], ...] = ()

    def __post_init__(self):
        coeffs = dict(self.coefficients)
        if len(coeffs) != len(self.coefficients):
            raise ValueError("a point is listed twice")
        object.__setattr__(self, "coefficients", tuple(sorted(coeffs.items(), key=lambda kv: kv[0])))

    @property
    def ambient_rank(self) -> int:
        return self.tail.ambient_rank

    @property
    def points(self) -> Tuple[ProjPoint, ...]:
        return tuple(y for y, _ in self.coefficients)

    def coefficient(self, y: ProjPoint) -> Polyhedron:
        for z, p in self.coefficients:
            if z == y:
                return p
        return from_cone(self.tail)

    @property
    def has_empty(self) -> bool:
        return any(p.empty for _, p in self.coefficients)

    def degree(self) -> Polyhedron:
        """Minkowski sum of all coefficients (empty if any coefficient is)."""
        total = from_cone(self.tail)
        for _, p in self.coefficients:
            total = minkowski_sum(total, p)
        return total


def polyhedral_divisor(tail: Cone, coefficients: Mapping[ProjPoint, Polyhedron] | None = None) -> PolyhedralDivisor:
    return PolyhedralDivisor(tail, tuple((coefficients or {}).items()))


@dataclass(frozen=True)
class DivisorialFan:
    ambient_rank: int
    divisors: Tuple[PolyhedralDivisor, ...]

    @property
    def listed_points(self) -> List[ProjPoint]:
        return sorted({y for d in self.divisors for y in d.points})


@dataclass(frozen=True)
class VertexDatum:
    point: ProjPoint
    vertex: Tuple[Fraction, ...]
    multiplicity: int

    def __str__(self):
        return f"({self.point}, {format_vector(self.vertex)}, mu={self.multiplicity})"


def _poly_key(p: Polyhedron):
    return (p.vertices, p.rays)


def tail_fan(fan: DivisorialFan) -> List[Polyhedron]:
    """The slice over a point no divisor lists: all tails."""
    return sorted({from_cone(d.tail) for d in fan.divisors}, key=_poly_key)


def slice(fan: DivisorialFan, y: ProjPoint) -> List[Polyhedron]:
    """Non-empty coefficients over ``y``, deduplicated and sorted."""
    cells = {d.coefficient(y) for d in fan.divisors}
    return sorted((p for p in cells if not p.empty), key=_poly_key)


def support(fan: DivisorialFan) -> List[ProjPoint]:
    """Points whose slice differs from the generic (tail fan) slice."""
    generic = tail_fan(fan)
    return [y for y in fan.listed_points if slice(fan, y) != generic]


def slice_vertices(fan: DivisorialFan, y: ProjPoint) -> List[Tuple[Fraction, ...]]:
    return sorted({v for p in slice(fan, y) for v in p.vertices})


def vert(fan: DivisorialFan) -> List[VertexDatum]:
    return [VertexDatum(y, v, mu(v)) for y in support(fan) for v in slice_vertices(fan, y)]


def evaluate(d: PolyhedralDivisor, m: Sequence[int]) -> Dict[ProjPoint, Fraction]:
    """Coefficient-wise ``min <D_y, m>``; zero values are omitted."""
    if d.has_empty:
        raise ValueError("evaluation undefined on open loci (empty coefficient)")
    if any(dot(r, m) < 0 for r in d.tail.generators):
        raise ValueError(f"unbounded evaluation: {tuple(m)} is not in the weight cone")
    out = {}
    for y, p in d.coefficients:
        value = min_pairing(p, m)
        if value != 0:
            out[y] = Fraction(value)
    return out


def validate(fan: DivisorialFan) -> List[Diagnostic]:
    """Structural checks; returns an empty list when nothing is wrong.

    Errors: rank or tail inconsistencies, coefficient pairs (per point, and
    tails) whose intersection is not a face of both, a tail fan or support
    slice that does not cover N_Q.  Warning: a divisor with no empty
    coefficient whose degree polyhedron is not strictly inside its tail.
    """
    out: List[Diagnostic] = []
    d = fan.ambient_rank
    for i, D in enumerate(fan.divisors):
        if D.ambient_rank != d:
            out.append(Diagnostic("error", f"divisor {i} has rank {D.ambient_rank}, expected {d}"))
            return out
        for y, p in D.coefficients:
            if p.empty:
                continue
            if p.ambient_rank != d:
                out.append(Diagnostic("error", f"divisor {i} coefficient at {y} has wrong rank"))
            elif tail_cone(p) != D.tail:
                out.append(Diagnostic("error", f"tail mismatch in divisor {i} at {y}"))
    if out:
        return out

    points = fan.listed_points
    for i in range(len(fan.divisors)):
        for j in range(i + 1, len(fan.divisors)):
            A, B = fan.divisors[i], fan.divisors[j]
            if not intersect_is_face(from_cone(A.tail), from_cone(B.tail)):
                out.append(Diagnostic("error", f"non-face intersection of the tails of divisors {i} and {j}"))
            for y in points:
                if not intersect_is_face(A.coefficient(y), B.coefficient(y)):
                    out.append(Diagnostic("error", f"non-face intersection at {y} (divisors {i} and {j})"))

    if fan.divisors and not covers_space(tail_fan(fan), d):
        out.append(Diagnostic("error", "tail fan does not cover N_Q"))
    for y in support(fan):
        if not covers_space(slice(fan, y), d):
            out.append(Diagnostic("error", f"slice does not cover N_Q at {y}"))

    for i, D in enumerate(fan.divisors):
        if D.has_empty:
            continue
        sigma = from_cone(D.tail)
        deg = D.degree()
        if deg == sigma or not contains_polyhedron(sigma, deg):
            out.append(
                Diagnostic(
                    "warning",
                    f"divisor {i}: degree polyhedron is not strictly inside the tail (not proper over P^1)",
                )
            )
    return out


def from_slices(
    tails: Sequence[Cone],
    slices: Mapping[ProjPoint, Sequence[Polyhedron]],
) -> DivisorialFan:
    """Assemble a divisorial fan from a tail fan and complete slices.

    One divisor per tail cone picks, over each point, the slice cell with
    that tail.  A divisor that would not be proper over P^1 is replaced by
    two copies living over affine charts, i.e. with an empty coefficient at
    two different points outside the support.
    """
    if not tails:
        raise ValueError("empty tail fan")
    d = tails[0].ambient_rank
    points = sorted(slices)
    spare = []
    k = 1
    while len(spare) < 2:
        for cand in (ProjPoint(1, 0), ProjPoint(-k, 1)):
            if cand not in slices and cand not in spare:
                spare.append(cand)
        k += 1
    divisors = []
    for sigma in tails:
        coeffs = {}
        for y in points:
            cells = [p for p in slices[y] if tail_cone(p) == sigma]
            if len(cells) != 1:
                raise ValueError(f"slice at {y} has {len(cells)} cells with tail {sigma}")
            coeffs[y] = cells[0]
        D = polyhedral_divisor(sigma, coeffs)
        deg = D.degree()
        base = from_cone(sigma)
        if deg != base and contains_polyhedron(base, deg):
            divisors.append(D)
        else:
            for y in spare[:2]:
                divisors.append(polyhedral_divisor(sigma, {**coeffs, y: empty_polyhedron(d)}))
    return DivisorialFan(d, tuple(divisors))
