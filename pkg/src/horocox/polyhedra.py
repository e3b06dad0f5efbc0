"""Exact rational convex geometry in low rank.

Cones and polyhedra are stored in a canonical V-representation so that two
objects describing the same set compare equal.  The canonical form of a cone
is

* a basis of its lineality space (row reduced, scaled to primitive integer
  vectors) listed with both signs, and
* the primitive extremal rays of its pointed part, taken inside the orthogonal
  complement of the lineality space,

all sorted lexicographically.  A polyhedron is ``conv(vertices) + cone(rays)``
where ``rays`` is the canonical tail cone and ``vertices`` are the minimal
faces, each represented by its unique point orthogonal to the lineality space
(for a pointed tail these are the honest vertices).

All conversions go through the homogenization ``cone({(1, v)} u {(0, r)})``
and a brute-force extreme ray search, which is exact and fast enough for
ambient rank <= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Tuple

from .abelian import dot, nullspace, primitive_generator, rank, rref

MAX_RANK = 3
NEG_INF = float("-inf")

LatticeVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]


def _check_rank(d: int) -> None:
    if d < 1:
        raise ValueError("ambient rank must be positive")
    if d > MAX_RANK:
        raise ValueError(f"unsupported rank {d}: exact geometry is limited to rank <= {MAX_RANK}")


def as_rational(v: Iterable) -> RationalVector:
    return tuple(Fraction(x) for x in v)


@lru_cache(maxsize=None)
def _dual_generators(gens: Tuple[tuple, ...], d: int) -> Tuple[LatticeVector, ...]:
    """Canonical generators of ``{a : <g, a> >= 0 for all g in gens}``."""
    G = sorted({primitive_generator(g) for g in gens if any(x != 0 for x in g)})
    lin = nullspace(G, d) if G else [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    lin_basis = [primitive_generator(r) for r in rref(lin, d)[0]]
    out = set()
    for v in lin_basis:
        out.add(v)
        out.add(tuple(-x for x in v))
    k = d - len(lin_basis)
    if k > 0:
        for chosen in combinations(G, k - 1):
            ns = nullspace(list(chosen) + lin_basis, d)
            if len(ns) != 1:
                continue
            a = ns[0]
            vals = [dot(g, a) for g in G]
            if all(x >= 0 for x in vals):
                out.add(primitive_generator(a))
            elif all(x <= 0 for x in vals):
                out.add(primitive_generator([-x for x in a]))
    return tuple(sorted(out))


def _canonical_cone_generators(gens, d: int) -> Tuple[LatticeVector, ...]:
    gens = tuple(tuple(Fraction(x) for x in g) for g in gens)
    return _dual_generators(_dual_generators(gens, d), d)


@dataclass(frozen=True)
class Cone:
    """Polyhedral cone in ``N_Q`` given by canonical generators."""

    ambient_rank: int
    generators: Tuple[LatticeVector, ...]

    @property
    def lineality(self) -> Tuple[LatticeVector, ...]:
        gens = set(self.generators)
        return tuple(g for g in self.generators if tuple(-x for x in g) in gens)

    @property
    def rays(self) -> Tuple[LatticeVector, ...]:
        """Extremal rays of the pointed part (all generators if pointed)."""
        lin = set(self.lineality)
        return tuple(g for g in self.generators if g not in lin)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def dimension(self) -> int:
        return rank(self.generators, self.ambient_rank) if self.generators else 0

    def contains(self, x) -> bool:
        return all(dot(a, x) >= 0 for a in dual_cone(self).generators)

    def __repr__(self):
        return f"Cone({list(self.generators)})"


def cone(generators: Iterable[Sequence], ambient_rank: int) -> Cone:
    """Canonical cone generated by the given (rational) vectors."""
    _check_rank(ambient_rank)
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != ambient_rank:
            raise ValueError(f"generator {g} does not have rank {ambient_rank}")
    return Cone(ambient_rank, _canonical_cone_generators(gens, ambient_rank))


def dual_cone(c: Cone) -> Cone:
    """``{m : <m, v> >= 0 for all v in c}``."""
    _check_rank(c.ambient_rank)
    return Cone(c.ambient_rank, _dual_generators(c.generators, c.ambient_rank))


def full_space(d: int) -> Cone:
    return dual_cone(Cone(d, ()))


def _homogenize(vertices, rays):
    return tuple((Fraction(1),) + tuple(v) for v in vertices) + tuple(
        (Fraction(0),) + tuple(Fraction(x) for x in r) for r in rays
    )


def _split_homogeneous(gens):
    vertices, rays = [], []
    for g in gens:
        if g[0] > 0:
            vertices.append(tuple(Fraction(x, g[0]) for x in g[1:]))
        else:
            rays.append(tuple(g[1:]))
    return vertices, rays


@dataclass(frozen=True)
class Polyhedron:
    """``conv(vertices) + cone(rays)`` in canonical form, or the empty set."""

    ambient_rank: int
    vertices: Tuple[RationalVector, ...] = ()
    rays: Tuple[LatticeVector, ...] = ()
    empty: bool = False

    @property
    def tail(self) -> Cone:
        return tail_cone(self)

    @property
    def is_bounded(self) -> bool:
        return not self.empty and not self.rays

    @property
    def dimension(self) -> int:
        if self.empty:
            return -1
        v0 = self.vertices[0]
        dirs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        dirs += [tuple(Fraction(x) for x in r) for r in self.rays]
        return rank(dirs, self.ambient_rank) if dirs else 0

    def contains(self, x) -> bool:
        if self.empty:
            return False
        return all(a[0] + dot(a[1:], x) >= 0 for a in inequalities(self))

    def __repr__(self):
        if self.empty:
            return f"Polyhedron.empty({self.ambient_rank})"
        verts = ["(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices]
        return f"Polyhedron(vertices=[{', '.join(verts)}], rays={list(self.rays)})"


def empty_polyhedron(ambient_rank: int) -> Polyhedron:
    _check_rank(ambient_rank)
    return Polyhedron(ambient_rank, (), (), True)


def canonicalize(raw_vertices, raw_rays, ambient_rank: int, empty: bool = False) -> Polyhedron:
    """Canonical polyhedron ``conv(raw_vertices) + cone(raw_rays)``.

    Redundant points and rays are dropped, duplicates merged and everything
    sorted lexicographically.  With ``empty=True`` (or no points at all and
    no rays) the empty polyhedron is returned.
    """
    _check_rank(ambient_rank)
    raw_vertices = [as_rational(v) for v in raw_vertices]
    raw_rays = [as_rational(r) for r in raw_rays]
    for v in raw_vertices + raw_rays:
        if len(v) != ambient_rank:
            raise ValueError(f"vector {v} does not have rank {ambient_rank}")
    if empty or not raw_vertices:
        if raw_vertices or (raw_rays and not empty):
            raise ValueError("a non-empty polyhedron needs at least one vertex")
        return empty_polyhedron(ambient_rank)
    gens = _canonical_cone_generators(_homogenize(raw_vertices, raw_rays), ambient_rank + 1)
    vertices, rays = _split_homogeneous(gens)
    return Polyhedron(ambient_rank, tuple(sorted(vertices)), tuple(sorted(rays)))


def from_cone(c: Cone) -> Polyhedron:
    """The cone ``c`` seen as a polyhedron (single minimal face at 0)."""
    return Polyhedron(c.ambient_rank, (tuple(Fraction(0) for _ in range(c.ambient_rank)),), c.generators)


def tail_cone(p: Polyhedron) -> Cone:
    if p.empty:
        raise ValueError("tail of empty polyhedron")
    return Cone(p.ambient_rank, p.rays)


def min_pairing(p: Polyhedron, m: Sequence) -> Fraction | float:
    """``min <p, m>``; ``NEG_INF`` when ``m`` is not in the dual of the tail."""
    if p.empty:
        raise ValueError("min_pairing on empty polyhedron")
    if any(dot(r, m) < 0 for r in p.rays):
        return NEG_INF
    return min(dot(v, m) for v in p.vertices)


@lru_cache(maxsize=None)
def inequalities(p: Polyhedron) -> Tuple[LatticeVector, ...]:
    """Irredundant H-representation: rows ``a`` meaning ``a0 + <a[1:], x> >= 0``.

    Equalities appear as a pair of opposite rows.  The row ``(1, 0, ..., 0)``
    may appear and is always satisfied.
    """
    if p.empty:
        return ((-1,) + (0,) * p.ambient_rank,)
    return _dual_generators(_homogenize(p.vertices, p.rays), p.ambient_rank + 1)


def from_inequalities(rows, ambient_rank: int) -> Polyhedron:
    """Polyhedron ``{x : a0 + <a[1:], x> >= 0 for every row a}``."""
    _check_rank(ambient_rank)
    rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
    rows += ((Fraction(1),) + (Fraction(0),) * ambient_rank,)
    gens = _dual_generators(rows, ambient_rank + 1)
    vertices, rays = _split_homogeneous(gens)
    if not vertices:
        return empty_polyhedron(ambient_rank)
    return Polyhedron(ambient_rank, tuple(sorted(vertices)), tuple(sorted(rays)))


def intersection(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    if p.empty or q.empty:
        return empty_polyhedron(p.ambient_rank)
    return from_inequalities(inequalities(p) + inequalities(q), p.ambient_rank)


def minkowski_sum(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    if p.empty or q.empty:
        return empty_polyhedron(p.ambient_rank)
    verts = [tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices]
    return canonicalize(verts, p.rays + q.rays, p.ambient_rank)


def translate(p: Polyhedron, v: Sequence) -> Polyhedron:
    if p.empty:
        return p
    verts = [tuple(a + Fraction(b) for a, b in zip(u, v)) for u in p.vertices]
    return canonicalize(verts, p.rays, p.ambient_rank)


def contains_polyhedron(outer: Polyhedron, inner: Polyhedron) -> bool:
    if inner.empty:
        return True
    if outer.empty:
        return False
    for a in inequalities(outer):
        if any(a[0] + dot(a[1:], v) < 0 for v in inner.vertices):
            return False
        if any(dot(a[1:], r) < 0 for r in inner.rays):
            return False
    return True


def is_face(f: Polyhedron, p: Polyhedron) -> bool:
    """Whether ``f`` is a (possibly empty) face of ``p``."""
    if f.empty:
        return True
    if not contains_polyhedron(p, f):
        return False
    tight = [
        a
        for a in inequalities(p)
        if all(a[0] + dot(a[1:], v) == 0 for v in f.vertices) and all(dot(a[1:], r) == 0 for r in f.rays)
    ]
    smallest = from_inequalities(inequalities(p) + tuple(tuple(-x for x in a) for a in tight), p.ambient_rank)
    return smallest == f


def intersect_is_face(p: Polyhedron, q: Polyhedron) -> bool:
    """True iff ``p & q`` is a face of both ``p`` and ``q``."""
    if p.ambient_rank != q.ambient_rank:
        raise ValueError("polyhedra live in different ambient spaces")
    if p.empty or q.empty:
        return True
    r = intersection(p, q)
    return is_face(r, p) and is_face(r, q)


def facets(p: Polyhedron):
    """Pairs ``(inequality, facet)`` for the facets of a full-dimensional ``p``."""
    out = []
    for a in inequalities(p):
        if not any(a[1:]):
            continue
        face = from_inequalities(inequalities(p) + (tuple(-x for x in a),), p.ambient_rank)
        if face.dimension == p.ambient_rank - 1:
            out.append((a, face))
    return out


def covers_space(cells: Sequence[Polyhedron], ambient_rank: int) -> bool:
    """Whether a face-compatible family of polyhedra covers all of ``Q^d``.

    Every facet of a full-dimensional cell has to be matched by another
    full-dimensional cell on its far side.  The union is then closed with
    boundary of codimension >= 2, hence everything.  The test assumes
    pairwise face compatibility; otherwise it may report ``False`` for a
    covering family.
    """
    full = [c for c in cells if not c.empty and c.dimension == ambient_rank]
    if not full:
        return False
    for p in full:
        for a, face in facets(p):
            matched = False
            for q in full:
                if q is p or q == p or not contains_polyhedron(q, face):
                    continue
                if any(a[0] + dot(a[1:], v) < 0 for v in q.vertices) or any(dot(a[1:], r) < 0 for r in q.rays):
                    matched = True
                    break
            if not matched:
                return False
    return True


def format_vector(v: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"
