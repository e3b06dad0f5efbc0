"""Cox ring presentations by generators and relations.

The full presentation has variables ``S_rho`` (one per ray), ``T0``, ``T1``,
``T_(y, v)`` (one per slice vertex over the support) and the generators of
the flag-variety factor.  Over every support point ``y_i = [a_i : b_i]`` there
is the relation

    -a_i T0 - b_i T1 + prod_v T_(y_i, v)^mu(v).

When the support has ``r >= 2`` points, ``T0`` and ``T1`` can be eliminated:
the relations become ``sum_i g_i F_i`` for ``g`` running over an integral
basis of the linear relations among the points ``(a_i, b_i)``, where ``F_i``
is the monomial above.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .abelian import integer_kernel_basis
from .divfan import ProjPoint, VertexDatum, support, vert
from .horospherical import ColoredDivisorialFan, rays
from .polyhedra import format_vector

Monomial = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class SparsePolynomial:
    """Integer polynomial as ``(coefficient, monomial)`` pairs.

    Monomials list ``(variable, exponent)`` pairs with positive exponents.
    Terms are kept in the order given at construction (see :meth:`build`).
    """

    terms: Tuple[Tuple[int, Monomial], ...]

    @classmethod
    def build(cls, terms: Iterable[Tuple[int, Mapping[str, int]]], order: Sequence[str]) -> "SparsePolynomial":
        """Collect like terms, drop zeros, sort by lex order on ``order`` (descending)."""
        index = {v: i for i, v in enumerate(order)}
        acc: Dict[Monomial, int] = {}
        for c, mono in terms:
            key = tuple(sorted(((v, e) for v, e in mono.items() if e), key=lambda ve: index[ve[0]]))
            acc[key] = acc.get(key, 0) + c

        def expvec(mono):
            vec = [0] * len(order)
            for v, e in mono:
                vec[index[v]] = e
            return vec

        items = sorted(((c, m) for m, c in acc.items() if c), key=lambda cm: expvec(cm[1]), reverse=True)
        return cls(tuple(items))

    @property
    def variables(self) -> set:
        return {v for _, m in self.terms for v, _ in m}

    @property
    def monomials(self) -> List[Monomial]:
        return [m for _, m in self.terms]

    def as_dict(self) -> Dict[frozenset, int]:
        return {frozenset(m): c for c, m in self.terms}

    def normalized(self) -> "SparsePolynomial":
        """Divide by the content and make the leading coefficient positive."""
        if not self.terms:
            return self
        g = 0
        for c, _ in self.terms:
            g = gcd(g, c)
        if self.terms[0][0] < 0:
            g = -g
        return SparsePolynomial(tuple((c // g, m) for c, m in self.terms))

    def rename(self, names: Mapping[str, str]) -> "SparsePolynomial":
        return SparsePolynomial(tuple((c, tuple((names.get(v, v), e) for v, e in m)) for c, m in self.terms))

    def render(self, names: Optional[Mapping[str, str]] = None) -> str:
        names = names or {}
        if not self.terms:
            return "0"
        parts = []
        for i, (c, mono) in enumerate(self.terms):
            factors = [names.get(v, v) + (f"^{e}" if e != 1 else "") for v, e in mono]
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)

    def __str__(self):
        return self.render()


def equal_up_to_scalar(p: SparsePolynomial, q: SparsePolynomial) -> bool:
    """Whether ``p = c q`` for a nonzero rational ``c``."""
    a, b = p.as_dict(), q.as_dict()
    if a.keys() != b.keys():
        return False
    if not a:
        return True
    k = next(iter(a))
    ratio = Fraction(a[k], b[k])
    return all(Fraction(a[m], b[m]) == ratio for m in a)


def parse_polynomial(text: str, order: Sequence[str]) -> SparsePolynomial:
    """Parse simple integer polynomials such as ``"t4^9 - 2*t3^9 - t1^2*t2^4"``.

    Variable names must be plain identifiers.
    """
    terms = []
    for token in re.findall(r"[+-]?[^+-]+", text.replace(" ", "")):
        sign = -1 if token.startswith("-") else 1
        token = token.lstrip("+-")
        coeff = 1
        mono: Dict[str, int] = {}
        for factor in token.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            mono[name] = mono.get(name, 0) + (int(exp) if exp else 1)
        terms.append((sign * coeff, mono))
    return SparsePolynomial.build(terms, order)


# ---------------------------------------------------------------------------
# flag-variety factor


@dataclass(frozen=True)
class FlagModel:
    """Presentation of ``R(G/P)`` with one generator block per color slot."""

    id: str
    color_slots: Tuple[str, ...]
    generator_blocks: Tuple[Tuple[str, ...], ...]
    relations: Tuple[SparsePolynomial, ...] = ()
    symbolic_flag: bool = False

    @property
    def generators(self) -> List[str]:
        return [g for block in self.generator_blocks for g in block]

    def bind(self, color_order: Sequence[str]) -> "FlagModel":
        """Attach the fan's color names to the slots, in the given order."""
        if len(color_order) != len(self.color_slots):
            raise ValueError(
                f"color-slot mismatch: flag model {self.id} has {len(self.color_slots)} slots, got {len(color_order)} colors"
            )
        if len(set(color_order)) != len(color_order):
            raise ValueError("color-slot mismatch: repeated color in color order")
        return replace(self, color_slots=tuple(color_order))


def _point():
    return FlagModel("point", (), ())


def _projective_space(n: int):
    if n < 1:
        raise ValueError("projective_space(n) needs n >= 1")
    return FlagModel(f"projective_space({n})", ("slot1",), (tuple(f"u{i}" for i in range(n + 1)),))


def _sl3_b():
    xs = ("x1", "x2", "x3")
    zs = ("z1", "z2", "z3")
    order = xs + zs
    rel = SparsePolynomial.build([(1, {x: 1, z: 1}) for x, z in zip(xs, zs)], order)
    return FlagModel("SL3/B", ("slot1", "slot2"), (xs, zs), (rel,))


def _symbolic(k: int):
    if k < 0:
        raise ValueError("symbolic(k) needs k >= 0")
    return FlagModel(f"symbolic({k})", tuple(f"slot{i + 1}" for i in range(k)), tuple(() for _ in range(k)), (), True)


def _product(models: Sequence[FlagModel]) -> FlagModel:
    counts: Dict[str, int] = {}
    for m in models:
        for g in m.generators:
            counts[g] = counts.get(g, 0) + 1
    blocks, relations = [], []
    for idx, m in enumerate(models, start=1):
        names = {g: (f"{g}_{idx}" if counts[g] > 1 else g) for g in m.generators}
        blocks.extend(tuple(names[g] for g in block) for block in m.generator_blocks)
        relations.extend(r.rename(names) for r in m.relations)
    slots = tuple(f"slot{i + 1}" for i in range(len(blocks)))
    return FlagModel(
        " x ".join(m.id for m in models),
        slots,
        tuple(blocks),
        tuple(relations),
        any(m.symbolic_flag for m in models),
    )


def flag_catalog(name: str) -> FlagModel:
    """Look up a flag-variety factor.

    Known names: ``point``, ``projective_space(n)``, ``SL3/B``,
    ``symbolic(k)`` and products of these joined by ``" x "``.
    """
    parts = [p.strip() for p in name.split(" x ")]
    if len(parts) > 1:
        return _product([flag_catalog(p) for p in parts])
    name = parts[0]
    if name == "point":
        return _point()
    if name == "SL3/B":
        return _sl3_b()
    m = re.fullmatch(r"(projective_space|symbolic)\((\d+)\)", name)
    if m:
        n = int(m.group(2))
        return _projective_space(n) if m.group(1) == "projective_space" else _symbolic(n)
    raise ValueError(f"unknown flag model {name!r}")


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Variable:
    name: str
    alias: str
    kind: str  # ray | t0 | t1 | vertex | flag
    origin: object = None


@dataclass(frozen=True)
class CoxPresentation:
    variables: Tuple[Variable, ...]
    relations: Tuple[SparsePolynomial, ...]
    flag: FlagModel
    eliminated: bool = False
    degrees: Optional[Dict[str, tuple]] = field(default=None, compare=False)
    group: object = field(default=None, compare=False)

    @property
    def aliases(self) -> Dict[str, str]:
        return {v.name: v.alias for v in self.variables}

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name or v.alias == name:
                return v
        raise KeyError(name)

    def count(self, kind: str) -> int:
        return sum(1 for v in self.variables if v.kind == kind)

    def render_relations(self) -> List[str]:
        return [r.render(self.aliases) for r in self.relations]


def ray_variable_name(r) -> str:
    return "S" + format_vector(r).replace(" ", "")


def vertex_variable_name(datum: VertexDatum) -> str:
    return f"T({datum.point},{format_vector(datum.vertex).replace(' ', '')})"


def _check_flag(E: ColoredDivisorialFan, flag: FlagModel) -> None:
    if sorted(flag.color_slots) != sorted(E.color_names) or len(flag.color_slots) != len(E.colors):
        raise ValueError(
            f"color-slot mismatch: flag slots {list(flag.color_slots)} vs colors {list(E.color_names)}"
        )


def _base_variables(E: ColoredDivisorialFan, flag: FlagModel, with_t: bool):
    out = [Variable(ray_variable_name(r), f"s{i}", "ray", r) for i, r in enumerate(rays(E), start=1)]
    if with_t:
        out += [Variable("T0", "T0", "t0"), Variable("T1", "T1", "t1")]
    data = vert(E.fan)
    out += [Variable(vertex_variable_name(d), f"t{i}", "vertex", d) for i, d in enumerate(data, start=1)]
    for slot, block in zip(flag.color_slots, flag.generator_blocks):
        out += [Variable(g, g, "flag", slot) for g in block]
    return out, data


def _fiber_monomials(data: Sequence[VertexDatum]) -> Dict[ProjPoint, Dict[str, int]]:
    mono: Dict[ProjPoint, Dict[str, int]] = {}
    for d in data:
        mono.setdefault(d.point, {})[vertex_variable_name(d)] = d.multiplicity
    return mono


def cox_presentation(E: ColoredDivisorialFan, flag: FlagModel) -> CoxPresentation:
    """Full presentation with ``T0``, ``T1`` and one trinomial per support point."""
    _check_flag(E, flag)
    variables, data = _base_variables(E, flag, with_t=True)
    order = [v.name for v in variables]
    mono = _fiber_monomials(data)
    relations = []
    for y in support(E.fan):
        terms = [(-y.alpha, {"T0": 1}), (-y.beta, {"T1": 1}), (1, mono[y])]
        relations.append(SparsePolynomial.build(terms, order))
    relations += [SparsePolynomial.build(((c, dict(m)) for c, m in r.terms), order) for r in flag.relations]
    return CoxPresentation(tuple(variables), tuple(relations), flag)


def elimination_basis(points: Sequence[ProjPoint]) -> List[tuple]:
    """Integral basis of ``{g : sum_i g_i (a_i, b_i) = 0}``."""
    return integer_kernel_basis([[y.alpha for y in points], [y.beta for y in points]], len(points))


def eliminated_presentation(E: ColoredDivisorialFan, flag: FlagModel) -> CoxPresentation:
    """Presentation without ``T0``, ``T1``; needs at least two support points."""
    _check_flag(E, flag)
    points = support(E.fan)
    if len(points) < 2:
        raise ValueError("elimination requires at least two support points")
    variables, data = _base_variables(E, flag, with_t=False)
    order = [v.name for v in variables]
    mono = _fiber_monomials(data)
    relations = []
    for gamma in elimination_basis(points):
        terms = [(g, mono[y]) for g, y in zip(gamma, points) if g]
        relations.append(SparsePolynomial.build(terms, order))
    relations += [SparsePolynomial.build(((c, dict(m)) for c, m in r.terms), order) for r in flag.relations]
    return CoxPresentation(tuple(variables), tuple(relations), flag, eliminated=True)
