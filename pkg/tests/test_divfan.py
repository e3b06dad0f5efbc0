from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horocox.abelian import mu
from horocox.divfan import (
    DivisorialFan,
    ProjPoint,
    errors,
    evaluate,
    from_slices,
    polyhedral_divisor,
    slice,
    slice_vertices,
    support,
    tail_fan,
    validate,
    vert,
)
from horocox.polyhedra import canonicalize, cone, empty_polyhedron, from_cone, min_pairing, translate

QUADS = [[(1, 0), (0, 1)], [(-1, 0), (0, 1)], [(-1, 0), (0, -1)], [(1, 0), (0, -1)]]


def quadrant_fan(shift_at=None, shift=(0, 0)):
    tails = [cone(q, 2) for q in QUADS]
    slices = {}
    if shift_at is not None:
        slices[shift_at] = [translate(from_cone(t), shift) for t in tails]
    return from_slices(tails, slices)


def test_projpoint_normalization():
    assert ProjPoint(2, 4) == ProjPoint(1, 2)
    assert ProjPoint(-1, -2) == ProjPoint(1, 2)
    assert ProjPoint(-3, 0) == ProjPoint(1, 0)
    assert str(ProjPoint(4, 6)) == "[2:3]"
    with pytest.raises(ValueError):
        ProjPoint(0, 0)


def test_projpoint_order():
    pts = [ProjPoint(2, 3), ProjPoint(0, 1), ProjPoint(1, 1)]
    assert sorted(pts) == [ProjPoint(0, 1), ProjPoint(1, 1), ProjPoint(2, 3)]


def test_slice_over_1_1(sl3):
    E, _ = sl3
    cells = slice(E.fan, ProjPoint(1, 1))
    assert len(cells) == 4
    assert all(c.vertices == ((0, F(1, 9)),) for c in cells)


def test_slice_outside_support_is_tail_fan(sl3):
    E, _ = sl3
    cells = slice(E.fan, ProjPoint(5, 7))
    assert cells == tail_fan(E.fan)
    assert {c.tail for c in cells} == {cone(q, 2) for q in QUADS}
    assert all(c.vertices == ((0, 0),) for c in cells)


def test_slice_over_0_1(sl3):
    E, _ = sl3
    assert slice_vertices(E.fan, ProjPoint(0, 1)) == [(F(-1, 2), F(1, 2)), (F(1, 4), F(-1, 4))]


def test_support_examples(sl3):
    E, _ = sl3
    assert support(E.fan) == [ProjPoint(0, 1), ProjPoint(1, 1), ProjPoint(2, 3)]
    assert support(quadrant_fan()) == []
    shifted = quadrant_fan(ProjPoint(1, 0), (F(1, 2), 0))
    assert support(shifted) == [ProjPoint(1, 0)]


def test_vert_example(sl3):
    E, _ = sl3
    got = [(str(d.point), d.vertex, d.multiplicity) for d in vert(E.fan)]
    assert got == [
        ("[0:1]", (F(-1, 2), F(1, 2)), 2),
        ("[0:1]", (F(1, 4), F(-1, 4)), 4),
        ("[1:1]", (0, F(1, 9)), 9),
        ("[2:3]", (0, F(1, 9)), 9),
    ]


def test_vert_trivial_and_lattice_vertex():
    assert vert(quadrant_fan()) == []
    data = vert(quadrant_fan(ProjPoint(0, 1), (1, 1)))
    assert [(d.vertex, d.multiplicity) for d in data] == [((1, 1), 1)]


def test_evaluate_examples():
    tail = cone([(-1, 0), (0, 1)], 2)
    assert evaluate(polyhedral_divisor(tail), (-1, 1)) == {}
    p = canonicalize([(F(-1, 2), F(1, 2))], [(-1, 0), (0, 1)], 2)
    d = polyhedral_divisor(tail, {ProjPoint(0, 1): p})
    assert evaluate(d, (-2, 2)) == {ProjPoint(0, 1): 2}
    with pytest.raises(ValueError, match="unbounded evaluation"):
        evaluate(d, (1, 0))
    d2 = polyhedral_divisor(tail, {ProjPoint(1, 0): empty_polyhedron(2)})
    with pytest.raises(ValueError, match="evaluation undefined on open loci"):
        evaluate(d2, (-1, 1))


def test_validate_example(sl3):
    E, _ = sl3
    assert validate(E.fan) == []


def test_validate_overlap():
    y = ProjPoint(0, 1)
    a = polyhedral_divisor(cone(QUADS[0], 2), {y: canonicalize([(0, 0)], QUADS[0], 2)})
    b = polyhedral_divisor(cone(QUADS[0], 2), {y: canonicalize([(F(1, 2), F(1, 2))], QUADS[0], 2)})
    msgs = [d.message for d in validate(DivisorialFan(2, (a, b)))]
    assert any(m.startswith("non-face intersection at [0:1]") for m in msgs)


def test_validate_missing_halfplane():
    y = ProjPoint(0, 1)
    divs = [polyhedral_divisor(cone(q, 2), {y: from_cone(cone(q, 2))}) for q in QUADS]
    # move the lower two cells away so the slice over y leaves a gap
    divs[2] = polyhedral_divisor(cone(QUADS[2], 2), {y: canonicalize([(0, -1)], QUADS[2], 2)})
    divs[3] = polyhedral_divisor(cone(QUADS[3], 2), {y: canonicalize([(0, -1)], QUADS[3], 2)})
    diags = validate(DivisorialFan(2, tuple(divs)))
    assert any(d.message == "slice does not cover N_Q at [0:1]" for d in errors(diags))


def test_validate_tail_mismatch():
    y = ProjPoint(0, 1)
    d = polyhedral_divisor(cone(QUADS[0], 2), {y: from_cone(cone(QUADS[1], 2))})
    assert any("tail mismatch" in x.message for x in validate(DivisorialFan(2, (d,))))


def test_validate_incomplete_tail_fan():
    divs = tuple(polyhedral_divisor(cone(q, 2)) for q in QUADS[:3])
    assert any(d.message == "tail fan does not cover N_Q" for d in validate(DivisorialFan(2, divs)))


def test_properness_warning():
    divs = tuple(polyhedral_divisor(cone(q, 2)) for q in QUADS)
    diags = validate(DivisorialFan(2, divs))
    assert diags and not errors(diags)
    assert all(d.level == "warning" for d in diags)


def test_from_slices_is_clean():
    fan = quadrant_fan(ProjPoint(0, 1), (F(1, 3), F(-2, 5)))
    assert validate(fan) == []


def test_from_slices_rejects_wrong_slice():
    tails = [cone(q, 2) for q in QUADS]
    with pytest.raises(ValueError):
        from_slices(tails, {ProjPoint(0, 1): [from_cone(tails[0])]})


# ---------------------------------------------------------------- properties

frac = st.fractions(min_value=-3, max_value=3, max_denominator=9)
points = st.tuples(st.integers(-4, 4), st.integers(0, 4)).filter(lambda p: p != (0, 0)).map(lambda p: ProjPoint(*p))


@st.composite
def translated_fans(draw):
    ys = draw(st.lists(points, min_size=0, max_size=3, unique=True))
    tails = [cone(q, 2) for q in QUADS]
    slices = {}
    for y in ys:
        v = (draw(frac), draw(frac))
        slices[y] = [translate(from_cone(t), v) for t in tails]
    return from_slices(tails, slices), {y: s[0].vertices[0] for y, s in slices.items()}


@settings(max_examples=40, deadline=None)
@given(translated_fans(), points)
def test_support_is_where_slice_differs(data, probe):
    fan, shifts = data
    generic = tail_fan(fan)
    expected = sorted(y for y, v in shifts.items() if any(v))
    assert support(fan) == expected
    for y in list(shifts) + [probe]:
        assert (slice(fan, y) != generic) == (y in expected)


@settings(max_examples=40, deadline=None)
@given(translated_fans())
def test_vert_multiplicities(data):
    fan, _ = data
    for d in vert(fan):
        assert d.multiplicity == mu(d.vertex)
        assert all((d.multiplicity * x).denominator == 1 for x in d.vertex)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.tuples(frac, frac), min_size=1, max_size=4),
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
)
def test_evaluate_superadditive(vs, m1, m2):
    tail = cone(QUADS[0], 2)
    y = ProjPoint(0, 1)
    d = polyhedral_divisor(tail, {y: canonicalize(vs, QUADS[0], 2)})
    msum = (m1[0] + m2[0], m1[1] + m2[1])

    def val(m):
        return evaluate(d, m).get(y, 0)

    assert val(msum) >= val(m1) + val(m2)
    # brute force over the raw points
    assert val(m1) == min(v[0] * m1[0] + v[1] * m1[1] for v in vs)
    assert val(m1) == min_pairing(d.coefficient(y), m1)
