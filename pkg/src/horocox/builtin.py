"""Built-in input documents.

``sl3``
    The complexity-one horospherical SL3-variety with general orbit SL3/U:
    tail fan = the four quadrants, colors ``D1 -> e1`` and ``D2 -> e2``,
    support ``[0:1], [1:1], [2:3]``.  The quadrants Q2 and Q4 are proper
    polyhedral divisors over P^1.  Q1 and Q3 are not, so each of them appears
    twice, living over the affine charts ``P^1 - [1:0]`` and ``P^1 - [-1:1]``
    (an empty coefficient there).  ``D1`` is marked on the two elements whose
    tails contain ``e1`` (Q1 and Q4); ``D2`` is never marked.

``p1xp1``
    P^1 x P^1 as a rank-one torus variety over P^1: tails ``+1`` and ``-1``,
    trivial slices, no colors.  Each tail appears over the two affine charts
    of P^1.
"""

from __future__ import annotations

import copy

from .document import InputDocument, from_data

_Q1 = [[1, 0], [0, 1]]
_Q2 = [[-1, 0], [0, 1]]
_Q3 = [[-1, 0], [0, -1]]
_Q4 = [[1, 0], [0, -1]]
_NINTH = {"vertices": [["0", "1/9"]]}
_EDGE = {"vertices": [["-1/2", "1/2"], ["1/4", "-1/4"]]}


def _element(tail, at_zero, marked, empty_at=None):
    coeffs = [
        {"point": [0, 1], **at_zero},
        {"point": [1, 1], **_NINTH},
        {"point": [2, 3], **_NINTH},
    ]
    if empty_at is not None:
        coeffs.append({"point": empty_at, "empty": True})
    return {"tail": tail, "marked": marked, "coefficients": coeffs}


SL3 = {
    "schema_version": 1,
    "comment": "SL3 example: support [0:1], [1:1], [2:3]; Q1 and Q3 split over two affine charts",
    "lattice_rank": 2,
    "colors": [{"name": "D1", "rho": [1, 0]}, {"name": "D2", "rho": [0, 1]}],
    "flag_model": {"name": "SL3/B", "color_order": ["D1", "D2"]},
    "elements": [
        _element(_Q2, {"vertices": [["-1/2", "1/2"]]}, []),
        _element(_Q4, {"vertices": [["1/4", "-1/4"]]}, ["D1"]),
        _element(_Q1, _EDGE, ["D1"], empty_at=[1, 0]),
        _element(_Q1, _EDGE, ["D1"], empty_at=[-1, 1]),
        _element(_Q3, _EDGE, [], empty_at=[1, 0]),
        _element(_Q3, _EDGE, [], empty_at=[-1, 1]),
    ],
}


P1XP1 = {
    "schema_version": 1,
    "comment": "P^1 x P^1 with a rank-one torus acting on the second factor",
    "lattice_rank": 1,
    "colors": [],
    "flag_model": {"name": "point", "color_order": []},
    "elements": [
        {"tail": [[1]], "marked": [], "coefficients": [{"point": [1, 0], "empty": True}]},
        {"tail": [[1]], "marked": [], "coefficients": [{"point": [0, 1], "empty": True}]},
        {"tail": [[-1]], "marked": [], "coefficients": [{"point": [1, 0], "empty": True}]},
        {"tail": [[-1]], "marked": [], "coefficients": [{"point": [0, 1], "empty": True}]},
    ],
}

EXAMPLES = {"sl3": SL3, "p1xp1": P1XP1}


def example_data(name: str) -> dict:
    try:
        return copy.deepcopy(EXAMPLES[name])
    except KeyError:
        raise ValueError(f"unknown example {name!r}; known: {', '.join(sorted(EXAMPLES))}") from None


def example_document(name: str) -> InputDocument:
    return from_data(example_data(name))
