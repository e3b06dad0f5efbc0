"""
Cox ring of a horospherical SL3-variety
=======================================

Walks through the built-in ``sl3`` instance: slices, vertices with their
multiplicities, rays, both presentations of the Cox ring and the grading.
"""

from horocox.builtin import example_document
from horocox.classgroup import assign_degrees, check_homogeneity, class_group, relation_matrix
from horocox.coxring import cox_presentation, eliminated_presentation
from horocox.divfan import ProjPoint, slice, support, vert
from horocox.document import build
from horocox.horospherical import rays, validate_colored
from horocox.polyhedra import format_vector

E, flag = build(example_document("sl3"))
print("diagnostics:", validate_colored(E) or "none")

# three special points; everywhere else the slice is the tail fan
print("support:", ", ".join(str(y) for y in support(E.fan)))
for y in support(E.fan) + [ProjPoint(5, 7)]:
    cells = slice(E.fan, y)
    verts = sorted({v for c in cells for v in c.vertices})
    print(f"  slice over {y}: {len(cells)} cells, vertices {', '.join(format_vector(v) for v in verts)}")

# one T-variable per (point, vertex), weighted by the vertex denominator
for d in vert(E.fan):
    print(f"  vertex {format_vector(d.vertex)} over {d.point}: mu = {d.multiplicity}")

# the ray along rho(D1) is dropped since D1 is marked
print("rays:", ", ".join(format_vector(r) for r in rays(E)))

full = assign_degrees(E, cox_presentation(E, flag))
print("\nfull presentation,", len(full.variables), "variables")
for r in full.render_relations():
    print("  ", r)

short = assign_degrees(E, eliminated_presentation(E, flag))
print("\nafter eliminating T0, T1,", len(short.variables), "variables")
for r in short.render_relations():
    print("  ", r)

G = class_group(E)
print("\nrelation rows (rays | vertices | colors | fiber):")
for row in relation_matrix(E):
    print("  ", row)
print("class group:", G.describe())
for v in short.variables:
    print(f"  deg {v.alias} = {G.format_element(short.degrees[v.name])}")
print("homogeneous:", check_homogeneity(full) and check_homogeneity(short))
