"""
P^1 x P^1 as a complexity-one toric variety
===========================================

With no colors and a trivial slice everywhere the machinery should give back
the polynomial ring in four variables graded by Z^2.
"""

from horocox.builtin import example_document
from horocox.classgroup import assign_degrees, class_group
from horocox.coxring import cox_presentation
from horocox.divfan import support
from horocox.document import build, dump

doc = example_document("p1xp1")
print(dump(doc))

E, flag = build(doc)
print("support:", support(E.fan) or "empty")

P = assign_degrees(E, cox_presentation(E, flag))
G = class_group(E)
print("variables:", ", ".join(v.name for v in P.variables))
print("relations:", P.render_relations() or "none")
print("class group:", G.describe())

# S(1), S(-1) cut out the torus-fixed fibers, T0, T1 are the base coordinates
for v in P.variables:
    print(f"  deg {v.name} = {P.degrees[v.name]}")
