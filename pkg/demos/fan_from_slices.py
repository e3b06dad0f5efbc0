"""
Building a fan from slices
==========================

Assembles a rank-two colored divisorial fan from a tail fan and a few
translated slices, then checks that the Cox ring relations are homogeneous.
The document is written out so the ``horocox`` command can read it back.
"""

import subprocess
import sys
import tempfile
from fractions import Fraction

from horocox.classgroup import assign_degrees, check_homogeneity, class_group
from horocox.coxring import eliminated_presentation, flag_catalog
from horocox.divfan import ProjPoint, from_slices, vert
from horocox.document import dump, from_fan
from horocox.horospherical import Color, ColoredDivisorialFan, ColoredPolyhedralDivisor, validate_colored
from horocox.polyhedra import cone, from_cone, translate

# the complete fan with rays e1, e2, -e1-e2 (the fan of P^2)
rays_ = [(1, 0), (0, 1), (-1, -1)]
tails = [cone([a, b], 2) for a, b in zip(rays_, rays_[1:] + rays_[:1])]

# shift the whole fan by a different vector over three points of P^1
shifts = {
    ProjPoint(0, 1): (Fraction(1, 2), 0),
    ProjPoint(1, 0): (0, Fraction(1, 3)),
    ProjPoint(1, 1): (Fraction(-1, 5), Fraction(2, 5)),
}
slices = {y: [translate(from_cone(t), v) for t in tails] for y, v in shifts.items()}
fan = from_slices(tails, slices)

colors = (Color("D", (1, 0)),)
E = ColoredDivisorialFan(2, colors, tuple(ColoredPolyhedralDivisor(d, frozenset()) for d in fan.divisors))
print("diagnostics:", validate_colored(E) or "none")
print("vertices:", [(str(d.point), d.multiplicity) for d in vert(fan)])

flag = flag_catalog("projective_space(1)").bind(["D"])
P = assign_degrees(E, eliminated_presentation(E, flag))
print("relations:", P.render_relations())
print("class group:", class_group(E).describe())
print("homogeneous:", check_homogeneity(P))

# the same fan as an input document
text = dump(from_fan(E, flag, comment="P^2 fan shifted over three points"))

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(text)
out = subprocess.run([sys.executable, "-m", "horocox.cli", "cox", fh.name, "--eliminate"], capture_output=True, text=True)
print(out.stdout)
