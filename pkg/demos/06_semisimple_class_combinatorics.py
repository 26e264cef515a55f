# coding: utf-8

# # Semisimple class combinatorics
#
# Characters of twisted maximal tori, taken up to the natural Weyl-group
# equivalences, organize into two layers: geometric classes (equivalence over
# the algebraic closure) and rational pair classes (w, theta) that refine
# them.  This demo enumerates both layers for GL2 at q = 3 and shows how the
# canonicalization machinery identifies equivalent data.

from collections import Counter
from fractions import Fraction

import dltransfer as dl
from dltransfer.ssclasses import (
    NotStableError,
    canonical_point,
    transporter_count,
    twisted_conjugate,
)

GL2 = dl.build_standard("GL", 2)
fr = dl.split_frobenius(GL2, 3)
wg = dl.weyl_group(GL2)
w_id, w_sw = wg.elements

# # The geometric layer
#
# Six geometric classes exist at q = 3.  Each carries a canonical torsion
# point (the label), a witness twist that stabilizes the point, and its full
# Weyl orbit.

classes = dl.enumerate_classes(GL2, fr)
print("geometric classes:", len(classes))
for c in classes:
    print(f"  {c.label():14s} witness {c.witness().matrix.entries}  orbit size {len(c.orbit())}")

# # The rational layer refines it
#
# A rational pair class remembers the twist w as well as the character point.
# At q = 3 there are eight pairs over the six geometric classes: the points
# [0,0] and [1/2,1/2] are stable under both twists and therefore appear
# twice.

pairs = dl.enumerate_pair_classes(GL2, fr)
print("rational pair classes:", len(pairs))
fibers = Counter(pc.geometric().label() for pc in pairs)
for label, n in sorted(fibers.items()):
    print(f"  {label:14s} supports {n} pair class(es)")

# # Canonicalization
#
# `pair_class` accepts any representative and returns the canonical one, so
# twisted-conjugate inputs collapse to the same object.

y = dl.QmodZVec.make([Fraction(1, 8), Fraction(3, 8)])
pc = dl.pair_class(GL2, fr, w_sw, y)
moved_w = twisted_conjugate(GL2, fr, w_sw, w_sw)
moved_y = w_sw.act_char_point(y)
pc2 = dl.pair_class(GL2, fr, moved_w, moved_y)
print("conjugated input gives the same class:", pc == pc2)
print("its label:", pc.label())

# `kappa` goes from a concrete torus character to its geometric class.

torus = dl.fixed_points(GL2, fr, w_sw)
theta = torus.char_from_point(y)
print("kappa lands in:", dl.kappa(w_sw, theta).label())

# The canonical point of an orbit is computed independently of any class
# object:

print("canonical point of the orbit of [3/8,1/8]:",
      canonical_point(GL2, dl.QmodZVec.make([Fraction(3, 8), Fraction(1, 8)])).label())

# # Counting transporters
#
# `transporter_count` counts the Weyl elements moving one pair to another.
# It is positive exactly on the diagonal of the rational classification.

same = transporter_count(GL2, fr, w_sw, y, w_sw, y)
cross = transporter_count(
    GL2, fr, w_sw, y, w_id, dl.QmodZVec.make([Fraction(0), Fraction(0)])
)
print("transporters to itself:", same, "| to a different class:", cross)

# # Stability is a real constraint
#
# A point of order 5 cannot be stabilized by either twist at q = 3 (5 divides
# neither q - 1 nor q^2 - 1), so asking for its class raises an error.

try:
    dl.geometric_class(GL2, fr, dl.QmodZVec.make([Fraction(1, 5), Fraction(0)]))
except NotStableError as err:
    print("rejected:", err)
