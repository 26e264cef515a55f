# coding: utf-8

# # Twisted finite tori and their characters
#
# Over a finite field with q elements, one torus datum yields several finite
# groups of rational points: one for every Frobenius twist by a Weyl element
# w.  This demo builds the two twists of the diagonal torus of GL2 at q = 3,
# lists their characters, and checks orthogonality exactly.

from fractions import Fraction

from dltransfer import (
    CycloNumber,
    QmodZVec,
    TameChar,
    build_standard,
    fixed_points,
    split_frobenius,
    tame_stabilizers,
    weyl_group,
)
from dltransfer.finitetorus import NotTameError

GL2 = build_standard("GL", 2)
fr = split_frobenius(GL2, 3)
wg = weyl_group(GL2)
w_id, w_sw = wg.elements

# # The split and non-split twists
#
# Twisting by the identity gives the split torus, of order (q-1)^2 = 4.
# Twisting by the swap glues the two coordinates into a quadratic extension,
# and the fixed points form a cyclic group of order q^2 - 1 = 8.

t_split = fixed_points(GL2, fr, w_id)
t_coxeter = fixed_points(GL2, fr, w_sw)
print("split twist order:", t_split.order)
print("swap twist order:", t_coxeter.order)
print("swap twist elements:", list(t_coxeter.elements()))

# # Characters take exact root-of-unity values

chars = t_coxeter.characters()
print("number of characters:", len(chars))
print("character orders:", sorted(c.order for c in chars))

chi = t_coxeter.char_from_point(QmodZVec.make([Fraction(1, 8), Fraction(3, 8)]))
sample = list(t_coxeter.elements())[1]
print("chi(", sample, ") =", chi.value(sample))

# Orthogonality: summing chi1(t) * chi2(t^-1) over the torus gives |T| when
# the characters match and 0 otherwise.  Both outcomes are exact.

c1, c2 = chars[3], chars[5]
same = CycloNumber.zero()
diff = CycloNumber.zero()
for t in t_coxeter.elements():
    same = same + c1.value(t) * c1.value_inverse(t)
    diff = diff + c1.value(t) * c2.value_inverse(t)
print("<chi1, chi1> =", same)
print("<chi1, chi2> is zero:", diff.is_zero())

# # Tame character points and their Weyl stabilizers
#
# A tame character is recorded by a torsion point of the character lattice
# tensor Q/Z with denominator prime to p.  Its full Weyl stabilizer can be
# strictly larger than the subgroup generated by the reflections that fix it;
# the order-2 point on SL2 versus PGL2 is the smallest example of the gap.

half = QmodZVec.make([Fraction(1, 2)])
for name in ("SL2", "PGL(2)"):
    rd = build_standard(name)
    full, circ = tame_stabilizers(rd, TameChar(half, 5))
    print(f"{name}: |W_chi| = {full.order}, reflection part = {circ.order}")

# Points whose denominator is divisible by p are not tame and are rejected.

try:
    TameChar(QmodZVec.make([Fraction(1, 3)]), 3)
except NotTameError as err:
    print("rejected:", err)
