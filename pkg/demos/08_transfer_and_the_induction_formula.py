# coding: utf-8

# # Transfer and the induction-formula engine
#
# A stable function gamma assigns one cyclotomic value to each geometric
# class.  The engine turns such a gamma into a virtual combination of induced
# characters: `assemble` produces exact coefficients indexed by rational pair
# classes.  The headline consistency fact is that transferring gamma along a
# dual morphism and then assembling gives the same answer as assembling
# through the morphism directly.

import random

import dltransfer as dl

GL2 = dl.build_standard("GL", 2)
GL1 = dl.build_standard("GL", 1)
fr2 = dl.split_frobenius(GL2, 3)
fr1 = dl.split_frobenius(GL1, 3)
ctx = dl.GroupContext(GL2, fr2)

# # Assembling the delta function
#
# The constant gamma = 1 assembles to the coefficient vector of the delta
# function at the identity of GL2(F_3).  Eight pair classes carry nonzero
# coefficients.

u = dl.assemble(dl.identity_morphism(GL2), fr2, fr2, dl.delta(ctx))
for label, coeff in sorted(u.labels().items()):
    print(f"  {label:28s} {coeff}")

# Its degree must be 1, and the pieces of that computation are visible: the
# two twists contribute signed symbol degrees +4 and -2, the Weyl group has
# order 2, and the q-power normalization is 1/3, so
# (1/2) * (1/3) * (4 + 2) = 1.

print("degree:", dl.degree(u))
wg = dl.weyl_group(GL2)
print("signed symbol degrees:", [dl.symbol_degree(ctx, w) for w in wg.elements])
print("|GL2(F_3)| =", dl.group_order(GL2, 3))

# # Two routes, one answer
#
# Take a reproducible random gamma on GL2, and push it to GL1 along the
# diagonal-weights morphism.  Route one assembles directly through the
# morphism; route two transfers first and assembles through the identity.
# `compare` checks every coefficient.

m = dl.analyze(GL2, GL1, dl.IntMatrix.from_rows([[1, 1]]))
gamma = dl.random_stable(ctx, random.Random(2026))

left = dl.assemble(m, fr2, fr1, gamma)
right = dl.assemble(
    dl.identity_morphism(GL1), fr1, fr1, dl.transfer(m, fr2, fr1, gamma)
)
report = dl.compare(left, right)
print("routes agree:", report.equal)
print("differing labels:", report.diffs)

# # The sesquilinear pairing
#
# `pairing` implements the inner product of the assembled functions, with
# conjugation on the second slot.  The delta function pairs with itself to
# 1/|G|, as a delta function should.

print("<u, u> =", dl.pairing(u, u))
print("1/|G| =", "1/48")
