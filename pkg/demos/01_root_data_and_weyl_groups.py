# coding: utf-8

# # Root data and their Weyl groups
#
# A root datum packages four pieces: a character lattice, a cocharacter
# lattice, and dual families of roots and coroots living inside them.  The
# package ships the standard family — general linear, special linear,
# projective linear, the rank-2 symplectic datum, and bare tori — addressed
# by name.  Everything downstream (tori, classes, characters) is built on
# top of these objects, so this demo starts at the very bottom.

from dltransfer import build_standard, dual, weyl_group

# # Building standard data
#
# Names are forgiving about punctuation: "GL2", "GL(2)" and ("GL", 2) all
# mean the same thing.

gl2 = build_standard("GL", 2)
print(gl2.name, "rank", gl2.rank)
print("roots   ", gl2.roots)
print("coroots ", gl2.coroots)

sl2 = build_standard("SL2")
pgl2 = build_standard("PGL(2)")
print(sl2.name, "roots", sl2.roots, "coroots", sl2.coroots)
print(pgl2.name, "roots", pgl2.roots, "coroots", pgl2.coroots)

# Notice the swap: the roots of SL(2) look like the coroots of PGL(2) and
# vice versa.  That is Langlands duality at the level of combinatorics, and
# `dual` makes it explicit.

print("dual of SL(2) is", dual(sl2).name)
print("dual of GL(2) is", dual(gl2).name)

# # Weyl groups as integer matrices
#
# Weyl group elements act on the cocharacter lattice, so each one is stored
# as a small integer matrix.  Enumeration is breadth-first from the identity,
# and the length of an element counts the positive roots it sends negative.

wg = weyl_group(build_standard("Sp", 2))
print("Sp(2) Weyl order:", len(wg.elements))
print("lengths:", sorted(w.length for w in wg.elements))

# # Reflections
#
# Each simple root contributes a reflection.  Applying it twice gives the
# identity, and the reflection permutes the set of roots.

gl3 = build_standard("GL", 3)
wg3 = weyl_group(gl3)
s0 = wg3.simple_reflections()[0]
print("s0 matrix:", s0.matrix.entries)
print("s0 squared is identity:", wg3.multiply(s0, s0).is_identity())
print("s0 acts on roots as a permutation:")
for r in gl3.roots:
    print("   ", r, "->", s0.act_char(r))
