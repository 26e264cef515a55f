# coding: utf-8

# # Dual morphisms and Weyl-element lifts
#
# A morphism between the dual sides of two reductive groups is recorded here
# as an integer matrix A between cocharacter lattices.  `analyze` inspects A
# once and answers three questions: is the map compatible with the root data,
# which source reflections
# does it collapse (the Levi subgroup W_L), and which source Weyl elements w
# satisfy the intertwining relation A.M_w = M_{w'}.A for each target element
# w'.

from dltransfer import IntMatrix, analyze, build_standard, weyl_group

GL2 = build_standard("GL", 2)
GL3 = build_standard("GL", 3)
GL1 = build_standard("GL", 1)
T2 = build_standard("Torus", 2)

# # A first example: summing the two diagonal weights
#
# The matrix [1 1] maps X_*(GL2) onto X_*(GL1).  Both diagonal entries land
# on the same weight, so the coordinate swap acts trivially after the map:
# the Levi subgroup is the whole rank-one Weyl group.

m = analyze(GL2, GL1, IntMatrix.from_rows([[1, 1]]))
print("valid:", m.valid)
print("|W_L| =", m.w_l.order)
print("collapsed roots:", [GL2.roots[i] for i in m.levi_root_indices])

# The identity of the target Weyl group therefore has two lifts, and the
# designated representative is the lexicographically least of them.

wp = weyl_group(GL1).identity
lifts = m.lift(wp)
print("number of lifts of the target identity:", len(lifts))
print("representative matrix:", m.lift_representative(wp).matrix.entries)

# # Lift sets are cosets
#
# Whenever a target element lifts at all, its lift set is a single left coset
# of W_L, and every lift normalizes W_L.  We check this on a rank-3 example
# that collapses only the first two coordinates.

m3 = analyze(GL3, T2, IntMatrix.from_rows([[1, 1, 0], [0, 0, 1]]))
wg = weyl_group(GL3)
wp = weyl_group(T2).identity
lifts = m3.lift(wp)
w0 = m3.lift_representative(wp)

coset = {wg.multiply(w0, x) for x in m3.w_l.elements()}
print("lift set equals w0 . W_L:", set(lifts) == coset)

normalizes = all(
    {wg.multiply(wg.multiply(w, x), wg.inverse(w)) for x in m3.w_l.elements()}
    == set(m3.w_l.elements())
    for w in lifts
)
print("every lift normalizes W_L:", normalizes)

# W_L can be recomputed from scratch as the subgroup generated by the
# reflections in the collapsed roots; both routes agree.

refl = m3.levi_reflection_subgroup()
print("reflection route matches:", set(refl.elements()) == set(m3.w_l.elements()))
print("collapsed roots in rank 3:", [GL3.roots[i] for i in m3.levi_root_indices])

# # Full collapse
#
# Summing all three weights of GL3 collapses every root, so W_L is the whole
# symmetric group on three letters.

mfull = analyze(GL3, GL1, IntMatrix.from_rows([[1, 1, 1]]))
print("full collapse |W_L| =", mfull.w_l.order)

# # Rejecting incompatible matrices
#
# Not every integer matrix respects the root data.  Stretching one coordinate
# of GL2 by 2 breaks the coroot correspondence, and `analyze` flags it; the
# transfer machinery downstream refuses to use such a map.

bad = analyze(GL2, GL2, IntMatrix.from_rows([[1, 0], [0, 2]]))
print("stretch map is valid:", bad.valid)

# Power maps on a one-dimensional torus are fine, by contrast: they scale the
# lattice but there are no roots to disturb.

pw = analyze(GL1, GL1, IntMatrix.from_rows([[3]]))
print("cube map on GL1 is valid:", pw.valid)
