# coding: utf-8

# # Gauss sums and the trace-character gamma table
#
# The additive-character side of the theory rests on exact Gauss sums over
# finite fields.  This demo walks from the field tables themselves, through
# the classical Gauss-sum identities, to the gamma table of the function
# psi(b * tr) on GL2 and its one-line transfer down to GL1.

import dltransfer as dl

# # Field tables with coherent generators
#
# Each finite field carries a designated multiplicative generator, chosen so
# that norm maps send designated generators to designated generators all the
# way down every subfield tower.  That coherence is what lets multiplicative
# characters compose with norms predictably.

F3 = dl.get_field(3, 1)
F9 = dl.get_field(3, 2)
g9 = F9.designated_generator()
print("generator of F9:", g9)
print("its norm down to F3:", F9.norm_to_subfield(1, g9))
print("equals the designated generator of F3:",
      F9.norm_to_subfield(1, g9) == F3.designated_generator())

# # Gauss sums
#
# With chi multiplicative and psi additive, the Gauss sum g(chi, psi) has
# |g|^2 = q for nontrivial chi, and the degenerate value -1 when chi is
# trivial.  Everything is exact cyclotomic arithmetic.

chi = dl.MultChar(3, 1, 1)
psi = dl.AddChar(3, 1, 1)
g = dl.gauss_sum(F3, chi, psi)
print("g(chi, psi) =", g)
print("|g|^2 =", g.abs_squared())
print("g(trivial, psi) =", dl.gauss_sum(F3, dl.MultChar(3, 1, 0), psi))

# The square of this particular sum is -3; it is a square root of -p, as the
# sign analysis of quadratic Gauss sums predicts for p = 3.

print("g * g =", g * g)

# # Hasse-Davenport lifting
#
# Composing chi with the norm and psi with the trace lifts the Gauss sum to
# the extension field, where -g(chi o N, psi o Tr) = (-g(chi, psi))^m.  Here
# m = 2.

chi_lift = chi.compose_norm(2)
psi_lift = dl.AddChar(3, 2, 1)
lhs = -dl.gauss_sum(F9, chi_lift, psi_lift)
rhs = (-g) * (-g)
print("Hasse-Davenport at m = 2:", lhs == rhs)

# # The trace gamma table on GL2
#
# `trace_psi` packages the character sums t -> psi(b * tr(t)) theta(t^-1),
# one exact value per geometric class.  At q = 3 the table is small enough
# to print whole.

GL2 = dl.build_standard("GL", 2)
GL1 = dl.build_standard("GL", 1)
fr2 = dl.split_frobenius(GL2, 3)
fr1 = dl.split_frobenius(GL1, 3)
f = dl.trace_psi(dl.GroupContext(GL2, fr2))
for c in dl.enumerate_classes(GL2, fr2):
    print(f"  {c.label():14s} -> {f.value(c)}")

# Note the value -3 at the class [1/2,1/2]: it is exactly g * g from above,
# the square of the quadratic Gauss sum.

# # Transfer to GL1
#
# Pushing the table through the diagonal-weights morphism produces the gamma
# table of GL1.  The quadratic class inherits the value -3 on the nose.

m = dl.analyze(GL2, GL1, dl.IntMatrix.from_rows([[1, 1]]))
out = dl.transfer(m, fr2, fr1, f)
for c in dl.enumerate_classes(GL1, fr1):
    print(f"  GL1 {c.label():8s} -> {out.value(c)}")
