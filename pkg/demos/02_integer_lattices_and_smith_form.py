# coding: utf-8

# # Integer lattices, Smith normal form, and finite quotients
#
# The torsion bookkeeping behind twisted tori is plain integer linear
# algebra: a square matrix presents a finite abelian group as its cokernel,
# and the Smith normal form turns that presentation into an explicit list of
# cyclic factors.  This demo walks the machinery on small hand-checked
# matrices.

from fractions import Fraction

from dltransfer import IntMatrix, QmodZVec, cokernel, smith_normal_form

# # Smith normal form
#
# The decomposition U * A * V = D with U, V unimodular and D diagonal with a
# divisibility chain.  The example matrix is the one that presents the
# 8-element group showing up for the twisted torus of GL(2) at q = 3.

a = IntMatrix.from_rows([[-1, 3], [3, -1]])
dec = smith_normal_form(a)
print("A =", a.entries)
print("D =", dec.d.entries)
print("U =", dec.u.entries, "det", dec.u.det())
print("V =", dec.v.entries, "det", dec.v.det())
print("check U*A*V == D:", dec.u * a * dec.v == dec.d)

# # Cokernels as finite abelian groups
#
# The cokernel of A is Z^2 / A Z^2.  Its order is |det A| whenever A is
# nonsingular, and the invariant factors are the diagonal of D.

g = cokernel(a)
print("invariant factors:", g.invariant_factors)
print("order:", g.order)
print("elements:", list(g.elements()))

# Group elements are coordinate tuples relative to the cyclic factors; the
# group does modular addition.

x = (0, 3)
y = (0, 6)
print("x + y =", g.add(x, y))
print("-x =", g.neg(x))

# # Torsion vectors
#
# Character points live in (Q/Z)^rank and are stored exactly as tuples of
# fractions.  The label format is stable and round-trips.

v = QmodZVec.make([Fraction(1, 2), Fraction(0), Fraction(5, 6)])
print("label:", v.label())
print("parsed back equal:", QmodZVec.from_label(v.label()) == v)
print("order:", v.order())
print("doubled:", (v + v).label())
