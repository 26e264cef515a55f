# coding: utf-8

# # Exact cyclotomic arithmetic
#
# Character sums over finite fields and tori live in cyclotomic fields, and
# floating point is the wrong tool for deciding whether two such sums are
# equal.  The `CycloNumber` type stores an element of Q(zeta_n) as rational
# coordinates in the power basis of a root of unity, so every comparison in
# this demo is exact.

from fractions import Fraction

from dltransfer import CycloNumber, root_of_unity

# `root_of_unity(n, k)` is zeta_n^k.  Values at different levels coerce to a
# common level automatically, so mixed-level arithmetic just works.

z3 = root_of_unity(3)
z6 = root_of_unity(6)
print("zeta_3 lives at level", z3.level)
print("zeta_6 lives at level", z6.level)
print("zeta_6 == 1 + zeta_3:", z6 == CycloNumber.one() + z3)

# # Vanishing sums
#
# The full set of n-th roots of unity sums to zero for n > 1.  This is the
# identity that makes character orthogonality work, so it is worth seeing it
# hold on the nose.

total = CycloNumber.zero()
for k in range(7):
    total = total + root_of_unity(7, k)
print("sum of all 7th roots of unity is zero:", total.is_zero())

# # Real subfield elements and minimal polynomials
#
# zeta_5 + zeta_5^4 is 2*cos(72 degrees), a real algebraic number.  It equals
# its own complex conjugate and satisfies x^2 + x - 1 = 0, and both facts are
# checked exactly.

x = root_of_unity(5, 1) + root_of_unity(5, 4)
print("x = zeta_5 + zeta_5^4")
print("x is fixed by conjugation:", x.conjugate() == x)
print("x^2 + x - 1 == 0:", (x * x + x - CycloNumber.one()).is_zero())

# # Conjugation, modulus, and inversion
#
# For a root of unity the inverse and the conjugate agree, and |z|^2 is the
# rational number produced by `abs_squared`.

z = root_of_unity(12, 5)
print("zeta_12^5 inverse equals conjugate:", z.inverse() == z.conjugate())
print("|zeta_12^5|^2 =", z.abs_squared())

w = CycloNumber.from_rational(Fraction(3, 2)) + root_of_unity(8)
print("|3/2 + zeta_8|^2 =", w.abs_squared())

# Rational detection: a number that happens to be rational reports itself as
# such even when it was assembled from irrational pieces.

i = root_of_unity(4)
print("zeta_4 * zeta_4 is rational:", (i * i).is_rational())
print("its value is", (i * i).rational_value())

# # Serialization
#
# `to_json_obj` produces a plain structure suitable for JSON files, and
# `from_json_obj` restores an equal value.

obj = w.to_json_obj()
print("serialized:", obj)
print("round trip equal:", CycloNumber.from_json_obj(obj) == w)
