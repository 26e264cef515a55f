# coding: utf-8

# # The brute-force matrix-group oracle
#
# Everything up to this point lived on the combinatorial side: lattices,
# Weyl groups, class labels, exact coefficients.  For small q the actual
# finite matrix groups are within reach of brute force, and `build_group`
# constructs them element by element so that every structural claim can be
# checked against the real thing.

import random

import dltransfer as dl
from dltransfer.matrixgroup import dl_family_provenance

g = dl.build_group("GL2", 3)
print("group:", g.name, "order:", g.order())
print("conjugacy classes:", len(g.classes))
for c in g.classes:
    print(f"  {c.label:14s} size {c.size:2d}  type {dl.class_type(g, c.rep)}")
print("central elements:", [g.format_element(z) for z in g.central_elements()])

# # The family of induced virtual characters
#
# `dl_family` returns one class function per rational pair class.  The
# split-twist members are computed on the spot by parabolic induction; the
# non-split members come from shipped tables.  Construction re-validates the
# whole family against the degree formula, the inner-product pairing, and
# central values, so simply obtaining the dict is already a test.

family = dl.dl_family(g)
print("family size:", len(family))
for pc in sorted(family, key=lambda p: p.label()):
    deg = family[pc].at_identity()
    prov = dl_family_provenance[("GL2", 3)][pc]
    print(f"  {pc.label():28s} degree {str(deg):10s} ({prov})")

# # Realization bridges the two worlds
#
# `realize` turns an exact coefficient vector into a literal class function
# on the matrix group.  The assembled delta coefficients from the engine
# realize to the actual delta function at the identity.

ctx = g.context
u = dl.assemble(dl.identity_morphism(g.datum), g.frob, g.frob, dl.delta(ctx))
print("realized delta equals the brute-force delta:",
      dl.realize(g, u) == dl.delta_cf(g))

# # Coherence with the trace character sum
#
# The function x -> psi(tr x), averaged into class-function form by brute
# force, agrees with realizing the assembled trace gamma table and scaling
# by q (the normalization the assembly divides out).

psi = dl.AddChar(3, 1, 1)
lhs = dl.trace_function(g, psi)
rhs = dl.realize(g, dl.assemble(
    dl.identity_morphism(g.datum), g.frob, g.frob, dl.trace_psi(ctx)
)).scale(3)
print("trace coherence:", lhs == rhs)

# # The eigen-equation
#
# For any stable gamma, the realized assembly acts on each member of the
# family by convolution as multiplication by gamma at that member's
# geometric class.  One seeded random gamma, all eight members:

f = dl.random_stable(ctx, random.Random(7))
cf = dl.realize(g, dl.assemble(dl.identity_morphism(g.datum), g.frob, g.frob, f))
ok = all(
    dl.convolve_cf(cf, chi) == chi.scale(f.value(pc.geometric()))
    for pc, chi in family.items()
)
print("eigen-equation holds for all family members:", ok)
