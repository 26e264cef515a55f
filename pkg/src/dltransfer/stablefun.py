"""Stable functions presented by their eigenvalue vector on geometric classes.

A stable function is stored as its gamma-vector: one exact cyclotomic value
per geometric class.  Convolution of stable functions is pointwise product
of gamma-vectors; the unit is gamma = 1.  Transfer along a morphism reads the
gamma-vector through the class transport map.  From a gamma-vector and a Weyl
element w one extracts the unique torus function with f_w * theta =
gamma([theta]) theta, by finite Fourier inversion.

Built-ins: the unit (delta), and the matrix-trace example on GL_n whose
gamma values are twisted Gauss sums; the latter's well-definedness across
the pairs of one class is a theorem (tested), not a construction-time fact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclo import CycloNumber, from_exponent_counts, root_of_unity
from .dualmorph import DualMorphism
from .finitetorus import (
    FiniteTorus,
    FrobeniusData,
    TorusChar,
    TorusFunction,
    fixed_points,
)
from .rootdata import RootDatum, WeylElement, build_standard, weyl_group
from .ssclasses import GeomClass, enumerate_classes, kappa, rho_ss
from .torusreal import realization


class ContextMismatchError(ValueError):
    pass


class InvalidMorphismError(ValueError):
    pass


class UnsupportedGroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupContext:
    datum: RootDatum
    frob: FrobeniusData

    def classes(self) -> tuple[GeomClass, ...]:
        return enumerate_classes(self.datum, self.frob)

    def torus(self, w: WeylElement) -> FiniteTorus:
        return fixed_points(self.datum, self.frob, w)

    def weyl(self):
        return weyl_group(self.datum)


@dataclass
class StableFunction:
    context: GroupContext
    gamma: dict  # GeomClass -> CycloNumber, total on context.classes()

    def __post_init__(self):
        expected = set(self.context.classes())
        if set(self.gamma) != expected:
            raise ContextMismatchError("gamma-vector must cover every geometric class")

    @staticmethod
    def delta(context: GroupContext) -> "StableFunction":
        one = CycloNumber.one()
        return StableFunction(context, {c: one for c in context.classes()})

    @staticmethod
    def zero(context: GroupContext) -> "StableFunction":
        z = CycloNumber.zero()
        return StableFunction(context, {c: z for c in context.classes()})

    def value(self, c: GeomClass) -> CycloNumber:
        return self.gamma[c]

    def __mul__(self, other: "StableFunction") -> "StableFunction":
        """Convolution of stable functions: pointwise product of gammas."""
        if self.context != other.context:
            raise ContextMismatchError("different group contexts")
        return StableFunction(
            self.context, {c: v * other.gamma[c] for c, v in self.gamma.items()}
        )

    def __add__(self, other: "StableFunction") -> "StableFunction":
        if self.context != other.context:
            raise ContextMismatchError("different group contexts")
        return StableFunction(
            self.context, {c: v + other.gamma[c] for c, v in self.gamma.items()}
        )

    def scale(self, s) -> "StableFunction":
        s = s if isinstance(s, CycloNumber) else CycloNumber.from_rational(s)
        return StableFunction(self.context, {c: v * s for c, v in self.gamma.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StableFunction)
            and self.context == other.context
            and all(v == other.gamma[c] for c, v in self.gamma.items())
        )


def transfer(
    m: DualMorphism, fr: FrobeniusData, fr_target: FrobeniusData, f: StableFunction
) -> StableFunction:
    """Stable function on the target group with gamma'(c') = gamma(transport of c')."""
    if f.context.datum != m.source or f.context.frob != fr:
        raise ContextMismatchError("function does not live on the morphism's source")
    if not m.valid:
        raise InvalidMorphismError("morphism admits no lift for some target Weyl element")
    a = m.matrix
    if a * fr.sigma.scale(fr.q) != fr_target.sigma.scale(fr_target.q) * a:
        raise ContextMismatchError("Frobenius data are not intertwined by the matrix")
    target_ctx = GroupContext(m.target, fr_target)
    gamma = {c: f.gamma[rho_ss(m, c)] for c in target_ctx.classes()}
    return StableFunction(target_ctx, gamma)


def extract_fw(f: StableFunction, w: WeylElement) -> TorusFunction:
    """The function on T^{F_w} whose convolution eigenvalue on each character
    theta is gamma([theta]): Fourier inversion of gamma over the characters."""
    torus = f.context.torus(w)
    acc = {e: CycloNumber.zero() for e in torus.elements()}
    for theta in torus.characters():
        g = f.gamma[kappa(w, theta)]
        if g.is_zero():
            continue
        for e in acc:
            acc[e] = acc[e] + g * theta.value(e)
    inv = CycloNumber.from_rational(Fraction(1, torus.order))
    return TorusFunction(torus, {e: v * inv for e, v in acc.items()})


def delta(context: GroupContext) -> StableFunction:
    return StableFunction.delta(context)


def _is_gl(rd: RootDatum) -> bool:
    return rd == build_standard("GL", rd.rank) if rd.rank >= 1 else False


def trace_psi_gamma_for_pair(theta: TorusChar, b: int = 1) -> CycloNumber:
    """(-1)^l(w) . sum over t in T^{F_w} of psi_b(matrix trace of t) theta(t^-1),
    computed for one concrete pair; trace goes through the torus realization."""
    torus = theta.torus
    p = torus.frob.p
    if b % p == 0:
        raise ValueError("additive character must be nontrivial")
    real = realization(torus)
    exponent = 1
    for d in torus.group.invariant_factors:
        exponent = lcm(exponent, d)
    level = lcm(p, exponent)
    counts: dict[int, int] = {}
    group = torus.group
    for t in torus.elements():
        fr = theta.pairing_with(group.neg(t))
        e_char = fr.numerator * (level // fr.denominator)
        e_psi = (b * real.trace_in_base(t)) * (level // p)
        e = (e_char + e_psi) % level
        counts[e] = counts.get(e, 0) + 1
    total = from_exponent_counts(level, counts)
    if torus.w.length % 2:
        total = -total
    return total


def trace_psi(context: GroupContext, b: int = 1) -> StableFunction:
    """gamma-vector of the matrix-trace function on GL_n: for each geometric
    class, the twisted Gauss sum of its witness pair."""
    if not _is_gl(context.datum):
        raise UnsupportedGroupError("trace built-in needs a GL datum")
    gamma = {}
    for c in context.classes():
        torus = context.torus(c.witness())
        theta = torus.char_from_point(c.canonical)
        gamma[c] = trace_psi_gamma_for_pair(theta, b=b)
    return StableFunction(context, gamma)


def random_stable(context: GroupContext, rng: random.Random, level: int = 12) -> StableFunction:
    """Seeded random gamma-vector with values m . zeta_level^k, m in 0..3;
    used by the randomized verification suites."""
    gamma = {}
    for c in context.classes():
        k = rng.randrange(level)
        m_scale = rng.randrange(4)
        gamma[c] = root_of_unity(level, k) * CycloNumber.from_rational(m_scale)
    return StableFunction(context, gamma)
