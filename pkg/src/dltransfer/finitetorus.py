"""Frobenius-twisted finite tori and their exact character theory.

For a datum with cocharacter lattice X_* and twist data (q, sigma), the fixed
points of the w-twisted Frobenius form the finite abelian group
coker(q.M_w.sigma - I).  Its characters are parametrized by torsion points
y in X* (x) Q/Z satisfying (q (M_w sigma)^T - 1) y = 0; evaluation pairs y
with a lattice lift of the group element.  Functions on a torus are dense
tables of cyclotomic values with convolution and Fourier coefficients, plus
pushforward along a morphism matrix and pullback of characters by its
transpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclo import CycloNumber, root_of_unity
from .dualmorph import DualMorphism
from .lattice import (
    FinAbGroup,
    InfiniteCokernelError,
    IntMatrix,
    QmodZVec,
    cokernel,
)
from .rootdata import RootDatum, WeylElement, WeylSubgroup, weyl_group

TORUS_CAP = 10**5


class InfiniteFixedPointsError(ValueError):
    pass


class TorusMismatchError(ValueError):
    pass


class NotIntertwiningError(ValueError):
    pass


class NotTameError(ValueError):
    pass


class TorusTooLargeError(ValueError):
    pass


def _prime_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            m = q
            while m % p == 0:
                m //= p
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p
    raise ValueError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FrobeniusData:
    q: int
    p: int
    sigma: IntMatrix  # finite-order automorphism of X_*; identity = split

    def __post_init__(self):
        if self.q < 2 or _prime_of(self.q) != self.p:
            raise ValueError(f"q={self.q} is not a power of p={self.p}")
        m = self.sigma
        cur = m
        for _ in range(24):
            if cur == IntMatrix.identity(m.rows):
                return
            cur = cur * m
        raise ValueError("sigma does not have small finite order")

    def is_split(self) -> bool:
        return self.sigma == IntMatrix.identity(self.sigma.rows)


def split_frobenius(rd: RootDatum, q: int) -> FrobeniusData:
    return FrobeniusData(q=q, p=_prime_of(q), sigma=IntMatrix.identity(rd.rank))


@dataclass(frozen=True)
class TameChar:
    """Torsion point of X* (x) Q/Z with denominators coprime to p."""

    point: QmodZVec
    p: int

    def __post_init__(self):
        for fr in self.point.entries:
            if fr.denominator % self.p == 0:
                raise NotTameError(f"denominator {fr.denominator} divisible by p={self.p}")

    @property
    def order(self) -> int:
        return self.point.order()


def tame_stabilizers(rd: RootDatum, chi: TameChar) -> tuple[WeylSubgroup, WeylSubgroup]:
    """Full stabilizer W_chi of the point, and the subgroup W_chi_circ
    generated by reflections in roots whose coroot pairs to 0 with it."""
    wg = weyl_group(rd)
    y = chi.point
    members = frozenset(
        i for i, w in enumerate(wg.elements) if w.act_char_point(y) == y
    )
    w_chi = WeylSubgroup(wg, members)
    refl = []
    for i in range(len(rd.roots)):
        pairing = sum(
            (fr * c for fr, c in zip(y.entries, rd.coroots[i])), Fraction(0)
        )
        if pairing.denominator == 1:
            refl.append(rd.reflection_matrix(i))
    w_circ = wg.subgroup_generated(refl)
    return w_chi, w_circ


@dataclass(frozen=True)
class FiniteTorus:
    base: RootDatum
    frob: FrobeniusData
    w: WeylElement
    group: FinAbGroup

    @property
    def order(self) -> int:
        return self.group.order

    def twist_matrix(self) -> IntMatrix:
        """q.(M_w sigma) acting on X_*."""
        return (self.w.matrix * self.frob.sigma).scale(self.frob.q)

    def elements(self):
        return self.group.elements()

    def identity(self):
        return self.group.zero()

    def characters(self) -> tuple["TorusChar", ...]:
        return _characters(self)

    def char_from_point(self, y: QmodZVec) -> "TorusChar":
        return TorusChar(torus=self, point=y)

    def trivial_char(self) -> "TorusChar":
        zero = QmodZVec.make([Fraction(0)] * self.base.rank)
        return TorusChar(torus=self, point=zero)


def fixed_points(rd: RootDatum, fr: FrobeniusData, w: WeylElement) -> FiniteTorus:
    if fr.sigma.rows != rd.rank or w.matrix.rows != rd.rank:
        raise TorusMismatchError("rank mismatch between datum, twist, and Weyl element")
    b = (w.matrix * fr.sigma).scale(fr.q) - IntMatrix.identity(rd.rank)
    try:
        group = cokernel(b)
    except InfiniteCokernelError as exc:
        raise InfiniteFixedPointsError(str(exc)) from exc
    if group.order > TORUS_CAP:
        raise TorusTooLargeError(f"torus order {group.order} exceeds {TORUS_CAP}")
    return FiniteTorus(base=rd, frob=fr, w=w, group=group)


@dataclass(frozen=True)
class TorusChar:
    """Character of T^{F_w}, stored by its tame point y in X* (x) Q/Z."""

    torus: FiniteTorus
    point: QmodZVec

    def __post_init__(self):
        y = self.point
        if len(y.entries) != self.torus.base.rank:
            raise TorusMismatchError("point rank mismatch")
        bt = self.torus.twist_matrix().transpose()
        moved = y.apply_int_matrix(bt) + (-y)
        if not moved.is_zero():
            raise NotTameError("point is not fixed by the twisted Frobenius transpose")

    @property
    def tame(self) -> TameChar:
        return TameChar(point=self.point, p=self.torus.frob.p)

    @property
    def order(self) -> int:
        return self.point.order()

    def pairing_with(self, element) -> Fraction:
        """<y, lift(element)> in Q/Z as a Fraction in [0, 1)."""
        lift = self.torus.group.lift_coords(element)
        total = sum((a * x for a, x in zip(self.point.entries, lift)), Fraction(0))
        return total - (total.numerator // total.denominator)

    def value(self, element) -> CycloNumber:
        return _char_table(self)[element]

    def value_inverse(self, element) -> CycloNumber:
        return _char_table(self)[self.torus.group.neg(element)]

    def inverse(self) -> "TorusChar":
        return TorusChar(torus=self.torus, point=-self.point)

    def is_trivial(self) -> bool:
        return self.point.is_zero()


@lru_cache(maxsize=None)
def _char_table(chi: TorusChar) -> dict:
    out = {}
    for e in chi.torus.elements():
        fr = chi.pairing_with(e)
        out[e] = root_of_unity(fr.denominator, fr.numerator)
    return out


@lru_cache(maxsize=None)
def _characters(torus: FiniteTorus) -> tuple[TorusChar, ...]:
    """All characters: y = U^T (k_1/d_1, ..., k_r/d_r) over residue tuples."""
    group = torus.group
    ut = group.projection.transpose()
    chars = []
    for ktup in group.elements():
        fracs = [Fraction(k, d) for k, d in zip(ktup, group.invariant_factors)]
        y = QmodZVec.make(
            [sum((Fraction(ut[i, j]) * fracs[j] for j in range(len(fracs))), Fraction(0))
             for i in range(ut.rows)]
        )
        chars.append(TorusChar(torus=torus, point=y))
    return tuple(chars)


@dataclass
class TorusFunction:
    """Dense cyclotomic-valued function on the enumerated torus."""

    torus: FiniteTorus
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.torus.order > TORUS_CAP:
            raise TorusTooLargeError("torus too large for dense functions")
        zero = CycloNumber.zero()
        full = {}
        for e in self.torus.elements():
            full[e] = self.values.get(e, zero)
        self.values = full

    @staticmethod
    def delta(torus: FiniteTorus) -> "TorusFunction":
        return TorusFunction(torus, {torus.identity(): CycloNumber.one()})

    @staticmethod
    def zero(torus: FiniteTorus) -> "TorusFunction":
        return TorusFunction(torus, {})

    @staticmethod
    def from_char(chi: TorusChar) -> "TorusFunction":
        return TorusFunction(chi.torus, {e: chi.value(e) for e in chi.torus.elements()})

    def __add__(self, other: "TorusFunction") -> "TorusFunction":
        if self.torus != other.torus:
            raise TorusMismatchError("functions on different tori")
        return TorusFunction(
            self.torus, {e: self.values[e] + other.values[e] for e in self.values}
        )

    def scale(self, c) -> "TorusFunction":
        c = c if isinstance(c, CycloNumber) else CycloNumber.from_rational(c)
        return TorusFunction(self.torus, {e: v * c for e, v in self.values.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusFunction)
            and self.torus == other.torus
            and all(self.values[e] == other.values[e] for e in self.values)
        )

    def total_mass(self) -> CycloNumber:
        acc = CycloNumber.zero()
        for v in self.values.values():
            acc = acc + v
        return acc


def convolve(f: TorusFunction, g: TorusFunction) -> TorusFunction:
    """(f * g)(x) = sum over h of f(x - h) g(h); no normalization."""
    if f.torus != g.torus:
        raise TorusMismatchError("functions on different tori")
    group = f.torus.group
    out = {e: CycloNumber.zero() for e in f.values}
    for h, gv in g.values.items():
        if gv.is_zero():
            continue
        for x in f.values:
            out[x] = out[x] + f.values[group.add(x, group.neg(h))] * gv
    return TorusFunction(f.torus, out)


def fourier_coefficient(f: TorusFunction, chi: TorusChar) -> CycloNumber:
    """f-hat(chi) = sum over x of f(x) chi(x^-1): the convolution eigenvalue
    of chi under f."""
    if f.torus != chi.torus:
        raise TorusMismatchError("character on a different torus")
    acc = CycloNumber.zero()
    for e, v in f.values.items():
        if not v.is_zero():
            acc = acc + v * chi.value_inverse(e)
    return acc


def induced_hom(m: DualMorphism, source: FiniteTorus, target: FiniteTorus):
    """The homomorphism T^{F_w} -> (T')^{F_{w'}} induced by the lattice map,
    as a dict, after checking the intertwining condition."""
    a = m.matrix
    if a * source.twist_matrix() != target.twist_matrix() * a:
        raise NotIntertwiningError("matrix does not intertwine the two twisted Frobenii")
    out = {}
    for e in source.elements():
        lifted = source.group.lift_coords(e)
        out[e] = target.group.project(a.apply(lifted))
    return out


def pushforward(
    m: DualMorphism, source: FiniteTorus, target: FiniteTorus, f: TorusFunction
) -> TorusFunction:
    """Sum f over the fibers of the induced homomorphism of finite tori."""
    if f.torus != source:
        raise TorusMismatchError("function does not live on the source torus")
    hom = induced_hom(m, source, target)
    vals = {e: CycloNumber.zero() for e in target.elements()}
    for x, v in f.values.items():
        if not v.is_zero():
            y = hom[x]
            vals[y] = vals[y] + v
    return TorusFunction(target, vals)


def pullback_char(
    m: DualMorphism, source: FiniteTorus, target: FiniteTorus, chi: TorusChar
) -> TorusChar:
    """Character of the source torus with tame point A^T . (point of chi);
    satisfies chi_pulled(x) = chi(A x)."""
    if chi.torus != target:
        raise TorusMismatchError("character does not live on the target torus")
    a = m.matrix
    if a * source.twist_matrix() != target.twist_matrix() * a:
        raise NotIntertwiningError("matrix does not intertwine the two twisted Frobenii")
    y = chi.point.apply_int_matrix(a.transpose())
    return TorusChar(torus=source, point=y)
